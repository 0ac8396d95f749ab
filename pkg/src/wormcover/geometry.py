"""Planar geometry primitives: regular polygons, hulls, areas, diameters.

All lengths are normalized so the curves under study have length 1.  Points
are plain ``(x, y)`` pairs; point sets are ``(n, 2)`` float arrays.  Every
function is pure and safe to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ConvexPolygon",
    "convex_hull",
    "diameter",
    "polygon_area",
    "rectangle_vertices",
    "regular_polygon",
    "triangle_vertices",
]

TRIANGLE_CIRCUMRADIUS = math.sqrt(3.0) / 9.0  # equilateral triangle of side 1/3


def as_point_array(points) -> np.ndarray:
    """Coerce to an (n, 2) float array, rejecting NaN/Inf coordinates."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim == 1 and pts.size == 2:
        pts = pts.reshape(1, 2)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError(f"expected an (n, 2) point array, got shape {pts.shape}")
    if not np.all(np.isfinite(pts)):
        raise ValueError("points must have finite coordinates")
    return pts


def _shoelace(vertices: np.ndarray) -> float:
    if len(vertices) < 3:
        return 0.0
    x = vertices[:, 0]
    y = vertices[:, 1]
    return 0.5 * abs(float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1))))


@dataclass(frozen=True)
class ConvexPolygon:
    """Counter-clockwise convex polygon given by its vertex list.

    Invariants checked at construction: finite coordinates, no repeated
    consecutive vertices, and a non-negative cross product for every
    consecutive vertex triple (allowing a small tolerance for hulls built
    in floating point).  Degenerate polygons with one or two vertices are
    permitted and have zero area.
    """

    vertices: np.ndarray

    def __post_init__(self):
        pts = as_point_array(self.vertices)
        pts.setflags(write=False)
        object.__setattr__(self, "vertices", pts)
        n = len(pts)
        if n == 0:
            raise ValueError("polygon needs at least one vertex")
        if n == 2:
            if np.all(pts[0] == pts[1]):
                raise ValueError("consecutive vertices must be distinct")
        elif n >= 3:
            if np.any(np.all(pts == np.roll(pts, -1, axis=0), axis=1)):
                raise ValueError("consecutive vertices must be distinct")
        if n >= 3:
            a = pts
            b = np.roll(pts, -1, axis=0)
            c = np.roll(pts, -2, axis=0)
            cross = (b[:, 0] - a[:, 0]) * (c[:, 1] - a[:, 1]) - (
                b[:, 1] - a[:, 1]
            ) * (c[:, 0] - a[:, 0])
            scale = max(1.0, float(np.abs(pts).max()) ** 2)
            if np.any(cross < -1e-12 * scale):
                raise ValueError("vertices must wind counter-clockwise and be convex")

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def area(self) -> float:
        return _shoelace(self.vertices)

    def contains(self, points, tol: float = 1e-12) -> np.ndarray:
        """Vectorized membership test (boundary counts as inside).

        Uses the orientation test against every edge with absolute slack
        ``tol``; degenerate polygons fall back to distance checks.
        """
        pts = as_point_array(points)
        v = self.vertices
        if len(v) == 1:
            return np.hypot(pts[:, 0] - v[0, 0], pts[:, 1] - v[0, 1]) <= tol
        if len(v) == 2:
            d = v[1] - v[0]
            w = pts - v[0]
            cross = d[0] * w[:, 1] - d[1] * w[:, 0]
            t = (w @ d) / float(d @ d)
            return (np.abs(cross) <= tol) & (t >= -tol) & (t <= 1 + tol)
        inside = np.ones(len(pts), dtype=bool)
        for i in range(len(v)):
            a = v[i]
            b = v[(i + 1) % len(v)]
            cross = (b[0] - a[0]) * (pts[:, 1] - a[1]) - (b[1] - a[1]) * (
                pts[:, 0] - a[0]
            )
            inside &= cross >= -tol
        return inside


def regular_polygon(n: int, radius: float, phase: float = 0.0) -> ConvexPolygon:
    """Regular n-gon inscribed in the circle of the given radius at the origin.

    Vertex k sits at angle ``phase + 2*pi*k/n``.  The default phase puts a
    vertex on the positive X axis, so for even n a longest diagonal lies on
    the X axis.
    """
    if n < 3:
        raise ValueError(f"need at least 3 sides, got {n}")
    if radius <= 0:
        raise ValueError(f"radius must be positive, got {radius}")
    angles = phase + 2.0 * np.pi * np.arange(n) / n
    return ConvexPolygon(np.column_stack([radius * np.cos(angles), radius * np.sin(angles)]))


def rectangle_vertices(x1: float, y1: float, width: float) -> np.ndarray:
    """Corners of the axis-aligned perimeter-1 rectangle centered at (x1, y1).

    The rectangle is ``width`` tall (Y) and ``1/2 - width`` long (X); corners
    are returned top-left, top-right, bottom-right, bottom-left.
    """
    if not 0.0 < width < 0.5:
        raise ValueError(f"rectangle width must lie in (0, 1/2), got {width}")
    half_len = (0.5 - width) / 2.0
    half_wid = width / 2.0
    return np.array(
        [
            [x1 - half_len, y1 + half_wid],
            [x1 + half_len, y1 + half_wid],
            [x1 + half_len, y1 - half_wid],
            [x1 - half_len, y1 - half_wid],
        ]
    )


def triangle_vertices(x2: float, y2: float, theta: float) -> np.ndarray:
    """Vertices of the equilateral side-1/3 triangle centered at (x2, y2).

    The first vertex sits at angle ``theta`` on the circumcircle of radius
    ``sqrt(3)/9``; the others follow at 120-degree steps.
    """
    angles = theta + 2.0 * np.pi * np.arange(3) / 3.0
    return np.column_stack(
        [
            x2 + TRIANGLE_CIRCUMRADIUS * np.cos(angles),
            y2 + TRIANGLE_CIRCUMRADIUS * np.sin(angles),
        ]
    )


def convex_hull(points) -> ConvexPolygon:
    """Convex hull of a point set (Andrew's monotone chain).

    Collinear boundary points are dropped.  Degenerate inputs yield a
    one-vertex polygon (all points equal) or the two extreme points (all
    points collinear).
    """
    pts = as_point_array(points)
    if len(pts) == 0:
        raise ValueError("cannot take the hull of an empty point set")
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    pts = pts[order]
    keep = np.ones(len(pts), dtype=bool)
    keep[1:] = np.any(pts[1:] != pts[:-1], axis=1)
    pts = pts[keep]
    if len(pts) == 1:
        return ConvexPolygon(pts)

    def build(chain_pts):
        out: list[np.ndarray] = []
        for p in chain_pts:
            while len(out) >= 2:
                o, a = out[-2], out[-1]
                if (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0]) <= 0:
                    out.pop()
                else:
                    break
            out.append(p)
        return out

    lower = build(pts)
    upper = build(pts[::-1])
    hull = np.array(lower[:-1] + upper[:-1])
    if len(hull) < 2:
        # every point collinear: keep the two lexicographic extremes
        hull = np.array([pts[0], pts[-1]])
    return ConvexPolygon(hull)


def polygon_area(polygon: ConvexPolygon) -> float:
    """Shoelace area of a convex polygon; zero for fewer than 3 vertices."""
    return polygon.area


def diameter(points) -> float:
    """Maximum pairwise distance of a point set, via rotating calipers."""
    pts = as_point_array(points)
    if len(pts) < 2:
        raise ValueError("diameter needs at least 2 points")
    hull = convex_hull(pts).vertices
    m = len(hull)
    if m == 1:
        return 0.0
    if m == 2:
        return float(np.hypot(*(hull[1] - hull[0])))

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    best = 0.0
    j = 1
    for i in range(m):
        ni = (i + 1) % m
        # advance the antipodal point while the supported triangle grows
        while abs(cross(hull[i], hull[ni], hull[(j + 1) % m])) > abs(
            cross(hull[i], hull[ni], hull[j])
        ):
            j = (j + 1) % m
        for k in (i, ni):
            d = float(np.hypot(*(hull[j] - hull[k])))
            if d > best:
                best = d
    return best
