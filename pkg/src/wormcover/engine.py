"""Compiled kernels for hull-area evaluation and the certification search.

The reference implementations live in :mod:`wormcover.geometry`; this module
mirrors them with numba for the hot paths.  The trick that makes a single
evaluation O(n): the big polygon never moves, so its vertices are sorted
once, and each evaluation only sorts the 7 rectangle/triangle points and
merges before running the monotone chain.

Verified volume is tracked in exact dyadic units: a box at bisection depth
``k`` contributes ``2**(63 - k)`` units, and the initial box is ``2**63``
(:data:`FULL_UNITS`).  Sums of units are exact integer arithmetic, so volume
accounting is independent of traversal order and worker count.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

FULL_UNITS = 1 << 63  # dyadic units of the initial box
MAX_DEPTH = 63  # deeper boxes cannot be represented in the unit scale

# search kernel status codes
DONE = 0  # stack exhausted, subtree fully certified
BUDGET = 1  # eval or leaf budget reached, frontier returned
DEPTH_EXCEEDED = 2  # a box at MAX_DEPTH still failed certification
DEGENERATE = 3  # a zero-width box failed certification

_COS120 = math.cos(2.0 * math.pi / 3.0)
_SIN120 = math.sin(2.0 * math.pi / 3.0)
_COS240 = math.cos(4.0 * math.pi / 3.0)
_SIN240 = math.sin(4.0 * math.pi / 3.0)


def presort_vertices(vertices: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split polygon vertices into lexicographically sorted x/y arrays."""
    pts = np.asarray(vertices, dtype=float)
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    return (
        np.ascontiguousarray(pts[order, 0]),
        np.ascontiguousarray(pts[order, 1]),
    )


@njit(cache=True, nogil=True)
def _merged_hull_area(fx, fy, ex, ey, mx, my, hx, hy):
    # fx,fy presorted; ex,ey sorted in place; mx,my,hx,hy scratch
    ne = ex.shape[0]
    for i in range(1, ne):
        px = ex[i]
        py = ey[i]
        j = i - 1
        while j >= 0 and (ex[j] > px or (ex[j] == px and ey[j] > py)):
            ex[j + 1] = ex[j]
            ey[j + 1] = ey[j]
            j -= 1
        ex[j + 1] = px
        ey[j + 1] = py

    nf = fx.shape[0]
    n = nf + ne
    i = 0
    j = 0
    k = 0
    while i < nf and j < ne:
        if fx[i] < ex[j] or (fx[i] == ex[j] and fy[i] <= ey[j]):
            mx[k] = fx[i]
            my[k] = fy[i]
            i += 1
        else:
            mx[k] = ex[j]
            my[k] = ey[j]
            j += 1
        k += 1
    while i < nf:
        mx[k] = fx[i]
        my[k] = fy[i]
        i += 1
        k += 1
    while j < ne:
        mx[k] = ex[j]
        my[k] = ey[j]
        j += 1
        k += 1

    # monotone chain, strict turns only (collinear points dropped)
    m = 0
    for idx in range(n):
        qx = mx[idx]
        qy = my[idx]
        while m >= 2 and (hx[m - 1] - hx[m - 2]) * (qy - hy[m - 2]) - (
            hy[m - 1] - hy[m - 2]
        ) * (qx - hx[m - 2]) <= 0.0:
            m -= 1
        hx[m] = qx
        hy[m] = qy
        m += 1
    lower_len = m
    for idx in range(n - 2, -1, -1):
        qx = mx[idx]
        qy = my[idx]
        while m - lower_len >= 1 and (hx[m - 1] - hx[m - 2]) * (qy - hy[m - 2]) - (
            hy[m - 1] - hy[m - 2]
        ) * (qx - hx[m - 2]) <= 0.0:
            m -= 1
        hx[m] = qx
        hy[m] = qy
        m += 1

    area = 0.0
    for idx in range(m - 1):
        area += hx[idx] * hy[idx + 1] - hx[idx + 1] * hy[idx]
    return 0.5 * abs(area)


@njit(cache=True, nogil=True)
def _fill_extras(ex, ey, x1, y1, x2, y2, theta, half_len, half_wid, tri_r):
    ex[0] = x1 - half_len
    ey[0] = y1 + half_wid
    ex[1] = x1 + half_len
    ey[1] = y1 + half_wid
    ex[2] = x1 + half_len
    ey[2] = y1 - half_wid
    ex[3] = x1 - half_len
    ey[3] = y1 - half_wid
    ct = math.cos(theta)
    st = math.sin(theta)
    ex[4] = x2 + tri_r * ct
    ey[4] = y2 + tri_r * st
    ex[5] = x2 + tri_r * (ct * _COS120 - st * _SIN120)
    ey[5] = y2 + tri_r * (st * _COS120 + ct * _SIN120)
    ex[6] = x2 + tri_r * (ct * _COS240 - st * _SIN240)
    ey[6] = y2 + tri_r * (st * _COS240 + ct * _SIN240)


@njit(cache=True, nogil=True)
def config_hull_area(fx, fy, x1, y1, x2, y2, theta, half_len, half_wid, tri_r):
    """Hull area of the presorted polygon plus rectangle plus triangle."""
    n = fx.shape[0] + 7
    ex = np.empty(7)
    ey = np.empty(7)
    mx = np.empty(n)
    my = np.empty(n)
    hx = np.empty(n + 1)
    hy = np.empty(n + 1)
    _fill_extras(ex, ey, x1, y1, x2, y2, theta, half_len, half_wid, tri_r)
    return _merged_hull_area(fx, fy, ex, ey, mx, my, hx, hy)


@njit(cache=True, nogil=True)
def certify_subtree(
    stack_lo,
    stack_hi,
    stack_depth,
    top,
    fx,
    fy,
    half_len,
    half_wid,
    tri_r,
    constants,
    threshold,
    max_evals,
    max_leaves,
    best_value,
    best_arg,
):
    """Depth-first certify-or-split over the boxes currently on the stack.

    A box whose center value minus the Lipschitz margin reaches ``threshold``
    is a certified leaf; otherwise it splits along its widest dimension (ties
    to the lowest index) and the lower half is processed first.  Runs until
    the stack empties or a budget is hit, whichever comes first.

    Returns ``(top, leaves, units, evals, best_value, status)``; ``best_arg``
    is updated in place.  The running minimum uses a lexicographic tie-break
    on the center coordinates so its final value does not depend on traversal
    order.
    """
    n = fx.shape[0] + 7
    ex = np.empty(7)
    ey = np.empty(7)
    mx = np.empty(n)
    my = np.empty(n)
    hx = np.empty(n + 1)
    hy = np.empty(n + 1)
    center = np.empty(5)

    leaves = 0
    evals = 0
    units = np.uint64(0)
    status = DONE

    while top > 0:
        if evals >= max_evals or leaves >= max_leaves:
            status = BUDGET
            break
        top -= 1
        depth = stack_depth[top]
        for i in range(5):
            center[i] = 0.5 * (stack_lo[top, i] + stack_hi[top, i])
        _fill_extras(
            ex,
            ey,
            center[0],
            center[1],
            center[2],
            center[3],
            center[4],
            half_len,
            half_wid,
            tri_r,
        )
        value = _merged_hull_area(fx, fy, ex, ey, mx, my, hx, hy)
        evals += 1

        better = value < best_value
        if value == best_value:
            for i in range(5):
                if center[i] < best_arg[i]:
                    better = True
                    break
                if center[i] > best_arg[i]:
                    break
        if better:
            best_value = value
            for i in range(5):
                best_arg[i] = center[i]

        margin = value
        for i in range(5):
            margin -= constants[i] * 0.5 * (stack_hi[top, i] - stack_lo[top, i])
        if margin >= threshold:
            leaves += 1
            units += np.uint64(1) << np.uint64(MAX_DEPTH - depth)
            continue

        widest = 0
        wmax = stack_hi[top, 0] - stack_lo[top, 0]
        for i in range(1, 5):
            w = stack_hi[top, i] - stack_lo[top, i]
            if w > wmax:
                wmax = w
                widest = i
        if wmax <= 0.0:
            top += 1  # leave the offending box on the stack
            status = DEGENERATE
            break
        if depth >= MAX_DEPTH:
            top += 1
            status = DEPTH_EXCEEDED
            break
        mid = 0.5 * (stack_lo[top, widest] + stack_hi[top, widest])
        # push the upper half first so the lower half is processed next
        for i in range(5):
            stack_lo[top + 1, i] = stack_lo[top, i]
            stack_hi[top + 1, i] = stack_hi[top, i]
        stack_lo[top + 1, widest] = mid
        stack_depth[top + 1] = depth + 1
        stack_hi[top, widest] = mid
        stack_depth[top] = depth + 1
        top += 2

    return top, leaves, units, evals, best_value, status
