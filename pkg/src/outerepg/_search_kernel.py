"""Compiled depth-first search behind ``oracle.bounded_grid_search``.

Paths have at most two bends and live on the points [0, W-1]^2. Unit edges
carry a bitmask of the placed vertices using them, so a candidate is checked
in one walk over its edges. Vertices are placed in a fixed order; every
vertex after the first must share an edge with an earlier neighbour (its
anchor), so candidates are grown around a segment collinear with one of the
anchor's segments.
"""

import numpy as np
from numba import njit

FOUND, NONE, BUDGET, OVERFLOW = 0, 1, 2, 3
MAXC = 4  # corners of a path with two bends


@njit(cache=True)
def _chain(start_x, start_y, horizontal, idx, m, W, out_x, out_y):
    """Decode chain number ``idx`` with m segments leaving a line; False if it leaves the grid."""
    x, y = start_x, start_y
    along = horizontal
    for j in range(m):
        code = idx % (2 * (W - 1))
        idx //= 2 * (W - 1)
        sign = 1 if code % 2 == 0 else -1
        length = code // 2 + 1
        along = not along  # each chain segment turns
        if along:
            x += sign * length
        else:
            y += sign * length
        if x < 0 or x >= W or y < 0 or y >= W:
            return False
        out_x[j] = x
        out_y[j] = y
    return True


@njit(cache=True)
def _chain_count(m, W):
    c = 1
    for _ in range(m):
        c *= 2 * (W - 1)
    return c


@njit(cache=True)
def _edge_id(x0, y0, x1, y1, W):
    if y0 == y1:
        return y0 * (W - 1) + min(x0, x1)
    return W * (W - 1) + x0 * (W - 1) + min(y0, y1)


@njit(cache=True)
def _walk(cx, cy, m, W, occ, forbid):
    """OR of the occupancy masks along the path, or -1 on a forbidden contact."""
    hits = 0
    for j in range(m - 1):
        x, y = cx[j], cy[j]
        dx = 1 if cx[j + 1] > x else (-1 if cx[j + 1] < x else 0)
        dy = 1 if cy[j + 1] > y else (-1 if cy[j + 1] < y else 0)
        while x != cx[j + 1] or y != cy[j + 1]:
            e = _edge_id(x, y, x + dx, y + dy, W)
            o = occ[e]
            if o & forbid:
                return -1
            hits |= o
            x += dx
            y += dy
    return hits


@njit(cache=True)
def _mark(cx, cy, m, W, occ, bit, on):
    for j in range(m - 1):
        x, y = cx[j], cy[j]
        dx = 1 if cx[j + 1] > x else (-1 if cx[j + 1] < x else 0)
        dy = 1 if cy[j + 1] > y else (-1 if cy[j + 1] < y else 0)
        while x != cx[j + 1] or y != cy[j + 1]:
            e = _edge_id(x, y, x + dx, y + dy, W)
            if on:
                occ[e] |= bit
            else:
                occ[e] &= ~bit
            x += dx
            y += dy


@njit(cache=True)
def _monotonic(cx, cy, m):
    sx, sy = 0, 0
    for j in range(m - 1):
        dx = cx[j + 1] - cx[j]
        dy = cy[j + 1] - cy[j]
        if dx != 0:
            s = 1 if dx > 0 else -1
            if sx != 0 and s != sx:
                return False
            sx = s
        if dy != 0:
            s = 1 if dy > 0 else -1
            if sy != 0 and s != sy:
                return False
            sy = s
    # up-right or down-left read one way; a path going up-left is never monotonic
    return sx * sy >= 0


@njit(cache=True)
def _missing(cs, m, used, top, distinct):
    """Unused coordinates in [0, max] once the candidate's values are added."""
    extra = 0
    for j in range(m):
        c = cs[j]
        if used[c]:
            continue
        dup = False
        for i in range(j):
            if cs[i] == c:
                dup = True
                break
        if not dup:
            extra += 1
            if c > top:
                top = c
    return top + 1 - distinct - extra


@njit(cache=True)
def _overlap(ax0, ay0, ax1, ay1, bx0, by0, bx1, by1):
    """Two axis-parallel segments share a unit edge."""
    if ay0 == ay1 and by0 == by1 and ax0 != ax1 and bx0 != bx1:
        if ay0 != by0:
            return False
        return max(min(ax0, ax1), min(bx0, bx1)) < min(max(ax0, ax1), max(bx0, bx1))
    if ax0 == ax1 and bx0 == bx1 and ay0 != ay1 and by0 != by1:
        if ax0 != bx0:
            return False
        return max(min(ay0, ay1), min(by0, by1)) < min(max(ay0, ay1), max(by0, by1))
    return False


@njit(cache=True)
def _generate(level, k, mono, W, row0, occ, adj, anchor, px, py, pn, cand_x, cand_y, cand_n, nodes, budget):
    """Fill the candidate buffer of ``level``; returns (count, nodes, status)."""
    cap = cand_x.shape[1]
    placed = (np.int64(1) << level) - 1
    forbid = placed & ~adj[level]
    need = placed & adj[level]
    count = 0
    lx = np.empty(2, np.int64)
    ly = np.empty(2, np.int64)
    rx = np.empty(2, np.int64)
    ry = np.empty(2, np.int64)
    cx = np.empty(MAXC, np.int64)
    cy = np.empty(MAXC, np.int64)
    u = anchor[level]
    # Only compacted layouts are searched: every coordinate up to the largest
    # one carries a corner. Later vertices add at most k+2 values per axis.
    spare = (anchor.shape[0] - 1 - level) * (k + 2)
    usedx = np.zeros(W, np.int64)
    usedy = np.zeros(W, np.int64)
    for q in range(level):
        for j in range(pn[q]):
            usedx[px[q, j]] = 1
            usedy[py[q, j]] = 1
    topx, topy = -1, -1
    nx_, ny_ = 0, 0
    for c in range(W):
        if usedx[c]:
            topx = c
            nx_ += 1
        if usedy[c]:
            topy = c
            ny_ += 1
    # base lines: the anchor's segments, or every horizontal line for the first vertex
    nbases = pn[u] - 1 if u >= 0 else W
    for b in range(nbases):
        if u >= 0:
            bx0, by0, bx1, by1 = px[u, b], py[u, b], px[u, b + 1], py[u, b + 1]
            horizontal = by0 == by1
            fixed = by0 if horizontal else bx0
            lo = min(bx0, bx1) if horizontal else min(by0, by1)
            hi = max(bx0, bx1) if horizontal else max(by0, by1)
        else:
            if row0 and b > 0:
                break
            bx0, by0, bx1, by1 = 0, b, 0, b
            horizontal = True
            fixed = b
            lo, hi = 0, W - 1
        for s in range(0, hi):
            for t in range(max(s + 1, lo + 1), W):
                if u >= 0 and s >= hi:
                    continue
                for g in range(k + 1):
                    if u < 0 and g > 0:
                        break  # first vertex: the base is an end segment
                    for h in range(k - g + 1):
                        sx = s if horizontal else fixed
                        sy = fixed if horizontal else s
                        tx = t if horizontal else fixed
                        ty = fixed if horizontal else t
                        for li in range(_chain_count(g, W)):
                            if not _chain(sx, sy, horizontal, li, g, W, lx, ly):
                                continue
                            for ri in range(_chain_count(h, W)):
                                if not _chain(tx, ty, horizontal, ri, h, W, rx, ry):
                                    continue
                                m = 0
                                for j in range(g - 1, -1, -1):
                                    cx[m] = lx[j]
                                    cy[m] = ly[j]
                                    m += 1
                                cx[m] = sx
                                cy[m] = sy
                                cx[m + 1] = tx
                                cy[m + 1] = ty
                                m += 2
                                for j in range(h):
                                    cx[m] = rx[j]
                                    cy[m] = ry[j]
                                    m += 1
                                base_seg = g
                                # canonical direction: smaller endpoint first
                                if cx[m - 1] < cx[0] or (cx[m - 1] == cx[0] and cy[m - 1] < cy[0]):
                                    for j in range(m // 2):
                                        cx[j], cx[m - 1 - j] = cx[m - 1 - j], cx[j]
                                        cy[j], cy[m - 1 - j] = cy[m - 1 - j], cy[j]
                                    base_seg = m - 2 - g
                                if u >= 0:
                                    # keep only the first (segment, anchor segment) overlap
                                    first_c, first_a = -1, -1
                                    for j in range(m - 1):
                                        for a in range(pn[u] - 1):
                                            if _overlap(cx[j], cy[j], cx[j + 1], cy[j + 1], px[u, a], py[u, a], px[u, a + 1], py[u, a + 1]):
                                                first_c, first_a = j, a
                                                break
                                        if first_c >= 0:
                                            break
                                    if first_c != base_seg or first_a != b:
                                        continue
                                nodes += 1
                                if nodes > budget:
                                    return count, nodes, BUDGET
                                if mono and not _monotonic(cx, cy, m):
                                    continue
                                if _missing(cx, m, usedx, topx, nx_) > spare or _missing(cy, m, usedy, topy, ny_) > spare:
                                    continue
                                hits = _walk(cx, cy, m, W, occ, forbid)
                                if hits < 0 or (hits & need) != need:
                                    continue
                                if count == cap:
                                    return count, nodes, OVERFLOW
                                for j in range(m):
                                    cand_x[level, count, j] = cx[j]
                                    cand_y[level, count, j] = cy[j]
                                cand_n[level, count] = m
                                count += 1
    return count, nodes, NONE


@njit(cache=True)
def search(n, k, mono, W, row0, adj, anchor, budget, cap, nodes):
    """Returns (status, nodes, px, py, pn); px/py/pn hold the paths when FOUND."""
    occ = np.zeros(2 * W * (W - 1), np.int64)
    px = np.zeros((n, MAXC), np.int64)
    py = np.zeros((n, MAXC), np.int64)
    pn = np.zeros(n, np.int64)
    cand_x = np.zeros((n, cap, MAXC), np.int64)
    cand_y = np.zeros((n, cap, MAXC), np.int64)
    cand_n = np.zeros((n, cap), np.int64)
    count = np.zeros(n, np.int64)
    pos = np.zeros(n, np.int64)
    level = 0
    c, nodes, st = _generate(0, k, mono, W, row0, occ, adj, anchor, px, py, pn, cand_x, cand_y, cand_n, nodes, budget)
    if st == BUDGET or st == OVERFLOW:
        return st, nodes, px, py, pn
    count[0] = c
    while level >= 0:
        if pn[level] > 0:
            _mark(px[level], py[level], pn[level], W, occ, np.int64(1) << level, False)
            pn[level] = 0
        if pos[level] == count[level]:
            level -= 1
            continue
        j = pos[level]
        pos[level] += 1
        m = cand_n[level, j]
        for q in range(m):
            px[level, q] = cand_x[level, j, q]
            py[level, q] = cand_y[level, j, q]
        pn[level] = m
        _mark(px[level], py[level], m, W, occ, np.int64(1) << level, True)
        if level == n - 1:
            return FOUND, nodes, px, py, pn
        level += 1
        c, nodes, st = _generate(level, k, mono, W, row0, occ, adj, anchor, px, py, pn, cand_x, cand_y, cand_n, nodes, budget)
        if st == BUDGET or st == OVERFLOW:
            return st, nodes, px, py, pn
        count[level] = c
        pos[level] = 0
    return NONE, nodes, px, py, pn
