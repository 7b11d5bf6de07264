"""Monotonic two-bend representations of outerplanar graphs.

Each green vertex owns a free interval [left, right] on the row of its lower
horizontal segment; ``right`` is where that segment ends or turns upward.
Nothing else uses the interval, the open region below it, or the stretch of
that row between ``right`` and the next green vertex's interval. Free
intervals of green vertices form a staircase: by label they move strictly
right and strictly up. Every new line is a fresh symbolic coordinate, so a
segment can only overlap another one where the construction places it on
purpose.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coords import Axis, realize
from .embedding import NotOuterplanar, nice_labeling, test_outerplanar
from .graph import Graph, GraphError
from .grid import EpgRepresentation, compact, representation_from_points, translate


class NotOuterplanarError(GraphError):
    pass


class InvariantError(RuntimeError):
    pass


GRAY, GREEN, RED = "gray", "green", "red"


@dataclass
class FreeInterval:
    left: int
    right: int
    row: int


@dataclass
class BuilderState:
    label: dict  # vertex -> position in the nice labeling
    residual: dict  # vertex -> set of neighbours still in G'
    xs: Axis = field(default_factory=Axis)
    ys: Axis = field(default_factory=Axis)
    color: dict = field(default_factory=dict)
    free: dict = field(default_factory=dict)
    paths: dict = field(default_factory=dict)
    # green vertices, largest label first, so the smallest sits at the end
    green: list = field(default_factory=list)
    log: list = field(default_factory=list)
    last_explored: tuple = None

    @classmethod
    def start(cls, g: Graph, order) -> "BuilderState":
        label = {v: i + 1 for i, v in enumerate(order)}
        st = cls(label, {v: set(g.neighbors(v)) for v in g.vertices()})
        st.color = {v: GRAY for v in g.vertices()}
        first = order[0]
        a = st.xs.after(st.xs.low)
        b = st.xs.after(a)
        y = st.ys.after(st.ys.low)
        st.paths[first] = [(a, y), (b, y)]
        st.free[first] = FreeInterval(a, b, y)
        st.color[first] = GREEN
        st.green.append(first)
        return st

    def next_green(self):
        return self.green[-1] if self.green else None

    def explore(self, v: int) -> "BuilderState":
        if not self.green or self.green[-1] != v:
            raise InvariantError(f"vertex {v} is not the green vertex with the smallest label")
        star = self.green[-2] if len(self.green) >= 2 else None
        nbrs = sorted(self.residual[v], key=self.label.__getitem__)
        for u in nbrs:
            if self.color[u] != GRAY:
                raise InvariantError(f"neighbour {u} of explored vertex {v} is not gray")
            if star is not None and self.label[u] > self.label[star]:
                raise InvariantError(f"neighbour {u} of {v} lies beyond the next green vertex {star}")
        k = len(nbrs)
        adj = [nbrs[j + 1] in self.residual[nbrs[j]] for j in range(k - 1)]
        reg = self.free[v]
        xs, ys = self.xs, self.ys

        cur = reg.left

        def fresh():
            nonlocal cur
            cur = xs.after(cur)
            return cur

        # every neighbour but the last hangs below the free interval
        top_end = {}
        rows = []
        for j in range(k - 1):
            row = ys.before(reg.row) if j == 0 else ys.after(rows[-1])
            rows.append(row)
            s, c = fresh(), fresh()
            if j > 0 and adj[j - 1]:
                top_end[j - 1] = fresh()
            if not adj[j]:
                top_end[j] = fresh()
            u = nbrs[j]
            self.paths[u] = [(s, row), (c, row), (c, reg.row), (None, reg.row)]
            self.free[u] = FreeInterval(s, c, row)
            case = "a" if j == 0 else ("c" if adj[j - 1] else "b")
            self.log.append((v, u, case))
        if k:
            last = nbrs[-1]
            p = fresh()
            if k >= 2 and adj[k - 2]:
                top_end[k - 2] = fresh()
            for j in range(k - 1):
                self.paths[nbrs[j]][3] = (top_end[j], reg.row)
            if star is not None and star in self.residual[last]:
                target = self.free[star]
                up = xs.after(target.left)
                land = xs.after(up)
                self.paths[last] = [(p, reg.row), (up, reg.row), (up, target.row), (land, target.row)]
                self.free[star] = FreeInterval(land, target.right, target.row)
                self.free[last] = FreeInterval(reg.right, up, reg.row)
                self.log.append((v, last, "e"))
            else:
                end = xs.after(reg.right)
                self.paths[last] = [(p, reg.row), (end, reg.row)]
                self.free[last] = FreeInterval(reg.right, end, reg.row)
                self.log.append((v, last, "d"))
        for u in nbrs:
            self.color[u] = GREEN
        self.last_explored = (v, nbrs, star)
        return self

    def update(self, v: int) -> "BuilderState":
        if self.last_explored is None or self.last_explored[0] != v:
            raise InvariantError(f"update({v}) does not follow explore({v})")
        _, nbrs, star = self.last_explored
        for u in list(self.residual[v]):
            self.residual[u].discard(v)
        self.residual[v] = set()
        for a, b in zip(nbrs, nbrs[1:]):
            self.residual[a].discard(b)
            self.residual[b].discard(a)
        if nbrs and star is not None:
            self.residual[nbrs[-1]].discard(star)
            self.residual[star].discard(nbrs[-1])
        self.color[v] = RED
        del self.free[v]
        self.green.pop()
        self.green.extend(reversed(nbrs))
        self.last_explored = None
        return self

    def check_staircase(self) -> None:
        """Assert the ordering of free intervals among green vertices (O(n), for tests)."""
        rx, ry = self.xs.ranks(), self.ys.ranks()
        order = self.green[::-1]
        for a, b in zip(order, order[1:]):
            fa, fb = self.free[a], self.free[b]
            if not (rx[fa.left] < rx[fa.right] < rx[fb.left] and ry[fa.row] < ry[fb.row]):
                raise InvariantError(f"free intervals of {a} and {b} are out of order")


def explore(state: BuilderState, v: int) -> BuilderState:
    return state.explore(v)


def update(state: BuilderState, v: int) -> BuilderState:
    return state.update(v)


def run_connected(g: Graph, order, check: bool = False) -> BuilderState:
    st = BuilderState.start(g, order)
    while st.green:
        v = st.next_green()
        st.explore(v)
        st.update(v)
        if check and st.green:
            st.check_staircase()
    if any(c != RED for c in st.color.values()):
        raise InvariantError("some vertex was never explored")
    return st


def _connected_b2m(g: Graph) -> EpgRepresentation:
    emb = test_outerplanar(g)
    if isinstance(emb, NotOuterplanar):
        raise NotOuterplanarError(emb.reason)
    order = nice_labeling(g, emb).order
    st = run_connected(g, order)
    return compact(representation_from_points(realize(st.paths, st.xs, st.ys)))


def build_b2m(g: Graph) -> EpgRepresentation:
    if g.n == 0:
        return EpgRepresentation({})
    paths, dx, dy = {}, 0, 0
    # components go on a diagonal, each in its own band of rows and columns
    for comp in g.components():
        sub, old = g.induced(comp)
        rep = _connected_b2m(sub)
        mx, my = rep.extent
        for v, p in translate(rep, dx, dy).paths.items():
            paths[old[v - 1]] = p
        dx += mx + 1
        dy += my + 1
    return EpgRepresentation(paths)


def build_nsun_b2m(n: int) -> EpgRepresentation:
    """Closed-form drawing of the n-sun (centres 1..n, rays n+1..2n).

    Centre i is an L: up the shared column 0 to row 10i, then right. Ray i
    steps from row 10i to row 10(i+1) between its two centres; the last ray
    climbs from row 10 to row 10n.
    """
    if n < 3:
        raise GraphError("nsun needs n >= 3")
    pts = {}
    for s in range(1, n + 1):
        pts[s] = [(0, 0), (0, 10 * s), (10 * s + 10, 10 * s)]
    for s in range(1, n):
        pts[n + s] = [(10 * s, 10 * s), (10 * s + 5, 10 * s), (10 * s + 5, 10 * s + 10), (10 * s + 10, 10 * s + 10)]
    pts[2 * n] = [(0, 10), (3, 10), (3, 10 * n), (10, 10 * n)]
    return compact(representation_from_points(pts))


def match_nsun(g: Graph) -> dict | None:
    """Labels of gen_named("nsun", k) mapped onto g's vertices, or None if g is no sun."""
    if g.n < 6 or g.n % 2:
        return None
    k = g.n // 2
    rays = [v for v in g.vertices() if g.degree(v) == 2]
    centres = [v for v in g.vertices() if g.degree(v) == k + 1]
    if len(rays) != k or len(centres) != k:
        return None
    cs = set(centres)
    if any(not g.neighbor_set(c) - {c} >= cs - {c} for c in centres):
        return None
    # rays must join centre pairs along one Hamiltonian cycle
    ray_of, ring = {}, {c: [] for c in centres}
    for r in rays:
        a, b = g.neighbors(r)
        if a not in cs or b not in cs or frozenset((a, b)) in ray_of:
            return None
        ray_of[frozenset((a, b))] = r
        ring[a].append(b)
        ring[b].append(a)
    if any(len(nb) != 2 for nb in ring.values()):
        return None
    order = [min(centres)]
    nxt = min(ring[order[0]])
    while nxt != order[0]:
        order.append(nxt)
        a, b = ring[nxt]
        nxt = a if a != order[-2] else b
    if len(order) != k:
        return None
    perm = {i + 1: v for i, v in enumerate(order)}
    for i in range(k):
        perm[k + i + 1] = ray_of[frozenset((order[i], order[(i + 1) % k]))]
    return perm


def build_b2m_any(g: Graph) -> EpgRepresentation:
    """build_b2m, falling back to the closed form when g is a non-outerplanar sun."""
    perm = match_nsun(g) if g.n >= 8 else None
    if perm is None:
        return build_b2m(g)
    rep = build_nsun_b2m(g.n // 2)
    return EpgRepresentation({perm[v]: p for v, p in rep.paths.items()})
