"""Cacti: decomposition, MC-freeness, and zero- and one-bend builders."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .b2m import InvariantError
from .coords import Axis, realize
from .graph import Graph, GraphError, Witness
from .grid import EpgRepresentation, representation_from_points


@dataclass(frozen=True)
class NotCactus:
    reason: str
    cycles: tuple = ()  # two cycles sharing an edge, when that is the reason

    def __bool__(self):
        return False


@dataclass(frozen=True)
class CactusDecomposition:
    cycles: tuple  # each cycle as its vertices in traversal order
    bridges: tuple
    # block tree: vertex -> indices of the cycles through it
    block_tree: dict

    def block_of(self, u: int, v: int):
        """Index of the cycle holding edge uv, or None for a bridge."""
        for i in self.block_tree.get(u, ()):
            if v in self.block_tree and i in self.block_tree[v]:
                cyc = self.cycles[i]
                k = cyc.index(u)
                if v in (cyc[k - 1], cyc[(k + 1) % len(cyc)]):
                    return i
        return None


def decompose_cactus(g: Graph):
    if g.n == 0:
        return NotCactus("empty graph")
    if not g.is_connected():
        return NotCactus(f"graph has {len(g.components())} components")
    parent = {1: None}
    depth = {1: 0}
    order = []
    stack = [(1, iter(g.neighbors(1)))]
    back = []
    while stack:
        v, it = stack[-1]
        for w in it:
            if w not in depth:
                parent[w] = v
                depth[w] = depth[v] + 1
                stack.append((w, iter(g.neighbors(w))))
                break
            if w != parent[v] and depth[w] < depth[v]:
                back.append((v, w))
        else:
            order.append(v)
            stack.pop()
    owner = {}  # tree edge (child) -> cycle index
    cycles = []
    for v, anc in back:
        cyc = [v]
        x = v
        while x != anc:
            if x in owner:
                other = cycles[owner[x]]
                return NotCactus("two cycles share an edge", (tuple(other), tuple(_walk_up(parent, v, anc))))
            owner[x] = len(cycles)
            x = parent[x]
            cyc.append(x)
        cycles.append(cyc[::-1])  # from the ancestor down
    on_cycle = set()
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            on_cycle.add((min(a, b), max(a, b)))
    bridges = tuple(e for e in g.sorted_edges() if e not in on_cycle)
    at = {}
    for i, c in enumerate(cycles):
        for v in c:
            at.setdefault(v, []).append(i)
    return CactusDecomposition(tuple(tuple(c) for c in cycles), bridges, {v: tuple(ix) for v, ix in at.items()})


def _walk_up(parent, v, anc):
    out = [v]
    while out[-1] != anc:
        out.append(parent[out[-1]])
    return out[::-1]


def _require(g: Graph, dec=None) -> CactusDecomposition:
    if dec is None:
        dec = decompose_cactus(g)
    if isinstance(dec, NotCactus):
        raise GraphError(f"not a cactus: {dec.reason}")
    return dec


# ---------------------------------------------------------------- MC-freeness


def is_mc_free(g: Graph, dec: CactusDecomposition | None = None):
    """True, or a Witness for the first obstruction found.

    Long cycles are checked first, then M3, then M2. In a cactus the cheap
    tests are exact: an M3 is a triangle whose corners all have degree 3 or
    more, and an M2 is a vertex with three neighbours in different blocks
    that each reach outside its closed neighbourhood.
    """
    dec = _require(g, dec)
    for cyc in dec.cycles:
        if len(cyc) >= 4:
            return Witness("CYCLE_GE4", {i + 1: v for i, v in enumerate(cyc)}, len(cyc))
    for cyc in sorted(dec.cycles):
        if all(g.degree(v) >= 3 for v in cyc):
            outer = [min(set(g.neighbors(v)) - set(cyc)) for v in cyc]
            return Witness("M3", dict(zip(range(1, 7), list(cyc) + outer)))
    on_triangle = set()
    for cyc in dec.cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            on_triangle.add((min(a, b), max(a, b)))
    for c in g.vertices():
        legs = []
        for x in g.neighbors(c):
            if any(g.has_edge(x, y) for y in legs):
                continue  # same triangle as an earlier leg
            # x has one common neighbour with c when cx lies on a triangle, else none
            if g.degree(x) - 1 - ((min(c, x), max(c, x)) in on_triangle) > 0:
                legs.append(x)
            if len(legs) == 3:
                closed = g.neighbor_set(c) | {c}
                mapping = {1: c}
                for i, x in enumerate(legs):
                    mapping[2 + i] = x
                    mapping[5 + i] = min(y for y in g.neighbors(x) if y not in closed)
                return Witness("M2", mapping)
    return True


def classify_cactus(g: Graph) -> tuple:
    """(b, bm): (0, 0) for MC-free cacti, (1, 1) otherwise."""
    return (0, 0) if is_mc_free(g) is True else (1, 1)


# ---------------------------------------------------------------- B0


def build_b0_cactus(g: Graph, dec: CactusDecomposition | None = None) -> EpgRepresentation:
    """Intervals on row 1: a caterpillar spine plus unit-length attachments."""
    dec = _require(g, dec)
    w = is_mc_free(g, dec)
    if w is not True:
        raise GraphError(f"cactus is not MC-free ({w.kind})")
    removed = {}  # degree-2 triangle vertex -> its two neighbours
    for cyc in dec.cycles:
        t = min(v for v in cyc if g.degree(v) == 2)
        removed[t] = tuple(v for v in cyc if v != t)
    rest = [v for v in g.vertices() if v not in removed]
    tree = {v: [u for u in g.neighbors(v) if u not in removed] for v in rest}
    if len(rest) <= 2:
        spine = [min(rest)]
    else:
        spine_set = {v for v in rest if len(tree[v]) >= 2}
        spine = _path_order(spine_set, tree)
    on_spine = set(spine)
    leaves = {v: sorted(u for u in tree[v] if u not in on_spine) for v in spine}
    # removed vertex keyed by the unordered pair it hangs on
    hang = {frozenset(p): t for t, p in removed.items()}
    iv = {}
    x = 0
    prev = None
    for i, s in enumerate(spine):
        start = x if prev is None else prev
        for leaf in leaves[s]:
            iv[leaf] = (x, x + 1)
            t = hang.get(frozenset((s, leaf)))
            if t is not None:
                iv[t] = (x, x + 1)
            x += 1
        if i + 1 < len(spine):
            t = hang.get(frozenset((s, spine[i + 1])))
            if t is not None:
                iv[t] = (x, x + 1)
            prev = x
            iv[s] = (start, x + 1)
            x += 1
        else:
            iv[s] = (start, max(x, start + 1))
    if len(iv) != g.n:
        raise InvariantError("some vertex got no interval; the spine is not a caterpillar")
    return representation_from_points({v: [(a + 1, 1), (b + 1, 1)] for v, (a, b) in iv.items()})


def _path_order(vertices: set, tree: dict) -> list:
    inner = {v: [u for u in tree[v] if u in vertices] for v in vertices}
    if any(len(a) > 2 for a in inner.values()):
        raise InvariantError("spine has a vertex of degree three")
    ends = sorted(v for v in vertices if len(inner[v]) <= 1)
    if not ends:
        raise InvariantError("spine is a cycle")
    out, seen = [ends[0]], {ends[0]}
    while True:
        nxt = [u for u in inner[out[-1]] if u not in seen]
        if not nxt:
            break
        out.append(nxt[0])
        seen.add(nxt[0])
    if len(out) != len(vertices):
        raise InvariantError("spine is disconnected")
    return out


# ---------------------------------------------------------------- B1 monotonic


@dataclass
class _Region:
    """Free rectangle around the host segment of a path.

    In the region's frame the host runs along u on the line w = host; frames
    are either the grid itself or its transpose. Children take u-lines just
    after ``cursor`` and w-lines right next to ``host``, so all of them stay
    inside the rectangle.
    """

    transposed: bool
    cursor: int
    host: int


class _B1mBuilder:
    def __init__(self):
        self.xs, self.ys = Axis(), Axis()
        self.paths = {}

    def axes(self, r: _Region):
        return (self.ys, self.xs) if r.transposed else (self.xs, self.ys)

    def draw(self, r: _Region, v: int, pts):
        self.paths[v] = [(w, u) if r.transposed else (u, w) for u, w in pts]

    def take(self, r: _Region, k: int) -> list:
        ua, _ = self.axes(r)
        out = ua.run_after(r.cursor, k)
        r.cursor = out[-1]
        return out

    def hook(self, r: _Region, v: int, top: int) -> _Region:
        """Tree neighbour: along the host, then up."""
        a, lo, b, hi = self.take(r, 4)
        self.draw(r, v, [(a, r.host), (b, r.host), (b, top)])
        return _Region(not r.transposed, r.host, b)

    def triangle(self, r: _Region, u1: int, u2: int, top: int) -> list:
        a1, a2, l1, b1, r1, l2, b2, r2 = self.take(r, 8)
        self.draw(r, u1, [(a1, r.host), (b1, r.host), (b1, top)])
        self.draw(r, u2, [(a2, r.host), (b2, r.host), (b2, top)])
        return [(u1, _Region(not r.transposed, r.host, b1)), (u2, _Region(not r.transposed, r.host, b2))]

    def square(self, r: _Region, u1: int, u2: int, u3: int, rows: list) -> list:
        w2l, w2, w2h, w1 = rows
        _, wa = self.axes(r)
        z2 = wa.before(r.host)
        z3 = wa.before(z2)
        a1, bl, b, br, c2, c3 = self.take(r, 6)
        self.draw(r, u1, [(a1, r.host), (b, r.host), (b, w1)])
        self.draw(r, u3, [(b, z3), (b, r.host), (c3, r.host)])
        self.draw(r, u2, [(b, z2), (b, w2), (c2, w2)])
        flip = not r.transposed
        return [(u1, _Region(flip, w2h, b)), (u2, _Region(r.transposed, b, w2)), (u3, _Region(flip, z3, b))]

    def long_cycle(self, r: _Region, us: list, rows: list) -> list:
        hl, h, hh, top = rows
        ell = len(us) + 1
        a1, b1l, b1, b1r, a_last = self.take(r, 5)
        # chain on row h: s3 < e2 < s4 < e3 < ... < s_{l-2} < e_{l-3}
        starts, ends = {}, {}
        for i in range(3, ell - 1):
            s, e = self.take(r, 2)
            starts[i], ends[i - 1] = s, e
        tl, t, tr = self.take(r, 3)
        u = {i + 1: v for i, v in enumerate(us)}
        self.draw(r, u[1], [(a1, r.host), (b1, r.host), (b1, top)])
        self.draw(r, u[2], [(b1, r.host), (b1, h), (ends[2], h)])
        for i in range(3, ell - 2):
            self.draw(r, u[i], [(starts[i], h), (ends[i], h)])
        self.draw(r, u[ell - 2], [(starts[ell - 2], h), (t, h), (t, top)])
        self.draw(r, u[ell - 1], [(a_last, r.host), (t, r.host), (t, top)])
        flip = not r.transposed
        out = [(u[1], _Region(flip, hh, b1)), (u[ell - 1], _Region(flip, r.host, t))]
        out.append((u[2], _Region(r.transposed, b1, h)))
        for i in range(3, ell - 1):
            out.append((u[i], _Region(r.transposed, ends[i - 1], h)))
        return out


def build_b1m_cactus(g: Graph, dec: CactusDecomposition | None = None) -> EpgRepresentation:
    dec = _require(g, dec)
    bld = _B1mBuilder()
    gray, green, red = 0, 1, 2
    color = {v: gray for v in g.vertices()}
    root = 1
    x0 = bld.xs.after(bld.xs.low)
    x1 = bld.xs.after(x0)
    y0 = bld.ys.after(bld.ys.low)
    bld.paths[root] = [(x0, y0), (x1, y0)]
    region = {root: _Region(False, x0, y0)}
    color[root] = green
    heap = [root]
    while heap:
        v = heapq.heappop(heap)
        r = region.pop(v)
        fresh = []
        cycles = []
        for i in dec.block_tree.get(v, ()):
            cyc = dec.cycles[i]
            others = [x for x in cyc if x != v]
            grays = sum(color[x] == gray for x in others)
            if grays == len(others):
                cycles.append(_from(cyc, v))
            elif grays:
                raise InvariantError(f"cycle {cyc} through {v} is partly explored")
        in_cycle = {x for c in cycles for x in c}
        tree_nbrs = sorted(u for u in g.neighbors(v) if color[u] == gray and u not in in_cycle)
        _, wa = bld.axes(r)
        rows = wa.run_after(r.host, 4)
        for u in tree_nbrs:
            fresh.append((u, bld.hook(r, u, rows[-1])))
        for c in sorted(cycles, key=min):
            if len(c) == 2:
                fresh += bld.triangle(r, c[0], c[1], rows[-1])
            elif len(c) == 3:
                fresh += bld.square(r, c[0], c[1], c[2], rows)
            else:
                fresh += bld.long_cycle(r, c, rows)
        for u, reg in fresh:
            color[u] = green
            region[u] = reg
            heapq.heappush(heap, u)
        color[v] = red
    if any(c != red for c in color.values()):
        raise InvariantError("exploration missed a vertex")
    return representation_from_points(realize(bld.paths, bld.xs, bld.ys))


def _from(cyc: tuple, v: int) -> list:
    """The other cycle vertices in order, starting next to v on the smaller-id side."""
    k = cyc.index(v)
    seq = list(cyc[k + 1:] + cyc[:k])
    return seq if seq[0] < seq[-1] else seq[::-1]
