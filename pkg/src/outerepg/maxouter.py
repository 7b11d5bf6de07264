"""Maximal outerplanar graphs: dual tree, reduced graph, B0 and B1 builders.

In a maximal outerplanar graph every triangle is an inner face, so the dual
tree is read off the triangle list. Faces are indexed by their sorted vertex
triples in lexicographic order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .b2m import InvariantError
from .coords import Axis, realize
from .embedding import NotOuterplanar, test_outerplanar
from .graph import Graph, GraphError, Witness
from .grid import EpgRepresentation, representation_from_points


class NotMaximalOuterplanar(GraphError):
    pass


@dataclass(frozen=True)
class DualTree:
    faces: tuple  # sorted vertex triples
    adjacency: tuple  # per face, sorted indices of faces sharing an edge with it

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def __len__(self):
        return len(self.faces)

    def is_path(self) -> bool:
        return all(len(a) <= 2 for a in self.adjacency)


def require_maximal_outerplanar(g: Graph, emb=None):
    if g.n < 3:
        raise NotMaximalOuterplanar("need at least three vertices")
    if g.m != 2 * g.n - 3:
        raise NotMaximalOuterplanar(f"{g.m} edges, a maximal outerplanar graph on {g.n} vertices has {2 * g.n - 3}")
    if emb is None:
        emb = test_outerplanar(g)
    if isinstance(emb, NotOuterplanar):
        raise NotMaximalOuterplanar(emb.reason)
    return emb


def _triangles(g: Graph) -> list:
    out = []
    for u, v in g.sorted_edges():
        a, b = (u, v) if g.degree(u) <= g.degree(v) else (v, u)
        other = g.neighbor_set(b)
        for w in g.neighbors(a):
            if w > v and w in other:
                out.append((u, v, w))
    out.sort()
    return out


def almost_dual(g: Graph, emb=None) -> DualTree:
    require_maximal_outerplanar(g, emb)
    faces = _triangles(g)
    if len(faces) != g.n - 2:
        raise NotMaximalOuterplanar(f"found {len(faces)} triangles, expected {g.n - 2}")
    by_edge = {}
    for i, (x, y, z) in enumerate(faces):
        for e in ((x, y), (x, z), (y, z)):
            by_edge.setdefault(e, []).append(i)
    adj = [[] for _ in faces]
    for e, fs in by_edge.items():
        if len(fs) == 2:
            i, j = fs
            adj[i].append(j)
            adj[j].append(i)
        elif len(fs) > 2:
            raise NotMaximalOuterplanar(f"edge {e} lies on {len(fs)} triangles")
    return DualTree(tuple(faces), tuple(tuple(sorted(a)) for a in adj))


def s3_centers(dual: DualTree) -> list:
    return [(i, dual.faces[i]) for i in range(len(dual)) if dual.degree(i) == 3]


def s3_witness(dual: DualTree, centre: int) -> Witness:
    """Map the 3-sun onto a central face and the apexes of its three neighbours."""
    x1, x2, x3 = dual.faces[centre]
    apex = {}
    for j in dual.adjacency[centre]:
        f = dual.faces[j]
        shared = frozenset(f) & {x1, x2, x3}
        apex[shared] = next(v for v in f if v not in shared)
    rays = [apex[frozenset(p)] for p in ((x1, x2), (x2, x3), (x3, x1))]
    return Witness("S3", dict(zip(range(1, 7), (x1, x2, x3, *rays))))


@dataclass(frozen=True)
class ReducedGraph:
    kept_vertices: frozenset
    kept_edges: frozenset
    triangles: tuple  # (dual index, triple) per central triangle

    def as_graph(self, n: int) -> Graph:
        """The reduced graph on the original vertex ids; dropped vertices stay isolated."""
        return Graph.from_edges(n, self.kept_edges)


def reduced_graph(g: Graph, dual: DualTree) -> ReducedGraph:
    verts, edges = set(), set()
    centres = s3_centers(dual)
    for _, (x, y, z) in centres:
        verts.update((x, y, z))
        edges.update(((x, y), (x, z), (y, z)))
    return ReducedGraph(frozenset(verts), frozenset(edges), tuple(centres))


# ---------------------------------------------------------------- B0


def dual_path_order(dual: DualTree, reverse: bool = False) -> list:
    if not dual.is_path():
        raise GraphError("the dual tree is not a path, so the graph contains S3")
    if len(dual) == 1:
        return [0]
    ends = [i for i in range(len(dual)) if dual.degree(i) == 1]
    start = min(ends, key=lambda i: (min(dual.faces[i]), dual.faces[i]))
    order, prev = [start], None
    while len(order) < len(dual):
        cur = order[-1]
        nxt = [j for j in dual.adjacency[cur] if j != prev]
        prev = cur
        order.append(nxt[0])
    return order[::-1] if reverse else order


def build_b0(g: Graph, dual: DualTree | None = None, reverse: bool = False) -> EpgRepresentation:
    """Interval representation on row 1 from the dual path.

    Face i (1-based along the path) owns the unit edge [i, i+1]; a vertex's
    interval runs from its first face to one past its last.
    """
    if dual is None:
        dual = almost_dual(g)
    first, last = {}, {}
    for i, f in enumerate(dual_path_order(dual, reverse), start=1):
        for v in dual.faces[f]:
            first.setdefault(v, i)
            last[v] = i
    return representation_from_points({v: [(first[v], 1), (last[v] + 1, 1)] for v in g.vertices()})


# ---------------------------------------------------------------- assignment


@dataclass
class Assignment:
    assigned: dict  # dual index -> sorted vertex pair
    level: dict
    delta: dict  # vertex -> dual index, only for assigned vertices
    label: dict

    def check(self, dual: DualTree) -> None:
        seen = {}
        for i, pair in self.assigned.items():
            if not set(pair) <= set(dual.faces[i]) or len(set(pair)) != 2:
                raise InvariantError(f"pair {pair} is not inside face {dual.faces[i]}")
            for x in pair:
                if x in seen:
                    raise InvariantError(f"vertex {x} assigned to faces {seen[x]} and {i}")
                seen[x] = i
        if seen != self.delta:
            raise InvariantError("delta does not mirror the assignment")


@dataclass(frozen=True)
class NotMFree:
    stage: int  # 1: a neighbored pair hits an assigned vertex; 2: a triangle meets two
    site: int  # dual index being served when the conflict showed up
    involved: tuple  # dual indices of the triangles holding the conflicting vertices
    vertices: tuple

    def __bool__(self):
        return False


def compute_assignment(g: Graph, dual: DualTree | None = None):
    if dual is None:
        dual = almost_dual(g)
    faces = dual.faces
    central = [i for i in range(len(dual)) if dual.degree(i) == 3]
    is_central = set(central)
    assigned, level, delta = {}, {}, {}
    label = {i: "unserved" for i in central}
    by_vertex = {}
    for i in central:
        for x in faces[i]:
            by_vertex.setdefault(x, []).append(i)

    def serve(i, pair, lvl, queue):
        assigned[i] = tuple(sorted(pair))
        label[i] = "served"
        level[i] = lvl
        for x in pair:
            delta[x] = i
            for t in by_vertex[x]:
                if label[t] == "unserved":
                    queue.append(t)

    queue = deque()
    # step one: neighbored pairs
    for i in central:
        if label[i] != "unserved":
            continue
        partner = next((j for j in dual.adjacency[i] if j in is_central), None)
        if partner is None:
            continue
        shared = sorted(set(faces[i]) & set(faces[partner]))
        hit = [x for x in set(faces[i]) | set(faces[partner]) if x in delta]
        if hit:
            return NotMFree(1, i, tuple(sorted({delta[x] for x in hit} | {partner})), tuple(sorted(hit)))
        a, b = shared
        (c,) = set(faces[i]) - {a, b}
        (d,) = set(faces[partner]) - {a, b}
        serve(i, (a, c), 0, queue)
        serve(partner, (b, d), 0, queue)

    # steps two and three: spread from served triangles, else seed a fresh one
    cursor = 0
    while True:
        while queue:
            i = queue.popleft()
            if label[i] != "unserved":
                continue
            tri = faces[i]
            a = min((x for x in tri if x in delta), key=lambda x: (level[delta[x]], x))
            others = [x for x in tri if x != a and x in delta]
            if others:
                return NotMFree(2, i, tuple(sorted({delta[a]} | {delta[x] for x in others})), tuple(sorted([a] + others)))
            serve(i, [x for x in tri if x != a], level[delta[a]] + 1, queue)
        while cursor < len(central) and label[central[cursor]] != "unserved":
            cursor += 1
        if cursor == len(central):
            break
        i = central[cursor]
        a = min(faces[i])
        serve(i, [x for x in faces[i] if x != a], 0, queue)
    return Assignment(assigned, level, delta, label)


# ---------------------------------------------------------------- B1


@dataclass
class _Port:
    """Two paths end at (f, l) heading along ``axis`` in direction ``sign``.

    Beyond the port, up to the region's far side and between its lateral
    bounds, the grid is empty. New lines are always created right next to an
    existing one, so they land inside the region without tracking its bounds.
    """

    f: int  # coordinate along the heading axis
    l: int  # coordinate on the other axis
    axis: int  # 0: heading along x, 1: heading along y
    sign: int


@dataclass
class _B1Builder:
    xs: Axis = field(default_factory=Axis)
    ys: Axis = field(default_factory=Axis)
    paths: dict = field(default_factory=dict)

    def axes(self, port):
        return (self.xs, self.ys) if port.axis == 0 else (self.ys, self.xs)

    def point(self, port, f, l):
        return (f, l) if port.axis == 0 else (l, f)

    def ahead(self, port, t):
        fa, _ = self.axes(port)
        return fa.after(t) if port.sign > 0 else fa.before(t)

    def extend(self, v, at, to):
        p = self.paths[v]
        if p[-1] == at:
            p.append(to)
        elif p[0] == at:
            p.appendleft(to)
        else:
            raise InvariantError(f"path of {v} does not end at the port")

    def leaf(self, port, a, b, d):
        at = self.point(port, port.f, port.l)
        x1 = self.ahead(port, port.f)
        end = self.point(port, x1, port.l)
        self.extend(a, at, end)
        self.extend(b, at, end)
        self.paths[d] = deque([at, end])

    def straight(self, port, keep, drop, d):
        at = self.point(port, port.f, port.l)
        x1 = self.ahead(port, port.f)
        x2 = self.ahead(port, x1)
        self.extend(drop, at, self.point(port, x1, port.l))
        self.extend(keep, at, self.point(port, x2, port.l))
        self.paths[d] = deque([at, self.point(port, x2, port.l)])
        return _Port(x2, port.l, port.axis, port.sign)

    def split_both(self, port, a, b, d):
        """a and b both bend at this face; d crosses between them."""
        _, la = self.axes(port)
        at = self.point(port, port.f, port.l)
        r = self.ahead(port, port.f)
        lo, hi = la.before(port.l), la.after(port.l)
        turn = self.point(port, r, port.l)
        for v, side in ((a, lo), (b, hi)):
            self.extend(v, at, turn)
            self.extend(v, turn, self.point(port, r, side))
        self.paths[d] = deque([self.point(port, r, lo), self.point(port, r, hi)])
        return _Port(lo, r, 1 - port.axis, -1), _Port(hi, r, 1 - port.axis, 1)

    def split_hook(self, port, a, b, d):
        """a and d bend at this face; b runs straight on."""
        _, la = self.axes(port)
        at = self.point(port, port.f, port.l)
        c = self.ahead(port, port.f)
        far = self.ahead(port, c)
        low = la.before(port.l)
        self.extend(b, at, self.point(port, far, port.l))
        corner = self.point(port, c, port.l)
        self.extend(a, at, corner)
        self.extend(a, corner, self.point(port, c, low))
        self.paths[d] = deque([self.point(port, c, low), corner, self.point(port, far, port.l)])
        return _Port(low, c, 1 - port.axis, -1), _Port(far, port.l, port.axis, port.sign)


def build_b1(g: Graph, dual: DualTree | None = None, asg: Assignment | None = None) -> EpgRepresentation:
    if dual is None:
        dual = almost_dual(g)
    if asg is None:
        asg = compute_assignment(g, dual)
    if isinstance(asg, NotMFree):
        raise GraphError("graph is not M-free, so it has no one-bend representation")
    faces = [set(f) for f in dual.faces]
    bld = _B1Builder()
    x0 = bld.xs.after(bld.xs.low)
    x1 = bld.xs.after(x0)
    y0 = bld.ys.after(bld.ys.low)
    if len(dual) == 1:
        for v in dual.faces[0]:
            bld.paths[v] = deque([(x0, y0), (x1, y0)])
        return _finish(bld)
    root = next(i for i in range(len(dual)) if dual.degree(i) == 1)
    first = dual.adjacency[root][0]
    a, b = sorted(faces[root] & faces[first])
    (c,) = faces[root] - {a, b}
    x2 = bld.xs.after(x1)
    bld.paths[c] = deque([(x0, y0), (x1, y0)])
    bld.paths[a] = deque([(x0, y0), (x2, y0)])
    bld.paths[b] = deque([(x0, y0), (x2, y0)])
    work = deque([(first, root, _Port(x2, y0, 0, 1))])
    while work:
        u, v, port = work.popleft()
        a, b = sorted(faces[u] & faces[v])
        (d,) = faces[u] - {a, b}
        rest = [w for w in dual.adjacency[u] if w != v]
        if not rest:
            bld.leaf(port, a, b, d)
        elif len(rest) == 1:
            (w,) = rest
            keep = a if a in faces[w] else b
            drop = b if keep == a else a
            work.append((w, u, bld.straight(port, keep, drop, d)))
        else:
            pair = set(asg.assigned[u])
            if pair == {a, b}:
                ap, bp = a, b
            else:
                (ap,) = pair & {a, b}
                bp = b if ap == a else a
            w = next(x for x in rest if ap in faces[x])
            w2 = next(x for x in rest if x != w)
            if pair == {ap, bp}:
                pw, pw2 = bld.split_both(port, ap, bp, d)
            elif pair == {ap, d}:
                pw, pw2 = bld.split_hook(port, ap, bp, d)
            else:
                raise InvariantError(f"face {u} has assignment {sorted(pair)} outside {sorted(faces[u])}")
            work.append((w, u, pw))
            work.append((w2, u, pw2))
    return _finish(bld)


def _finish(bld: _B1Builder) -> EpgRepresentation:
    pts = realize({v: list(p) for v, p in bld.paths.items()}, bld.xs, bld.ys)
    return representation_from_points(pts)


# ---------------------------------------------------------------- classification


@dataclass
class MaxOutClassification:
    b: int
    bm: int
    witness: str | None  # None, "S3_PRESENT" or "NOT_M_FREE"
    dual: DualTree = field(repr=False)
    assignment: object = field(default=None, repr=False)

    def representation(self, g: Graph) -> EpgRepresentation:
        """The certifying drawing for b (builds it on demand)."""
        if self.b == 0:
            return build_b0(g, self.dual)
        if self.b == 1:
            return build_b1(g, self.dual, self.assignment)
        from .b2m import build_b2m

        return build_b2m(g)


def classify(g: Graph) -> MaxOutClassification:
    dual = almost_dual(g)
    if not s3_centers(dual):
        return MaxOutClassification(0, 0, None, dual)
    asg = compute_assignment(g, dual)
    if isinstance(asg, NotMFree):
        return MaxOutClassification(2, 2, "NOT_M_FREE", dual, asg)
    return MaxOutClassification(1, 2, "S3_PRESENT", dual, asg)
