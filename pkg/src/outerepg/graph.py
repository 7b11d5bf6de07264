"""Graph value type, edge-list parsing, generators and induced-subgraph search."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable


class GraphError(ValueError):
    pass


class ParseError(GraphError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class LoopError(ParseError):
    pass


class DuplicateEdgeError(ParseError):
    pass


class VertexRangeError(ParseError):
    pass


class MalformedLineError(ParseError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on the vertices 1..n."""

    n: int
    edges: frozenset
    adjacency: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphError(f"edge ({u}, {v}) out of range 1..{self.n}")
            norm.add((u, v) if u < v else (v, u))
        nbrs = [[] for _ in range(self.n + 1)]
        for u, v in norm:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in nbrs))
        object.__setattr__(self, "_sets", tuple(frozenset(a) for a in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> tuple:
        return self.adjacency[v]

    def neighbor_set(self, v: int) -> frozenset:
        return self._sets[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list]:
        """Induced subgraph relabelled to 1..k; also returns the old ids in order."""
        old = sorted(set(vertices))
        new_id = {v: i + 1 for i, v in enumerate(old)}
        es = [(new_id[u], new_id[v]) for u, v in self.edges if u in new_id and v in new_id]
        return Graph.from_edges(len(old), es), old

    def relabel(self, perm: dict) -> "Graph":
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def components(self) -> list:
        seen = [False] * (self.n + 1)
        comps = []
        for s in self.vertices():
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [s], [s]
            while stack:
                u = stack.pop()
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines += [f"{u} {v}" for u, v in self.sorted_edges()]
        return "\n".join(lines) + "\n"

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(self.vertices())
        g.add_edges_from(self.edges)
        return g


# ---------------------------------------------------------------- parsing


def parse_graph(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise MalformedLineError(1, "missing header 'n m'")
    lineno, header = rows[0]
    n, m = _two_ints(lineno, header)
    if n < 0 or m < 0:
        raise MalformedLineError(lineno, "negative count in header")
    body = rows[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else lineno + 1)
        raise MalformedLineError(where, f"header announces {m} edges, found {len(body)}")
    seen = {}
    for lineno, line in body:
        u, v = _two_ints(lineno, line)
        if u == v:
            raise LoopError(lineno, f"loop at vertex {u}")
        for x in (u, v):
            if not 1 <= x <= n:
                raise VertexRangeError(lineno, f"vertex {x} outside 1..{n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(lineno, f"edge {key} already listed at line {seen[key]}")
        seen[key] = lineno
    return Graph(n, frozenset(seen))


def _two_ints(lineno: int, line: str) -> tuple:
    parts = line.split()
    if len(parts) != 2:
        raise MalformedLineError(lineno, f"expected two integers, got {line!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise MalformedLineError(lineno, f"expected two integers, got {line!r}") from None


# ---------------------------------------------------------------- named families


def gen_named(family: str, *params: int) -> Graph:
    makers = {
        "nsun": _nsun,
        "cycle": _cycle,
        "path": _path,
        "m1": _m1,
        "m1_ell": _m1_ell,
        "m2": _m2,
        "m3": _m3,
    }
    if family not in makers:
        raise GraphError(f"unknown family {family!r}")
    return makers[family](*params)


def _nsun(n: int) -> Graph:
    # centre x_i is vertex i, ray y_i is vertex n + i
    if n < 3:
        raise GraphError("nsun needs n >= 3")
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    for i in range(1, n):
        edges += [(n + i, i), (n + i, i + 1)]
    edges += [(2 * n, 1), (2 * n, n)]
    return Graph.from_edges(2 * n, edges)


def _cycle(r: int) -> Graph:
    if r < 3:
        raise GraphError("cycle needs r >= 3")
    return Graph.from_edges(r, [(i, i % r + 1) for i in range(1, r + 1)])


def _path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def _m1() -> Graph:
    return Graph.from_edges(5, [(1, 2), (1, 3), (2, 3), (3, 4), (4, 2), (4, 5), (5, 2)])


def _m1_ell(ell: int) -> Graph:
    """Two diagonalised squares joined by a chain of ell triangles.

    Vertices: a1..a4 -> 1..4, chain c1..c_{2ell-1} -> 5.., then b1..b4
    (b1 is a1 when ell == 0).
    """
    if ell < 0:
        raise GraphError("m1_ell needs ell >= 0")
    a1, a2, a3, a4 = 1, 2, 3, 4
    chain = list(range(5, 5 + 2 * ell - 1)) if ell > 0 else []
    nxt = 5 + len(chain)
    b1 = a1 if ell == 0 else nxt
    if ell > 0:
        nxt += 1
    b2, b3, b4 = nxt, nxt + 1, nxt + 2
    edges = [(a1, a2), (a2, a3), (a3, a4), (a4, a1), (a1, a3)]
    edges += [(b1, b2), (b2, b3), (b3, b4), (b4, b1), (b1, b3)]
    c = [a1] + chain + [b1]
    for i in range(1, ell + 1):
        x, y, z = c[2 * i - 2], c[2 * i - 1], c[2 * i]
        edges += [(x, y), (y, z), (x, z)]
    return Graph.from_edges(b4, edges)


def _m2() -> Graph:
    return Graph.from_edges(7, [(1, 2), (1, 3), (1, 4), (2, 5), (3, 6), (4, 7)])


def _m3() -> Graph:
    return Graph.from_edges(6, [(1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6)])


# ---------------------------------------------------------------- random families


def gen_random(family: str, n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    if family == "maximal_outerplanar":
        if n < 3:
            raise GraphError("maximal_outerplanar needs n >= 3")
        return _shuffle_labels(polygon_triangulation(n, rng), rng)
    if family == "cactus":
        if n < 1:
            raise GraphError("cactus needs n >= 1")
        return _random_cactus(n, rng)
    if family == "connected_outerplanar":
        if n < 1:
            raise GraphError("connected_outerplanar needs n >= 1")
        return _random_connected_outerplanar(n, rng)
    raise GraphError(f"unknown random family {family!r}")


def _shuffle_labels(g: Graph, rng: random.Random) -> Graph:
    perm = list(g.vertices())
    rng.shuffle(perm)
    return g.relabel({v: perm[v - 1] for v in g.vertices()})


def _random_dyck(k: int, rng: random.Random) -> list:
    # cycle lemma: k ups and k+1 downs, rotate after the first minimum prefix
    steps = [1] * k + [-1] * (k + 1)
    rng.shuffle(steps)
    low, low_at, s = 0, 0, 0
    for i, x in enumerate(steps):
        s += x
        if s < low:
            low, low_at = s, i + 1
    rot = steps[low_at:] + steps[:low_at]
    return rot[:-1]


def polygon_triangulation(n: int, rng: random.Random | None = None, dyck: list | None = None) -> Graph:
    """Triangulated convex n-gon labelled 1..n around the boundary.

    The inner chords come from a Dyck word of semilength n-2 (uniform when
    drawn by the cycle lemma).
    """
    if dyck is None:
        dyck = _random_dyck(n - 2, rng or random.Random(0))
    match = {}
    stack = []
    for i, x in enumerate(dyck):
        if x == 1:
            stack.append(i)
        else:
            match[stack.pop()] = i
    edges = {(i, i + 1) for i in range(1, n)} | {(1, n)}
    # work items: polygon chord (i, j) with its slice [lo, hi) of the word
    work = [(1, n, 0, len(dyck))]
    while work:
        i, j, lo, hi = work.pop()
        if hi <= lo:
            continue
        close = match[lo]
        k = i + 1 + (close - lo - 1) // 2
        edges.add((i, k))
        edges.add((k, j))
        work.append((i, k, lo + 1, close))
        work.append((k, j, close + 1, hi))
    return Graph.from_edges(n, edges)


def all_polygon_triangulations(n: int):
    """Every triangulation of the convex n-gon (Catalan(n-2) of them)."""
    for word in _dyck_words(n - 2):
        yield polygon_triangulation(n, dyck=word)


def _dyck_words(k: int):
    def rec(prefix, ups, downs):
        if ups == k and downs == k:
            yield list(prefix)
            return
        if ups < k:
            prefix.append(1)
            yield from rec(prefix, ups + 1, downs)
            prefix.pop()
        if downs < ups:
            prefix.append(-1)
            yield from rec(prefix, ups, downs + 1)
            prefix.pop()

    yield from rec([], 0, 0)


def _random_cactus(n: int, rng: random.Random) -> Graph:
    parent = {v: rng.randint(1, v - 1) for v in range(2, n + 1)}
    depth = {1: 0}
    for v in range(2, n + 1):
        depth[v] = depth[parent[v]] + 1
    edges = {(parent[v], v) for v in parent}
    used = set()  # tree edges already closed into a cycle, keyed by child

    def tree_path(u, v):
        left, right = [], []
        while u != v:
            if depth[u] >= depth[v]:
                left.append(u)
                u = parent[u]
            else:
                right.append(v)
                v = parent[v]
        return left + right  # children whose parent edge lies on the path

    for _ in range(n // 2):
        u, v = rng.randint(1, n), rng.randint(1, n)
        if u == v or (min(u, v), max(u, v)) in edges:
            continue
        if len(tree_path(u, v)) < 2:
            continue
        kids = tree_path(u, v)
        if any(k in used for k in kids):
            continue
        used.update(kids)
        edges.add((min(u, v), max(u, v)))
    return _shuffle_labels(Graph.from_edges(n, edges), rng)


def _random_connected_outerplanar(n: int, rng: random.Random) -> Graph:
    if n == 1:
        return Graph(1, frozenset())
    if n == 2:
        return Graph.from_edges(2, [(1, 2)])
    tri = polygon_triangulation(n, rng)
    order = tri.sorted_edges()
    rng.shuffle(order)
    root = list(range(n + 1))

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    keep, rest = [], []
    for u, v in order:
        ru, rv = find(u), find(v)
        if ru != rv:
            root[ru] = rv
            keep.append((u, v))
        else:
            rest.append((u, v))
    p = rng.random()
    keep += [e for e in rest if rng.random() < p]
    return _shuffle_labels(Graph.from_edges(n, keep), rng)


# ---------------------------------------------------------------- induced subgraphs

WITNESS_KINDS = ("S3", "M1", "M1_ELL", "M2", "M3", "CYCLE_GE4")


@dataclass(frozen=True)
class Witness:
    kind: str
    vertex_map: dict
    ell: int = 0

    def to_json(self) -> dict:
        out = {"kind": self.kind, "vertexMap": {str(k): v for k, v in sorted(self.vertex_map.items())}}
        if self.kind == "M1_ELL":
            out["ell"] = self.ell
        return out


def find_induced(host: Graph, pattern: Graph) -> dict | None:
    """Lexicographically smallest induced embedding of pattern into host, or None."""
    k = pattern.n
    if k > host.n:
        return None
    if k == 0:
        return {}
    # earlier pattern neighbours of each pattern vertex, used to narrow candidates
    back = [[u for u in pattern.neighbors(v) if u < v] for v in range(k + 1)]
    image = [0] * (k + 1)
    used = set()

    def candidates(v):
        if back[v]:
            anchor = image[back[v][0]]
            return host.neighbors(anchor)
        return host.vertices()

    def fits(v, h):
        if h in used or host.degree(h) < pattern.degree(v):
            return False
        for u in range(1, v):
            if pattern.has_edge(u, v) != host.has_edge(image[u], h):
                return False
        return True

    def rec(v):
        if v > k:
            return True
        for h in candidates(v):
            if fits(v, h):
                image[v] = h
                used.add(h)
                if rec(v + 1):
                    return True
                used.discard(h)
        return False

    if rec(1):
        return {v: image[v] for v in range(1, k + 1)}
    return None


def is_induced_embedding(host: Graph, pattern: Graph, vertex_map: dict) -> bool:
    if sorted(vertex_map) != list(pattern.vertices()):
        return False
    if len(set(vertex_map.values())) != pattern.n:
        return False
    for u in pattern.vertices():
        for v in range(u + 1, pattern.n + 1):
            if pattern.has_edge(u, v) != host.has_edge(vertex_map[u], vertex_map[v]):
                return False
    return True
