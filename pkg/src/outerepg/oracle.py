"""Independent ground truth for small graphs.

Nothing here calls the builders or classifiers; tests compare the two sides.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .graph import Graph, GraphError
from .grid import EpgRepresentation, representation_from_points, translate, verify


class OracleLimitError(GraphError):
    pass


# ---------------------------------------------------------------- interval graphs


def is_interval(g: Graph, limit: int = 10) -> bool:
    """Interval recognition by searching for an umbrella-free vertex order.

    An order is umbrella-free when u < v < w and uw an edge imply uv an edge.
    Appending w to a placed prefix S is safe iff w is adjacent to every
    vertex of S that still has a neighbour outside S. Prefixes that cannot be
    completed are remembered, so the search is over subsets.
    """
    if g.n > limit:
        raise OracleLimitError(f"is_interval is limited to {limit} vertices, got {g.n}")
    full = (1 << g.n) - 1
    nbr = [0] * (g.n + 1)
    for u, v in g.edges:
        nbr[u] |= 1 << (v - 1)
        nbr[v] |= 1 << (u - 1)
    dead = set()

    def extend(placed: int) -> bool:
        if placed == full:
            return True
        if placed in dead:
            return False
        # placed vertices that still see something unplaced
        open_ = [u for u in range(1, g.n + 1) if placed >> (u - 1) & 1 and nbr[u] & ~placed]
        for w in range(1, g.n + 1):
            bit = 1 << (w - 1)
            if placed & bit:
                continue
            if all(nbr[w] & (1 << (u - 1)) or not (nbr[u] & ~(placed | bit)) for u in open_):
                if extend(placed | bit):
                    return True
        dead.add(placed)
        return False

    return extend(0)


# ---------------------------------------------------------------- bounded grid search


class Status(enum.Enum):
    FOUND = "FOUND"
    NONE_WITHIN_BOUND = "NONE_WITHIN_BOUND"
    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"


@dataclass
class SearchOutcome:
    status: Status
    rep: EpgRepresentation | None
    bound: int
    nodes_expanded: int

    def to_json(self) -> dict:
        out = {"status": self.status.value, "bound": self.bound, "nodesExpanded": self.nodes_expanded}
        if self.rep is not None:
            out["rep"] = self.rep.to_json()
        return out


MAX_SEARCH_BENDS = 2
MAX_SEARCH_VERTICES = 62  # one bit per vertex in an int64 mask


def default_bound(n: int, k: int) -> int:
    return 2 * n * (k + 1)


def _search_order(g: Graph, comp: list) -> list:
    """Lowest degree first, keeping every prefix connected.

    Low-degree vertices carry the most non-adjacency constraints, so dead
    ends show up near the root of the search.
    """
    first = min(comp, key=lambda v: (g.degree(v), v))
    order, placed = [first], {first}
    rest = set(comp) - placed
    while rest:
        v = max(rest, key=lambda w: (bool(g.neighbor_set(w) & placed), -g.degree(w), -w))
        order.append(v)
        placed.add(v)
        rest.discard(v)
    return order


def bounded_grid_search(
    g: Graph,
    k: int,
    monotonic: bool = False,
    bound: int | None = None,
    budget: int = 10**8,
) -> SearchOutcome:
    """Exhaustive search for a k-bend representation on the points [0, bound]^2.

    Any representation compacts onto at most n(k+2) lines per axis, so the
    default bound 2n(k+1) loses nothing. Searches run on growing grids up to
    the bound and share the node budget; only the last run can prove absence.
    """
    from ._search_kernel import BUDGET, FOUND, OVERFLOW, search

    if k < 0 or k > MAX_SEARCH_BENDS:
        raise ValueError(f"search supports 0..{MAX_SEARCH_BENDS} bends")
    if bound is None:
        bound = default_bound(g.n, k)
    if g.n == 0:
        return SearchOutcome(Status.FOUND, EpgRepresentation({}), bound, 0)
    if g.n > MAX_SEARCH_VERTICES:
        raise OracleLimitError(f"grid search handles at most {MAX_SEARCH_VERTICES} vertices")
    nodes = 0
    pieces = []
    for comp in g.components():
        order = _search_order(g, comp)
        pos = {v: i for i, v in enumerate(order)}
        adj = np.zeros(len(order), np.int64)
        anchor = np.full(len(order), -1, np.int64)
        for i, v in enumerate(order):
            for w in g.neighbors(v):
                adj[i] |= 1 << pos[w]
            earlier = [pos[w] for w in g.neighbors(v) if pos[w] < i]
            if earlier:
                anchor[i] = min(earlier)
        sides = sorted({s for s in (2, 4, 8, 16, bound) if s <= bound})
        found = None
        for side in sides:
            cap = 1 << 14
            while True:
                st, nodes2, px, py, pn = search(
                    len(order), k, monotonic, side + 1, k == 0, adj, anchor, budget, cap, nodes
                )
                if st != OVERFLOW:
                    break
                cap *= 4
            nodes = nodes2
            if st == BUDGET:
                return SearchOutcome(Status.BUDGET_EXCEEDED, None, bound, nodes)
            if st == FOUND:
                found = {order[i]: [(int(px[i, j]), int(py[i, j])) for j in range(pn[i])] for i in range(len(order))}
                break
        if found is None:
            return SearchOutcome(Status.NONE_WITHIN_BOUND, None, bound, nodes)
        pieces.append(representation_from_points(found))
    # components sit on a diagonal so they cannot touch
    paths, shift = {}, 0
    for rep in pieces:
        for v, p in translate(rep, shift, shift).paths.items():
            paths[v] = p
        shift += max(rep.extent) + 1
    rep = EpgRepresentation(paths)
    if not verify(g, rep, max_bends=k, require_monotonic=monotonic).passed:
        raise RuntimeError("grid search produced a representation that does not verify")
    return SearchOutcome(Status.FOUND, rep, bound, nodes)


# ---------------------------------------------------------------- M-freeness by triangle contact


def m_free_direct(g: Graph) -> bool:
    """M-freeness read off how the central triangles meet.

    Central triangles are the triangles all of whose edges are inner edges.
    Two of them are neighbored when they share an edge, touching when they
    share only a vertex. The graph fails when a triangle has two neighbored
    partners, or when two different neighbored pairs are linked through
    triangles that touch or neighbor each other in a chain.
    """
    if g.n < 3 or g.m != 2 * g.n - 3:
        raise GraphError("m_free_direct needs a maximal outerplanar graph")
    tris = []
    for u, v in g.sorted_edges():
        for w in g.neighbor_set(u) & g.neighbor_set(v):
            if w > v:
                tris.append((u, v, w))
    on_edge = {}
    for t in tris:
        for e in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
            on_edge[e] = on_edge.get(e, 0) + 1
    central = [t for t in tris if all(on_edge[e] == 2 for e in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])))]
    # union-find over triangles that share at least one vertex
    parent = list(range(len(central)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    by_vertex = {}
    for i, t in enumerate(central):
        for x in t:
            by_vertex.setdefault(x, []).append(i)
    for members in by_vertex.values():
        for j in members[1:]:
            parent[find(j)] = find(members[0])
    partners = [0] * len(central)
    pairs_in = {}
    for i in range(len(central)):
        for j in range(i + 1, len(central)):
            if len(set(central[i]) & set(central[j])) == 2:
                partners[i] += 1
                partners[j] += 1
                r = find(i)
                pairs_in[r] = pairs_in.get(r, 0) + 1
    if any(p >= 2 for p in partners):
        return False
    return all(c <= 1 for c in pairs_in.values())


# ---------------------------------------------------------------- exact bend numbers


@dataclass(frozen=True)
class Inconclusive:
    k: int  # the bend count whose search ran out of budget
    monotonic: bool

    def __bool__(self):
        return False


def bend_number_exact(g: Graph, budget: int = 10**7, max_k: int = MAX_SEARCH_BENDS):
    """(b, bm) from the searches, or Inconclusive naming the search that ran out."""
    results = []
    for monotonic in (False, True):
        k = 0
        while True:
            if k == 0 and g.n <= 10:
                # interval graphs are exactly the zero-bend graphs
                if is_interval(g):
                    break
                k += 1
                continue
            if k > max_k:
                return Inconclusive(k, monotonic)
            out = bounded_grid_search(g, k, monotonic, budget=budget)
            if out.status is Status.FOUND:
                break
            if out.status is Status.BUDGET_EXCEEDED:
                return Inconclusive(k, monotonic)
            k += 1
        results.append(k)
    return tuple(results)
