"""Outerplanarity test, nice labelings and the separation checks."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import networkx as nx

from .graph import Graph, GraphError

APEX = 0


@dataclass(frozen=True)
class NotOuterplanar:
    reason: str

    def __bool__(self):
        return False


@dataclass(frozen=True)
class OuterplanarEmbedding:
    # cyclic order of all vertices around the added apex vertex
    apex_order: tuple
    # per vertex, cyclic order of its neighbours with the apex removed
    rotation: dict
    # per block, its vertices in the order they are met around the apex
    boundary_order: tuple
    cut_vertices: frozenset
    # block index -> cut vertices it contains
    block_tree: tuple


def test_outerplanar(g: Graph):
    if g.n == 0:
        raise GraphError("empty graph")
    if g.n >= 2 and g.m > 2 * g.n - 3:
        return NotOuterplanar(f"edge count {g.m} exceeds 2n-3 = {2 * g.n - 3}")
    h = g.to_networkx()
    h.add_edges_from((APEX, v) for v in g.vertices())
    planar, emb = nx.check_planarity(h)
    if not planar:
        return NotOuterplanar("graph plus a universal vertex is not planar")
    around = list(emb.neighbors_cw_order(APEX))[::-1]
    start = around.index(1)
    around = tuple(around[start:] + around[:start])
    rotation = {v: tuple(w for w in emb.neighbors_cw_order(v) if w != APEX) for v in g.vertices()}
    pos = {v: i for i, v in enumerate(around)}
    blocks, cuts = [], set()
    if g.m:
        gx = g.to_networkx()
        cuts = set(nx.articulation_points(gx))
        for comp in nx.biconnected_components(gx):
            blocks.append(tuple(sorted(comp, key=pos.__getitem__)))
    blocks.sort()
    tree = tuple(tuple(sorted(v for v in b if v in cuts)) for b in blocks)
    return OuterplanarEmbedding(around, rotation, tuple(blocks), frozenset(cuts), tree)


def is_outerplanar(g: Graph) -> bool:
    return not isinstance(test_outerplanar(g), NotOuterplanar)


@dataclass(frozen=True)
class NiceLabeling:
    order: tuple
    inverse: dict


def nice_labeling(g: Graph, emb: OuterplanarEmbedding) -> NiceLabeling:
    if not g.is_connected():
        raise GraphError("nice labeling needs a connected graph")
    order = emb.apex_order
    return NiceLabeling(order, {v: i + 1 for i, v in enumerate(order)})


# ---------------------------------------------------------------- separation checks


@dataclass(frozen=True)
class SeparationViolation:
    first: tuple  # the spanning edge, or the path for the path variant
    second: tuple  # the offending edge


def _positions(g: Graph, order) -> dict:
    order = list(order)
    if sorted(order) != list(g.vertices()):
        raise ValueError("order must be a permutation of 1..n")
    return {v: i for i, v in enumerate(order)}


def check_separation(g: Graph, order):
    """None when the order separates every pair of disjoint edges, else the first bad pair."""
    pos = _positions(g, order)
    edges = g.sorted_edges()
    for e in edges:
        lo, hi = sorted((pos[e[0]], pos[e[1]]))
        for f in edges:
            if f[0] in e or f[1] in e:
                continue
            inside = [lo < pos[x] < hi for x in f]
            if inside[0] != inside[1]:
                return SeparationViolation(e, f)
    return None


def check_path_separation(g: Graph, order):
    """Path version of the separation check.

    For each edge {k, l} we delete both endpoints and look at the components
    that remain. A path between two vertices whose span cuts the edge exists
    exactly when one component has a vertex strictly between the endpoints'
    positions and another vertex outside that range.
    """
    pos = _positions(g, order)
    for e in g.sorted_edges():
        pk, pl = sorted((pos[e[0]], pos[e[1]]))
        comp = {e[0]: -1, e[1]: -1}
        for s in g.vertices():
            if s in comp:
                continue
            members = _flood(g, s, comp)
            mid = [v for v in members if pk < pos[v] < pl]
            out = [v for v in members if pos[v] < pk or pos[v] > pl]
            if mid and out:
                return SeparationViolation(tuple(_bfs_path(g, mid[0], out[0], set(e))), e)
    return None


def _flood(g: Graph, s: int, comp: dict) -> list:
    comp[s] = s
    members, stack = [s], [s]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in comp:
                comp[w] = s
                members.append(w)
                stack.append(w)
    return members


def _bfs_path(g: Graph, s: int, t: int, banned: set) -> list:
    prev = {s: None}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        if u == t:
            break
        for w in g.neighbors(u):
            if w not in prev and w not in banned:
                prev[w] = u
                queue.append(w)
    path = [t]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


test_outerplanar.__test__ = False  # keep pytest from collecting it on import
