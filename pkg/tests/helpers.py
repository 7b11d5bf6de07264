"""Graph families shared by the test modules."""

from pathlib import Path

import networkx as nx

from outerepg.graph import Graph, parse_graph

DATA = Path(__file__).parent / "data"


def strip9() -> Graph:
    return parse_graph((DATA / "strip9.txt").read_text())


def from_nx(h) -> Graph:
    idx = {v: i + 1 for i, v in enumerate(sorted(h.nodes))}
    return Graph.from_edges(len(idx), [(idx[a], idx[b]) for a, b in h.edges])


def all_cacti(nmax: int) -> dict:
    """Connected cacti up to isomorphism, keyed by vertex count.

    Every cactus on n vertices arises from a smaller one by hanging a pendant
    edge or a fresh cycle at some vertex, so growing level by level and
    discarding isomorphic copies reaches all of them.
    """
    levels = {1: [nx.empty_graph(1)]}
    for n in range(2, nmax + 1):
        buckets, out = {}, []
        for r in range(1, n):
            for base in levels[n - r]:
                m = base.number_of_nodes()
                for v in base.nodes:
                    h = base.copy()
                    if r == 1:
                        h.add_edge(v, m)
                    else:
                        nx.add_cycle(h, [v] + list(range(m, m + r)))
                    key = nx.weisfeiler_lehman_graph_hash(h)
                    if any(nx.is_isomorphic(o, h) for o in buckets.get(key, [])):
                        continue
                    buckets.setdefault(key, []).append(h)
                    out.append(h)
        levels[n] = out
    return {n: [from_nx(h) for h in hs] for n, hs in levels.items()}


def connected_small_graphs(nmax: int = 6) -> list:
    """Connected graphs on 1..nmax vertices, one per isomorphism class (atlas order)."""
    return [from_nx(h) for h in nx.graph_atlas_g() if 0 < h.number_of_nodes() <= nmax and nx.is_connected(h)]


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(v, v + 1) for v in range(1, n)])


def fan(n: int) -> Graph:
    return Graph.from_edges(n, [(1, v) for v in range(2, n + 1)] + [(v, v + 1) for v in range(2, n)])


def zigzag(n: int) -> Graph:
    """Triangulated strip whose dual is a path."""
    return Graph.from_edges(n, [(v, v + 1) for v in range(1, n)] + [(v, v + 2) for v in range(1, n - 1)])


def triangle_strip(n: int) -> Graph:
    """Path with a degree-two triangle apex on each edge; MC-free."""
    k = (n + 1) // 2
    edges = [(v, v + 1) for v in range(1, k)]
    t = k + 1
    for v in range(1, k):
        if t > n:
            break
        edges += [(v, t), (v + 1, t)]
        t += 1
    edges += [(1, x) for x in range(t, n + 1)]
    return Graph.from_edges(n, edges)


def bowtie() -> Graph:
    return Graph.from_edges(5, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)])


def with_ears(g: Graph) -> Graph:
    """Glue a new triangle onto every outer edge of a maximal outerplanar graph.

    Every original face becomes central, so the reduced graph of the result
    is g itself.
    """
    on = {}
    for u, v in g.sorted_edges():
        for w in g.neighbor_set(u) & g.neighbor_set(v):
            on[(u, v)] = on.get((u, v), 0) + 1
    edges, n = list(g.edges), g.n
    for (u, v), c in sorted(on.items()):
        if c == 1:
            n += 1
            edges += [(u, n), (v, n)]
    return Graph.from_edges(n, edges)


def zigzag_suns(k: int) -> Graph:
    """Zigzag strip with an ear on every third inner face; M-free, full of S3 copies.

    The faces carrying ears are three apart along the strip, so no two of the
    resulting central triangles share a vertex.
    """
    g = zigzag(k)
    edges, n = list(g.edges), k
    for i in range(2, k - 2, 3):
        n += 1
        edges += [(i, n), (i + 2, n)]
    return Graph.from_edges(n, edges)


def fan_suns(k: int) -> Graph:
    """Fan on rim 2..k with an ear on every third inner rim edge; the centres all touch at 1."""
    g = fan(k)
    edges, n = list(g.edges), k
    for v in range(3, k - 1, 3):
        n += 1
        edges += [(v, n), (v + 1, n)]
    return Graph.from_edges(n, edges)


def star(n: int) -> Graph:
    return Graph.from_edges(n, [(1, v) for v in range(2, n + 1)])


# criterion lines collected by the acceptance module, printed at session end
REPORT = []
