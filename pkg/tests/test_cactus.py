import pytest

from outerepg.cactus import (
    NotCactus,
    build_b0_cactus,
    build_b1m_cactus,
    classify_cactus,
    decompose_cactus,
    is_mc_free,
)
from outerepg.graph import Graph, GraphError, find_induced, gen_named, gen_random, is_induced_embedding
from outerepg.grid import verify

from helpers import all_cacti, bowtie, path, triangle_strip

PATTERNS = {"M2": gen_named("m2"), "M3": gen_named("m3")}


def caterpillar():
    return Graph.from_edges(8, [(1, 2), (2, 3), (3, 4), (1, 5), (2, 6), (2, 7), (4, 8)])


def test_decompose_small_cases():
    tri = decompose_cactus(gen_named("cycle", 3))
    assert len(tri.cycles) == 1 and tri.bridges == ()
    k4 = Graph.from_edges(4, [(i, j) for i in range(1, 5) for j in range(i + 1, 5)])
    bad = decompose_cactus(k4)
    assert isinstance(bad, NotCactus) and not bad and len(bad.cycles) == 2
    assert len(decompose_cactus(bowtie()).cycles) == 2
    assert isinstance(decompose_cactus(Graph.from_edges(4, [(1, 2), (3, 4)])), NotCactus)


def test_decomposition_partitions_the_edges():
    for seed in range(20):
        g = gen_random("cactus", 60, seed)
        dec = decompose_cactus(g)
        on_cycles = [tuple(sorted(e)) for c in dec.cycles for e in zip(c, c[1:] + c[:1])]
        assert len(on_cycles) == len(set(on_cycles))
        assert sorted(on_cycles + list(dec.bridges)) == g.sorted_edges()
        for a, b in zip(dec.cycles, dec.cycles[1:]):
            assert len(set(a) & set(b)) <= 1


def test_block_of():
    dec = decompose_cactus(bowtie())
    assert dec.block_of(1, 2) is not None
    assert dec.block_of(1, 2) != dec.block_of(4, 5)
    g = Graph.from_edges(4, [(1, 2), (2, 3), (1, 3), (3, 4)])
    assert decompose_cactus(g).block_of(3, 4) is None


@pytest.mark.parametrize(
    "g, kind",
    [(gen_named("cycle", 5), "CYCLE_GE4"), (gen_named("m2"), "M2"), (gen_named("m3"), "M3")],
)
def test_obstructions(g, kind):
    w = is_mc_free(g)
    assert w is not True and w.kind == kind
    pattern = PATTERNS.get(kind) or gen_named("cycle", w.ell)
    assert is_induced_embedding(g, pattern, w.vertex_map)


def test_caterpillar_is_mc_free():
    assert is_mc_free(caterpillar()) is True
    assert classify_cactus(caterpillar()) == (0, 0)
    assert classify_cactus(gen_named("cycle", 4)) == (1, 1)
    assert classify_cactus(gen_named("m2")) == (1, 1)


@pytest.mark.parametrize("seed", range(60))
def test_mc_free_agrees_with_pattern_search(seed):
    g = gen_random("cactus", 4 + seed % 11, seed)
    patterns = [gen_named("m2"), gen_named("m3")] + [gen_named("cycle", r) for r in range(4, g.n + 1)]
    free = all(find_induced(g, p) is None for p in patterns)
    w = is_mc_free(g)
    assert (w is True) == free
    if w is not True:
        pattern = PATTERNS.get(w.kind) or gen_named("cycle", w.ell)
        assert is_induced_embedding(g, pattern, w.vertex_map)


@pytest.mark.parametrize("g", [path(4), Graph.from_edges(4, [(1, 2), (2, 3), (1, 3), (3, 4)]), caterpillar(), bowtie(), triangle_strip(15)])
def test_b0_examples(g):
    assert verify(g, build_b0_cactus(g), max_bends=0).passed


def test_b0_refuses_m3():
    with pytest.raises(GraphError):
        build_b0_cactus(gen_named("m3"))


def test_b1m_c4_needs_a_bend():
    c4 = gen_named("cycle", 4)
    rep = build_b1m_cactus(c4)
    assert verify(c4, rep, max_bends=1, require_monotonic=True).passed
    assert max(rep.bend_counts().values()) == 1


@pytest.mark.parametrize("r", range(3, 12))
def test_b1m_cycles(r):
    g = gen_named("cycle", r)
    assert verify(g, build_b1m_cactus(g), max_bends=1, require_monotonic=True).passed


def test_b1m_on_all_small_cacti():
    for n, graphs in all_cacti(7).items():
        for g in graphs:
            assert verify(g, build_b1m_cactus(g), max_bends=1, require_monotonic=True).passed


def test_b1m_rejects_disconnected():
    with pytest.raises(GraphError):
        build_b1m_cactus(Graph.from_edges(4, [(1, 2), (3, 4)]))
