import pytest

from outerepg.graph import Graph, gen_named
from outerepg.grid import verify
from outerepg.oracle import (
    Inconclusive,
    OracleLimitError,
    Status,
    bend_number_exact,
    bounded_grid_search,
    default_bound,
    is_interval,
    m_free_direct,
)

from helpers import strip9, with_ears

K3 = gen_named("cycle", 3)
C4 = gen_named("cycle", 4)
S3 = gen_named("nsun", 3)


def test_interval_examples():
    assert is_interval(K3)
    assert not is_interval(C4)
    assert not is_interval(S3)
    assert is_interval(gen_named("path", 6))
    # the 2-subdivided claw is the smallest interval-free tree
    assert not is_interval(gen_named("m2"))
    assert is_interval(Graph(3, frozenset()))


def test_interval_limit():
    with pytest.raises(OracleLimitError):
        is_interval(gen_named("path", 11))
    assert is_interval(gen_named("path", 11), limit=11)


def test_search_examples():
    out = bounded_grid_search(K3, 0)
    assert out.status is Status.FOUND
    assert verify(K3, out.rep, max_bends=0).passed
    out = bounded_grid_search(C4, 0, bound=8)
    assert out.status is Status.NONE_WITHIN_BOUND and out.rep is None and out.bound == 8
    assert out.nodes_expanded > 0
    out = bounded_grid_search(S3, 1)
    assert out.status is Status.FOUND
    assert verify(S3, out.rep, max_bends=1).passed
    assert out.to_json()["status"] == "FOUND"


def test_search_monotonic_flag():
    out = bounded_grid_search(C4, 1, monotonic=True)
    assert out.status is Status.FOUND
    assert verify(C4, out.rep, max_bends=1, require_monotonic=True).passed


def test_none_within_bound_only_flips_to_found():
    for g, k in ((C4, 1), (S3, 1), (K3, 0)):
        seen_found = False
        for bound in (1, 2, 3, 5, default_bound(g.n, k)):
            st = bounded_grid_search(g, k, bound=bound, budget=10**7).status
            if seen_found:
                assert st is Status.FOUND
            seen_found = st is Status.FOUND
        assert seen_found


def test_budget_is_reported():
    out = bounded_grid_search(gen_named("nsun", 4), 1, budget=1000)
    assert out.status is Status.BUDGET_EXCEEDED
    assert out.nodes_expanded > 1000


def test_disconnected_graph_search():
    g = Graph.from_edges(5, [(1, 2), (2, 3), (4, 5)])
    out = bounded_grid_search(g, 0)
    assert out.status is Status.FOUND and verify(g, out.rep, max_bends=0).passed


def test_m_free_direct_examples():
    assert m_free_direct(strip9())
    assert m_free_direct(S3)
    assert not m_free_direct(with_ears(gen_named("m1")))


def test_bend_number_exact():
    assert bend_number_exact(K3) == (0, 0)
    assert bend_number_exact(C4) == (1, 1)
    res = bend_number_exact(S3, budget=10**6)
    # the monotonic one-bend search for S3 is far beyond a small budget
    assert res == (1, 2) or res == Inconclusive(1, True)
