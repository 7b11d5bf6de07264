import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from outerepg.b2m import build_b2m
from outerepg.graph import Graph, gen_named, gen_random
from outerepg.grid import (
    PathError,
    canonicalize_path,
    compact,
    count_bends,
    intersects,
    is_monotonic,
    loads_representation,
    render,
    representation_from_points,
    translate,
    verify,
)


def test_canonicalize_merges_collinear_points():
    p = canonicalize_path([(0, 0), (1, 0), (3, 0), (3, 2)])
    assert p.corners == ((0, 0), (3, 0), (3, 2))
    assert count_bends(p) == 1


@pytest.mark.parametrize(
    "pts",
    [
        [],
        [(0, 0)],
        [(0, 0), (1, 1)],
        [(0, 0), (0, 0), (1, 0)],
        [(0, 0), (3, 0), (1, 0)],
        [(0, 0), (2, 0), (2, 2), (1, 2), (1, -1)],
    ],
)
def test_canonicalize_rejects(pts):
    with pytest.raises(PathError):
        canonicalize_path(pts)


def test_spiral_that_never_revisits_is_fine():
    p = canonicalize_path([(0, 0), (2, 0), (2, 2), (0, 2), (0, 1)])
    assert count_bends(p) == 3


def test_monotonic_either_direction():
    assert is_monotonic(canonicalize_path([(0, 0), (2, 0), (2, 3)]))
    assert is_monotonic(canonicalize_path([(2, 3), (2, 0), (0, 0)]))
    assert not is_monotonic(canonicalize_path([(0, 3), (0, 0), (2, 0)]))
    assert not is_monotonic(canonicalize_path([(0, 0), (2, 0), (2, 2), (1, 2)]))


def test_intersection_needs_a_shared_unit_edge():
    a = canonicalize_path([(0, 0), (2, 0)])
    assert intersects(a, canonicalize_path([(1, 0), (3, 0)]))
    # touching at a point or crossing does not count
    assert not intersects(a, canonicalize_path([(2, 0), (4, 0)]))
    assert not intersects(a, canonicalize_path([(1, -1), (1, 1)]))


def test_verify_reports_each_kind_of_problem():
    g = Graph.from_edges(3, [(1, 2)])
    rep = representation_from_points({1: [(0, 0), (2, 0)], 2: [(3, 0), (4, 0), (4, 1), (5, 1)], 4: [(0, 5), (1, 5)]})
    r = verify(g, rep, max_bends=1, require_monotonic=True)
    assert not r.passed
    assert r.missing_vertices == [3]
    assert r.unknown_vertices == [4]
    assert r.missing_intersections == [(1, 2)]
    assert r.over_bend_vertices == [2]
    assert r.max_bends_seen == 2
    doc = r.to_json()
    assert doc["pass"] is False and doc["missingIntersections"] == [[1, 2]]


def test_verify_extra_intersection():
    g = Graph.from_edges(2, [])
    rep = representation_from_points({1: [(0, 0), (2, 0)], 2: [(1, 0), (3, 0)]})
    assert verify(g, rep).extra_intersections == [(1, 2)]


def test_json_round_trip_and_grid_check():
    rep = build_b2m(gen_named("cycle", 6))
    again = loads_representation(rep.dumps())
    assert again == rep
    doc = rep.to_json()
    doc["grid"]["cols"] = 1
    with pytest.raises(PathError):
        loads_representation(json.dumps(doc))


@settings(max_examples=25, deadline=None)
@given(st.integers(3, 40), st.integers(0, 10**6), st.integers(-5, 5), st.integers(-5, 5))
def test_compact_and_translate_keep_verification(n, seed, dx, dy):
    g = gen_random("connected_outerplanar", n, seed)
    rep = build_b2m(g)
    scaled = representation_from_points({v: [(3 * x, 2 * y) for x, y in p.corners] for v, p in rep.paths.items()})
    assert verify(g, translate(scaled, dx, dy), max_bends=2, require_monotonic=True).passed
    squeezed = compact(scaled)
    assert squeezed == rep
    assert verify(g, squeezed, max_bends=2, require_monotonic=True).passed


def test_render_formats():
    rep = build_b2m(gen_named("cycle", 4))
    svg = render(rep, "svg")
    assert svg.startswith("<?xml") and svg.count("<polyline") == 4
    assert render(rep, "svg") == svg
    art = render(rep, "ascii")
    assert "1 = 1" in art and "4 = 4" in art
    with pytest.raises(ValueError):
        render(rep, "pdf")
