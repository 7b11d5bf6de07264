"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line that the session summary prints. Running
this file directly prints the same lines without pytest.
"""

import gc
import random
import time

import pytest

from outerepg.b2m import build_b2m, build_nsun_b2m
from outerepg.cactus import build_b0_cactus, build_b1m_cactus, classify_cactus, decompose_cactus, is_mc_free
from outerepg.graph import all_polygon_triangulations, gen_named, gen_random
from outerepg.grid import verify
from outerepg.maxouter import almost_dual, build_b0, build_b1, classify, compute_assignment, s3_centers
from outerepg.oracle import Status, bounded_grid_search, is_interval, m_free_direct

import helpers
from helpers import DATA, all_cacti, connected_small_graphs, fan, fan_suns, strip9, path, star, zigzag_suns


def record(number, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    helpers.REPORT.append(line)
    print(line)
    return ok


def exhaustive_triangulations():
    return [g for n in range(4, 11) for g in all_polygon_triangulations(n)]


# ---------------------------------------------------------------- 1


def test_b2m_universality():
    rng = random.Random(20240611)
    t0 = time.perf_counter()
    failures = []
    for i in range(500):
        n = rng.randint(5, 200)
        g = gen_random("connected_outerplanar", n, rng.getrandbits(64))
        if not verify(g, build_b2m(g), max_bends=2, require_monotonic=True).passed:
            failures.append((n, i))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 30
    record(1, ok, f"500 random outerplanar graphs, {len(failures)} failures, {elapsed:.1f}s (limit 30s)")
    assert ok, failures[:5]


# ---------------------------------------------------------------- 2


def test_maximal_outerplanar_b0():
    t0 = time.perf_counter()
    bad, positives = [], 0
    graphs = exhaustive_triangulations()
    for g in graphs:
        dual = almost_dual(g)
        b = classify(g).b
        no_s3 = not s3_centers(dual)
        interval = is_interval(g)
        if not ((b == 0) == no_s3 == interval):
            bad.append(g)
        if b == 0:
            positives += 1
            if not verify(g, build_b0(g, dual), max_bends=0).passed:
                bad.append(g)
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 120 and len(graphs) == sum([2, 5, 14, 42, 132, 429, 1430])
    record(2, ok, f"{len(graphs)} triangulations n=4..10, {positives} in B0, {len(bad)} disagreements, {elapsed:.1f}s (limit 120s)")
    assert ok


# ---------------------------------------------------------------- 3


def test_b1_iff_m_free():
    rng = random.Random(7)
    graphs = exhaustive_triangulations()
    graphs += [gen_random("maximal_outerplanar", rng.randint(4, 40), rng.getrandbits(64)) for _ in range(1000)]
    bad, m_free = [], 0
    for g in graphs:
        dual = almost_dual(g)
        asg = compute_assignment(g, dual)
        if bool(asg) != m_free_direct(g):
            bad.append(("verdict", g))
            continue
        if asg:
            m_free += 1
            if not verify(g, build_b1(g, dual, asg), max_bends=1).passed:
                bad.append(("b1", g))
    ok = not bad
    record(3, ok, f"{len(graphs)} triangulations, {m_free} M-free, {len(bad)} disagreements or failed B1 builds")
    assert ok, bad[:3]


# ---------------------------------------------------------------- 4


def test_suns():
    s3 = gen_named("nsun", 3)
    c = classify(s3)
    checks = {
        "classify(S3)=(1,2)": (c.b, c.bm) == (1, 2),
        "B1(S3) verifies": verify(s3, build_b1(s3), max_bends=1).passed,
        "S3 not interval": not is_interval(s3),
        "nsun B2m for 3..50": all(
            verify(gen_named("nsun", n), build_nsun_b2m(n), max_bends=2, require_monotonic=True).passed for n in range(3, 51)
        ),
    }
    s4 = gen_named("nsun", 4)
    out = bounded_grid_search(s4, 1, budget=10**8)
    # a FOUND here would contradict the known negative; anything else is reported as is
    checks["S4 search not FOUND"] = out.status is not Status.FOUND
    ok = all(checks.values())
    failed = [k for k, v in checks.items() if not v]
    record(
        4,
        ok,
        f"S4 at k=1: {out.status.value} after {out.nodes_expanded} nodes (bound {out.bound}); "
        + ("all checks hold" if ok else f"failed: {failed}"),
    )
    assert ok, failed


# ---------------------------------------------------------------- 5


def test_cactus_characterization():
    t0 = time.perf_counter()
    exhaustive = all_cacti(9)
    counts = [len(exhaustive[n]) for n in range(1, 10)]
    rng = random.Random(99)
    randoms = [gen_random("cactus", rng.randint(5, 200), rng.getrandbits(64)) for _ in range(500)]
    bad = []
    for g in [g for gs in exhaustive.values() for g in gs] + randoms:
        dec = decompose_cactus(g)
        free = is_mc_free(g, dec) is True
        b, bm = classify_cactus(g)
        if (b == 0) != free or b != bm:
            bad.append(("classify", g))
        if g.n <= 9 and is_interval(g) != free:
            bad.append(("interval", g))
        if free and not verify(g, build_b0_cactus(g, dec), max_bends=0).passed:
            bad.append(("b0", g))
        if not verify(g, build_b1m_cactus(g, dec), max_bends=1, require_monotonic=True).passed:
            bad.append(("b1m", g))
    elapsed = time.perf_counter() - t0
    ok = not bad and counts == [1, 1, 2, 4, 9, 23, 63, 188, 596] and elapsed < 120
    record(5, ok, f"cactus counts {counts} + 500 random, {len(bad)} failures, {elapsed:.1f}s (limit 120s)")
    assert ok, bad[:3]


# ---------------------------------------------------------------- 6


def test_oracle_self_consistency():
    graphs = connected_small_graphs(6)
    bad, found, none = [], 0, 0
    for g in graphs:
        out = bounded_grid_search(g, 0, budget=10**8)
        if out.status is Status.FOUND:
            found += 1
            if not is_interval(g) or not verify(g, out.rep, max_bends=0).passed:
                bad.append(g)
        elif out.status is Status.NONE_WITHIN_BOUND:
            none += 1
            if is_interval(g):
                bad.append(g)
        else:
            # running out of budget proves nothing either way
            bad.append(g)
    ok = not bad and len(graphs) == 143
    record(6, ok, f"{len(graphs)} connected graphs n<=6: {found} FOUND, {none} NONE_WITHIN_BOUND, {len(bad)} disagreements")
    assert ok


# ---------------------------------------------------------------- 7


def _timed(fn, g, repeats):
    best = float("inf")
    for _ in range(repeats):
        gc.collect()
        gc.disable()
        try:
            t0 = time.perf_counter()
            fn(g)
            best = min(best, time.perf_counter() - t0)
        finally:
            gc.enable()
    return best


def _assignment_and_b1(g):
    dual = almost_dual(g)
    asg = compute_assignment(g, dual)
    assert asg
    build_b1(g, dual, asg)


SCALING = [
    ("build_b2m", build_b2m, {"path": path, "fan": fan}, 25),
    ("build_b0_cactus", build_b0_cactus, {"path": path, "star": star}, 35),
    ("compute_assignment+build_b1", _assignment_and_b1, {"zigzag": zigzag_suns, "fan": fan_suns}, 250),
]


@pytest.mark.slow
@pytest.mark.parametrize("name, fn, families, limit", SCALING, ids=[s[0] for s in SCALING])
def test_scaling(name, fn, families, limit):
    worst, details = 0.0, []
    for fam, make in families.items():
        times = {n: _timed(fn, make(n), 3 if n < 10**5 else 1) for n in (10**3, 10**4, 10**5)}
        for n in (10**3, 10**4):
            ratio = times[10 * n] / times[n]
            worst = max(worst, ratio)
            details.append(f"{fam} {n}->{10 * n}: {ratio:.1f}x")
    ok = worst < limit
    record(7, ok, f"{name} ratios {', '.join(details)} (limit {limit}x)")
    assert ok


# ---------------------------------------------------------------- 8


@pytest.mark.parametrize("reverse, golden", [(False, "strip9_forward.json"), (True, "strip9_reverse.json")])
def test_strip9_golden(reverse, golden):
    expected = (DATA / golden).read_text()
    got = build_b0(strip9(), reverse=reverse).dumps()
    ok = got == expected
    record(8, ok, f"Strip layout, {'reversed' if reverse else 'forward'} dual path, bit-exact against {golden}")
    assert ok


if __name__ == "__main__":
    tests = [
        test_b2m_universality,
        test_maximal_outerplanar_b0,
        test_b1_iff_m_free,
        test_suns,
        test_cactus_characterization,
        test_oracle_self_consistency,
    ]
    for t in tests:
        try:
            t()
        except AssertionError:
            pass
    for args in SCALING:
        try:
            test_scaling(*args)
        except AssertionError:
            pass
    for rev, gold in ((False, "strip9_forward.json"), (True, "strip9_reverse.json")):
        try:
            test_strip9_golden(rev, gold)
        except AssertionError:
            pass
