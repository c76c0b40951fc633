"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py -s`` or
``python3 tests/test_acceptance.py``; the lines are also repeated in the
pytest terminal summary.
"""

import math
import sys
import time

import numpy as np

from minibox_ph.delaunay import alpha_flag_edges
from minibox_ph.filtration import build_filtration
from minibox_ph.generators import WITNESS_FACTS, check_edge_facts, check_fact, s1s2, uniform
from minibox_ph.geometry import EdgeSet, preprocess
from minibox_ph.minibox import Strategy, minibox_edges, minibox_edges_brute
from minibox_ph.persistence import diagrams_equal, persistence_h0, persistence_reduce

RESULTS = []


def report(number, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def _cloud(n, d, seed):
    return preprocess(uniform(n, d, seed), rng_seed=seed)


# filtrations checked in criterion 2, re-used by the degree-0 cross-check
_H0_CHECKS = []


def test_criterion_1_edge_sets_match_brute_force():
    start = time.perf_counter()
    failures = []
    runs = 0
    for d in (2, 3, 4, 5):
        strategies = [s for s in Strategy if s is not Strategy.BRUTE and s.supports(d)]
        for seed in range(25):
            c = _cloud(200, d, seed)
            ref = minibox_edges_brute(c)
            for s in strategies:
                runs += 1
                got = minibox_edges(c, s)
                if not (np.array_equal(got.pairs, ref.pairs) and np.array_equal(got.values, ref.values)):
                    failures.append((d, seed, s.value))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 120
    report(1, ok, f"{runs} strategy runs identical to brute force, failures={failures[:5]}, {elapsed:.1f}s (< 120s)")


def _check_cloud(c, complexes):
    cech = build_filtration(c, EdgeSet.complete(c), 2)
    ref = persistence_reduce(cech, 1)
    _H0_CHECKS.append((persistence_h0(cech), ref))
    bad = []
    for name in complexes:
        edges = minibox_edges(c) if name == "minibox" else alpha_flag_edges(c)
        f = build_filtration(c, edges, 2)
        dgm = persistence_reduce(f, 1)
        _H0_CHECKS.append((persistence_h0(f), dgm))
        if not diagrams_equal(dgm, ref, {0, 1}):
            bad.append(name)
    return bad


def test_criterion_2_h0_h1_equal_across_complexes():
    start = time.perf_counter()
    failures = []
    clouds = 0
    for n, d in ((100, 2), (80, 3), (60, 4)):
        for seed in range(10):
            clouds += 1
            for name in _check_cloud(_cloud(n, d, seed), ["minibox"]):
                failures.append((name, n, d, seed))
    for d in (2, 3):
        for seed in range(10):
            clouds += 1
            for name in _check_cloud(_cloud(40, d, 100 + seed), ["minibox", "alphaflag"]):
                failures.append((name, 40, d, 100 + seed))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 300
    report(2, ok, f"{clouds} clouds, Minibox/Alpha-flag vs Cech H0+H1 mismatches={failures}, {elapsed:.1f}s (< 300s)")


def test_criterion_3_witness_facts():
    results = [check_fact(f) for f in WITNESS_FACTS]
    edges = check_edge_facts()
    failed = [r.fact.name for r in results if not r.passed] + [f"edge {s}" for s, ok in edges if not ok]
    report(3, not failed, f"{len(results) + len(edges)} witness/blocker facts checked exactly, failed={failed}")


def test_criterion_4_expected_edge_bound():
    start = time.perf_counter()
    means = {}
    for n in (1000, 4000):
        counts = [len(minibox_edges(_cloud(n, 2, seed))) for seed in range(5)]
        means[n] = float(np.mean(counts))
    elapsed = time.perf_counter() - start
    bounds = {n: 2 * n * math.log(n) for n in means}
    ok = all(means[n] < bounds[n] for n in means) and elapsed < 60
    detail = ", ".join(f"n={n}: mean {means[n]:.1f} < {bounds[n]:.1f}" for n in means)
    report(4, ok, f"{detail}, {elapsed:.1f}s (< 60s)")


def test_criterion_5_filtration_sizes():
    sizes = {}
    for d, target in ((2, 1.0e4), (3, 1.7e5)):
        counts = []
        for seed in range(5):
            c = _cloud(500, d, seed)
            counts.append(len(build_filtration(c, minibox_edges(c), 2)))
        sizes[d] = (float(np.mean(counts)), target)
    ok = all(0.5 * t <= m <= 2 * t for m, t in sizes.values())
    detail = ", ".join(f"d={d}: mean {m:.0f} in [{0.5 * t:.0f}, {2 * t:.0f}]" for d, (m, t) in sizes.items())
    report(5, ok, detail)


def test_criterion_6_worst_case_construction():
    n = 50
    c = preprocess(s1s2(n))
    k_mini = len(minibox_edges(c))
    k_alpha = len(alpha_flag_edges(c))
    ok = k_mini > n * (n - 1) // 2 and k_alpha == 4 * n - 3
    report(6, ok, f"S1uS2 n={n}: {k_mini} Minibox edges (> {n * (n - 1) // 2}), "
                  f"{k_alpha} Alpha-flag edges (== {4 * n - 3})")


def test_criterion_7_union_find_matches_reduction():
    if not _H0_CHECKS:
        test_criterion_2_h0_h1_equal_across_complexes()
    bad = sum(1 for uf, red in _H0_CHECKS if not diagrams_equal(uf, red, {0}))
    report(7, bad == 0 and len(_H0_CHECKS) > 0,
           f"{len(_H0_CHECKS)} filtrations, union-find vs reduction degree-0 mismatches={bad}")


def test_criterion_8_degree_two_runs():
    h01_bad, h2_diff = [], []
    for seed in range(5):
        c = _cloud(50, 3, seed)
        mini = persistence_reduce(build_filtration(c, minibox_edges(c), 3), 2)
        cech = persistence_reduce(build_filtration(c, EdgeSet.complete(c), 3), 2)
        if not diagrams_equal(mini, cech, {0, 1}):
            h01_bad.append(seed)
        if not diagrams_equal(mini, cech, {2}):
            h2_diff.append(seed)
    report(8, not h01_bad, f"5 clouds n=50 in [0,1]^3: H0/H1 mismatches={h01_bad}; "
                           f"H2 differs on seeds {h2_diff} (allowed)")


def test_staircase3d_scaling_smoke():
    sizes = (1000, 2000, 4000)
    times = []
    for n in sizes:
        c = _cloud(n, 3, 0)
        t = time.perf_counter()
        minibox_edges(c, Strategy.STAIRCASE3D)
        times.append(time.perf_counter() - t)
    slope = float(np.polyfit(np.log(sizes), np.log(times), 1)[0])
    ok = 1.0 < slope < 3.0
    report("scaling", ok, f"staircase3d times {[round(t, 2) for t in times]}s, "
                          f"log-log slope {slope:.2f} in (1, 3)")


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    failed = 0
    for fn in tests:
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
