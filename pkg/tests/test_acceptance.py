"""Acceptance gate: every criterion prints one PASS line (run with -s).

Sizes and tolerances are pinned here; all checks are exact integer
comparisons except the two wall-clock budgets in the performance smoke.
"""

import math
import random
import time

from covprune import (IntervalSet, build_network, backbone_initial_flow,
                      zero_flow, max_flow_augmenting, decide, solve_exact,
                      approx_prune, brute_force_opt, build_tree,
                      naive_range_min_max, generate_instance,
                      coverage_profile, maxcov, mincov_over)

from conftest import iset, random_instance

DEMO = iset([(0, 8), (0, 2), (2, 6), (1, 3), (1, 10), (4, 10)])


def ok(name):
    print(f"ACCEPTANCE {name}: PASS")


def test_criterion_1_worked_figure_reproduction():
    net = build_network(DEMO, k=3, t=1)
    flow = max_flow_augmenting(net, zero_flow(net))
    assert flow.value == 3

    sol = decide(DEMO, k=3, t=1)
    assert sol is not None
    sub = DEMO.subset(sol.kept)
    assert maxcov(sub) <= 3
    assert mincov_over(sub, 0, 10) >= 1

    # removing exactly [0,8) is one accepted witness
    drop_long = DEMO.subset([1, 2, 3, 4, 5])
    assert maxcov(drop_long) <= 3
    assert mincov_over(drop_long, 0, 10) >= 1
    ok("1 worked-figure reproduction")


def test_criterion_2_oracle_equivalence_exact():
    rng = random.Random(1002)
    for _ in range(500):
        s = random_instance(rng, rng.randint(1, 14), max_coord=40, max_len=12)
        k = rng.randint(1, 5)
        opt = brute_force_opt(s, k).achieved_mincov
        assert solve_exact(s, k, "generic").achieved_mincov == opt
        assert solve_exact(s, k, "tailored").achieved_mincov == opt
    ok("2 oracle equivalence, 500 instances, both engines")


def test_criterion_3_engine_agreement_and_augmentation_bound():
    rng = random.Random(1003)
    for _ in range(1000):
        s = random_instance(rng, rng.randint(2, 200),
                            max_coord=500, max_len=60)
        k = rng.randint(1, 6)
        for t in range(k + 1):
            cold = decide(s, k, t, warm_start=False)
            warm = decide(s, k, t, warm_start=True)
            assert (cold is None) == (warm is None)
            net = build_network(s, k, t)
            flow = max_flow_augmenting(net, backbone_initial_flow(net))
            assert flow.augmentations <= t
    ok("3 engine agreement on 1000 instances, warm solves within t augmentations")


def test_criterion_4_flow_coverage_identity():
    rng = random.Random(1004)
    witnesses = 0
    for _ in range(300):
        s = random_instance(rng, rng.randint(1, 60), max_coord=120, max_len=25)
        k = rng.randint(1, 5)
        t = rng.randint(0, k)
        net = build_network(s, k, t)
        flow = max_flow_augmenting(net, backbone_initial_flow(net))
        if flow.value < k:
            continue
        witnesses += 1
        kept = s.subset([i for i, f in enumerate(flow.interval_flow) if f == 1])
        prof = coverage_profile(kept)
        for j in range(1, len(net.coords)):
            expected = k - flow.backbone_flow[j]
            assert prof.value_at(net.coords[j - 1]) == expected
    assert witnesses >= 100
    ok(f"4 flow-coverage identity on {witnesses} extracted witnesses")


def test_criterion_5_approximation_guarantee():
    rng = random.Random(1005)
    for _ in range(500):
        s = random_instance(rng, rng.randint(1, 14), max_coord=40, max_len=12)
        k = rng.randint(1, 6)
        opt = brute_force_opt(s, k).achieved_mincov
        sol = approx_prune(s, k)
        assert sol.achieved_maxcov <= k
        assert sol.achieved_mincov >= (k // 2) / k * opt
    for _ in range(200):
        s = random_instance(rng, rng.randint(1, 200), max_coord=400, max_len=60)
        k = rng.randint(1, 6)
        opt = solve_exact(s, k).achieved_mincov
        sol = approx_prune(s, k)
        assert sol.achieved_maxcov <= k
        assert sol.achieved_mincov >= (k // 2) / k * opt
    ok("5 approximation ratio on 700 instances, zero violations")


def test_criterion_6_coverage_tree_vs_flat_array():
    rng = random.Random(1006)
    operations = 0
    while operations < 100_000:
        s = random_instance(rng, rng.randint(1, 50), max_coord=80, max_len=30)
        tree = build_tree(s)
        delims = list(tree.delimiters)
        pos = {d: j for j, d in enumerate(delims)}
        flat = tree.segment_values()
        spans = [(iv.start, iv.end) for iv in s]
        for _ in range(1000):
            start, end = spans[rng.randrange(len(spans))]
            lo, hi = pos[start], pos[end]
            if rng.random() < 0.5:
                tree.range_decrement(start, end)
                for j in range(lo, hi):
                    flat[j] -= 1
            else:
                assert tree.range_query(start, end) == naive_range_min_max(flat, lo, hi)
            operations += 1
        assert tree.segment_values() == flat
    ok(f"6 coverage tree matches flat array over {operations} operations")


def test_criterion_7_monotone_feasibility():
    rng = random.Random(1007)
    for _ in range(300):
        s = random_instance(rng, rng.randint(1, 14), max_coord=40, max_len=12)
        k = rng.randint(1, 5)
        opt = solve_exact(s, k).achieved_mincov
        feasible = {t for t in range(k + 2) if decide(s, k, t) is not None}
        assert feasible == set(range(opt + 1))
    ok("7 feasible thresholds form the prefix {0..OPT} on 300 full sweeps")


def test_criterion_8_performance_smoke():
    n, k = 100_000, 30
    s = generate_instance(n, 1_000_000, seed=1)

    t0 = time.perf_counter()
    sol = approx_prune(s, k)
    approx_elapsed = time.perf_counter() - t0
    assert approx_elapsed <= 5.0, f"approx took {approx_elapsed:.2f}s"
    assert sol.achieved_maxcov <= k
    assert sol.work["tree_nodes_touched"] <= 64 * n * math.log2(n)

    t0 = time.perf_counter()
    exact = solve_exact(s, k, "tailored")
    solve_elapsed = time.perf_counter() - t0
    assert solve_elapsed <= 60.0, f"tailored solve took {solve_elapsed:.2f}s"
    assert exact.achieved_maxcov <= k
    ok(f"8 performance smoke (approx {approx_elapsed:.2f}s, "
       f"tailored {solve_elapsed:.2f}s, "
       f"touched {sol.work['tree_nodes_touched']})")
