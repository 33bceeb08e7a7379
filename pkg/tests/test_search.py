import random

import pytest

from covprune import (IntervalSet, solve_exact, opt_upper_bound, decide,
                      brute_force_opt, maxcov, mincov_over)

from conftest import iset, random_instance


def test_solve_demo_both_engines(demo):
    for engine in ("generic", "tailored"):
        sol = solve_exact(demo, 3, engine)
        assert sol.achieved_mincov == 2
        assert sol.achieved_maxcov <= 3
        sub = demo.subset(sol.kept)
        assert maxcov(sub) <= 3
        assert mincov_over(sub, 0, 10) == 2


def test_solve_demo_probe_sequence(demo):
    # doubling probes t=1 (ok), t=2 (ok), t=4 clamped to 3 (infeasible)
    sol = solve_exact(demo, 3)
    assert sol.work["probes"] == 3


def test_known_optimal_subset_is_optimal(demo):
    # keeping A, B, E, F achieves mincov 2 under cap 3
    sub = demo.subset([0, 1, 4, 5])
    assert maxcov(sub) == 3
    assert mincov_over(sub, 0, 10) == 2


def test_solve_shortcut_when_cap_not_binding():
    sol = solve_exact(iset([(0, 5)]), 2)
    assert sol.achieved_mincov == 1
    assert sol.kept == (0,)
    assert sol.work["flow_solves"] == 0  # no flow needed


def test_solve_gap_instance_opt_zero():
    s = iset([(0, 2), (0, 2), (3, 5)])
    sol = solve_exact(s, 1)
    assert sol.achieved_mincov == 0
    assert sol.achieved_maxcov <= 1


def test_solve_empty():
    sol = solve_exact(IntervalSet(()), 5)
    assert sol.kept == () and sol.achieved_mincov == 0


def test_solve_rejects_bad_args(demo):
    with pytest.raises(ValueError):
        solve_exact(demo, 0)
    with pytest.raises(ValueError):
        solve_exact(demo, 3, "simplex")


def test_opt_upper_bound(demo):
    assert opt_upper_bound(demo, 3) == 2
    assert opt_upper_bound(IntervalSet(()), 7) == 0
    assert opt_upper_bound(iset([(0, 5)] * 5), 1) == 1
    with pytest.raises(ValueError):
        opt_upper_bound(demo, 0)


def test_engines_agree_and_match_oracle():
    rng = random.Random(23)
    for _ in range(60):
        s = random_instance(rng, rng.randint(0, 12), max_coord=30, max_len=10)
        k = rng.randint(1, 5)
        generic = solve_exact(s, k, "generic")
        tailored = solve_exact(s, k, "tailored")
        exact = brute_force_opt(s, k)
        assert generic.achieved_mincov == tailored.achieved_mincov == exact.achieved_mincov
        assert generic.achieved_maxcov <= k
        assert tailored.achieved_maxcov <= k


def test_opt_is_the_feasibility_threshold():
    rng = random.Random(29)
    for _ in range(60):
        s = random_instance(rng, rng.randint(1, 12), max_coord=30, max_len=10)
        k = rng.randint(1, 4)
        opt = solve_exact(s, k).achieved_mincov
        assert opt <= opt_upper_bound(s, k)
        if opt > 0:
            assert decide(s, k, opt) is not None
        if opt < k:
            assert decide(s, k, opt + 1) is None
