"""Exact optimizer: the largest coverage floor t for which a subset with
maxcov <= k exists, found by doubling followed by binary search.

Feasibility is monotone in t (any witness for t also witnesses every
smaller t), so probing t = 1, 2, 4, ... up to the first infeasible value
brackets the optimum and binary search pins it down with O(log OPT)
decision solves.
"""

from __future__ import annotations

from .intervals import IntervalSet, maxcov, mincov_span
from .solution import Solution, score_subset
from . import flow

ENGINES = ("generic", "tailored")


def opt_upper_bound(intervals: IntervalSet, k: int) -> int:
    """min(k, mincov_span): no subset can beat either bound.

    Removing intervals never increases coverage anywhere, and any
    feasible answer has maxcov <= k, so the achievable minimum coverage
    is capped by both.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return min(k, mincov_span(intervals))


def solve_exact(intervals: IntervalSet, k: int,
                engine: str = "tailored") -> Solution:
    """Maximize mincov over subsets with maxcov <= k.

    engine="tailored" warm-starts every flow solve from the backbone
    flow (at most t augmentations each); engine="generic" runs plain
    breadth-first augmentation from zero.  Both return the same optimum;
    witness subsets may differ.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}, expected one of {ENGINES}")
    method = f"exact-{engine}"
    warm = engine == "tailored"
    work = {"flow_solves": 0, "augmentations": 0, "probes": 0}

    if not intervals.items:
        return Solution((), 0, 0, method, work)
    if maxcov(intervals) <= k:
        # removals never help: keeping everything is already optimal
        return score_subset(intervals, range(len(intervals)), method, work)

    bound = opt_upper_bound(intervals, k)

    def probe(t: int) -> Solution | None:
        work["probes"] += 1
        if t > bound:
            # provably infeasible, no flow needed
            return None
        sol = flow.decide(intervals, k, t, warm_start=warm)
        work["flow_solves"] += 1
        if sol is not None:
            work["augmentations"] += sol.work["augmentations"]
        return sol

    # doubling phase: find the first infeasible probe, clamping at k
    best: Solution | None = None
    lo = 0  # largest t known feasible
    hi = None  # smallest t known infeasible
    t = 1
    while True:
        sol = probe(t)
        if sol is None:
            hi = t
            break
        best, lo = sol, t
        if t == k:
            break
        t = min(2 * t, k)

    if hi is None:
        # every probe up to t = k succeeded
        return _finish(best, work)
    if best is None:
        # even t = 1 failed: any subset obeying the cap is optimal
        sol0 = flow.decide(intervals, k, 0, warm_start=warm)
        work["flow_solves"] += 1
        work["augmentations"] += sol0.work["augmentations"]
        return _finish(sol0, work)

    # binary search on (lo, hi): invariant lo feasible, hi infeasible
    while hi - lo > 1:
        mid = (lo + hi) // 2
        sol = probe(mid)
        if sol is None:
            hi = mid
        else:
            best, lo = sol, mid
    return _finish(best, work)


def _finish(sol: Solution, work: dict[str, int]) -> Solution:
    merged = dict(sol.work)
    merged.update(work)
    return Solution(sol.kept, sol.achieved_mincov, sol.achieved_maxcov,
                    sol.method, merged)
