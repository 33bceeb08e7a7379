"""O(n log n) approximate pruning with ratio k / floor(k/2).

Intervals are visited in start order.  An interval whose span currently
has max coverage above k is a candidate for deletion; it is actually
deleted only while it is *expendable*, i.e. its span's current minimum
coverage exceeds floor(k/2).  Deleting an expendable interval can never
drag any point below floor(k/2), and a point that finished above k
would need every surviving interval across it to be crucial, which is
impossible, so the result always satisfies the cap.  The achieved
minimum coverage is at least min(mincov of the input, floor(k/2)),
hence at least floor(k/2)/k times the exact optimum.
"""

from __future__ import annotations

from .intervals import IntervalSet, coverage_profile, mincov_over
from .solution import Solution
from .coverage_tree import build_tree


def is_expendable(current_mincov: int, k: int) -> bool:
    """An interval is expendable while the minimum coverage over its span
    exceeds floor(k/2); otherwise it is crucial and must never be deleted."""
    return current_mincov > k // 2


def approx_prune(intervals: IntervalSet, k: int) -> Solution:
    """Prune S so maxcov <= k, keeping mincov within floor(k/2)/k of optimal.

    Crucial/expendable status is evaluated against the *current* tree
    state at query time, not the initial coverage: the coverage-floor
    argument needs post-deletion coverage to stay at or above floor(k/2)
    at the moment of deletion.  Ties in start order break by ascending
    end, then input index, so runs are reproducible.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not intervals.items:
        return Solution((), 0, 0, "approx", {"tree_nodes_touched": 0})

    tree = build_tree(intervals)
    order = sorted((iv.start, iv.end, i) for i, iv in enumerate(intervals))
    deleted = [False] * len(intervals)
    query = tree.range_query
    shrink = tree.range_decrement
    for start, end, i in order:
        mn, mx = query(start, end)
        if mx > k and is_expendable(mn, k):
            shrink(start, end)
            deleted[i] = True

    kept = tuple(i for i in range(len(intervals)) if not deleted[i])
    span = intervals.span
    if kept:
        sub = intervals.subset(kept)
        mx_after = max(coverage_profile(sub).segment_cov)
        mn_after = mincov_over(sub, span.start, span.end)
    else:
        mx_after = 0
        mn_after = 0
    if mx_after > k:
        raise AssertionError(
            f"pruned set still has maxcov {mx_after} > k={k}; "
            "lazy propagation is corrupt")
    return Solution(kept, mn_after, mx_after, "approx",
                    {"tree_nodes_touched": tree.nodes_touched})
