"""Perfect binary tree over coverage segments with lazy range decrements.

Leaves are the segments between consecutive delimiters, initialized to
the full-set coverage.  Every node carries the min and max coverage of
its subtree plus a `balance`: a pending decrement that applies to the
whole subtree but has not yet been pushed to the children.  The stored
invariant, for every node v:

    true min of v's subtree == mn[v] + bal[v] + sum of bal over strict
    ancestors of v     (and likewise for max)

Range queries push balances down along the two root-to-boundary paths,
then aggregate mn[v] + bal[v] over the O(log n) canonical nodes covering
the range.  Range decrements subtract 1 from the balance of the same
canonical nodes and recompute min/max bottom-up along the two boundary
paths.  Both operations touch O(log n) nodes; the shared top of the two
boundary paths (above their lowest common ancestor) is walked once, not
twice.
"""

from __future__ import annotations

from .intervals import IntervalSet, coverage_profile

_INF = 1 << 62


class CoverageTree:
    """Array-based perfect binary tree: node 1 is the root, node v has
    children 2v and 2v+1, leaves start at index `cap` (a power of two).
    Padding leaves hold +inf/-inf so they never win a min or max.
    """

    def __init__(self, delimiters, segment_values):
        nseg = len(segment_values)
        if nseg == 0:
            raise ValueError("coverage tree needs at least one segment")
        cap = 1
        while cap < nseg:
            cap <<= 1
        self.cap = cap
        self.depth = cap.bit_length() - 1
        self.num_segments = nseg
        self.delimiters = tuple(delimiters)
        self._pos = {d: j for j, d in enumerate(self.delimiters)}
        size = 2 * cap
        self.mn = [_INF] * size
        self.mx = [-_INF] * size
        self.bal = [0] * size
        self.mn[cap:cap + nseg] = segment_values
        self.mx[cap:cap + nseg] = segment_values
        for v in range(cap - 1, 0, -1):
            a, b = self.mn[2 * v], self.mn[2 * v + 1]
            self.mn[v] = a if a < b else b
            a, b = self.mx[2 * v], self.mx[2 * v + 1]
            self.mx[v] = a if a > b else b
        self.nodes_touched = 0

    def _leaf_range(self, start: int, end: int) -> tuple[int, int]:
        """Map a delimiter pair to the half-open leaf index range."""
        try:
            lo = self._pos[start]
            hi = self._pos[end]
        except KeyError as exc:
            raise ValueError(f"{exc.args[0]} is not a delimiter of this tree") from None
        if lo >= hi:
            raise ValueError(f"empty query range [{start}, {end})")
        return lo, hi

    def push_down(self, v: int) -> None:
        """Move node v's pending balance onto its two children.

        A semantic no-op: effective values everywhere are unchanged.
        The node's own min/max absorb the balance so the invariant keeps
        holding at v itself.
        """
        b = self.bal[v]
        if b and v < self.cap:
            c = 2 * v
            self.bal[c] += b
            self.bal[c + 1] += b
            self.mn[v] += b
            self.mx[v] += b
            self.bal[v] = 0

    def range_query(self, start: int, end: int) -> tuple[int, int]:
        """Current (min, max) coverage over [start, end).

        Both endpoints must be delimiters; intervals taken from the
        original set always qualify.
        """
        lo, hi = self._leaf_range(start, end)
        cap, bal, mn, mx = self.cap, self.bal, self.mn, self.mx
        l0 = cap + lo
        r0 = cap + hi - 1
        # push pending balances down both boundary paths, shared top once
        touched = 0
        split = (l0 ^ r0).bit_length()
        for h in range(self.depth, 0, -1):
            v = l0 >> h
            touched += 1
            b = bal[v]
            if b:
                c = 2 * v
                bal[c] += b
                bal[c + 1] += b
                mn[v] += b
                mx[v] += b
                bal[v] = 0
        for h in range(split - 1, 0, -1):
            v = r0 >> h
            touched += 1
            b = bal[v]
            if b:
                c = 2 * v
                bal[c] += b
                bal[c + 1] += b
                mn[v] += b
                mx[v] += b
                bal[v] = 0
        l = l0
        r = r0 + 1
        qmn = _INF
        qmx = -_INF
        while l < r:
            if l & 1:
                b = bal[l]
                v = mn[l] + b
                if v < qmn:
                    qmn = v
                v = mx[l] + b
                if v > qmx:
                    qmx = v
                l += 1
                touched += 1
            if r & 1:
                r -= 1
                b = bal[r]
                v = mn[r] + b
                if v < qmn:
                    qmn = v
                v = mx[r] + b
                if v > qmx:
                    qmx = v
                touched += 1
            l >>= 1
            r >>= 1
        self.nodes_touched += touched
        return qmn, qmx

    def range_decrement(self, start: int, end: int) -> None:
        """Drop the coverage of every segment inside [start, end) by 1."""
        lo, hi = self._leaf_range(start, end)
        cap, bal, mn, mx = self.cap, self.bal, self.mn, self.mx
        l = cap + lo
        r = cap + hi
        touched = 0
        while l < r:
            if l & 1:
                bal[l] -= 1
                l += 1
                touched += 1
            if r & 1:
                r -= 1
                bal[r] -= 1
                touched += 1
            l >>= 1
            r >>= 1
        # repair aggregates along both boundary paths, merging at the LCA
        v = (cap + lo) >> 1
        w = (cap + hi - 1) >> 1
        while v != w:
            c = 2 * v
            bl, br = bal[c], bal[c + 1]
            a, b = mn[c] + bl, mn[c + 1] + br
            mn[v] = a if a < b else b
            a, b = mx[c] + bl, mx[c + 1] + br
            mx[v] = a if a > b else b
            c = 2 * w
            bl, br = bal[c], bal[c + 1]
            a, b = mn[c] + bl, mn[c + 1] + br
            mn[w] = a if a < b else b
            a, b = mx[c] + bl, mx[c + 1] + br
            mx[w] = a if a > b else b
            v >>= 1
            w >>= 1
            touched += 2
        while v:
            c = 2 * v
            bl, br = bal[c], bal[c + 1]
            a, b = mn[c] + bl, mn[c + 1] + br
            mn[v] = a if a < b else b
            a, b = mx[c] + bl, mx[c + 1] + br
            mx[v] = a if a > b else b
            v >>= 1
            touched += 1
        self.nodes_touched += touched

    def segment_values(self) -> list[int]:
        """Effective per-segment coverage (for verification; O(n))."""
        out = []
        for j in range(self.num_segments):
            v = self.cap + j
            total = 0
            while v:
                total += self.bal[v]
                v >>= 1
            out.append(self.mn[self.cap + j] + total)
        return out


def build_tree(intervals: IntervalSet) -> CoverageTree:
    """Coverage tree over the full-set coverage profile of S."""
    if not intervals.items:
        raise ValueError("cannot build a coverage tree for an empty interval set")
    profile = coverage_profile(intervals)
    return CoverageTree(profile.delimiters, list(profile.segment_cov))
