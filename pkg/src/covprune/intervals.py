"""Half-open integer intervals and exact coverage computation.

Coverage of a point p is the number of intervals [start, end) with
start <= p < end.  All computations run on coordinate-compressed
endpoints (delimiters), so coordinates may be arbitrarily large and
sparse.  Everything here is immutable after construction and safe to
share between threads.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

MAX_COORD = 2**64 - 1


@dataclass(frozen=True, order=True)
class Interval:
    """A half-open interval [start, end) with non-negative integer endpoints."""

    start: int
    end: int

    def __post_init__(self):
        if not (0 <= self.start < self.end <= MAX_COORD):
            raise ValueError(f"invalid interval [{self.start}, {self.end})")

    @property
    def length(self) -> int:
        return self.end - self.start

    def covers(self, p: int) -> bool:
        return self.start <= p < self.end


@dataclass(frozen=True)
class IntervalSet:
    """An ordered collection of intervals.

    The position of an interval in `items` is its stable identity:
    solutions refer to intervals by these indices.  Duplicates are
    allowed and kept distinct.
    """

    items: tuple[Interval, ...]

    @classmethod
    def from_pairs(cls, pairs) -> "IntervalSet":
        return cls(tuple(Interval(s, e) for s, e in pairs))

    def __len__(self) -> int:
        return len(self.items)

    def __getitem__(self, i: int) -> Interval:
        return self.items[i]

    def __iter__(self):
        return iter(self.items)

    @property
    def span(self) -> Interval | None:
        """[min start, max end) of the whole set, or None when empty."""
        if not self.items:
            return None
        return Interval(min(iv.start for iv in self.items),
                        max(iv.end for iv in self.items))

    def subset(self, indices) -> "IntervalSet":
        return IntervalSet(tuple(self.items[i] for i in indices))


@dataclass(frozen=True)
class CoverageProfile:
    """Coverage as a step function over delimiter segments.

    `delimiters` are the distinct interval endpoints in increasing
    order; `segment_cov[j]` is the coverage of every point in
    [delimiters[j], delimiters[j+1]).  Coverage is constant on each
    segment because all interval endpoints are delimiters.
    """

    delimiters: tuple[int, ...]
    segment_cov: tuple[int, ...]

    def __post_init__(self):
        if len(self.delimiters) not in (0, len(self.segment_cov) + 1):
            raise ValueError("delimiter/segment length mismatch")

    @property
    def num_segments(self) -> int:
        return len(self.segment_cov)

    def value_at(self, p: int) -> int:
        """Coverage of point p; 0 outside [delimiters[0], delimiters[-1])."""
        if not self.delimiters or not (self.delimiters[0] <= p < self.delimiters[-1]):
            return 0
        return self.segment_cov[bisect_right(self.delimiters, p) - 1]


def coverage_profile(intervals: IntervalSet) -> CoverageProfile:
    """Compute the exact coverage step function by an endpoint sweep."""
    if not intervals.items:
        return CoverageProfile((), ())
    delims = sorted({c for iv in intervals for c in (iv.start, iv.end)})
    index = {c: j for j, c in enumerate(delims)}
    delta = [0] * len(delims)
    for iv in intervals:
        delta[index[iv.start]] += 1
        delta[index[iv.end]] -= 1
    cov = []
    running = 0
    for d in delta[:-1]:
        running += d
        cov.append(running)
    return CoverageProfile(tuple(delims), tuple(cov))


def cov_at(intervals: IntervalSet, p: int) -> int:
    """Coverage of a single point by direct counting."""
    return sum(1 for iv in intervals if iv.start <= p < iv.end)


def maxcov(intervals: IntervalSet) -> int:
    """Maximum coverage over all points; 0 for the empty set."""
    profile = coverage_profile(intervals)
    return max(profile.segment_cov, default=0)


def mincov_span(intervals: IntervalSet) -> int:
    """Minimum coverage over the set's own span [min start, max end).

    Uncovered gaps inside the span count as coverage 0.  Empty set
    yields 0 by convention.
    """
    profile = coverage_profile(intervals)
    return min(profile.segment_cov, default=0)


def mincov_over(intervals: IntervalSet, start: int, end: int) -> int:
    """Minimum coverage over an arbitrary window [start, end).

    Points of the window not covered by any interval count as 0, so
    subsets of a larger set can be scored against the original span.
    """
    if start >= end:
        raise ValueError(f"empty window [{start}, {end})")
    profile = coverage_profile(intervals)
    if not profile.delimiters:
        return 0
    lo, hi = profile.delimiters[0], profile.delimiters[-1]
    if start < lo or end > hi:
        return 0
    jl = bisect_right(profile.delimiters, start) - 1
    jr = bisect_right(profile.delimiters, end - 1) - 1
    return min(profile.segment_cov[jl:jr + 1])
