"""Max-flow reduction for the bounded-coverage decision problem.

Given intervals S, a coverage cap k and a coverage floor t, we build a
network whose vertices are the sorted distinct endpoints plus a synthetic
source and sink.  Consecutive vertices are joined by "backbone" arcs
(capacity k at the two ends, k - t in the interior) and every interval
contributes one unit-capacity arc from its start to its end.  A subset
with maxcov <= k and mincov >= t over the span exists exactly when the
max-flow value is k, and the kept intervals are the interval arcs that
carry flow 1: an interior backbone arc then carries k minus the kept
coverage of its segment, so its capacity k - t forces coverage >= t.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .intervals import IntervalSet
from .solution import Solution, score_subset


@dataclass(frozen=True)
class FlowNetwork:
    """The reduction graph for one (S, k, t) instance.

    `coords` are the sorted distinct interval endpoints.  Vertices are
    numbered along the chain source, coords[0], ..., coords[-1], sink;
    backbone arc j joins vertex j to vertex j+1 and `backbone_caps[j]`
    is its capacity.  Interval arc i mirrors input interval i and always
    has capacity 1.
    """

    coords: tuple[int, ...]
    backbone_caps: tuple[int, ...]
    interval_arcs: tuple[tuple[int, int], ...]  # (start vertex, end vertex) per interval
    k: int
    t: int

    @property
    def num_vertices(self) -> int:
        # coords plus synthetic source and sink
        return len(self.coords) + 2

    @property
    def num_backbone_arcs(self) -> int:
        return len(self.backbone_caps)


@dataclass(frozen=True)
class FlowAssignment:
    """An integral flow on a FlowNetwork, one value per arc."""

    backbone_flow: tuple[int, ...]
    interval_flow: tuple[int, ...]
    augmentations: int = 0

    @property
    def value(self) -> int:
        # all flow leaves the source through the first backbone arc
        return self.backbone_flow[0] if self.backbone_flow else 0


def build_network(intervals: IntervalSet, k: int, t: int) -> FlowNetwork:
    """Construct the reduction network for (S, k, t).

    The source and sink are symbolic rather than numeric coordinates, so
    instances starting at coordinate 0 need no underflow tricks.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not 0 <= t <= k:
        raise ValueError(f"t must be in [0, k], got t={t} k={k}")
    if not intervals.items:
        raise ValueError("cannot build a network for an empty interval set")

    coords = sorted({c for iv in intervals for c in (iv.start, iv.end)})
    vertex = {c: j + 1 for j, c in enumerate(coords)}  # 0 is the source
    m = len(coords)

    caps = [k - t] * (m + 1)
    caps[0] = k
    caps[m] = k
    arcs = tuple((vertex[iv.start], vertex[iv.end]) for iv in intervals)
    return FlowNetwork(tuple(coords), tuple(caps), arcs, k, t)


def zero_flow(net: FlowNetwork) -> FlowAssignment:
    return FlowAssignment((0,) * net.num_backbone_arcs,
                          (0,) * len(net.interval_arcs))


def backbone_initial_flow(net: FlowNetwork) -> FlowAssignment:
    """The feasible warm-start flow of value k - t along the backbone.

    Interior backbone capacity is exactly k - t and the end arcs allow
    k >= k - t, so pushing k - t down the whole chain is always legal
    and leaves at most t units to find by augmentation.
    """
    f = net.k - net.t
    return FlowAssignment((f,) * net.num_backbone_arcs,
                          (0,) * len(net.interval_arcs))


class _Residual:
    """Adjacency-list residual graph with paired forward/reverse arcs.

    Arc 2a is the forward direction of logical arc a, arc 2a+1 its
    reverse; adjacency lists keep construction order (backbone arcs
    first, then interval arcs in input order) so path search and hence
    the extracted witness are deterministic.
    """

    def __init__(self, net: FlowNetwork, init: FlowAssignment):
        nv = net.num_vertices
        m = len(net.coords)
        self.net = net
        self.source = 0
        self.sink = nv - 1
        self.res: list[int] = []
        self.to: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(nv)]
        for j, cap in enumerate(net.backbone_caps):
            u = j
            v = j + 1 if j < m else self.sink
            self._add(u, v, cap, init.backbone_flow[j])
        for i, (u, v) in enumerate(net.interval_arcs):
            self._add(u, v, 1, init.interval_flow[i])

    def _add(self, u: int, v: int, cap: int, flow: int) -> None:
        if not 0 <= flow <= cap:
            raise ValueError(f"initial flow {flow} violates capacity {cap}")
        a = len(self.res)
        self.res.append(cap - flow)
        self.to.append(v)
        self.adj[u].append(a)
        self.res.append(flow)
        self.to.append(u)
        self.adj[v].append(a + 1)

    def bfs_augment(self) -> int:
        """One shortest augmenting path; returns the amount pushed (0 if none)."""
        res, to, adj = self.res, self.to, self.adj
        parent_arc = [-1] * len(adj)
        parent_arc[self.source] = -2
        queue = deque([self.source])
        found = False
        while queue and not found:
            u = queue.popleft()
            for a in adj[u]:
                v = to[a]
                if parent_arc[v] == -1 and res[a] > 0:
                    parent_arc[v] = a
                    if v == self.sink:
                        found = True
                        break
                    queue.append(v)
        if not found:
            return 0
        bottleneck = None
        v = self.sink
        while v != self.source:
            a = parent_arc[v]
            if bottleneck is None or res[a] < bottleneck:
                bottleneck = res[a]
            v = to[a ^ 1]
        v = self.sink
        while v != self.source:
            a = parent_arc[v]
            res[a] -= bottleneck
            res[a ^ 1] += bottleneck
            v = to[a ^ 1]
        return bottleneck

    def extract(self, augmentations: int) -> FlowAssignment:
        net = self.net
        nb = net.num_backbone_arcs
        backbone = tuple(self.res[2 * j + 1] for j in range(nb))
        interval = tuple(self.res[2 * (nb + i) + 1]
                         for i in range(len(net.interval_arcs)))
        return FlowAssignment(backbone, interval, augmentations)


def max_flow_augmenting(net: FlowNetwork, init: FlowAssignment) -> FlowAssignment:
    """Run breadth-first augmenting paths to a maximum flow.

    `init` must be feasible; it is not modified.  The returned
    assignment records how many augmenting paths were needed.
    """
    residual = _Residual(net, init)
    augmentations = 0
    while residual.bfs_augment() > 0:
        augmentations += 1
    return residual.extract(augmentations)


def decide(intervals: IntervalSet, k: int, t: int,
           warm_start: bool = True) -> Solution | None:
    """Find a subset with maxcov <= k and mincov >= t over the span.

    Returns None when no such subset exists (a normal outcome, not an
    error).  With `warm_start` the solver begins from the backbone flow
    of value k - t and needs at most t augmentations; without it the
    flow starts from zero.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if t > k:
        # mincov <= maxcov <= k < t can never hold
        return None
    net = build_network(intervals, k, t)
    init = backbone_initial_flow(net) if warm_start else zero_flow(net)
    flow = max_flow_augmenting(net, init)
    if warm_start and flow.augmentations > t:
        raise AssertionError(
            f"warm start needed {flow.augmentations} augmentations for t={t}")
    if flow.value < k:
        return None
    kept = [i for i, f in enumerate(flow.interval_flow) if f == 1]
    work = {"flow_solves": 1, "augmentations": flow.augmentations}
    method = "exact-tailored" if warm_start else "exact-generic"
    return score_subset(intervals, kept, method, work)
