"""Integer edge labelings, magic tests, and exhaustive exact enumeration."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import BudgetExceededError
from .graphs import Graph, graph_hash, make_gn


@dataclass(frozen=True)
class Labeling:
    """Nonnegative integer labels in the graph's edge coordinate order."""

    graph: Graph
    labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        if len(self.labels) != len(self.graph.edges):
            raise ValueError("label vector length must equal the edge count")
        if any(x < 0 for x in self.labels):
            raise ValueError("labels must be nonnegative")


def vertex_sum(lab: Labeling, v: str) -> int:
    """Sum of the labels on edges at v; a loop contributes its label once."""
    if v not in lab.graph.incidence:
        raise ValueError(f"unknown vertex {v!r}")
    return sum(lab.labels[ei] for ei in lab.graph.incidence[v])


def is_magic(lab: Labeling) -> int | None:
    """The common vertex sum (the index) when all sums agree, else None.

    A graph with no vertices has index 0 by convention.  Index 0 is a
    valid magic labeling, so compare the result against None rather than
    testing truthiness.
    """
    sums = {vertex_sum(lab, v) for v in lab.graph.vertices}
    if not sums:
        return 0
    if len(sums) == 1:
        return next(iter(sums))
    return None


def max_label(lab: Labeling) -> int:
    """Largest label used; 0 for a graph with no edges."""
    return max(lab.labels, default=0)


def lstar(n: int) -> Labeling:
    """On ``make_gn(n)``: rungs labeled n-1 and every spoke labeled 1.

    Magic of index n with maximum label n-1.
    """
    g = make_gn(n)
    return Labeling(g, tuple([n - 1] * n + [1] * (2 * n)))


def li_matching(n: int, i: int) -> Labeling:
    """Indicator labeling of the i-th perfect matching of ``make_gn(n)``.

    The matching takes the spokes at channel i plus every rung except
    rung i; the labeling is magic of index 1.
    """
    g = make_gn(n)
    if not 1 <= i <= n:
        raise ValueError(f"i must be between 1 and {n}")
    labels = [0] * (3 * n)
    for j in range(1, n + 1):
        if j != i:
            labels[j - 1] = 1
    labels[n + i - 1] = 1
    labels[2 * n + i - 1] = 1
    return Labeling(g, tuple(labels))


def matching_labeling(g: Graph, matching) -> Labeling:
    """0/1 labeling supported on the given edge indices."""
    labels = [0] * len(g.edges)
    for ei in matching:
        labels[ei] = 1
    return Labeling(g, tuple(labels))


def _assignment_order(g: Graph) -> list[int]:
    # Static DFS order: repeatedly take the unassigned edges of the vertex
    # with the fewest unassigned incident edges.  Vertex sums then close as
    # early as possible, so most labels are forced instead of branched on.
    vidx = {v: i for i, v in enumerate(g.vertices)}
    inc = [list(g.incidence[v]) for v in g.vertices]
    remaining = [len(es) for es in inc]
    unassigned = [True] * len(g.edges)
    order: list[int] = []
    while len(order) < len(g.edges):
        best = -1
        for vi in range(len(g.vertices)):
            if remaining[vi] and (best < 0 or remaining[vi] < remaining[best]):
                best = vi
        for ei in inc[best]:
            if unassigned[ei]:
                unassigned[ei] = False
                order.append(ei)
                u, w = g.edges[ei]
                remaining[vidx[u]] -= 1
                if w != u:
                    remaining[vidx[w]] -= 1
    return order


def _run_index_dfs(g: Graph, target: int, caps, sink, budget, nodes) -> None:
    """Exact DFS over labelings with every vertex sum equal to ``target``.

    ``caps`` bounds each edge label.  ``sink`` receives the internal label
    buffer (in coordinate order) once per solution; callers must copy it.
    ``nodes`` is a single-element list holding the running node count.
    """
    if target < 0:
        return
    vidx = {v: i for i, v in enumerate(g.vertices)}
    capacity = [sum(caps[ei] for ei in g.incidence[v]) for v in g.vertices]
    if any(c < target for c in capacity):
        return
    m = len(g.edges)
    if m == 0:
        if target == 0:
            sink([])
        return

    order = _assignment_order(g)
    endpoints = []
    for ei in order:
        u, w = g.edges[ei]
        ui, wi = vidx[u], vidx[w]
        endpoints.append((ei, (ui,) if ui == wi else (ui, wi)))

    labels = [0] * m
    sums = [0] * len(g.vertices)
    caprem = capacity[:]

    def step(t: int):
        if t == m:
            sink(labels)
            return
        ei, ends = endpoints[t]
        cap_e = caps[ei]
        lo, hi = 0, cap_e
        for vi in ends:
            after = caprem[vi] - cap_e
            need = target - sums[vi]
            if need - after > lo:
                lo = need - after
            if need < hi:
                hi = need
        if lo > hi:
            return
        if budget is not None:
            nodes[0] += hi - lo + 1
            if nodes[0] > budget:
                raise BudgetExceededError(
                    f"enumeration exceeded the node budget of {budget}"
                )
        for vi in ends:
            caprem[vi] -= cap_e
        for val in range(lo, hi + 1):
            labels[ei] = val
            for vi in ends:
                sums[vi] += val
            step(t + 1)
            for vi in ends:
                sums[vi] -= val
        labels[ei] = 0
        for vi in ends:
            caprem[vi] += cap_e

    step(0)


def _index_upper_bound(g: Graph, caps) -> int:
    # No vertex sum can exceed the total cap of its incident edges, so the
    # smallest vertex capacity bounds the index of any feasible labeling.
    return min(
        (sum(caps[ei] for ei in g.incidence[v]) for v in g.vertices), default=0
    )


def enumerate_magic_k(g: Graph, k: int, *, budget: int | None = None) -> list[Labeling]:
    """All magic labelings of g with every label at most k.

    Enumeration runs one exact depth-first search per candidate index,
    so the results are unique by construction.  ``budget`` caps the
    total number of DFS label assignments.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    caps = [k] * len(g.edges)
    out: list[Labeling] = []
    nodes = [0]
    for r in range(_index_upper_bound(g, caps) + 1):
        _run_index_dfs(g, r, caps, lambda buf: out.append(Labeling(g, tuple(buf))), budget, nodes)
    return out


def count_magic_k(g: Graph, k: int, *, budget: int | None = None) -> int:
    """Number of magic labelings with every label at most k (streamed)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    caps = [k] * len(g.edges)
    total = 0
    nodes = [0]

    def bump(_buf):
        nonlocal total
        total += 1

    for r in range(_index_upper_bound(g, caps) + 1):
        _run_index_dfs(g, r, caps, bump, budget, nodes)
    return total


def enumerate_index_k(g: Graph, k: int, *, budget: int | None = None) -> list[Labeling]:
    """All magic labelings of g with index exactly k.

    Labels are automatically at most k, since each edge label is bounded
    by the sum at either endpoint.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    caps = [k] * len(g.edges)
    out: list[Labeling] = []
    _run_index_dfs(g, k, caps, lambda buf: out.append(Labeling(g, tuple(buf))), budget, [0])
    return out


def count_index_k(g: Graph, k: int, *, budget: int | None = None) -> int:
    """Number of magic labelings with index exactly k (streamed)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    caps = [k] * len(g.edges)
    total = 0

    def bump(_buf):
        nonlocal total
        total += 1

    _run_index_dfs(g, k, caps, bump, budget, [0])
    return total


def enumerate_magic_bounded(g: Graph, caps, *, budget: int | None = None) -> list[Labeling]:
    """All magic labelings with per-edge label bounds ``caps``."""
    caps = [int(c) for c in caps]
    if len(caps) != len(g.edges):
        raise ValueError("caps length must equal the edge count")
    if any(c < 0 for c in caps):
        raise ValueError("caps must be nonnegative")
    out: list[Labeling] = []
    nodes = [0]
    for r in range(_index_upper_bound(g, caps) + 1):
        _run_index_dfs(g, r, caps, lambda buf: out.append(Labeling(g, tuple(buf))), budget, nodes)
    return out


def labeling_to_json(lab: Labeling) -> str:
    payload = {"graph_hash": graph_hash(lab.graph), "labels": list(lab.labels)}
    return json.dumps(payload, separators=(",", ":"))


def labeling_from_json(g: Graph, text: str) -> Labeling:
    """Parse a labeling for g, checking the embedded graph hash."""
    data = json.loads(text)
    if not isinstance(data, dict) or set(data) != {"graph_hash", "labels"}:
        raise ValueError('labeling JSON must be {"graph_hash": ..., "labels": [...]}')
    if data["graph_hash"] != graph_hash(g):
        raise ValueError("labeling was produced for a different graph")
    labels = data["labels"]
    if not isinstance(labels, list) or not all(isinstance(x, int) for x in labels):
        raise ValueError("labeling JSON labels must be a list of integers")
    return Labeling(g, tuple(labels))
