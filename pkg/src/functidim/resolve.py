"""Metric codes, resolving-set checks, twin classes, and the exact dimension solver.

The solver reduces the problem to minimum set cover: the universe is every
unordered vertex pair, and a landmark covers the pairs it distinguishes.
Twin classes seed forced landmarks, a greedy cover gives the upper bound,
and branch and bound closes the gap.  All tie-breaking is by lowest index,
so results are deterministic for a fixed labeling.
"""

from __future__ import annotations

import itertools
import os
import time
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import _core
from .graphs import DistanceMatrix, Graph, GraphDomainError, GraphInputError

DEFAULT_NODE_BUDGET = 10_000_000
MAX_SOLVER_ORDER = 64

METHOD_EXACT = "exact"
METHOD_FORMULA = "formula"
METHOD_CONSTRUCTION = "construction"


def default_budget() -> int:
    """Node budget for the search; FUNCTIDIM_BUDGET overrides the default."""
    raw = os.environ.get("FUNCTIDIM_BUDGET")
    if raw is None or raw == "":
        return DEFAULT_NODE_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"FUNCTIDIM_BUDGET must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"FUNCTIDIM_BUDGET must be positive, got {value}")
    return value


@dataclass(frozen=True)
class MetricCode:
    """Distances from one vertex to an ordered landmark list."""

    landmarks: tuple[int, ...]
    entries: tuple[int, ...]


def metric_code(d: DistanceMatrix, landmarks, v) -> MetricCode:
    lm = tuple(int(x) for x in landmarks)
    for x in lm + (v,):
        if not 0 <= x < d.order:
            raise GraphInputError(f"vertex {x} outside 0..{d.order - 1}")
    return MetricCode(lm, tuple(int(d.dist[v, x]) for x in lm))


class ResolutionCheck(NamedTuple):
    ok: bool
    unresolved: tuple[int, int] | None

    def __bool__(self):
        return self.ok


def is_resolving(d: DistanceMatrix, landmarks) -> ResolutionCheck:
    """True when all vertices get distinct codes; otherwise carries the first clashing pair."""
    lm = sorted({int(x) for x in landmarks})
    if not lm:
        raise GraphInputError("resolving-set candidate is empty")
    for x in lm:
        if not 0 <= x < d.order:
            raise GraphInputError(f"vertex {x} outside 0..{d.order - 1}")
    sub = np.ascontiguousarray(d.dist[:, lm])
    seen = {}
    for v in range(d.order):
        key = sub[v].tobytes()
        if key in seen:
            return ResolutionCheck(False, (seen[key], v))
        seen[key] = v
    return ResolutionCheck(True, None)


@dataclass(frozen=True)
class TwinPartition:
    """Twin equivalence classes; any resolving set misses at most one vertex per class."""

    classes: tuple[frozenset[int], ...]
    forced_lower_bound: int


class TwinRelationError(RuntimeError):
    """Pairwise twin tests did not merge into an equivalence relation."""


def twin_partition(g: Graph) -> TwinPartition:
    """Partition vertices into twin classes: u, v are twins when N(u)-{v} = N(v)-{u}.

    Transitivity is verified on the instance rather than assumed: after the
    pairwise merge every class is re-checked pairwise.
    """
    adj = g.adjacency
    n = g.order
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def twins(u, v):
        return (adj[u] - {v}) == (adj[v] - {u})

    for u in range(n):
        for v in range(u + 1, n):
            if twins(u, v):
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[max(ru, rv)] = min(ru, rv)

    groups = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    classes = tuple(frozenset(members) for _, members in sorted(groups.items()))
    for members in classes:
        for u, v in itertools.combinations(sorted(members), 2):
            if not twins(u, v):
                raise TwinRelationError(
                    f"vertices {u} and {v} merged into one class but are not twins"
                )
    bound = sum(len(c) - 1 for c in classes)
    return TwinPartition(classes, bound)


@dataclass(frozen=True)
class SearchStats:
    nodes: int
    elapsed: float


@dataclass(frozen=True)
class DimensionResult:
    dimension: int
    witness: tuple[int, ...] | None
    method: str
    stats: SearchStats | None = None


@dataclass(frozen=True)
class UnknownResult:
    """Search stopped at the node budget; bounds bracket the true dimension."""

    lower_bound: int
    upper_bound: int
    witness: tuple[int, ...]
    stats: SearchStats


def metric_dimension_exact(g: Graph, budget=None) -> DimensionResult | UnknownResult:
    """Exact metric dimension with a minimum witness; UnknownResult on budget exhaustion."""
    if g.order > MAX_SOLVER_ORDER:
        raise GraphInputError(f"exact solver supports order <= {MAX_SOLVER_ORDER}, got {g.order}")
    d = g.distances
    if not d.is_connected():
        raise GraphDomainError("exact solver requires a connected graph")
    if budget is None:
        budget = default_budget()
    if g.order == 1:
        return DimensionResult(0, (), METHOD_EXACT, SearchStats(0, 0.0))
    twins = twin_partition(g)
    forced = sorted(
        itertools.chain.from_iterable(sorted(c)[1:] for c in twins.classes)
    )
    start = time.perf_counter()
    status, best_size, witness, nodes = _core.min_cover_search(
        d.dist, np.asarray(forced, dtype=np.int32), int(budget)
    )
    stats = SearchStats(int(nodes), time.perf_counter() - start)
    witness = tuple(int(x) for x in witness)
    if status == _core.SOLVED:
        return DimensionResult(int(best_size), witness, METHOD_EXACT, stats)
    return UnknownResult(max(1, twins.forced_lower_bound), int(best_size), witness, stats)


def brute_force_dimension(g: Graph) -> DimensionResult:
    """Exhaustive smallest-resolving-subset search.

    Deliberately independent of the cover-search path: subsets stream in
    increasing size and each is checked by direct code comparison.
    """
    d = g.distances
    if not d.is_connected():
        raise GraphDomainError("oracle requires a connected graph")
    n = g.order
    if n == 1:
        return DimensionResult(0, (), METHOD_EXACT, None)
    dist = d.dist
    for k in range(1, n):
        for combo in itertools.combinations(range(n), k):
            rows = dist[:, combo].tolist()
            if len({tuple(r) for r in rows}) == n:
                return DimensionResult(k, combo, METHOD_EXACT, None)
    return DimensionResult(n - 1, tuple(range(n - 1)), METHOD_EXACT, None)
