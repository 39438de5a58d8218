"""Closed-form dimensions and feasibility bounds for the families in scope.

Everything here is a cheap pure function over integers or small graph
structure; nothing builds composed graphs or searches.  The sweep harness
uses these as oracles against the exact solver.
"""

from __future__ import annotations

from dataclasses import dataclass

from .functi import VertexFunction
from .graphs import Graph, GraphDomainError, GraphInputError
from .resolve import METHOD_FORMULA, DimensionResult


@dataclass(frozen=True)
class BoundPair:
    lower: int
    upper: int

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")

    @property
    def exact(self):
        """The common value when the bounds pinch, else None."""
        return self.lower if self.lower == self.upper else None

    def contains(self, value) -> bool:
        return self.lower <= value <= self.upper


def chartrand_bounds(n, d) -> BoundPair:
    """Dimension bounds for a connected graph from its order n and diameter d.

    The lower bound is the least k with k + d**k >= n; the upper bound is n - d.
    """
    if n < 2:
        raise GraphInputError("order must be at least 2")
    if d < 1 or d >= n:
        raise GraphInputError(f"diameter must satisfy 1 <= d <= n-1, got d={d}, n={n}")
    k = 1
    while k + d**k < n:
        k += 1
    return BoundPair(k, n - d)


def hernando_feasible(n, d, k) -> bool:
    """Can a graph of order n, diameter d >= 2, and dimension k exist?

    True iff n <= (floor(2d/3)+1)**k + k * sum_{i=1}^{ceil(d/3)} (2i-1)**(k-1).
    """
    if d < 2:
        raise GraphInputError("feasibility test needs diameter >= 2")
    if k < 1:
        raise GraphInputError("dimension must be positive")
    cap = (2 * d // 3 + 1) ** k
    cap += k * sum((2 * i - 1) ** (k - 1) for i in range(1, -(-d // 3) + 1))
    return n <= cap


_CLASSICAL_MIN_ORDER = {
    "path": 2,
    "complete": 2,
    "cycle": 3,
    "wheel": 3,
    "cycle_prism": 3,
}


def dim_classical(kind, n) -> int:
    """Known dimensions: paths, completes, cycles, wheels, and cycle prisms.

    The wheel parameter n is the rim length (order n + 1); its special cases
    n = 3 and n = 6 take precedence over the floor((2n+2)/5) formula.  The
    cycle prism is the cycle doubled by the identity function.
    """
    minimum = _CLASSICAL_MIN_ORDER.get(kind)
    if minimum is None:
        raise GraphInputError(f"unknown classical family {kind!r}")
    if n < minimum:
        raise GraphInputError(f"family {kind!r} needs n >= {minimum}, got {n}")
    if kind == "path":
        return 1
    if kind == "complete":
        return n - 1
    if kind == "cycle":
        return 2
    if kind == "wheel":
        if n in (3, 6):
            return 3
        return (2 * n + 2) // 5
    # cycle_prism
    return 2 if n % 2 == 1 else 3


@dataclass(frozen=True)
class TreeStructure:
    """Major vertices of a tree with their terminal end-vertex counts.

    A major vertex has degree >= 3.  An end-vertex belongs to the major
    vertex it is strictly closest to; equidistant end-vertices count for
    nobody.  sigma sums the terminal counts, ex counts the major vertices
    with a positive count.
    """

    major_vertices: frozenset[int]
    terminal_degree: tuple[tuple[int, int], ...]
    sigma: int
    ex: int

    def terminal_degree_of(self, v) -> int:
        return dict(self.terminal_degree).get(v, 0)


def tree_structure(t: Graph) -> TreeStructure:
    if not t.is_connected() or t.size != t.order - 1:
        raise GraphDomainError("tree structure is defined for trees only")
    majors = sorted(v for v in range(t.order) if t.degree(v) >= 3)
    counts = {v: 0 for v in majors}
    if majors:
        dist = t.distances.dist
        for u in range(t.order):
            if t.degree(u) != 1:
                continue
            ranked = sorted(majors, key=lambda m: (int(dist[u, m]), m))
            nearest = ranked[0]
            if len(ranked) == 1 or int(dist[u, ranked[1]]) > int(dist[u, nearest]):
                counts[nearest] += 1
    terminal = tuple((v, counts[v]) for v in majors)
    sigma = sum(counts.values())
    ex = sum(1 for c in counts.values() if c > 0)
    return TreeStructure(frozenset(majors), terminal, sigma, ex)


def dim_tree(t: Graph):
    """Dimension of a non-path tree as sigma - ex, plus the structure behind it."""
    if not t.is_connected() or t.size != t.order - 1:
        raise GraphDomainError("dim_tree needs a tree")
    if all(t.degree(v) <= 2 for v in range(t.order)):
        raise GraphDomainError("tree is a path; use dim_classical('path', n)")
    structure = tree_structure(t)
    result = DimensionResult(structure.sigma - structure.ex, None, METHOD_FORMULA)
    return result, structure


def dim_functi_complete(n, f: VertexFunction) -> int:
    """Dimension of a complete graph doubled by f: n-1 for permutations, else 2n-2-s."""
    if n < 3:
        raise GraphInputError("complete-graph formula needs n >= 3")
    if f.domain_order != n:
        raise GraphInputError(f"function domain {f.domain_order} does not match n={n}")
    s = f.image_size
    if s == n:
        return n - 1
    return 2 * n - 2 - s


def dim_functi_cycle_constant(n) -> int:
    """Dimension of a cycle doubled by a constant function."""
    if n < 3:
        raise GraphInputError("cycle formula needs n >= 3")
    if n == 3:
        return 3
    if n % 2 == 1:
        return -(-(2 * n + 3) // 5)
    return -(-(2 * n) // 5) + 1


def functi_dim_bounds(kind, *params) -> BoundPair:
    """Dimension bounds for doubled graphs by context.

    general(n): any connected base of order n >= 3 -> (2, 2n-3).
    cycle_general(n, s): cycle base, image size 1 < s < n -> (2, 2(n-1)-s).
    cycle_permutation(n): cycle base, permutation -> (2, n-1).
    two_clique(m, n): the two-clique bridge -> exact m+n-3.
    """
    if kind == "general":
        (n,) = params
        if n < 3:
            raise GraphInputError("general bounds need n >= 3")
        return BoundPair(2, 2 * n - 3)
    if kind == "cycle_general":
        n, s = params
        if n < 3:
            raise GraphInputError("cycle bounds need n >= 3")
        if not 1 < s < n:
            raise GraphInputError(f"image size must satisfy 1 < s < n, got s={s}, n={n}")
        return BoundPair(2, 2 * (n - 1) - s)
    if kind == "cycle_permutation":
        (n,) = params
        if n < 3:
            raise GraphInputError("cycle bounds need n >= 3")
        return BoundPair(2, n - 1)
    if kind == "two_clique":
        m, n = params
        if m < 3 or n < 3:
            raise GraphInputError("two-clique bridge needs m, n >= 3")
        return BoundPair(m + n - 3, m + n - 3)
    raise GraphInputError(f"unknown bound context {kind!r}")
