"""Functigraphs: two copies of a base graph joined by function edges.

The composed graph of C(G, f) for a base graph of order n uses indices
0..n-1 for the first copy and n..2n-1 for the second, so base vertex i's
function edge runs from i to n + f(i).  Display labels follow the u/v
convention: index i < n is u_{i+1}, index n + j is v_{j+1}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import Graph, GraphInputError, _canonical_edges

DEFAULT_ENUMERATION_CAP = 8

KIND_PERMUTATION = "permutation"
KIND_CONSTANT = "constant"
KIND_GENERAL = "general"


class FunctionInputError(ValueError):
    """Malformed vertex function or function literal."""


class EnumerationCapError(RuntimeError):
    """Requested enumeration exceeds the configured cap (the stream grows as n^n)."""


@dataclass(frozen=True)
class VertexFunction:
    """Total map from base-graph vertices into a second copy, stored 0-based."""

    domain_order: int
    image_map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image_map", tuple(int(x) for x in self.image_map))
        if self.domain_order < 1:
            raise FunctionInputError("domain order must be positive")
        if len(self.image_map) != self.domain_order:
            raise FunctionInputError(
                f"image map has {len(self.image_map)} entries for domain order {self.domain_order}"
            )
        for x in self.image_map:
            if not 0 <= x < self.domain_order:
                raise FunctionInputError(f"image entry {x} outside 0..{self.domain_order - 1}")

    def __call__(self, i) -> int:
        return self.image_map[i]

    @property
    def image(self) -> frozenset[int]:
        return frozenset(self.image_map)

    @property
    def image_size(self) -> int:
        return len(set(self.image_map))

    def preimage(self, j) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.image_map) if x == j)

    @property
    def is_permutation(self) -> bool:
        return self.image_size == self.domain_order

    @property
    def is_constant(self) -> bool:
        return self.image_size == 1

    def as_one_based(self) -> tuple[int, ...]:
        return tuple(x + 1 for x in self.image_map)


def identity_function(n) -> VertexFunction:
    return VertexFunction(n, tuple(range(n)))


def constant_function(n, target=0) -> VertexFunction:
    return VertexFunction(n, (target,) * n)


@dataclass(frozen=True)
class FunctionKind:
    kind: str
    image_size: int


def classify_function(f: VertexFunction) -> FunctionKind:
    """Permutation when the image is everything, constant when it is a point."""
    s = f.image_size
    if s == f.domain_order:
        return FunctionKind(KIND_PERMUTATION, s)
    if s == 1:
        return FunctionKind(KIND_CONSTANT, s)
    return FunctionKind(KIND_GENERAL, s)


def composed_label(index, n) -> str:
    """u/v display label of a composed-graph index over base order n."""
    if index < n:
        return f"u_{index + 1}"
    return f"v_{index - n + 1}"


@dataclass(frozen=True)
class Functigraph:
    base: Graph
    func: VertexFunction
    composed: Graph

    @property
    def order(self) -> int:
        return self.composed.order

    def label(self, index) -> str:
        return composed_label(index, self.base.order)


def build_functigraph(g: Graph, f: VertexFunction) -> Functigraph:
    """Compose two copies of g with the function edges i -> n + f(i)."""
    if f.domain_order != g.order:
        raise FunctionInputError(
            f"function domain order {f.domain_order} does not match graph order {g.order}"
        )
    n = g.order
    edges = list(g.edges)
    edges.extend((a + n, b + n) for a, b in g.edges)
    edges.extend((i, n + f(i)) for i in range(n))
    base_name = g.name or f"G{n}"
    composed = Graph(2 * n, _canonical_edges(2 * n, edges), f"C({base_name},f)")
    return Functigraph(g, f, composed)


def _dihedral_domain_maps(n):
    maps = []
    for r in range(n):
        maps.append(tuple((i + r) % n for i in range(n)))
        maps.append(tuple((r - i) % n for i in range(n)))
    return tuple(maps)


def enumerate_functions(
    n,
    kind=None,
    image_size=None,
    cap=DEFAULT_ENUMERATION_CAP,
    reduce_cycle_symmetry=False,
):
    """Yield every VertexFunction on a domain of order n matching the filters.

    Functions stream in lexicographic order of their image maps, each exactly
    once.  With reduce_cycle_symmetry=True only the lexicographically least
    representative of each orbit under rotations/reflections of the domain
    cycle is emitted (sound only when the base graph is a cycle).
    """
    if n < 1:
        raise FunctionInputError("domain order must be positive")
    if kind not in (None, KIND_PERMUTATION, KIND_CONSTANT, KIND_GENERAL):
        raise FunctionInputError(f"unknown kind filter {kind!r}")
    if n > cap:
        raise EnumerationCapError(
            f"domain order {n} exceeds the enumeration cap {cap}; raise cap= explicitly"
        )
    if kind == KIND_PERMUTATION:
        candidates = itertools.permutations(range(n))
    elif kind == KIND_CONSTANT:
        candidates = ((j,) * n for j in range(n))
    else:
        candidates = itertools.product(range(n), repeat=n)
    group = _dihedral_domain_maps(n) if reduce_cycle_symmetry else ()
    for image_map in candidates:
        s = len(set(image_map))
        if image_size is not None and s != image_size:
            continue
        if kind == KIND_GENERAL and not 1 < s < n:
            continue
        if group and any(
            tuple(image_map[g[i]] for i in range(n)) < image_map for g in group
        ):
            continue
        yield VertexFunction(n, image_map)


def build_two_clique_bridge(m, n) -> Graph:
    """Two cliques of orders m and n, every vertex of the first joined to one fixed vertex of the second."""
    if m < 3 or n < 3:
        raise GraphInputError("two-clique bridge needs m, n >= 3")
    edges = list(itertools.combinations(range(m), 2))
    edges.extend((m + a, m + b) for a, b in itertools.combinations(range(n), 2))
    edges.extend((i, m) for i in range(m))
    return Graph(m + n, _canonical_edges(m + n, edges), f"TwoClique({m},{n})")


def parse_function_literal(text, domain_order=None) -> VertexFunction:
    """Parse a comma-separated 1-based image list such as '1,1,2'."""
    entries = [p.strip() for p in text.strip().split(",") if p.strip()]
    if not entries:
        raise FunctionInputError("empty function literal")
    try:
        one_based = [int(p) for p in entries]
    except ValueError:
        raise FunctionInputError(f"non-integer entry in function literal {text!r}") from None
    n = domain_order if domain_order is not None else len(one_based)
    if len(one_based) != n:
        raise FunctionInputError(f"function literal has {len(one_based)} entries, expected {n}")
    for x in one_based:
        if not 1 <= x <= n:
            raise FunctionInputError(f"image entry {x} outside 1..{n}")
    return VertexFunction(n, tuple(x - 1 for x in one_based))


def format_function_file(f: VertexFunction) -> str:
    kind = classify_function(f).kind
    literal = ",".join(str(x) for x in f.as_one_based())
    return f"# kind: {kind}\n{literal}\n"


def save_function(f: VertexFunction, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_function_file(f))


def load_function(path, domain_order=None) -> VertexFunction:
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.strip().startswith("#")]
    if len(lines) != 1:
        raise FunctionInputError(f"function file must hold one literal line, found {len(lines)}")
    return parse_function_literal(lines[0], domain_order)
