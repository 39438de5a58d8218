"""Explicit resolving sets for doubled paths, cycles, and complete graphs.

Each builder accepts the caller's actual function, canonicalizes internally
to the labeling its argument assumes, and returns composed-graph indices in
the caller's frame.  Sizes are claimed up front; verification is one
is_resolving call away and the tests insist on it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formulas import dim_functi_cycle_constant
from .functi import (
    KIND_GENERAL,
    VertexFunction,
    build_functigraph,
    classify_function,
    composed_label,
    constant_function,
    identity_function,
)
from .graphs import cycle_graph
from .resolve import UnknownResult, metric_dimension_exact


class ConstructionInputError(ValueError):
    """Construction asked for outside its stated preconditions."""


@dataclass(frozen=True)
class ConstructionResult:
    """A vertex set over a composed graph together with its promised size."""

    vertices: tuple[int, ...]
    source: str
    claimed_size: int
    base_order: int

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(int(v) for v in self.vertices)))
        if len(self.vertices) != self.claimed_size:
            raise AssertionError(
                f"construction {self.source} built {len(self.vertices)} vertices, "
                f"claimed {self.claimed_size}"
            )

    def labels(self) -> tuple[str, ...]:
        return tuple(composed_label(v, self.base_order) for v in self.vertices)

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "claimed_size": self.claimed_size,
            "indices": list(self.vertices),
            "labels": list(self.labels()),
        }


def resolving_path_identity(n) -> ConstructionResult:
    """The two first-copy path ends resolve the identity-doubled path."""
    if n < 3:
        raise ConstructionInputError("path construction needs n >= 3")
    return ConstructionResult((0, n - 1), "path_identity", 2, n)


def _require_constant(n, f, what):
    if f is None:
        f = constant_function(n)
    if f.domain_order != n:
        raise ConstructionInputError(f"function domain {f.domain_order} does not match n={n}")
    if not f.is_constant:
        raise ConstructionInputError(f"{what} construction needs a constant function")
    return f


def resolving_complete_constant(n, f=None) -> ConstructionResult:
    """All but one first-copy vertex plus all but one non-image second-copy vertex.

    Size 2n-3.  The dropped vertices are the highest eligible indices in the
    caller's labeling.
    """
    if n < 3:
        raise ConstructionInputError("complete-graph construction needs n >= 3")
    f = _require_constant(n, f, "complete-constant")
    target = f.image_map[0]
    u_part = list(range(n - 1))
    others = [j for j in range(n) if j != target]
    v_part = [n + j for j in others[:-1]]
    return ConstructionResult(tuple(u_part + v_part), "complete_constant", 2 * n - 3, n)


def resolving_complete_general(n, f: VertexFunction) -> ConstructionResult:
    """Size 2n-2-s set for a complete base and a function with image size 1 < s < n.

    Preimage classes are ordered by decreasing size; the set keeps every
    first-copy vertex except one from the largest class, and every non-image
    second-copy vertex except one.
    """
    if n < 3:
        raise ConstructionInputError("complete-graph construction needs n >= 3")
    if f.domain_order != n:
        raise ConstructionInputError(f"function domain {f.domain_order} does not match n={n}")
    s = f.image_size
    if not 1 < s < n:
        raise ConstructionInputError(f"image size must satisfy 1 < s < n, got s={s}")
    classes = sorted(
        ((image, f.preimage(image)) for image in sorted(f.image)),
        key=lambda item: (-len(item[1]), item[0]),
    )
    u_order = [u for _, pre in classes for u in pre]
    image_order = [image for image, _ in classes]
    non_image = [j for j in range(n) if j not in f.image]
    v_order = image_order + non_image
    u_part = u_order[1:]
    v_part = [n + j for j in v_order[s : n - 1]]
    return ConstructionResult(tuple(u_part + v_part), "complete_general", 2 * n - 2 - s, n)


def resolving_cycle_permutation(n, f=None) -> ConstructionResult:
    """All first-copy vertices but the first; works for every permutation."""
    if n < 3:
        raise ConstructionInputError("cycle construction needs n >= 3")
    if f is None:
        f = identity_function(n)
    if f.domain_order != n:
        raise ConstructionInputError(f"function domain {f.domain_order} does not match n={n}")
    if not f.is_permutation:
        raise ConstructionInputError("cycle-permutation construction needs a permutation")
    return ConstructionResult(tuple(range(1, n)), "cycle_permutation", n - 1, n)


def resolving_cycle_constant(n, f=None) -> ConstructionResult:
    """Resolving set matching the constant-function cycle formula exactly.

    Five residue/parity cases on n >= 6 place paired landmarks around the
    first copy and one or two landmarks in the second copy; n in 3..5 uses
    fixed small sets.  The second-copy positions assume the image vertex is
    the first one, so they are rotated into the caller's frame.
    """
    if n < 3:
        raise ConstructionInputError("cycle construction needs n >= 3")
    f = _require_constant(n, f, "cycle-constant")
    target = f.image_map[0]

    def u(i):
        # first-copy landmark at 1-based cycle position i
        return (i - 1) % n

    def v(j):
        # second-copy landmark at 1-based position j, rotated so position 1 is the image
        return n + (j - 1 + target) % n

    if n in (3, 5):
        chosen = [u(1), u(3), v(3)]
    elif n == 4:
        chosen = [u(1), u(2), v(2)]
    else:
        r = n % 5
        if r in (0, 2, 4):
            top = {0: (n - 5) // 5, 2: (n - 7) // 5, 4: (n - 9) // 5}[r]
            chosen = [u(5 * i + 2) for i in range(top + 1)]
            chosen += [u(5 * i + 5) for i in range(top + 1)]
            if r == 2:
                chosen.append(u(n))
            elif r == 4:
                chosen += [u(n - 2), u(n)]
            chosen.append(v(2))
        else:
            if r == 1:
                chosen = [u(2), u(n - 2)]
                top = (n - 11) // 5
            else:
                chosen = [u(2), u(n - 4), u(n - 2)]
                top = (n - 13) // 5
            chosen += [u(5 * i + 4) for i in range(top + 1)]
            chosen += [u(5 * i + 7) for i in range(top + 1)]
            if n % 2 == 1:
                chosen.append(v((n + 1) // 2))
            else:
                chosen += [v(n // 2), v(n // 2 + 1)]
    return ConstructionResult(tuple(chosen), "cycle_constant", dim_functi_cycle_constant(n), n)


def resolving_cycle_general(n, f: VertexFunction, budget=None) -> ConstructionResult:
    """Resolving set of size at most 2(n-1)-s for a cycle base and 1 < s < n.

    Cases, checked in order: image size n-1 drops one vertex of the doubled
    preimage; even cycles where the two neighbour images always coincide drop
    two adjacent first-copy vertices and both image vertices; otherwise an
    anchor vertex whose neighbours map apart is searched together with a
    non-image vertex whose own neighbourhood differs from those two images.
    The 4-cycle with s=2 falls back to an exact-solver witness.
    """
    if n < 3:
        raise ConstructionInputError("cycle construction needs n >= 3")
    if f.domain_order != n:
        raise ConstructionInputError(f"function domain {f.domain_order} does not match n={n}")
    s = f.image_size
    if classify_function(f).kind != KIND_GENERAL:
        raise ConstructionInputError(f"image size must satisfy 1 < s < n, got s={s}")
    imap = f.image_map

    if s == n - 1:
        doubled = next(j for j in sorted(f.image) if len(f.preimage(j)) == 2)
        drop = min(f.preimage(doubled))
        chosen = [i for i in range(n) if i != drop]
        return ConstructionResult(tuple(chosen), "cycle_general", n - 1, n)

    if n == 4:
        composed = build_functigraph(cycle_graph(4), f).composed
        result = metric_dimension_exact(composed, budget)
        if isinstance(result, UnknownResult):
            raise RuntimeError("solver budget exhausted on a 4-cycle instance")
        return ConstructionResult(result.witness, "cycle_general_solver", result.dimension, n)

    alternating = all(imap[i] == imap[(i + 2) % n] for i in range(n))
    if alternating:
        # even cycle, two interleaved images: drop two adjacent first-copy
        # vertices and both image vertices
        chosen = list(range(2, n))
        chosen += [n + j for j in range(n) if j not in (imap[0], imap[1])]
        return ConstructionResult(tuple(chosen), "cycle_general", 2 * n - 4, n)

    image = f.image
    found = None
    for anchor in range(n):
        left = imap[(anchor - 1) % n]
        right = imap[(anchor + 1) % n]
        if left == right:
            continue
        for vp in range(n):
            if vp in image:
                continue
            if {(vp - 1) % n, (vp + 1) % n} != {left, right}:
                found = (anchor, vp)
                break
        if found:
            break
    assert found is not None, (
        f"no anchor/witness pair for n={n}, f={f.as_one_based()}; construction hypothesis violated"
    )
    anchor, vp = found
    chosen = [i for i in range(n) if i != anchor]
    chosen += [n + j for j in range(n) if j not in image and j != vp]
    return ConstructionResult(tuple(chosen), "cycle_general", 2 * (n - 1) - s, n)


def solver_witness_construction(graph, base_order, budget=None) -> ConstructionResult:
    """Wrap an exact-solver witness as a construction over the given labeling."""
    result = metric_dimension_exact(graph, budget)
    if isinstance(result, UnknownResult):
        raise RuntimeError("solver budget exhausted while extracting a witness")
    return ConstructionResult(result.witness, "solver_witness", result.dimension, base_order)
