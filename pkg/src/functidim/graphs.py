"""Simple undirected graphs: canonical storage, family generators, BFS distances.

Vertices are 0-based integers 0..n-1 throughout.  Generated families carry a
fixed labeling: paths and cycles number vertices in traversal order, the wheel
hub is the last index, joins and unions put the left operand's vertices first.
"""

from __future__ import annotations

import dataclasses
import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from ._core import bfs_all_pairs

UNREACHABLE = -1


class GraphInputError(ValueError):
    """Malformed construction input: bad endpoint, self-loop, bad family parameter."""


class GraphDomainError(ValueError):
    """Operation applied outside its domain, e.g. diameter of a disconnected graph."""


def _canonical_edges(order, edges):
    seen = set()
    for a, b in edges:
        a, b = int(a), int(b)
        if not (0 <= a < order and 0 <= b < order):
            raise GraphInputError(f"edge ({a}, {b}) has an endpoint outside 0..{order - 1}")
        if a == b:
            raise GraphInputError(f"self-loop at vertex {a}")
        seen.add((a, b) if a < b else (b, a))
    return tuple(sorted(seen))


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph; equality is structural (order + edge set)."""

    order: int
    edges: tuple[tuple[int, int], ...]
    name: str | None = field(default=None, compare=False)

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs = [set() for _ in range(self.order)]
        for a, b in self.edges:
            nbrs[a].add(b)
            nbrs[b].add(a)
        return tuple(frozenset(s) for s in nbrs)

    def neighbors(self, v) -> frozenset[int]:
        return self.adjacency[v]

    def closed_neighborhood(self, v) -> frozenset[int]:
        return self.adjacency[v] | {v}

    def degree(self, v) -> int:
        return len(self.adjacency[v])

    def has_edge(self, a, b) -> bool:
        return b in self.adjacency[a]

    @cached_property
    def distances(self) -> DistanceMatrix:
        return all_pairs_distances(self)

    def is_connected(self) -> bool:
        return self.distances.is_connected()

    def renamed(self, name) -> Graph:
        return dataclasses.replace(self, name=name)

    def relabeled(self, perm) -> Graph:
        """New graph with vertex v renamed to perm[v]."""
        if sorted(perm) != list(range(self.order)):
            raise GraphInputError("relabeling must be a permutation of the vertices")
        return Graph(self.order, _canonical_edges(self.order, ((perm[a], perm[b]) for a, b in self.edges)), self.name)

    def __repr__(self):
        label = self.name or "graph"
        return f"Graph({label}, order={self.order}, size={self.size})"


class DistanceMatrix:
    """Hop distances of a graph; UNREACHABLE (-1) marks disconnected pairs.

    The underlying array is read-only; instances are safe to share.
    """

    __slots__ = ("order", "dist")

    def __init__(self, dist):
        arr = np.ascontiguousarray(np.asarray(dist, dtype=np.int32))
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise GraphInputError("distance matrix must be square")
        arr.setflags(write=False)
        self.order = int(arr.shape[0])
        self.dist = arr

    def distance(self, u, v) -> int:
        return int(self.dist[u, v])

    def is_connected(self) -> bool:
        return bool((self.dist != UNREACHABLE).all())

    def __repr__(self):
        return f"DistanceMatrix(order={self.order})"


def make_graph(order, edges, name=None) -> Graph:
    """Validated graph constructor: rejects self-loops, collapses duplicates."""
    if not isinstance(order, int) or order < 1:
        raise GraphInputError(f"order must be a positive integer, got {order!r}")
    return Graph(order, _canonical_edges(order, edges), name)


def path_graph(n) -> Graph:
    if n < 1:
        raise GraphInputError("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)), f"P_{n}")


def cycle_graph(n) -> Graph:
    if n < 3:
        raise GraphInputError("cycle needs n >= 3")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return Graph(n, _canonical_edges(n, edges), f"C_{n}")


def complete_graph(n) -> Graph:
    if n < 1:
        raise GraphInputError("complete graph needs n >= 1")
    return Graph(n, tuple(itertools.combinations(range(n), 2)), f"K_{n}")


def wheel_graph(n) -> Graph:
    """Cycle on n vertices joined to a hub; the hub is vertex n."""
    if n < 3:
        raise GraphInputError("wheel needs rim size n >= 3")
    rim = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    spokes = [(i, n) for i in range(n)]
    return Graph(n + 1, _canonical_edges(n + 1, rim + spokes), f"W_{{1,{n}}}")


def complete_bipartite_graph(s, t) -> Graph:
    if s < 1 or t < 1:
        raise GraphInputError("complete bipartite graph needs s, t >= 1")
    edges = [(i, s + j) for i in range(s) for j in range(t)]
    return Graph(s + t, _canonical_edges(s + t, edges), f"K_{{{s},{t}}}")


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus all edges between them; g's vertices come first."""
    shifted = [(a + g.order, b + g.order) for a, b in h.edges]
    cross = [(a, g.order + b) for a in range(g.order) for b in range(h.order)]
    name = f"{g.name}+{h.name}" if g.name and h.name else None
    return Graph(g.order + h.order, _canonical_edges(g.order + h.order, list(g.edges) + shifted + cross), name)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = [(a + g.order, b + g.order) for a, b in h.edges]
    name = f"{g.name}|{h.name}" if g.name and h.name else None
    return Graph(g.order + h.order, _canonical_edges(g.order + h.order, list(g.edges) + shifted), name)


def complement(g: Graph) -> Graph:
    present = set(g.edges)
    edges = [e for e in itertools.combinations(range(g.order), 2) if e not in present]
    name = f"~{g.name}" if g.name else None
    return Graph(g.order, tuple(edges), name)


_INT_FAMILIES = {
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "complete": (complete_graph, 1),
    "wheel": (wheel_graph, 1),
    "complete_bipartite": (complete_bipartite_graph, 2),
}

_GRAPH_FAMILIES = {
    "join": (join, 2),
    "disjoint_union": (disjoint_union, 2),
    "complement": (complement, 1),
}


def gen_family(kind, *params) -> Graph:
    """Build a named family graph; params are integers or operand graphs per kind."""
    if kind in _INT_FAMILIES:
        builder, arity = _INT_FAMILIES[kind]
        if len(params) != arity or not all(isinstance(p, int) for p in params):
            raise GraphInputError(f"family {kind!r} takes {arity} integer parameter(s)")
        return builder(*params)
    if kind in _GRAPH_FAMILIES:
        builder, arity = _GRAPH_FAMILIES[kind]
        if len(params) != arity or not all(isinstance(p, Graph) for p in params):
            raise GraphInputError(f"family {kind!r} takes {arity} graph operand(s)")
        return builder(*params)
    raise GraphInputError(f"unknown family {kind!r}")


def _csr(g: Graph):
    indptr = np.zeros(g.order + 1, dtype=np.int64)
    for a, b in g.edges:
        indptr[a + 1] += 1
        indptr[b + 1] += 1
    indptr = np.cumsum(indptr).astype(np.int32)
    indices = np.empty(2 * g.size, dtype=np.int32)
    fill = indptr[:-1].copy()
    for a, b in g.edges:
        indices[fill[a]] = b
        fill[a] += 1
        indices[fill[b]] = a
        fill[b] += 1
    return indptr, indices


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS hop distances between every vertex pair of g."""
    indptr, indices = _csr(g)
    return DistanceMatrix(bfs_all_pairs(g.order, indptr, indices))


def diameter(g: Graph) -> int:
    """Largest hop distance; defined for connected graphs only."""
    d = g.distances
    if not d.is_connected():
        raise GraphDomainError("diameter is undefined for disconnected graphs")
    return int(d.dist.max())


def format_graph_text(g: Graph) -> str:
    """Text form: optional '# name:' comment, order line, then one 'a b' line per edge."""
    lines = []
    if g.name:
        lines.append(f"# name: {g.name}")
    lines.append(str(g.order))
    lines.extend(f"{a} {b}" for a, b in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph_text(text) -> Graph:
    name = None
    order = None
    edges = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("name:"):
                name = body[len("name:"):].strip() or None
            continue
        if order is None:
            try:
                order = int(line)
            except ValueError:
                raise GraphInputError(f"expected vertex count, got {line!r}") from None
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphInputError(f"expected edge line 'a b', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphInputError(f"non-integer endpoint in {line!r}") from None
    if order is None:
        raise GraphInputError("graph text contains no vertex count line")
    return make_graph(order, edges, name)


def save_graph(g: Graph, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph_text(g))


def load_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph_text(fh.read())
