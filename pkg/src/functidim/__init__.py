"""Functigraphs and exact metric dimension.

Build a graph doubled by a vertex function, compute its metric dimension
exactly, evaluate the closed-form dimensions and bounds for the families
with known answers, materialize explicit resolving sets, and sweep-check
everything against the solver.
"""

from ._core import BACKEND
from .constructions import (
    ConstructionInputError,
    ConstructionResult,
    resolving_complete_constant,
    resolving_complete_general,
    resolving_cycle_constant,
    resolving_cycle_general,
    resolving_cycle_permutation,
    resolving_path_identity,
)
from .formulas import (
    BoundPair,
    TreeStructure,
    chartrand_bounds,
    dim_classical,
    dim_functi_complete,
    dim_functi_cycle_constant,
    dim_tree,
    functi_dim_bounds,
    hernando_feasible,
    tree_structure,
)
from .functi import (
    EnumerationCapError,
    FunctionInputError,
    FunctionKind,
    Functigraph,
    VertexFunction,
    build_functigraph,
    build_two_clique_bridge,
    classify_function,
    composed_label,
    constant_function,
    enumerate_functions,
    identity_function,
    load_function,
    parse_function_literal,
    save_function,
)
from .graphs import (
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    GraphDomainError,
    GraphInputError,
    all_pairs_distances,
    complement,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    diameter,
    disjoint_union,
    gen_family,
    join,
    load_graph,
    make_graph,
    path_graph,
    save_graph,
    wheel_graph,
)
from .harness import (
    CHECK_IDS,
    Report,
    ReportRow,
    iso_dedup,
    spider_gap_demo,
    verify_theorem,
)
from .resolve import (
    DimensionResult,
    MetricCode,
    SearchStats,
    TwinPartition,
    UnknownResult,
    brute_force_dimension,
    default_budget,
    is_resolving,
    metric_code,
    metric_dimension_exact,
    twin_partition,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundPair",
    "CHECK_IDS",
    "ConstructionInputError",
    "ConstructionResult",
    "DimensionResult",
    "DistanceMatrix",
    "EnumerationCapError",
    "FunctionInputError",
    "FunctionKind",
    "Functigraph",
    "Graph",
    "GraphDomainError",
    "GraphInputError",
    "MetricCode",
    "Report",
    "ReportRow",
    "SearchStats",
    "TreeStructure",
    "TwinPartition",
    "UNREACHABLE",
    "UnknownResult",
    "VertexFunction",
    "all_pairs_distances",
    "brute_force_dimension",
    "build_functigraph",
    "build_two_clique_bridge",
    "chartrand_bounds",
    "classify_function",
    "complement",
    "complete_bipartite_graph",
    "complete_graph",
    "composed_label",
    "constant_function",
    "cycle_graph",
    "default_budget",
    "diameter",
    "dim_classical",
    "dim_functi_complete",
    "dim_functi_cycle_constant",
    "dim_tree",
    "disjoint_union",
    "enumerate_functions",
    "functi_dim_bounds",
    "gen_family",
    "hernando_feasible",
    "identity_function",
    "is_resolving",
    "iso_dedup",
    "join",
    "load_function",
    "load_graph",
    "make_graph",
    "metric_code",
    "metric_dimension_exact",
    "parse_function_literal",
    "path_graph",
    "resolving_complete_constant",
    "resolving_complete_general",
    "resolving_cycle_constant",
    "resolving_cycle_general",
    "resolving_cycle_permutation",
    "resolving_path_identity",
    "save_function",
    "save_graph",
    "spider_gap_demo",
    "tree_structure",
    "twin_partition",
    "verify_theorem",
    "wheel_graph",
]
