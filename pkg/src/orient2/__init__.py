"""orient2: diameter-two orientations of dense graphs.

Any simple graph with n >= 5 vertices and at least C(n,2) - n + 5 edges
has an orientation of diameter two; `orient_diameter_two` builds one
constructively.  The `oracle` module provides the exact oriented-diameter
solver and the exhaustive verification harnesses, and the `cli` module a
command-line front end (`orient2`).
"""

from ._backend import backend_name
from .certs import (
    CombineCase,
    GoodOrientationCert,
    MatchJoinSpec,
    Partition2,
    combine,
    orient_bipartite_blue_matchjoin,
    orient_complete_bipartite,
    orient_path_components,
    quadruple_orient,
    verify_cert,
)
from .codec import (
    GraphFormatError,
    emit_digraph6,
    emit_graph6,
    emit_orientation,
    parse_digraph6,
    parse_graph,
    parse_graph6,
)
from .construct import (
    ConstructionTrace,
    InternalVerificationError,
    base_case_orient,
    normalize_to_threshold,
    orient_diameter_two,
    replay_trace,
    threshold_size,
)
from .graphs import (
    INFINITE,
    Digraph,
    DistanceValue,
    Graph,
    Orientation,
    complement,
    components,
    diameter,
    distance,
    is_bridgeless,
    undirected_diameter,
)
from .oracle import (
    DecisionOutcome,
    SearchBudget,
    SearchStatus,
    VerificationReport,
    enumerate_blue,
    exact_oriented_diameter,
    exists_orientation_diameter2,
    extremal_graph,
    naive_oriented_diameter,
    verify_sharpness,
    verify_theorem,
)
from .structure import (
    ComponentClass,
    ComponentKind,
    ReductionPlan,
    TripleWitness,
    classify_component,
    excess,
    find_reduction,
    find_violating_triple,
    select_forest,
)

__version__ = "0.1.0"

__all__ = [
    "CombineCase",
    "ComponentClass",
    "ComponentKind",
    "ConstructionTrace",
    "DecisionOutcome",
    "Digraph",
    "DistanceValue",
    "Graph",
    "GraphFormatError",
    "GoodOrientationCert",
    "INFINITE",
    "InternalVerificationError",
    "MatchJoinSpec",
    "Orientation",
    "Partition2",
    "ReductionPlan",
    "SearchBudget",
    "SearchStatus",
    "TripleWitness",
    "VerificationReport",
    "backend_name",
    "base_case_orient",
    "classify_component",
    "combine",
    "complement",
    "components",
    "diameter",
    "distance",
    "emit_digraph6",
    "emit_graph6",
    "emit_orientation",
    "enumerate_blue",
    "exact_oriented_diameter",
    "excess",
    "exists_orientation_diameter2",
    "extremal_graph",
    "find_reduction",
    "find_violating_triple",
    "is_bridgeless",
    "naive_oriented_diameter",
    "normalize_to_threshold",
    "orient_bipartite_blue_matchjoin",
    "orient_complete_bipartite",
    "orient_diameter_two",
    "orient_path_components",
    "parse_digraph6",
    "parse_graph",
    "parse_graph6",
    "quadruple_orient",
    "replay_trace",
    "select_forest",
    "threshold_size",
    "undirected_diameter",
    "verify_cert",
    "verify_sharpness",
    "verify_theorem",
]
