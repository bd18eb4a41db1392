"""Min-max path/cut dualities in digraphs and bramble-based congested routing."""

from .bramble import Bramble, congestion, min_hitting_set, order_lower_bound, validate
from .bruteforce import (
    DEFAULT_GATE,
    ScaleGate,
    brute_max_paths,
    brute_menger,
    brute_min_cut,
)
from .digraph import (
    Digraph,
    Path,
    Walk,
    is_k_strong,
    reachable_from,
    reverse,
    shorten_walk,
    strong_components,
)
from .linkage import (
    DDPInstance,
    RoutingInternalError,
    SeparatorAtSink,
    SeparatorAtSource,
    Solution,
    build_refined,
    check_outcome,
    g,
    make_b_minimal,
    route,
    rpaths_or_small_cut,
)
from .matroids import (
    Gammoid,
    Matroid,
    MatroidUnion,
    TransversalMatroid,
    dpaths_value_via_matroids,
    gammoid_rank,
    intersection_max,
    rpaths_value_via_matroids,
    tpaths_value_via_matroids,
    transversal_rank,
    union_rank,
)
from .menger import MengerCertificate, menger, min_separator, min_separator_size
from .minmax import (
    DCut,
    DigraphSourceSequence,
    RCut,
    RespectingPathSet,
    SetFamily,
    TCut,
    build_aux_d,
    build_aux_r,
    build_aux_t,
    order,
    solve_dpaths,
    solve_rpaths,
    solve_tpaths,
    verify_cut,
    verify_paths,
)
from .report import ScaleError, Verification

__version__ = "0.1.0"

__all__ = [
    "Bramble",
    "DCut",
    "DDPInstance",
    "DEFAULT_GATE",
    "Digraph",
    "DigraphSourceSequence",
    "Gammoid",
    "Matroid",
    "MatroidUnion",
    "MengerCertificate",
    "Path",
    "RCut",
    "RespectingPathSet",
    "RoutingInternalError",
    "ScaleError",
    "ScaleGate",
    "SeparatorAtSink",
    "SeparatorAtSource",
    "SetFamily",
    "Solution",
    "TCut",
    "TransversalMatroid",
    "Verification",
    "Walk",
    "brute_max_paths",
    "brute_menger",
    "brute_min_cut",
    "build_aux_d",
    "build_aux_r",
    "build_aux_t",
    "build_refined",
    "check_outcome",
    "congestion",
    "dpaths_value_via_matroids",
    "g",
    "gammoid_rank",
    "intersection_max",
    "is_k_strong",
    "make_b_minimal",
    "menger",
    "min_hitting_set",
    "min_separator",
    "min_separator_size",
    "order",
    "order_lower_bound",
    "reachable_from",
    "reverse",
    "route",
    "rpaths_or_small_cut",
    "rpaths_value_via_matroids",
    "shorten_walk",
    "solve_dpaths",
    "solve_rpaths",
    "solve_tpaths",
    "strong_components",
    "tpaths_value_via_matroids",
    "transversal_rank",
    "union_rank",
    "validate",
    "verify_cut",
    "verify_paths",
]
