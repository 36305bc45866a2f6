"""Homomorphism densities of oriented and bipartite graphs in graphs and
step graphons, with exact-rational checkers for the directed Sidorenko,
forcing, and tournament phenomena."""

from .counting import (
    hom_count_bip,
    hom_count_directed,
    hom_count_undirected,
    labeled_copies,
    t_bip,
    t_directed,
    t_undirected,
)
from .forcing import (
    LambdaProfile,
    NecessaryConditions,
    find_lambda0,
    forcing_witness_search,
    necessary_conditions,
    quasirandom_trace,
    w_lambda,
)
from .graphs import (
    BipartiteGraph,
    EnumerationCapExceeded,
    OrientedGraph,
    Tournament,
    UndirectedGraph,
    canonical_form,
    disjoint_union,
    double_cover,
    enumerate_oriented_graphs,
    enumerate_tournaments,
    hom_to_edge_bipartition,
    oriented_knn,
    to_part_oriented,
    underlying,
    underlying_has_cycle,
)
from .sidorenko import (
    HOLDS,
    VIOLATED,
    CheckReport,
    CheckWitness,
    check_asym_sidorenko,
    check_asym_sidorenko_random,
    check_directed_sidorenko_exhaustive,
    check_directed_sidorenko_graphon,
    check_directed_sidorenko_random,
    check_equivalence_bridge,
    check_second_sidorenko,
)
from .stepgraphon import (
    CutNormResult,
    StepGraphon,
    cut_distance_upper,
    cut_norm,
    cut_norm_centered,
    from_bipartite,
    from_oriented,
    random_graphon,
    rectangle_integral,
    t_bip_step,
    t_step,
)
from .tournaments import (
    TournamentStats,
    anti_sidorenko_check,
    copies_in_tournament,
    impartiality_check,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph",
    "CheckReport",
    "CheckWitness",
    "CutNormResult",
    "EnumerationCapExceeded",
    "HOLDS",
    "LambdaProfile",
    "NecessaryConditions",
    "OrientedGraph",
    "StepGraphon",
    "Tournament",
    "TournamentStats",
    "UndirectedGraph",
    "VIOLATED",
    "anti_sidorenko_check",
    "canonical_form",
    "check_asym_sidorenko",
    "check_asym_sidorenko_random",
    "check_directed_sidorenko_exhaustive",
    "check_directed_sidorenko_graphon",
    "check_directed_sidorenko_random",
    "check_equivalence_bridge",
    "check_second_sidorenko",
    "copies_in_tournament",
    "cut_distance_upper",
    "cut_norm",
    "cut_norm_centered",
    "disjoint_union",
    "double_cover",
    "enumerate_oriented_graphs",
    "enumerate_tournaments",
    "find_lambda0",
    "forcing_witness_search",
    "from_bipartite",
    "from_oriented",
    "hom_count_bip",
    "hom_count_directed",
    "hom_count_undirected",
    "hom_to_edge_bipartition",
    "impartiality_check",
    "labeled_copies",
    "necessary_conditions",
    "oriented_knn",
    "quasirandom_trace",
    "random_graphon",
    "rectangle_integral",
    "t_bip",
    "t_bip_step",
    "t_directed",
    "t_step",
    "t_undirected",
    "to_part_oriented",
    "underlying",
    "underlying_has_cycle",
    "w_lambda",
]
