"""Exact tools for counting and analyzing magic edge labelings of graphs."""

from .errors import BudgetExceededError, ConsistencyError
from .geometry import (
    PolytopeDescription,
    magic_constraints,
    matrix_rank,
    point_denominator,
    polytope_denominator,
    polytope_dimension,
    polytope_vertices,
    solve_rational,
)
from .graphs import (
    Graph,
    bouquet,
    build_graph,
    cycle_graph,
    forced_max_edge,
    graph_from_json,
    graph_hash,
    graph_to_json,
    has_perfect_matching,
    is_bipartite,
    leaves,
    make_gn,
    make_gnp,
    matching_preclusion_class,
    path_graph,
    perfect_matchings,
)
from .labelings import (
    Labeling,
    count_index_k,
    count_magic_k,
    enumerate_index_k,
    enumerate_magic_bounded,
    enumerate_magic_k,
    is_magic,
    labeling_from_json,
    labeling_to_json,
    li_matching,
    lstar,
    matching_labeling,
    max_label,
    vertex_sum,
)
from .quasipolynomials import (
    Quasipolynomial,
    binomial,
    closed_form_mn,
    ehrhart_of_polytope,
    f_n,
    fit_quasipolynomial,
    iterated_difference_of_fn,
)
from .semigroups import (
    CFVerdict,
    QuasiperiodCertificate,
    SemigroupElement,
    certify_small_quasiperiod,
    cf_elements,
    decompose_over_generators,
    stanley_decompose,
    verify_completely_fundamental,
)

__all__ = [
    "BudgetExceededError",
    "CFVerdict",
    "ConsistencyError",
    "Graph",
    "Labeling",
    "PolytopeDescription",
    "Quasipolynomial",
    "QuasiperiodCertificate",
    "SemigroupElement",
    "binomial",
    "bouquet",
    "build_graph",
    "certify_small_quasiperiod",
    "cf_elements",
    "closed_form_mn",
    "count_index_k",
    "count_magic_k",
    "cycle_graph",
    "decompose_over_generators",
    "ehrhart_of_polytope",
    "enumerate_index_k",
    "enumerate_magic_bounded",
    "enumerate_magic_k",
    "f_n",
    "fit_quasipolynomial",
    "forced_max_edge",
    "graph_from_json",
    "graph_hash",
    "graph_to_json",
    "has_perfect_matching",
    "is_bipartite",
    "is_magic",
    "iterated_difference_of_fn",
    "labeling_from_json",
    "labeling_to_json",
    "leaves",
    "li_matching",
    "lstar",
    "magic_constraints",
    "make_gn",
    "make_gnp",
    "matching_labeling",
    "matching_preclusion_class",
    "matrix_rank",
    "max_label",
    "path_graph",
    "perfect_matchings",
    "point_denominator",
    "polytope_denominator",
    "polytope_dimension",
    "polytope_vertices",
    "solve_rational",
    "stanley_decompose",
    "verify_completely_fundamental",
    "vertex_sum",
]
