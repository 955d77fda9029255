"""Partitions, rank-drop strata, orbit inequalities and the moment-map variety."""
from .moment import (
    MomentData,
    MomentError,
    fiber_dimension_check,
    image_closure_dim,
    kappa_residuals,
    kappa_vanishing_check,
    moment_map,
    moment_polynomials,
)
from .nilpotent import (
    GradedOrbit,
    centralizer_dim_bruteforce,
    chain_diagrams,
    graded_null_cone,
    jordan_matrix,
    orthogonal_form,
    pfaffian_gradient_vanishes,
)
from .partitions import (
    Partition,
    PartitionError,
    centralizer_dim_sl,
    dual_partition,
    inequality_case1,
    inequality_case2,
    is_orthogonal_partition,
    orthogonal_partitions,
    pair_partition_data,
    parse_partition,
    partitions,
    pfaffian_vanishing_rule,
    span_dim_nilpotent_case1,
)
from .strata import (
    OrbitDataError,
    StrataReport,
    StratumVerdict,
    only_origin,
    span_dim_at,
    strata_check,
    strata_check_direct,
    stratum_dimension_bounds,
)

__all__ = [
    "GradedOrbit",
    "MomentData",
    "MomentError",
    "OrbitDataError",
    "Partition",
    "PartitionError",
    "StrataReport",
    "StratumVerdict",
    "centralizer_dim_bruteforce",
    "centralizer_dim_sl",
    "chain_diagrams",
    "dual_partition",
    "fiber_dimension_check",
    "graded_null_cone",
    "image_closure_dim",
    "inequality_case1",
    "inequality_case2",
    "is_orthogonal_partition",
    "jordan_matrix",
    "kappa_residuals",
    "kappa_vanishing_check",
    "moment_map",
    "moment_polynomials",
    "only_origin",
    "orthogonal_form",
    "orthogonal_partitions",
    "pair_partition_data",
    "parse_partition",
    "partitions",
    "pfaffian_gradient_vanishes",
    "pfaffian_vanishing_rule",
    "span_dim_at",
    "span_dim_nilpotent_case1",
    "strata_check",
    "strata_check_direct",
    "stratum_dimension_bounds",
]
