"""Exact computation of weight denominators for arithmetic subgroups of
SU(2,1) over the Eisenstein integers."""

from .eisenstein import (
    ONE,
    SQRT_MINUS3,
    ZERO,
    ZETA,
    EisensteinInt,
    NotDivisibleError,
)
from .matgroup import (
    IDENTITY,
    J,
    ZETA_IDENTITY,
    GroupMatrix,
    SubgroupSpec,
    F_map,
    all_index3_vectors,
    canonical_index3_vector,
    generators_upsilon,
    in_gamma_beta,
    in_index3,
    in_upsilon,
    make_n,
    make_n_transpose,
)
from .cocycle import (
    BASE_POINT,
    COVER_IDENTITY,
    SIGMA_TOLERANCE,
    BallPoint,
    BranchToleranceError,
    CoverElement,
    cover_inv,
    cover_mul,
    j_factor,
    j_tilde,
    sigma,
)
from .fpgroup import (
    EMPTY_WORD,
    CosetGraph,
    IncompleteDictionaryError,
    IndexOverflowError,
    OracleInconsistencyError,
    Presentation,
    Word,
    evaluate_word,
    exponent_sum_row,
    free_reduce,
    reidemeister_schreier,
    rewrite_presentation,
    simplify_presentation,
    upsilon_presentation,
)
from .zlinalg import (
    IntegerMatrix,
    cokernel_invariants,
    compiled_kernels_available,
    hermite_normal_form,
    order_of_last_coordinate,
    smith_normal_form,
)
from .weightdenom import (
    DenominatorReport,
    InfiniteOrderError,
    central_commutator_witness,
    lift_word,
    multiplier_system_exists,
    relation_matrix,
    survey_index3,
    weight_denominator,
    weight_denominator_of,
)
from .gendecomp import (
    EisensteinFraction,
    decompose,
    first_column_height,
    nearest_lattice_point,
    unipotent_transpose_word,
    unipotent_word,
)

__version__ = "0.1.0"

__all__ = [
    "BASE_POINT",
    "BallPoint",
    "BranchToleranceError",
    "COVER_IDENTITY",
    "CosetGraph",
    "CoverElement",
    "DenominatorReport",
    "EMPTY_WORD",
    "EisensteinFraction",
    "EisensteinInt",
    "F_map",
    "GroupMatrix",
    "IDENTITY",
    "IncompleteDictionaryError",
    "IndexOverflowError",
    "InfiniteOrderError",
    "IntegerMatrix",
    "J",
    "NotDivisibleError",
    "ONE",
    "OracleInconsistencyError",
    "Presentation",
    "SIGMA_TOLERANCE",
    "SQRT_MINUS3",
    "SubgroupSpec",
    "Word",
    "ZERO",
    "ZETA",
    "ZETA_IDENTITY",
    "all_index3_vectors",
    "canonical_index3_vector",
    "central_commutator_witness",
    "cokernel_invariants",
    "compiled_kernels_available",
    "cover_inv",
    "cover_mul",
    "decompose",
    "evaluate_word",
    "exponent_sum_row",
    "first_column_height",
    "free_reduce",
    "generators_upsilon",
    "hermite_normal_form",
    "in_gamma_beta",
    "in_index3",
    "in_upsilon",
    "j_factor",
    "j_tilde",
    "lift_word",
    "make_n",
    "make_n_transpose",
    "multiplier_system_exists",
    "nearest_lattice_point",
    "order_of_last_coordinate",
    "reidemeister_schreier",
    "relation_matrix",
    "rewrite_presentation",
    "sigma",
    "simplify_presentation",
    "smith_normal_form",
    "survey_index3",
    "unipotent_transpose_word",
    "unipotent_word",
    "upsilon_presentation",
    "weight_denominator",
    "weight_denominator_of",
    "__version__",
]
