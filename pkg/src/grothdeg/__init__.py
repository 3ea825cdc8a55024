"""Exact-arithmetic toolkit for set-valued tableaux, Grothendieck-type
polynomial degrees, Pfaffian ideal generators, and regularity bounds."""

from .errors import (
    DomainError,
    EmptyShape,
    EmptyTableauSet,
    InconsistentRecursion,
    InternalDivisionError,
    NonStrictShift,
    OddSize,
    ShapeMismatch,
    SizeTooLarge,
    TooFewVariables,
)
from .grothendieck import (
    DegreeReport,
    degree_report,
    g_degree_formula,
    g_polynomial,
    gp_degree_formula,
    gp_polynomial,
    gq_degree_bounds,
    gq_polynomial,
    maximal_shifted_tableau,
    maximal_svt_tableau,
)
from .ideals import (
    GeneratorSet,
    RegularityReport,
    SkewSymbolicMatrix,
    msv_generators,
    reg_from_kpoly,
    reg_grassmannian,
    reg_skew_upper,
    ssmsv_generators,
)
from .permutations import (
    FpfInvolution,
    Permutation,
    bcode,
    direct_sum_21,
    fpf_all,
    grassmannian_from_shape,
    is_inverse_fireworks,
    lambda_sp,
    last_nonzero_position,
    pad_identity,
    rank_matrix,
    rothe_diagram,
    shape_of,
    spcode,
)
from .polys import (
    MultiPoly,
    UniPoly,
    beta_divided_difference,
    divided_difference,
    precede,
    specialize_one_minus_t,
)
from .shapes import (
    Diagram,
    diagram,
    largest_d_subpartition,
    largest_strict_subpartition,
    parse_partition,
)
from .symplectic import (
    SymplecticTable,
    cor46_bound,
    gsp_all,
    gsp_top,
    lemma44_check,
    looks_fpf_vexillary,
)
from .tableaux import (
    PSVT,
    QSVT,
    SVT,
    Tableau,
    content_and_degree,
    count_tableaux,
    enumerate_tableaux,
    max_degree_brute,
    max_degree_witness,
    validate,
)
from .transforms import (
    GrowResult,
    SquishResult,
    shifted_grow,
    shifted_push,
    shifted_squish,
    svt_grow,
    svt_push,
    svt_squish,
)

__version__ = "0.1.0"
