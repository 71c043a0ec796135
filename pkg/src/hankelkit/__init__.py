"""Exact Hankel transforms of regular sequences and the machinery around them."""

from .catalog import CATALOG, closed_coeff, closed_hankel, generate, verify_identity
from .errors import (
    DataError,
    DivisorNotUnit,
    HankelKitError,
    IndexOutOfRange,
    InnerNotNilpotent,
    InsufficientDepth,
    InsufficientPrecision,
    InsufficientTerms,
    KindMismatch,
    NetworkError,
    NotFound,
    NotInvertible,
    ParseError,
    SingularMinor,
    UnknownName,
    UsageError,
)
from .hankel import (
    HankelMatrix,
    LDLDecomposition,
    RegularityReport,
    bareiss_determinant,
    hankel_determinant,
    hankel_matrix,
    hankel_transform,
    is_regular,
    ldl_decompose,
)
from .jfraction import JFraction, cf_series, extract_jfraction, hankel_from_lambdas, moments_from_jfraction
from .orthopoly import (
    CoefficientArray,
    Polynomial,
    apply_functional,
    functional_P_squared,
    hankel_via_coefficients,
    orthogonality_check,
    polys_from_determinants,
    polys_from_ldl,
    polys_from_recurrence,
)
from .riordan import Kind, RiordanArray, parse_series, riordan_entries, riordan_inverse, riordan_multiply
from .series import (
    PowerSeries,
    Sequence,
    binomial_transform,
    ogf_egf_convert,
    parse_terms,
    ps_add,
    ps_compose,
    ps_div,
    ps_mul,
    ps_revert,
)

__version__ = "0.1.0"
