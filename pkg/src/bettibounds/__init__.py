"""Exact computation with graded Betti diagrams.

Pure-diagram construction, greedy cone decomposition, binomial rank bounds
with their supporting derivative checks, asymptotic bounds for ideal powers,
and a Taylor-complex Betti computer for monomial ideals.  All arithmetic is
exact rational.
"""

__version__ = "0.1.0"

from .asymptotic import (
    PowerBoundComparison,
    PowerBoundParams,
    bound_vs_pure,
    exact_lower_bound,
    exact_lower_bound_poly,
    leading_bound,
    leading_coefficient,
)
from .beh import (
    BehReport,
    ColumnCheck,
    ScanReport,
    ScanRow,
    beh_check,
    pure_beh_check,
    scan,
    shape_hypothesis,
)
from .decompose import BoundsReport, Decomposition, decompose, recompose, validate_bounds
from .diagram import (
    BettiDiagram,
    Rational,
    check_degree_sequence,
    format_rational,
    from_gaps,
    gaps,
    parse_rational,
    seq_leq,
    truncate,
)
from .errors import (
    BettiError,
    BoundsError,
    ConstraintError,
    DomainError,
    EmptyDiagramError,
    FormatError,
    GapColumnError,
    InvalidSequenceError,
    LengthMismatchError,
    NegativeGapError,
    NoFirstSyzygyError,
    NotInConeError,
    ParamError,
    PoleError,
    TooManyGeneratorsError,
    UnknownFamilyError,
    ZeroNumeratorError,
)
from .monomial import MonomialIdeal, corpus, minimalize, subset_numerator, taylor_betti
from .poly import Poly
from .pure import (
    PureDiagram,
    VerifyReport,
    dist_from_above,
    dist_from_below,
    dist_to_base,
    herzog_kuhl,
    koszul,
    pure_shape_check,
    pure_total,
    pure_total_partial,
    pure_total_split,
    verify_binomial_floor,
    verify_first_gap_monotone,
    verify_inward_shift_monotone,
)

__all__ = [
    "__version__",
    "BehReport",
    "BettiDiagram",
    "BettiError",
    "BoundsError",
    "BoundsReport",
    "ColumnCheck",
    "ConstraintError",
    "Decomposition",
    "DomainError",
    "EmptyDiagramError",
    "FormatError",
    "GapColumnError",
    "InvalidSequenceError",
    "LengthMismatchError",
    "MonomialIdeal",
    "NegativeGapError",
    "NoFirstSyzygyError",
    "NotInConeError",
    "ParamError",
    "PoleError",
    "Poly",
    "PowerBoundComparison",
    "PowerBoundParams",
    "PureDiagram",
    "Rational",
    "ScanReport",
    "ScanRow",
    "TooManyGeneratorsError",
    "UnknownFamilyError",
    "VerifyReport",
    "ZeroNumeratorError",
    "beh_check",
    "bound_vs_pure",
    "check_degree_sequence",
    "corpus",
    "decompose",
    "dist_from_above",
    "dist_from_below",
    "dist_to_base",
    "exact_lower_bound",
    "exact_lower_bound_poly",
    "format_rational",
    "from_gaps",
    "gaps",
    "herzog_kuhl",
    "koszul",
    "leading_bound",
    "leading_coefficient",
    "minimalize",
    "parse_rational",
    "pure_beh_check",
    "pure_shape_check",
    "pure_total",
    "pure_total_partial",
    "pure_total_split",
    "recompose",
    "scan",
    "seq_leq",
    "shape_hypothesis",
    "subset_numerator",
    "taylor_betti",
    "truncate",
    "validate_bounds",
    "verify_binomial_floor",
    "verify_first_gap_monotone",
    "verify_inward_shift_monotone",
]
