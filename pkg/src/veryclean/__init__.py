"""Exact very clean and strongly clean decompositions over small local rings.

An element a is very clean when some idempotent e commuting with a makes
a - e or a + e a unit.  This package decides that question, and builds the
witness, for scalars, 2x2 matrices and 2x2 upper-triangular matrices over
Z/p^k, GF(p)[u]/(u^k), localizations of Z and truncated power series.
"""

from .core import (
    Element,
    MonicPoly,
    Ring,
    RingDescriptor,
    SrLabel,
    arith,
    enumerate_elements,
    enumerate_idempotents,
    has_half,
    in_jacobson,
    in_S_r,
    is_idempotent,
    is_unit,
    poly_eval,
    try_inverse,
)
from .decide import (
    CleanWitness,
    Factorization,
    RootPair,
    TriCase,
    TriVerdict,
    find_root_pair,
    mat2_factorization,
    mat2_strongly_clean,
    mat2_very_clean,
    scalar_strongly_clean,
    scalar_very_clean,
    solve_corner,
    tri2_case,
    tri2_ring_very_clean,
    tri2_strongly_clean,
    tri2_very_clean,
)
from .errors import (
    AlgebraError,
    CornerNotSolvable,
    InfiniteRing,
    InvalidDescriptor,
    InvariantViolation,
    NoSplit,
    NotAUnit,
    NotInRing,
    NotLocal,
    NotStronglyClean,
    NotVeryClean,
    NotVeryCleanAtZero,
    ParseError,
    RingMismatch,
    TooLarge,
    UnknownSuite,
)
from .lift import LiftResult, mat2_lift, tri2_lift, truncate_further
from .matrices import Mat2, Tri2Element, mat2_char_poly, mat2_is_unit, mat2_try_inverse, tri2_is_unit
from .oracle import SurveyReport, TheoremReport, brute_force_classify, survey, verify_theorem
from .parsing import parse_element, parse_mat2, parse_ring, parse_ring_descriptor, parse_tri2
from .rings import PS, QuotPoly, Zloc, ZlocCap, Zmod, canonicalize, make_ring, series_eval_zero

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "arith",
    "brute_force_classify",
    "canonicalize",
    "CleanWitness",
    "CornerNotSolvable",
    "Element",
    "enumerate_elements",
    "enumerate_idempotents",
    "Factorization",
    "find_root_pair",
    "has_half",
    "in_jacobson",
    "in_S_r",
    "InfiniteRing",
    "InvalidDescriptor",
    "InvariantViolation",
    "is_idempotent",
    "is_unit",
    "LiftResult",
    "make_ring",
    "Mat2",
    "mat2_char_poly",
    "mat2_factorization",
    "mat2_is_unit",
    "mat2_lift",
    "mat2_strongly_clean",
    "mat2_try_inverse",
    "mat2_very_clean",
    "MonicPoly",
    "NoSplit",
    "NotAUnit",
    "NotInRing",
    "NotLocal",
    "NotStronglyClean",
    "NotVeryClean",
    "NotVeryCleanAtZero",
    "parse_element",
    "parse_mat2",
    "parse_ring",
    "parse_ring_descriptor",
    "parse_tri2",
    "ParseError",
    "poly_eval",
    "PS",
    "QuotPoly",
    "Ring",
    "RingDescriptor",
    "RingMismatch",
    "RootPair",
    "scalar_strongly_clean",
    "scalar_very_clean",
    "series_eval_zero",
    "solve_corner",
    "SrLabel",
    "survey",
    "SurveyReport",
    "TheoremReport",
    "TooLarge",
    "tri2_case",
    "tri2_is_unit",
    "tri2_lift",
    "tri2_ring_very_clean",
    "tri2_strongly_clean",
    "tri2_very_clean",
    "Tri2Element",
    "TriCase",
    "TriVerdict",
    "truncate_further",
    "try_inverse",
    "UnknownSuite",
    "verify_theorem",
    "Zloc",
    "ZlocCap",
    "Zmod",
]
