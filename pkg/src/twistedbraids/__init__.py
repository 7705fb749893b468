"""Braid words for twisted torus knots: construction, certified positivization,
and the homological action of the extended Goeritz group."""

from .braid import BraidWord, ProductBlock, concat, expand, exponent_sum, free_reduce, inverse, is_positive, permutation
from .errors import (
    BraidError,
    BudgetExceeded,
    IndexOutOfRange,
    InvalidParams,
    NotAKnot,
    NotApplicable,
    NotDecidedByDean,
    NotUnimodular,
    PatternMismatch,
    RTooLarge,
    StrandMismatch,
)
from .laurent import LaurentPoly
from .oracle import Equality, OracleBudget, Reduction, alexander_of_closure, burau_reduced, handle_reduce, words_equal
from .positivize import positivize
from .rewrite import RewriteCertificate, RewriteStep, Rule, replay
from .ttk import FamilyPair, H1Class, TTKParams, canonical_word, h1_class, make_family, slope_general, surface_slope

__version__ = "0.1.0"
