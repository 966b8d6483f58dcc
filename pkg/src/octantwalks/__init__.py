"""Exact enumeration, classification and verification of octant walk models.

A *model* is a set of steps drawn from {-1,0,1}^3 minus the null step; walks
start at the origin and stay in the non-negative octant.  This package
enumerates models up to coordinate permutation, computes their dimension by
exact rational linear programming, explores the group of birational
involutions attached to each model, evaluates orbit sums, checks the
positive-part extraction that yields D-finite generating functions, detects
Hadamard step-set factorisations, counts walks by exact or modular dynamic
programming, and verifies every closed form and series identity numerically
on truncated series.  All arithmetic is exact: arbitrary-precision integers,
rationals, or residues modulo a 62-bit prime.
"""

from .steps import (
    Step,
    StepSet,
    DimensionAnalysis,
    QuadrantModel,
    parse_model,
    canonical_code,
    unused_steps,
    dimension,
    lemma1d_check,
    project_to_quadrant,
    enumerate_models,
)
from .census import CensusPolynomial, burnside_census, appendix_polynomials
from .laurent import LaurentPoly
from .ratfunc import RatFunc
from .kernels import KernelData, char_poly, kernel_data
from .series import TruncatedSeries, expand_ratfunc, positive_part
from .newton import AlgebraicSeries, series_substitute, solve_algebraic_series
from .group import (
    GroupElement,
    GroupResult,
    check_extraction,
    explore_group,
    generators,
    orbit_sum,
    orbit_sum_is_zero,
)
from .counting import (
    ColouredCountTable,
    CountTable,
    count_coloured,
    count_mixed,
    count_octant,
    count_quadrant,
    reflection_combine,
)
from .hadamard import HadamardDecomposition, detect_hadamard, hadamard_assemble
from .verify import (
    VerificationReport,
    verify_algebraic_results,
    verify_closed_form,
    verify_extraction,
    verify_functional_equation,
)
from .guess import RecurrenceCandidate, guess_precursive, prime_stable, verify_candidate
from .classify import ClassificationRecord, run_classify, summarise

__all__ = [
    "Step", "StepSet", "DimensionAnalysis", "QuadrantModel",
    "parse_model", "canonical_code", "unused_steps", "dimension",
    "lemma1d_check", "project_to_quadrant", "enumerate_models",
    "CensusPolynomial", "burnside_census", "appendix_polynomials",
    "LaurentPoly", "RatFunc", "KernelData", "char_poly", "kernel_data",
    "TruncatedSeries", "positive_part", "expand_ratfunc",
    "AlgebraicSeries", "solve_algebraic_series", "series_substitute",
    "GroupElement", "GroupResult", "generators", "explore_group",
    "orbit_sum", "orbit_sum_is_zero", "check_extraction",
    "CountTable", "ColouredCountTable", "count_octant", "count_quadrant",
    "count_coloured", "count_mixed", "reflection_combine",
    "HadamardDecomposition", "detect_hadamard", "hadamard_assemble",
    "VerificationReport", "verify_functional_equation", "verify_extraction",
    "verify_closed_form", "verify_algebraic_results",
    "RecurrenceCandidate", "guess_precursive", "verify_candidate", "prime_stable",
    "ClassificationRecord", "run_classify", "summarise",
]

__version__ = "0.1.0"
