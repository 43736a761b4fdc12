"""Exact algebra of discrete polynomial hypergroups."""

from .exceptions import (
    HGError,
    HGInconclusiveError,
    HGRejectionError,
    HGUsageError,
    HGValidationError,
)
from .functions import (
    DegreeReport,
    EquationReport,
    HFunction,
    MomentFamily,
    apply_pdo,
    check_equation,
    evaluate,
    exponential,
    mod_diff,
    moment_family,
    monomial_degree,
    recover_exponential,
    recover_sine_coefficients,
    sine,
    sine_independence_witness,
    translate,
)
from .hypergroup import (
    AxiomReport,
    Hypergroup,
    ProductHypergroup,
    Recurrence1D,
    RecurrenceHypergroup,
    brute_force_linearization,
    build_from_recurrence,
    chebyshev,
    hypergroup_from_spec,
    product,
    verify_axioms,
)
from .measures import Measure, convolve, fourier, inverse_fourier, mod_diff_measure, pair
from .polyring import MultiPoly, expand_in_basis, poly_derive, poly_eval, poly_mul
from .synthesis import (
    Decomposition,
    Variety,
    contains,
    decomposition_report,
    exponentials_in_variety,
    moment_span_decompose,
    sine_dimension,
    variety_basis,
)

__all__ = [
    "AxiomReport",
    "Decomposition",
    "DegreeReport",
    "EquationReport",
    "HFunction",
    "HGError",
    "HGInconclusiveError",
    "HGRejectionError",
    "HGUsageError",
    "HGValidationError",
    "Hypergroup",
    "Measure",
    "MomentFamily",
    "MultiPoly",
    "ProductHypergroup",
    "Recurrence1D",
    "RecurrenceHypergroup",
    "Variety",
    "apply_pdo",
    "brute_force_linearization",
    "build_from_recurrence",
    "check_equation",
    "chebyshev",
    "contains",
    "convolve",
    "decomposition_report",
    "evaluate",
    "expand_in_basis",
    "exponential",
    "exponentials_in_variety",
    "fourier",
    "hypergroup_from_spec",
    "inverse_fourier",
    "mod_diff",
    "mod_diff_measure",
    "moment_family",
    "moment_span_decompose",
    "monomial_degree",
    "pair",
    "poly_derive",
    "poly_eval",
    "poly_mul",
    "product",
    "recover_exponential",
    "recover_sine_coefficients",
    "sine",
    "sine_dimension",
    "sine_independence_witness",
    "translate",
    "variety_basis",
    "verify_axioms",
]
