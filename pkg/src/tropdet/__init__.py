"""Tropical determinants of integer matrices with fixed margins.

Compute tdet (maximum transversal sum) and its min-transversal variant,
the sharp lower and upper bounds of those quantities over all
nonnegative integer nk x nl matrices with constant margins (ml, mk),
matrices attaining the bounds, and brute-force certification of
everything at small scale.
"""

from .assignment import (
    Transversal,
    max_low_block_dims,
    sorting_cost,
    tdet,
    tdet_bruteforce,
    threshold_transversal_exists,
    tropdet,
)
from .bounds import (
    BoundReport,
    LowerRegime,
    Parity,
    UpperRegime,
    XYSolution,
    bound_report,
    doubly_stochastic_x,
    lower_bound,
    lower_bound_corollaries,
    solve_xy,
    upper_bound,
)
from .constructions import (
    construct_lower,
    construct_lower_blocks,
    construct_lower_uniform,
    construct_upper,
)
from .matrix import (
    IntMatrix,
    MembershipReport,
    col_sums,
    format_matrix_text,
    parse_matrix_text,
    row_sums,
    validate_membership,
)
from .oracle import VerificationReport, enumerate_points, verify_bounds
from .params import ProblemParams, derive_params

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "IntMatrix",
    "LowerRegime",
    "MembershipReport",
    "Parity",
    "ProblemParams",
    "Transversal",
    "UpperRegime",
    "VerificationReport",
    "XYSolution",
    "bound_report",
    "col_sums",
    "construct_lower",
    "construct_lower_blocks",
    "construct_lower_uniform",
    "construct_upper",
    "derive_params",
    "doubly_stochastic_x",
    "enumerate_points",
    "format_matrix_text",
    "lower_bound",
    "lower_bound_corollaries",
    "max_low_block_dims",
    "parse_matrix_text",
    "row_sums",
    "solve_xy",
    "sorting_cost",
    "tdet",
    "tdet_bruteforce",
    "threshold_transversal_exists",
    "tropdet",
    "upper_bound",
    "validate_membership",
    "verify_bounds",
]
