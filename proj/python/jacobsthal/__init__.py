"""Jacobsthal sums, prime representations and CM curve local factors."""

from ._jacobsthal import (
    JacobsthalError,
    cornacchia,
    count_points,
    cubic_rep,
    is_prime,
    jacobi_symbol,
    jacobsthal_sum,
    kummer_character,
    least_nonresidue,
    legendre_symbol,
    local_factor,
    run_cli,
    scan,
    sqrt_mod,
    sum_A,
    sum_B1,
    sum_B2,
    sum_classical,
    sum_cubic,
    verify,
)

__all__ = [
    "JacobsthalError",
    "cornacchia",
    "count_points",
    "cubic_rep",
    "is_prime",
    "jacobi_symbol",
    "jacobsthal_sum",
    "kummer_character",
    "least_nonresidue",
    "legendre_symbol",
    "local_factor",
    "run_cli",
    "scan",
    "sqrt_mod",
    "sum_A",
    "sum_B1",
    "sum_B2",
    "sum_classical",
    "sum_cubic",
    "verify",
]
__version__ = "0.1.0"
