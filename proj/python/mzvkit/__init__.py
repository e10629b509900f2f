"""Python bindings for the mzv library."""

from ._core import (
    MzvError,
    digamma_1px,
    hurwitz_zeta,
    kawashima,
    li,
    run_suite,
    stuffle_reduce,
    suite_names,
    taylor_coefficients,
    z_star,
    zeta,
    zeta_star,
)

__all__ = [
    "MzvError",
    "digamma_1px",
    "hurwitz_zeta",
    "kawashima",
    "li",
    "run_suite",
    "stuffle_reduce",
    "suite_names",
    "taylor_coefficients",
    "z_star",
    "zeta",
    "zeta_star",
]
