"""Exact certification that all zeros of a rational polynomial are real and distinct."""

from .criterion import (
    Method,
    RealRootednessVerdict,
    check,
    check_both,
    check_chamberland,
    check_sturm_oracle,
    criterion_poly,
    derived_pair,
    interlace_strictly,
    wronskian,
)
from .oprl import (
    discrete_measure,
    extend_downward,
    favard_holds,
    jacobi_matrix,
    monic_derivative_pair,
    verify_orthogonality,
)
from .parsing import parse_polynomial
from .poly import Polynomial, make_poly

__version__ = "0.1.0"
