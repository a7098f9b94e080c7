"""Independent reference computations used only by the tests."""

from fractions import Fraction

import sympy as sp

from realzeros.poly import Polynomial

_x = sp.Symbol("x")


def to_sympy(p: Polynomial) -> sp.Poly:
    return sp.Poly([sp.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)], _x,
                   domain="QQ")


def distinct_real_root_count(p: Polynomial, lo=None, hi=None) -> int:
    """Distinct real roots in the closed interval [lo, hi] (sympy)."""
    sq = to_sympy(p).sqf_part()
    args = []
    if lo is not None:
        args = [sp.Rational(lo.numerator, lo.denominator), sp.Rational(hi.numerator, hi.denominator)]
    return sq.count_roots(*args)


def real_distinct_by_sympy(p: Polynomial) -> bool:
    sp_p = to_sympy(p)
    return sp_p.sqf_part().degree() == sp_p.degree() and distinct_real_root_count(p) == p.degree


def shift(p: Polynomial, t) -> Polynomial:
    """p(x + t) by Horner composition."""
    x_t = Polynomial((Fraction(t), 1))
    out = Polynomial()
    for c in reversed(p.coeffs):
        out = out * x_t + c
    return out
