"""Exact dense univariate polynomials over the rationals.

Coefficients are stored in ascending order (``coeffs[k]`` multiplies
``x**k``) as :class:`fractions.Fraction`. Trailing zeros are always
stripped, so two polynomials are equal iff their coefficient tuples are.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd
from typing import Iterable, Union

from .errors import BothZero, DegreeTooSmall, DivisionByZeroPolynomial

RationalLike = Union[Fraction, int, str]


def to_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating-point coefficients are not accepted; use Fraction or 'p/q'")
    return Fraction(value)


class Polynomial:
    """Immutable polynomial with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: RationalLike) -> "Polynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        return self.scale(1 / self.lc)

    def scale(self, c: RationalLike) -> "Polynomial":
        c = to_rational(c)
        return Polynomial(a * c for a in self.coeffs)

    def __call__(self, x: RationalLike) -> Fraction:
        return evaluate(self, x)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _coerce(other))

    def __rsub__(self, other):
        return sub(_coerce(other), self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial((1,))
        base = self
        while k:
            if k & 1:
                result = mul(result, base)
            base = mul(base, base)
            k >>= 1
        return result

    def __divmod__(self, other):
        return poly_divmod(self, _coerce(other))

    def __floordiv__(self, other):
        return poly_divmod(self, _coerce(other))[0]

    def __mod__(self, other):
        return poly_divmod(self, _coerce(other))[1]

    def __repr__(self):
        return f"Polynomial([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        return format_poly(self)


def _coerce(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial((value,))
    raise TypeError(f"cannot combine Polynomial with {type(value).__name__}")


def format_poly(p: Polynomial, var: str = "x") -> str:
    """Human-readable form, highest power first, e.g. ``3x^4 + 9``."""
    if not p.coeffs:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            if mag == 1:
                body = mono
            elif mag.denominator == 1:
                body = f"{mag}{mono}"
            else:
                body = f"({mag}){mono}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)


def make_poly(coeffs: Iterable[RationalLike]) -> Polynomial:
    return Polynomial(coeffs)


def derivative(p: Polynomial) -> Polynomial:
    return Polynomial(k * c for k, c in enumerate(p.coeffs) if k)


def nth_derivative(p: Polynomial, k: int) -> Polynomial:
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    for _ in range(k):
        if not p.coeffs:
            break
        p = derivative(p)
    return p


def evaluate(p: Polynomial, x: RationalLike) -> Fraction:
    """Exact Horner evaluation."""
    x = to_rational(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    return Polynomial([a[i] + b[i] if i < len(b) else a[i] for i in range(len(a))])


def sub(p: Polynomial, q: Polynomial) -> Polynomial:
    return add(p, -q)


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return Polynomial()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return Polynomial(out)


def poly_divmod(p: Polynomial, d: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Euclidean division: ``p = q*d + r`` with ``deg r < deg d``."""
    if not d.coeffs:
        raise DivisionByZeroPolynomial("division by the zero polynomial")
    rem = list(p.coeffs)
    dd = d.degree
    lead = d.lc
    if len(rem) - 1 < dd:
        return Polynomial(), p
    quot = [Fraction(0)] * (len(rem) - dd)
    for k in range(len(rem) - 1 - dd, -1, -1):
        c = rem[k + dd] / lead
        quot[k] = c
        if c:
            for i, di in enumerate(d.coeffs):
                rem[k + i] -= c * di
    return Polynomial(quot), Polynomial(rem[:dd])


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor by the Euclidean algorithm."""
    if not p.coeffs and not q.coeffs:
        raise BothZero("gcd(0, 0) is undefined")
    while q.coeffs:
        p, q = q, poly_divmod(p, q)[1]
    return p.monic()


def is_squarefree(p: Polynomial) -> bool:
    if p.degree < 1:
        raise DegreeTooSmall("square-freeness needs degree >= 1")
    return gcd(p, derivative(p)).degree == 0


def primitive_int_coeffs(p: Polynomial) -> list[int]:
    """Integer coefficients of ``c*p`` for the unique c > 0 making them coprime."""
    if not p.coeffs:
        return []
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // _igcd(den, c.denominator)
    ints = [c.numerator * (den // c.denominator) for c in p.coeffs]
    g = 0
    for v in ints:
        g = _igcd(g, v)
    return [v // g for v in ints]
