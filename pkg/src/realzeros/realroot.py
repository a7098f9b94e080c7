"""Sturm sequences, real-root counting and isolation, positivity on the line.

The chain is computed over the integers: every entry is replaced by its
primitive part (a positive rational multiple), which leaves every sign
variation count unchanged while keeping coefficient growth in check. The
gcd tail is kept, so the counts are counts of *distinct* real roots even
for polynomials with repeated factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd as _igcd
from typing import Optional, Union

from .errors import EndpointIsRoot, ZeroOrConstantInput
from .poly import Polynomial, derivative, evaluate, gcd, primitive_int_coeffs, to_rational

NEG_INF = -math.inf
POS_INF = math.inf

ExtendedPoint = Union[Fraction, int, float]


# -- integer kernels --------------------------------------------------------

def _primitive(c: list[int]) -> list[int]:
    g = 0
    for v in c:
        g = _igcd(g, v)
        if g == 1:
            return c
    return [v // g for v in c] if g > 1 else c


def _prem_positive(a: list[int], b: list[int]) -> list[int]:
    """Remainder of ``m*a`` modulo ``b`` for some integer ``m > 0``."""
    a = list(a)
    nb = len(b) - 1
    lead = b[-1]
    mag, sgn = abs(lead), (1 if lead > 0 else -1)
    while len(a) - 1 >= nb and a:
        top = a[-1]
        shift = len(a) - 1 - nb
        q = sgn * top
        a = [mag * v for v in a]
        for i, bi in enumerate(b):
            a[shift + i] -= q * bi
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _sign_at(c: list[int], x: Fraction) -> int:
    """Sign of the integer polynomial ``c`` at the rational ``x``."""
    if not c:
        return 0
    num, den = x.numerator, x.denominator
    acc = c[-1]
    dpow = 1
    for k in range(len(c) - 2, -1, -1):
        dpow *= den
        acc = acc * num + c[k] * dpow
    return (acc > 0) - (acc < 0)


def _sign_at_inf(c: list[int], positive: bool) -> int:
    s = 1 if c[-1] > 0 else -1
    if not positive and (len(c) - 1) % 2 == 1:
        s = -s
    return s


def _int_chain(p: Polynomial) -> list[list[int]]:
    s0 = primitive_int_coeffs(p)
    s1 = primitive_int_coeffs(derivative(p))
    chain = [s0, s1]
    while True:
        r = _prem_positive(chain[-2], chain[-1])
        if not r:
            return chain
        chain.append([-v for v in _primitive(r)])


def _variations(signs) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


# -- public types -----------------------------------------------------------

@dataclass(frozen=True)
class SturmSequence:
    """Sturm chain ``p, p', -rem(...), ...`` up to the last nonzero entry.

    Entries are stored as primitive integer polynomials; ``chain`` exposes
    them as :class:`Polynomial` objects.
    """

    int_chain: tuple[tuple[int, ...], ...]

    @property
    def chain(self) -> list[Polynomial]:
        return [Polynomial(c) for c in self.int_chain]

    def __len__(self):
        return len(self.int_chain)

    def signs_at(self, x: ExtendedPoint) -> list[int]:
        if isinstance(x, float):
            if x == POS_INF:
                return [_sign_at_inf(list(c), True) for c in self.int_chain]
            if x == NEG_INF:
                return [_sign_at_inf(list(c), False) for c in self.int_chain]
            raise TypeError("finite points must be rational, not float")
        x = to_rational(x)
        return [_sign_at(list(c), x) for c in self.int_chain]


@dataclass(frozen=True)
class IsolatingInterval:
    lo: Fraction
    hi: Fraction
    count: int = 1

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo < x <= self.hi


class Verdict(str, Enum):
    POSITIVE_ON_R = "PositiveOnR"
    NOT_POSITIVE = "NotPositive"


class Reason(str, Enum):
    EVEN_DEGREE_POSITIVE_LEAD_NO_REAL_ROOTS = "EvenDegreePositiveLeadNoRealRoots"
    POSITIVE_CONSTANT = "PositiveConstant"
    ODD_DEGREE = "OddDegree"
    NEGATIVE_LEAD = "NegativeLead"
    HAS_REAL_ZERO = "HasRealZero"
    NONPOSITIVE_CONSTANT = "NonpositiveConstant"


@dataclass(frozen=True)
class PointWitness:
    """A rational point where the polynomial is <= 0, with the exact value."""

    point: Fraction
    value: Fraction


@dataclass(frozen=True)
class PositivityCertificate:
    verdict: Verdict
    reason: Reason
    witness: Optional[Union[PointWitness, IsolatingInterval]] = None
    sturm_root_count: int = 0

    @property
    def positive(self) -> bool:
        return self.verdict is Verdict.POSITIVE_ON_R


# -- operations -------------------------------------------------------------

def sturm_sequence(p: Polynomial) -> SturmSequence:
    if p.degree < 1:
        raise ZeroOrConstantInput("Sturm sequence needs degree >= 1")
    return SturmSequence(tuple(tuple(c) for c in _int_chain(p)))


def sign_variations(s: SturmSequence, x: ExtendedPoint) -> int:
    return _variations(s.signs_at(x))


def _count(s: SturmSequence, lo: ExtendedPoint, hi: ExtendedPoint) -> int:
    return sign_variations(s, lo) - sign_variations(s, hi)


def count_distinct_real_roots(p: Polynomial, lo: ExtendedPoint = NEG_INF,
                              hi: ExtendedPoint = POS_INF,
                              sturm: Optional[SturmSequence] = None) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``."""
    if p.degree < 1:
        raise ZeroOrConstantInput("root counting needs degree >= 1")
    if lo >= hi:
        raise ValueError("need lo < hi")
    for end in (lo, hi):
        if not isinstance(end, float) and evaluate(p, end) == 0:
            raise EndpointIsRoot(f"endpoint {end} is a root")
    s = sturm or sturm_sequence(p)
    return _count(s, lo, hi)


def cauchy_bound(p: Polynomial) -> Fraction:
    """``1 + max|c_k| / |lc|``; every real root lies strictly inside (-B, B)."""
    if p.degree < 1:
        raise ZeroOrConstantInput("Cauchy bound needs degree >= 1")
    lead = abs(p.lc)
    return 1 + max(abs(c) for c in p.coeffs[:-1]) / lead


def _dodge(c: list[int], lo: Fraction, hi: Fraction) -> Fraction:
    """A non-root split point strictly inside (lo, hi), near the midpoint."""
    mid = (lo + hi) / 2
    if _sign_at(c, mid) != 0:
        return mid
    k = 2
    while True:
        step = (hi - lo) / 2 ** k
        for cand in (mid + step, mid - step):
            if _sign_at(c, cand) != 0:
                return cand
        k += 1


def isolate_real_roots(p: Polynomial, sturm: Optional[SturmSequence] = None) -> list[IsolatingInterval]:
    """Disjoint ascending intervals ``(lo, hi]``, each holding one distinct root."""
    s = sturm or sturm_sequence(p)
    base = list(s.int_chain[0])
    b = cauchy_bound(p)
    out = []
    stack = [(-b, b, _count(s, -b, b))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(IsolatingInterval(lo, hi, 1))
            continue
        mid = _dodge(base, lo, hi)
        left = _count(s, lo, mid)
        stack.append((mid, hi, n - left))
        stack.append((lo, mid, left))
    out.sort(key=lambda iv: iv.lo)
    return out


def refine_interval(p: Polynomial, iv: IsolatingInterval, eps: Fraction,
                    sturm: Optional[SturmSequence] = None) -> IsolatingInterval:
    """Shrink ``iv`` below width ``eps`` while it keeps isolating the same root."""
    eps = to_rational(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    c = primitive_int_coeffs(p)
    lo, hi = iv.lo, iv.hi
    s_lo, s_hi = _sign_at(c, lo), _sign_at(c, hi)
    if s_lo * s_hi < 0:
        # simple crossing: plain sign bisection
        while hi - lo >= eps:
            mid = _dodge(c, lo, hi)
            if _sign_at(c, mid) == s_lo:
                lo = mid
            else:
                hi = mid
        return IsolatingInterval(lo, hi, 1)
    s = sturm or sturm_sequence(p)
    while hi - lo >= eps:
        mid = _dodge(c, lo, hi)
        if _count(s, lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return IsolatingInterval(lo, hi, 1)


def is_strictly_positive_on_R(q: Polynomial) -> PositivityCertificate:
    """Decide ``q(x) > 0`` for every real x, with a checkable certificate."""
    if q.degree <= 0:
        value = q.coeffs[0] if q.coeffs else Fraction(0)
        if value > 0:
            return PositivityCertificate(Verdict.POSITIVE_ON_R, Reason.POSITIVE_CONSTANT)
        return PositivityCertificate(Verdict.NOT_POSITIVE, Reason.NONPOSITIVE_CONSTANT,
                                     PointWitness(Fraction(0), value))
    s = sturm_sequence(q)
    n_roots = _count(s, NEG_INF, POS_INF)
    far = cauchy_bound(q) + 1
    if q.degree % 2 == 1:
        x = -far if q.lc > 0 else far
        return PositivityCertificate(Verdict.NOT_POSITIVE, Reason.ODD_DEGREE,
                                     PointWitness(x, evaluate(q, x)), n_roots)
    if q.lc < 0:
        return PositivityCertificate(Verdict.NOT_POSITIVE, Reason.NEGATIVE_LEAD,
                                     PointWitness(far, evaluate(q, far)), n_roots)
    if n_roots == 0:
        return PositivityCertificate(Verdict.POSITIVE_ON_R,
                                     Reason.EVEN_DEGREE_POSITIVE_LEAD_NO_REAL_ROOTS)
    return PositivityCertificate(Verdict.NOT_POSITIVE, Reason.HAS_REAL_ZERO,
                                 _real_zero_witness(q, s), n_roots)


def _real_zero_witness(q: Polynomial, s: SturmSequence):
    c = list(s.int_chain[0])
    # a constant point is the cheapest check, so try 0 first
    if _sign_at(c, Fraction(0)) <= 0:
        return PointWitness(Fraction(0), evaluate(q, 0))
    intervals = isolate_real_roots(q, s)
    for iv in intervals:
        for x in (iv.lo, iv.hi):
            if _sign_at(c, x) < 0:
                return PointWitness(x, evaluate(q, x))
    # only tangential zeros remain; a linear repeated part gives the root exactly
    g = gcd(q, derivative(q))
    if g.degree == 1:
        r = -g.coeffs[0] / g.coeffs[1]
        return PointWitness(r, evaluate(q, r))
    return intervals[0]
