"""Orthogonal-polynomial realization of a real-rooted polynomial.

Given a monic ``p_N`` and a monic ``p_{N-1}`` (normally the normalized
derivative) the Euclidean algorithm run downward produces the monic
three-term recurrence

    p_{k+1} = (x - a_k) p_k - b_k p_{k-1},    p_0 = 1,

and the pair is an orthogonal pair for a positive measure exactly when
every ``b_k > 0``. The measure realized here is the discrete one on the
zeros of ``p_N`` with Christoffel weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import (
    DegreeTooSmall,
    DimensionMismatch,
    FavardViolated,
    NotInterlacing,
    NotRealRooted,
    PreconditionViolated,
)
from .poly import Polynomial, derivative, evaluate, poly_divmod
from .realroot import IsolatingInterval, cauchy_bound, isolate_real_roots, refine_interval, sturm_sequence


@dataclass(frozen=True)
class MonicSequence:
    polys: tuple[Polynomial, ...]

    @property
    def N(self) -> int:
        return len(self.polys) - 1

    def __getitem__(self, k):
        return self.polys[k]

    def __len__(self):
        return len(self.polys)


@dataclass(frozen=True)
class RecurrenceCoefficients:
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]  # b[0] is b_1

    @property
    def N(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class DiscreteMeasure:
    nodes: tuple[IsolatingInterval, ...]
    representatives: tuple[Fraction, ...]
    weights: tuple[float, ...]
    precision: Fraction
    exact_weights: tuple[Fraction, ...] = ()

    @property
    def approx_nodes(self) -> np.ndarray:
        return np.array([float(x) for x in self.representatives])


def monic_derivative_pair(P: Polynomial) -> tuple[Polynomial, Polynomial]:
    if P.degree < 2:
        raise DegreeTooSmall("need degree >= 2")
    top = P.monic()
    return top, derivative(top).scale(Fraction(1, top.degree))


def extend_downward(p_top: Polynomial, p_second: Polynomial) -> tuple[MonicSequence, RecurrenceCoefficients]:
    """Recover ``p_0..p_N`` and ``(a, b)`` from the two top members.

    Raises :class:`NotInterlacing` as soon as a remainder has the wrong
    degree or a ``b_k`` is not positive.
    """
    N = p_top.degree
    if N < 1 or not p_top.is_monic():
        raise PreconditionViolated("p_top must be monic of degree >= 1")
    if p_second.degree != N - 1 or not p_second.is_monic():
        raise PreconditionViolated("p_second must be monic of degree deg(p_top) - 1")
    polys: list[Optional[Polynomial]] = [None] * (N + 1)
    polys[N], polys[N - 1] = p_top, p_second
    a: list[Fraction] = [Fraction(0)] * N
    b: list[Fraction] = [Fraction(0)] * (N - 1)
    for k in range(N - 1, 0, -1):
        quot, rem = poly_divmod(polys[k + 1], polys[k])
        a[k] = -quot.coeffs[0]
        if rem.degree != k - 1:
            raise NotInterlacing(
                f"remainder at level {k} has degree {rem.degree}, expected {k - 1}", level=k)
        bk = -rem.lc
        if bk <= 0:
            raise NotInterlacing(f"b_{k} = {bk} is not positive", level=k, b=bk)
        b[k - 1] = bk
        polys[k - 1] = rem.scale(-1 / bk)
    a[0] = -polys[1].coeffs[0]
    return MonicSequence(tuple(polys)), RecurrenceCoefficients(tuple(a), tuple(b))


def favard_holds(rc: RecurrenceCoefficients) -> bool:
    return all(bk > 0 for bk in rc.b)


def recurrence_polys(rc: RecurrenceCoefficients) -> MonicSequence:
    """Run the recurrence upward from ``p_0 = 1``."""
    x = Polynomial.x()
    polys = [Polynomial((1,))]
    if rc.N:
        polys.append(x - rc.a[0])
    for k in range(1, rc.N):
        polys.append((x - rc.a[k]) * polys[k] - rc.b[k - 1] * polys[k - 1])
    return MonicSequence(tuple(polys))


def jacobi_matrix(rc: RecurrenceCoefficients) -> np.ndarray:
    if not favard_holds(rc):
        raise FavardViolated("Jacobi matrix needs every b_k > 0")
    J = np.diag(np.array([float(v) for v in rc.a]))
    off = np.sqrt(np.array([float(v) for v in rc.b]))
    J += np.diag(off, 1) + np.diag(off, -1)
    return J


def default_precision(p: Polynomial) -> Fraction:
    return Fraction(1, 10 ** 14) * (1 + cauchy_bound(p))


def _representative(p: Polynomial, iv: IsolatingInterval) -> Fraction:
    """The exact zero when a small-denominator rational sits in ``iv``, else the midpoint."""
    cand = iv.midpoint.limit_denominator(10 ** 6)
    if iv.lo < cand <= iv.hi and evaluate(p, cand) == 0:
        return cand
    return iv.midpoint


def discrete_measure(seq: MonicSequence, rc: RecurrenceCoefficients,
                     precision: Optional[Fraction] = None) -> DiscreteMeasure:
    """Gauss-Christoffel measure supported on the zeros of ``p_N``.

    Nodes are refined to width below ``precision``; the weight at a node
    ``x`` is ``1 / sum_k p_k(x)^2 / (b_1...b_k)``, computed exactly at the
    node's representative and then normalized to total mass one.
    """
    if not favard_holds(rc):
        raise FavardViolated("discrete measure needs every b_k > 0")
    if seq.N != rc.N:
        raise DimensionMismatch("sequence and recurrence sizes differ")
    top = seq[seq.N]
    if precision is None:
        precision = default_precision(top)
    precision = Fraction(precision)
    s = sturm_sequence(top)
    ivs = isolate_real_roots(top, s)
    if len(ivs) != top.degree:
        raise NotRealRooted(f"{top} is not real-rooted with distinct zeros")
    nodes = tuple(refine_interval(top, iv, precision, s) for iv in ivs)
    reps = tuple(_representative(top, iv) for iv in nodes)

    norms = [Fraction(1)]
    for bk in rc.b:
        norms.append(norms[-1] * bk)
    raw = []
    for x in reps:
        total = sum((evaluate(seq[k], x) ** 2 / norms[k] for k in range(seq.N)), Fraction(0))
        raw.append(1 / total)
    mass = sum(raw, Fraction(0))
    exact = tuple(w / mass for w in raw)
    return DiscreteMeasure(nodes, reps, tuple(float(w) for w in exact), precision, exact)


def verify_orthogonality(seq: MonicSequence, mu: DiscreteMeasure) -> float:
    """Largest ``|sum_m w_m p_i(x_m) p_j(x_m)|`` over ``0 <= i < j <= N``."""
    if len(mu.representatives) != seq.N or len(mu.weights) != seq.N:
        raise DimensionMismatch(f"measure has {len(mu.weights)} nodes, sequence needs {seq.N}")
    if seq.N == 0:
        return 0.0
    # exact values at the representatives, rounded once
    vals = np.array([[float(evaluate(p, x)) for x in mu.representatives] for p in seq.polys])
    w = np.asarray(mu.weights)
    gram = (vals * w) @ vals.T
    iu = np.triu_indices(seq.N + 1, k=1)
    return float(np.max(np.abs(gram[iu])))


def oprl_from_polynomial(P: Polynomial, precision: Optional[Fraction] = None):
    """Sequence, recurrence and measure for a real-rooted ``P`` of degree >= 2."""
    seq, rc = extend_downward(*monic_derivative_pair(P))
    return seq, rc, discrete_measure(seq, rc, precision)
