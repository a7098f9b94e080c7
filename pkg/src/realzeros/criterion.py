"""Derivative-Wronskian criterion for real, distinct zeros.

For ``P`` of degree ``n >= 2`` and each level ``j = 1..n-1`` let
``p = P^(n-j-1)`` (degree ``j+1``). The level polynomial is

    Q_j = (p')^2 - p * p''

and all zeros of ``P`` are real and simple exactly when every ``Q_j`` is
strictly positive on the whole real line. ``Q_j`` is also the Wronskian
``W(p, p') = p' * p' - p'' * p`` of the consecutive pair ``(p, p')``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .errors import DegreeTooSmall, InternalDisagreement, LevelOutOfRange, PreconditionViolated
from .poly import Polynomial, derivative, gcd, is_squarefree, mul, nth_derivative, sub
from .realroot import (
    IsolatingInterval,
    PositivityCertificate,
    count_distinct_real_roots,
    is_strictly_positive_on_R,
    isolate_real_roots,
    refine_interval,
    sturm_sequence,
)


class Method(str, Enum):
    CHAMBERLAND = "chamberland"
    STURM = "sturm"
    BOTH = "both"


@dataclass(frozen=True)
class CriterionLevel:
    j: int
    p: Polynomial
    q: Polynomial
    certificate: PositivityCertificate


@dataclass
class RealRootednessVerdict:
    all_real_and_distinct: bool
    method: Method
    levels: list[CriterionLevel] = field(default_factory=list)
    oracle_root_count: Optional[int] = None
    squarefree: Optional[bool] = None
    disagreement: bool = False

    @property
    def failing_level(self) -> Optional[CriterionLevel]:
        for level in self.levels:
            if not level.certificate.positive:
                return level
        return None


def _require_degree(P: Polynomial) -> int:
    n = P.degree
    if n < 2:
        raise DegreeTooSmall(f"degree must be at least 2, got {n if n >= 0 else 'zero polynomial'}")
    return n


def derived_pair(P: Polynomial, j: int) -> tuple[Polynomial, Polynomial]:
    """``(P^(n-j-1), P^(n-j))``: degrees ``j+1`` and ``j``."""
    n = _require_degree(P)
    if not 1 <= j <= n - 1:
        raise LevelOutOfRange(f"level j={j} outside 1..{n - 1}")
    p_next = nth_derivative(P, n - j - 1)
    return p_next, derivative(p_next)


def wronskian(p: Polynomial, q: Polynomial) -> Polynomial:
    """``p'*q - q'*p``."""
    return sub(mul(derivative(p), q), mul(derivative(q), p))


def criterion_poly(P: Polynomial, j: int) -> Polynomial:
    p, dp = derived_pair(P, j)
    return sub(mul(dp, dp), mul(p, derivative(dp)))


def criterion_level(P: Polynomial, j: int) -> CriterionLevel:
    p, _ = derived_pair(P, j)
    q = criterion_poly(P, j)
    return CriterionLevel(j, p, q, is_strictly_positive_on_R(q))


def check_chamberland(P: Polynomial) -> RealRootednessVerdict:
    """Run levels in increasing j, stopping at the first non-positive one."""
    n = _require_degree(P)
    levels = []
    for j in range(1, n):
        level = criterion_level(P, j)
        levels.append(level)
        if not level.certificate.positive:
            return RealRootednessVerdict(False, Method.CHAMBERLAND, levels)
    return RealRootednessVerdict(True, Method.CHAMBERLAND, levels)


def check_sturm_oracle(P: Polynomial) -> RealRootednessVerdict:
    n = _require_degree(P)
    count = count_distinct_real_roots(P)
    return RealRootednessVerdict(count == n, Method.STURM,
                                 oracle_root_count=count, squarefree=is_squarefree(P))


def check_both(P: Polynomial, strict: bool = True) -> RealRootednessVerdict:
    """Both deciders; raises :class:`InternalDisagreement` if they differ.

    With ``strict=False`` a disagreement is reported through the verdict's
    ``disagreement`` flag instead (the criterion's answer is kept).
    """
    cham = check_chamberland(P)
    oracle = check_sturm_oracle(P)
    disagree = cham.all_real_and_distinct != oracle.all_real_and_distinct
    if disagree and strict:
        raise InternalDisagreement(
            f"criterion says {cham.all_real_and_distinct}, Sturm oracle says "
            f"{oracle.all_real_and_distinct} for {P}")
    return RealRootednessVerdict(
        cham.all_real_and_distinct and not disagree,
        Method.BOTH,
        cham.levels,
        oracle.oracle_root_count,
        oracle.squarefree,
        disagree,
    )


def check(P: Polynomial, method: Method = Method.BOTH, strict: bool = True) -> RealRootednessVerdict:
    method = Method(method)
    if method is Method.CHAMBERLAND:
        return check_chamberland(P)
    if method is Method.STURM:
        return check_sturm_oracle(P)
    return check_both(P, strict=strict)


def _real_distinct_roots(p: Polynomial) -> list[IsolatingInterval]:
    if p.degree < 1:
        return []
    s = sturm_sequence(p)
    ivs = isolate_real_roots(p, s)
    if len(ivs) != p.degree:
        raise PreconditionViolated(f"{p} does not have {p.degree} real distinct zeros")
    return ivs


def interlace_strictly(p: Polynomial, q: Polynomial) -> bool:
    """Whether the zeros of ``q`` strictly separate those of ``p``.

    ``deg p = deg q + 1`` and both must have only real, simple zeros.
    """
    if p.degree < 1 or q.degree != p.degree - 1:
        raise PreconditionViolated("need deg p = deg q + 1 >= 1")
    p_ivs = _real_distinct_roots(p)
    q_ivs = _real_distinct_roots(q)
    if q.degree >= 1 and gcd(p, q).degree > 0:
        return False
    # roots are pairwise distinct, so halving eventually separates every closure
    while True:
        tagged = sorted([(iv, 0) for iv in p_ivs] + [(iv, 1) for iv in q_ivs],
                        key=lambda t: t[0].lo)
        overlap = {i for i in range(len(tagged) - 1) if tagged[i][0].hi >= tagged[i + 1][0].lo}
        if not overlap:
            break
        bad = set()
        for i in overlap:
            bad.add(id(tagged[i][0]))
            bad.add(id(tagged[i + 1][0]))
        p_ivs = [refine_interval(p, iv, iv.width / 2) if id(iv) in bad else iv for iv in p_ivs]
        q_ivs = [refine_interval(q, iv, iv.width / 2) if id(iv) in bad else iv for iv in q_ivs]
    order = [tag for _, tag in tagged]
    return order == [0, 1] * q.degree + [0]
