"""Seeded polynomial corpora for the acceptance suite."""

import random
from fractions import Fraction

from realzeros.poly import Polynomial

X = Polynomial.x()


def _rational(rng, bound=20):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def _distinct_roots(rng, n, exclude=()):
    roots = set()
    while len(roots) < n:
        r = _rational(rng)
        if r not in exclude:
            roots.add(r)
    return sorted(roots)


def _product(roots, lead=1):
    p = Polynomial((lead,))
    for r in roots:
        p = p * (X - r)
    return p


def _lead(rng):
    c = Fraction(0)
    while c == 0:
        c = _rational(rng)
    return c


def random_coefficient(count=1000, seed=2024):
    """Degrees 2..12, numerators and denominators drawn from [-20, 20]."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, 12)
        coeffs = [_rational(rng) for _ in range(n)] + [_lead(rng)]
        out.append(Polynomial(coeffs))
    return out


def distinct_linear_products(count=500, seed=7):
    rng = random.Random(seed)
    return [_product(_distinct_roots(rng, rng.randint(2, 12)), _lead(rng)) for _ in range(count)]


def near_multiple_root(count=200, seed=99):
    """(x - r)^2 g +- 1/10^k with g real-rooted: a hair away from a double root."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        r = _rational(rng)
        g = _product(_distinct_roots(rng, rng.randint(0, 8), exclude={r}))
        eps = Fraction(rng.choice([-1, 1]), 10 ** rng.randint(1, 12))
        out.append((X - r) ** 2 * g + eps)
    return out


def double_root(count=100, seed=5):
    """(x - r)^2 g with g real-rooted, squarefree and coprime to x - r."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        r = _rational(rng)
        g = _product(_distinct_roots(rng, rng.randint(0, 10), exclude={r}), _lead(rng))
        out.append((X - r) ** 2 * g)
    return out


def real_rooted_small(count=50, seed=31, max_degree=10):
    rng = random.Random(seed)
    return [_product(_distinct_roots(rng, rng.randint(2, max_degree)), _lead(rng)) for _ in range(count)]
