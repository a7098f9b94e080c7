from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from realzeros.poly import Polynomial

settings.register_profile("default", deadline=None)
settings.load_profile("default")

X = Polynomial.x()

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=20)


def polys(min_degree=0, max_degree=6):
    return st.lists(rationals, min_size=min_degree + 1, max_size=max_degree + 1).map(Polynomial).filter(
        lambda p: p.degree >= min_degree)


def from_roots(roots, lead=1):
    p = Polynomial((lead,))
    for r in roots:
        p = p * (X - r)
    return p


@pytest.fixture
def x():
    return X


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
