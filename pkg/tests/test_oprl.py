import random
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings

from realzeros.criterion import check_both, wronskian
from realzeros.errors import DegreeTooSmall, DimensionMismatch, FavardViolated, NotInterlacing
from realzeros.oprl import (
    DiscreteMeasure,
    RecurrenceCoefficients,
    discrete_measure,
    extend_downward,
    favard_holds,
    jacobi_matrix,
    monic_derivative_pair,
    recurrence_polys,
    verify_orthogonality,
)
from realzeros.poly import Polynomial, mul
from realzeros.realroot import Verdict, is_strictly_positive_on_R

from conftest import X, from_roots, polys


def P(*cs):
    return Polynomial(cs)


def rc(a, b):
    return RecurrenceCoefficients(tuple(map(F, a)), tuple(map(F, b)))


class TestExtendDownward:
    def test_quadratic(self):
        seq, coeffs = extend_downward(P(-1, 0, 1), X)
        assert seq.polys == (P(1), X, P(-1, 0, 1))
        assert coeffs == rc([0, 0], [1])
        assert favard_holds(coeffs)

    def test_complex_quadratic(self):
        with pytest.raises(NotInterlacing) as info:
            extend_downward(P(1, 0, 1), X)
        assert info.value.b == -1 and info.value.level == 1

    def test_cubic(self):
        seq, coeffs = extend_downward(P(0, -3, 0, 1), P(-1, 0, 1))
        assert seq.polys == (P(1), X, P(-1, 0, 1), P(0, -3, 0, 1))
        assert coeffs == rc([0, 0, 0], [1, 2])

    def test_deficient_remainder(self):
        # x^3 = x * x^2 + 0: zero remainder
        with pytest.raises(NotInterlacing):
            extend_downward(P(0, 0, 0, 1), P(0, 0, 1))

    def test_linear(self):
        seq, coeffs = extend_downward(X - 5, P(1))
        assert coeffs == rc([5], [])

    def test_reconstruction_identity(self):
        rng = random.Random(11)
        for _ in range(30):
            roots = {F(rng.randint(-12, 12), rng.randint(1, 4)) for _ in range(rng.randint(2, 9))}
            if len(roots) < 2:
                continue
            seq, coeffs = extend_downward(*monic_derivative_pair(from_roots(roots)))
            for k in range(1, seq.N):
                rebuilt = mul(X - coeffs.a[k], seq[k]) - seq[k - 1].scale(coeffs.b[k - 1])
                assert rebuilt == seq[k + 1]
            assert seq[1] == X - coeffs.a[0]
            assert recurrence_polys(coeffs) == seq

    def test_wronskian_positive_per_pair(self):
        seq, _ = extend_downward(*monic_derivative_pair(from_roots([-3, F(-1, 2), 0, 2, F(7, 3)])))
        for k in range(seq.N):
            cert = is_strictly_positive_on_R(wronskian(seq[k + 1], seq[k]))
            assert cert.verdict is Verdict.POSITIVE_ON_R

    @settings(max_examples=120)
    @given(polys(min_degree=2, max_degree=8))
    def test_equivalence_with_check(self, p):
        try:
            extend_downward(*monic_derivative_pair(p))
            ok = True
        except NotInterlacing:
            ok = False
        assert ok == check_both(p).all_real_and_distinct


class TestMonicPair:
    def test_examples(self):
        assert monic_derivative_pair(P(-2, 0, 2)) == (P(-1, 0, 1), X)
        assert monic_derivative_pair(P(0, -3, 0, 1)) == (P(0, -3, 0, 1), P(-1, 0, 1))
        assert monic_derivative_pair(P(1, 0, -1)) == (P(-1, 0, 1), X)

    def test_degree(self):
        with pytest.raises(DegreeTooSmall):
            monic_derivative_pair(X)


def test_favard():
    assert favard_holds(rc([0, 0, 0], [1, 2]))
    assert not favard_holds(rc([0, 0], [-1]))
    assert favard_holds(rc([5], []))


class TestJacobi:
    def test_two_by_two(self):
        J = jacobi_matrix(rc([0, 0], [1]))
        assert np.array_equal(J, [[0, 1], [1, 0]])
        assert np.allclose(np.linalg.eigvalsh(J), [-1, 1])

    def test_three_by_three(self):
        J = jacobi_matrix(rc([0, 0, 0], [1, 2]))
        assert np.allclose(np.diag(J, 1), [1, np.sqrt(2)])
        assert np.allclose(np.linalg.eigvalsh(J), [-np.sqrt(3), 0, np.sqrt(3)])

    def test_one_by_one(self):
        assert np.array_equal(jacobi_matrix(rc([5], [])), [[5]])

    def test_favard_violated(self):
        with pytest.raises(FavardViolated):
            jacobi_matrix(rc([0, 0], [-1]))


def golub_welsch_weights(coeffs):
    """Independent route: squared first eigenvector components of the Jacobi matrix."""
    vals, vecs = np.linalg.eigh(jacobi_matrix(coeffs))
    return vals, vecs[0] ** 2


class TestMeasure:
    def test_two_point(self):
        seq, coeffs = extend_downward(P(-1, 0, 1), X)
        mu = discrete_measure(seq, coeffs)
        assert mu.representatives == (F(-1), F(1))
        assert mu.exact_weights == (F(1, 2), F(1, 2))

    def test_cubic_against_moment_system(self):
        seq, coeffs = extend_downward(P(0, -3, 0, 1), P(-1, 0, 1))
        mu = discrete_measure(seq, coeffs, F(1, 10 ** 14))
        s3 = np.sqrt(3)
        assert np.allclose(mu.approx_nodes, [-s3, 0, s3], atol=1e-13)
        # moment system sum w = 1, sum w x = 0, sum w x^2 = 1 (since int x^2 - 1 = 0)
        V = np.vander([-s3, 0, s3], increasing=True).T
        expected = np.linalg.solve(V, [1, 0, 1])
        assert np.allclose(expected, [1 / 6, 2 / 3, 1 / 6])
        assert np.allclose(mu.weights, expected, atol=1e-12)
        assert all(w > 0 for w in mu.weights)
        assert abs(sum(mu.weights) - 1) < 1e-12
        assert verify_orthogonality(seq, mu) < 1e-10

    def test_point_mass(self):
        seq, coeffs = extend_downward(X - 5, P(1))
        mu = discrete_measure(seq, coeffs)
        assert mu.representatives == (F(5),)
        assert mu.weights == (1.0,)
        assert verify_orthogonality(seq, mu) == 0.0

    def test_node_width(self):
        seq, coeffs = extend_downward(*monic_derivative_pair(P(-2, 0, 1)))
        mu = discrete_measure(seq, coeffs, F(1, 10 ** 20))
        assert all(iv.width < F(1, 10 ** 20) for iv in mu.nodes)
        assert all((iv.lo ** 2 - 2) * (iv.hi ** 2 - 2) < 0 for iv in mu.nodes)

    def test_matches_golub_welsch(self):
        p = from_roots([F(-7, 2), -1, F(1, 3), 2, F(9, 2), 6])
        seq, coeffs = extend_downward(*monic_derivative_pair(p))
        mu = discrete_measure(seq, coeffs)
        nodes, weights = golub_welsch_weights(coeffs)
        assert np.allclose(mu.approx_nodes, nodes, atol=1e-9)
        assert np.allclose(mu.weights, weights, atol=1e-9)

    def test_favard_required(self):
        seq, _ = extend_downward(P(-1, 0, 1), X)
        with pytest.raises(FavardViolated):
            discrete_measure(seq, rc([0, 0], [-1]))


class TestOrthogonality:
    def test_quadratic_exact(self):
        seq, coeffs = extend_downward(P(-1, 0, 1), X)
        assert verify_orthogonality(seq, discrete_measure(seq, coeffs)) == 0.0

    def test_dimension_mismatch(self):
        seq, coeffs = extend_downward(P(0, -3, 0, 1), P(-1, 0, 1))
        mu = discrete_measure(*extend_downward(P(-1, 0, 1), X))
        with pytest.raises(DimensionMismatch):
            verify_orthogonality(seq, mu)
