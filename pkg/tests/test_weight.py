from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from scipy.integrate import quad

from mvcheb.exact import MatPoly, PiRational, Poly
from mvcheb.weight import (
    WeightSpec,
    alpha_coeff,
    cg_fourier_check,
    det_weight,
    diag_T,
    factorization,
    generalized_moment,
    generalized_moment_closed,
    h0_expected,
    lower_L,
    racah_integral_check,
    racah_integral_sides,
    udl_check,
    verify_ldu,
    weight_poly,
)


def test_spec_rejects_bad_input():
    with pytest.raises(ValueError):
        WeightSpec(-1)
    assert WeightSpec(3).size == 4
    assert WeightSpec(3).ell == Fraction(3, 2)


def test_alpha_coeff_examples():
    assert alpha_coeff(1, 0, 0, 0) == 2
    assert alpha_coeff(1, 1, 1, 0) == 0
    assert alpha_coeff(1, 1, 1, 1) == 2


def test_weight_poly_examples(x):
    assert weight_poly(1) == MatPoly([[Poly((2,)), x * 2], [x * 2, Poly((2,))]])
    assert weight_poly(0) == MatPoly([[Poly((1,))]])


@pytest.mark.parametrize("two_l", range(6))
def test_weight_is_symmetric_and_persymmetric(two_l):
    w = weight_poly(two_l)
    n = two_l + 1
    assert w == w.T
    assert all(w[i, j] == w[n - 1 - i, n - 1 - j] for i in range(n) for j in range(n))


def test_lower_L_examples(x):
    big = lower_L(3)
    assert all(big[i, i] == Poly((1,)) for i in range(4))
    assert all(big[i, j].is_zero() for i in range(4) for j in range(i + 1, 4))
    assert lower_L(1)[1, 0] == x


def test_diag_T_examples():
    for two_l in range(5):
        assert diag_T(two_l)[0] == (two_l + 1, 0)
    assert diag_T(1)[1] == (2, 1)


@pytest.mark.parametrize("two_l", [0, 1, 4])
def test_ldu(two_l):
    assert verify_ldu(two_l)
    f = factorization(two_l)
    assert f.L @ f.T() @ f.L.T == f.polynomial_part


def test_det_examples():
    one = det_weight(1)
    assert (one.constant, one.exponent, one.matches) == (4, 2, True)
    zero = det_weight(0)
    assert (zero.constant, zero.exponent, zero.matches) == (1, Fraction(1, 2), True)
    two = det_weight(2)
    assert two.exponent == Fraction(9, 2) and two.matches


@pytest.mark.parametrize("two_l", [0, 1, 3])
def test_udl(two_l):
    assert udl_check(two_l)


def test_racah_integral_examples():
    lhs, rhs = racah_integral_sides(0, 0, 0, 0)
    assert lhs == rhs == PiRational(Fraction(1, 2))
    for n in range(1, 4):
        for m in range(n):
            for k in range(m + 1):
                lhs, _ = racah_integral_sides(k, m + 1, m, n)
                assert lhs == PiRational(0)
    assert racah_integral_check(1, 1, 1, 2)


@pytest.mark.parametrize("two_l, n, m", [(0, 0, 0), (1, 1, 0), (2, 2, 2), (3, 1, 2)])
def test_cg_fourier(two_l, n, m):
    assert cg_fourier_check(two_l, n, m)


def test_moment_examples():
    assert generalized_moment(1, 0) == ((PiRational(1), PiRational(0)), (PiRational(0), PiRational(1)))
    assert generalized_moment(0, 0) == ((PiRational(Fraction(1, 2)),),)
    # quadrature oracle for int (1-x) 2x sqrt(1-x^2) dx
    numeric, _ = quad(lambda t: (1 - t) * 2 * t * math.sqrt(1 - t * t), -1, 1)
    assert math.isclose(numeric, -math.pi / 4, rel_tol=1e-10)
    assert generalized_moment(1, 1)[1][0] == PiRational(Fraction(-1, 4))


@pytest.mark.parametrize("two_l, p", [(1, 2), (2, 3), (3, 1)])
def test_moments_against_quadrature(two_l, p):
    exact = generalized_moment(two_l, p)
    w = weight_poly(two_l)
    for i in range(two_l + 1):
        for j in range(two_l + 1):
            f = w[i, j]
            numeric, _ = quad(lambda t: (1 - t) ** p * float(f(Fraction(t))) * math.sqrt(1 - t * t), -1, 1)
            assert math.isclose(float(exact[i][j]), numeric, rel_tol=1e-10, abs_tol=1e-12)
    assert exact == generalized_moment_closed(two_l, p)


@pytest.mark.parametrize("two_l", range(5))
def test_h0(two_l):
    assert generalized_moment(two_l, 0) == h0_expected(two_l)


@pytest.mark.parametrize("two_l", range(7))
def test_positive_definite_spot_check(two_l):
    w = weight_poly(two_l)
    for x0 in (-0.9, 0.0, 0.5):
        vals = np.array(w.eval(Fraction(x0)), dtype=float)
        assert np.linalg.eigvalsh(vals).min() > 0
