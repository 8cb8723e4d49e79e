from __future__ import annotations

from fractions import Fraction

import pytest

from mvcheb import diffops
from mvcheb.diffops import (
    MatDiffOp,
    apply_right,
    build_D,
    build_Dtilde,
    build_E,
    build_Etilde,
    c_closed,
    c_orthogonality_check,
    c_orthogonality_sides,
    c_recurrence,
    combine_D_alpha,
    commutator,
    compose,
    conjugate_by,
    conjugate_by_M,
    identity_op,
    lambda_D,
    lambda_Dtilde,
    lambda_E,
    lambda_Etilde,
    n_lambda_row_check,
    script_D_expected,
    script_E_expected,
    script_R_eigen_check,
    scriptP_gegenbauer_check,
    scriptR_factorization_check,
    symmetry_check,
)
from mvcheb.exact import MatPoly, PiRational, Poly, binomial, grid_from
from mvcheb.recurrence import monic_P, monic_R, squared_norm_H


def _eigen(p, op, lam):
    return apply_right(p, op) == MatPoly.from_grid(lam) @ p


@pytest.mark.parametrize("two_l", range(4))
def test_eigen_equations(two_l):
    for n in range(5):
        assert _eigen(monic_P(two_l, n), build_Dtilde(two_l), lambda_Dtilde(two_l, n))
        assert _eigen(monic_R(two_l, n), build_D(two_l), lambda_D(two_l, n))
        if two_l:
            assert _eigen(monic_P(two_l, n), build_Etilde(two_l), lambda_Etilde(two_l, n))
            assert _eigen(monic_R(two_l, n), build_E(two_l), lambda_E(two_l, n))


def test_apply_right_identity_gives_constant_coefficient():
    op = build_Dtilde(2)
    assert apply_right(MatPoly.identity(3), op) == op.coeff(0)


def test_compose_with_identity_is_unchanged():
    op = build_E(2)
    ident = identity_op(3, "u")
    assert compose(op, ident) == op
    assert compose(ident, op) == op


def test_compose_matches_sequential_application():
    a, b = build_D(2), build_E(2)
    p = monic_R(2, 3) + MatPoly.identity(3) * Poly((1, 2))
    assert apply_right(p, compose(a, b)) == apply_right(apply_right(p, a), b)


def test_domains_do_not_mix():
    with pytest.raises(ValueError):
        compose(build_D(1), build_Dtilde(1))


@pytest.mark.parametrize("two_l", range(1, 4))
def test_commutators_vanish(two_l):
    assert commutator(build_Dtilde(two_l), build_Etilde(two_l)).is_zero()
    assert commutator(build_D(two_l), build_E(two_l)).is_zero()


@pytest.mark.parametrize("two_l", [1, 2])
def test_symmetry(two_l):
    for op in (build_Dtilde(two_l), build_Etilde(two_l), build_D(two_l), build_E(two_l)):
        assert symmetry_check(two_l, op, 3)


def test_perturbed_operator_fails_symmetry():
    op = build_Dtilde(1)
    assert symmetry_check(1, op.plus_constant(5), 3)
    skew = MatPoly.from_grid(grid_from([[0, 1], [0, 0]]))
    broken = MatDiffOp((op.coeff(0) + skew, op.coeff(1), op.coeff(2)), "x")
    assert not symmetry_check(1, broken, 3)


def test_conjugation_by_identity():
    op = build_D(2)
    ident = MatPoly.identity(3)
    assert conjugate_by(op, ident, ident) == op


@pytest.mark.parametrize("two_l", range(1, 4))
def test_decoupling(two_l):
    got = conjugate_by_M(two_l, combine_D_alpha(two_l, -two_l))
    assert got == script_D_expected(two_l)
    assert got.is_diagonal()
    assert conjugate_by_M(two_l, build_E(two_l)) == script_E_expected(two_l)
    assert not conjugate_by_M(two_l, build_D(two_l)).is_diagonal()


def test_script_D_entries():
    for two_l in range(1, 5):
        op = script_D_expected(two_l)
        for i in range(two_l + 1):
            assert op.coeff(0)[i, i] == Poly(((two_l - i) * (two_l + i + 2),))
            # first-order symbol (1/2 - u)(2i + 3)
            assert op.coeff(1)[i, i] == Poly((Fraction(2 * i + 3, 2), -(2 * i + 3)))


def test_script_E_entries():
    for two_l in range(1, 5):
        ell = Fraction(two_l, 2)
        s0 = diffops.script_E_matrices(two_l)[1]
        for i in range(two_l + 1):
            assert s0[i, i] == Poly(((i * (i + 1) - 4 * ell * (ell + 1)) / (2 * ell),))


def test_c_examples():
    assert c_closed(0, 0, 0, 0) == 1
    assert c_closed(1, 0, 0, 1) == Fraction(-3, 8)
    assert c_recurrence(1, 0, 1)[0] == Fraction(-3, 8)
    for two_l in range(4):
        for k in range(two_l + 1):
            assert c_recurrence(two_l, k, 0) == [binomial(k, j) for j in range(two_l + 1)]


@pytest.mark.parametrize("two_l", range(4))
def test_c_recurrence_matches_closed(two_l):
    for n in range(4):
        for k in range(two_l + 1):
            assert c_recurrence(two_l, k, n) == [c_closed(two_l, k, j, n) for j in range(two_l + 1)]


def test_script_R_entry_example():
    r = monic_R(1, 1) @ diffops.matrix_M(1)
    assert r[0, 0] == Poly((Fraction(-3, 8), Fraction(3, 4)))


@pytest.mark.parametrize("two_l, n", [(0, 3), (1, 1), (2, 2), (3, 3)])
def test_closed_forms(two_l, n):
    assert scriptR_factorization_check(two_l, n)
    assert scriptP_gegenbauer_check(two_l, n)
    if two_l:
        assert script_R_eigen_check(two_l, n)
        assert n_lambda_row_check(two_l, n)


def test_n0_reduces_to_L():
    from mvcheb.weight import lower_L

    assert monic_P(3, 0) @ lower_L(3) == lower_L(3)
    assert scriptP_gegenbauer_check(3, 0)


def test_c_orthogonality_examples():
    assert c_orthogonality_check(0, 0, 0, 0)
    assert c_orthogonality_check(1, 1, 0, 0)
    sides = c_orthogonality_sides(1, 1, 1, 0)
    want = squared_norm_H(1, 1)[0][0] * Fraction(1, 4)
    assert sides["plain_target"] == want
    assert PiRational(Fraction(1, 2)) * sides["plain"] == want
