from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from mvcheb.exact import Poly, grid_diag, grid_from
from mvcheb.hypergeometric import (
    ALPHA_LADDER,
    DegenerateAlphaError,
    bracket_consistency,
    bracket_seq,
    choose_alpha,
    colliding_alpha,
    degeneracy_check,
    eigenvalue_collision,
    eigenvalue_lambda,
    krawtchouk_eigencheck,
    m_matrix,
    row_via_2h1,
    rows_via_2h1,
    separation_witness,
    structure_matrices,
)
from mvcheb.recurrence import monic_R


def test_structure_matrices_example():
    t = structure_matrices(1, 0)
    # (2l+3)/2 = 2 on the diagonal at 2l = 1
    assert t.C == grid_from([[2, Fraction(-1, 2)], [Fraction(-1, 2), 2]])
    assert t.V == grid_diag([0, 0])
    assert sorted(np.linalg.eigvals(np.array(t.C, dtype=float)).real) == pytest.approx([1.5, 2.5])


def test_structure_alpha_needs_positive_size():
    with pytest.raises(ValueError):
        structure_matrices(0, Fraction(1, 3))


def test_eigenvalue_examples():
    # -n(n-1) - 3n at n = 1
    assert eigenvalue_lambda(0, 0, 0, 1) == -3
    for n in range(6):
        assert eigenvalue_lambda(0, 0, 0, n) == -n * (n + 2)
    for two_l in range(5):
        for j in range(two_l + 1):
            assert eigenvalue_lambda(two_l, 0, j, 0) == j * (two_l - j)
    assert eigenvalue_lambda(1, 0, 1, 0) == 0


def test_degeneracy_examples():
    assert degeneracy_check(1, Fraction(1, 3), 6)
    assert degeneracy_check(0, 0, 6)
    bad = colliding_alpha(1, (0, 1), (1, 0))
    assert bad is not None
    assert eigenvalue_lambda(1, bad, 0, 1) == eigenvalue_lambda(1, bad, 1, 0)
    assert not degeneracy_check(1, bad, 3)
    assert eigenvalue_collision(1, bad, 3) is not None


def test_same_degree_collision_is_not_a_separation_failure():
    # lambda_1(1) = lambda_2(1) at 2l = 2, alpha = 1/3
    assert not degeneracy_check(2, Fraction(1, 3), 1)
    assert separation_witness(2, Fraction(1, 3), 1) is None


def test_choose_alpha():
    assert choose_alpha(0, 5) == 0
    a = choose_alpha(1, 4)
    assert a in ALPHA_LADDER and degeneracy_check(1, a, 4)
    with pytest.raises(DegenerateAlphaError):
        choose_alpha(1, 2, ladder=(colliding_alpha(1, (0, 1), (1, 0)),))


@pytest.mark.parametrize("two_l, alpha", [(1, Fraction(1, 3)), (2, Fraction(2, 5)), (3, Fraction(-5, 7))])
def test_bracket_recursion(two_l, alpha):
    seq = bracket_seq(structure_matrices(two_l, alpha), Fraction(-7, 2), 5)
    assert len(seq.brackets) == 6
    assert bracket_consistency(seq)


def test_m_matrix_singular_at_eigenvalue():
    a = Fraction(2, 5)
    for n in range(3):
        for j in range(3):
            m = m_matrix(2, a, n, eigenvalue_lambda(2, a, j, n))
            assert m[j][j] == 0


def test_row_examples():
    assert row_via_2h1(0, 0, 1, 0) == [Poly((Fraction(-1, 2), 1))]
    assert row_via_2h1(1, Fraction(1, 3), 1, 0) == [Poly((Fraction(-1, 2), 1)), Poly((Fraction(1, 8),))]


@pytest.mark.parametrize("alpha", [Fraction(1, 3), Fraction(-1, 3), Fraction(5, 7)])
@pytest.mark.parametrize("two_l", [1, 2, 3])
def test_rows_match_monic_R(two_l, alpha):
    for n in range(5):
        rows = rows_via_2h1(two_l, alpha, n)
        r = monic_R(two_l, n)
        for i in range(two_l + 1):
            assert rows[i] == [r[i, j] for j in range(two_l + 1)]
            assert rows[i][i].degree == n and rows[i][i].coeff(n) == 1


def test_row_rejects_degenerate_alpha():
    bad = colliding_alpha(1, (0, 1), (1, 0))
    with pytest.raises(DegenerateAlphaError):
        row_via_2h1(1, bad, 1, 0)


@pytest.mark.parametrize("two_l, alpha", [(1, Fraction(1, 3)), (2, 0), (3, Fraction(5, 7)), (2, 2), (3, -3)])
def test_krawtchouk_eigencheck(two_l, alpha):
    assert krawtchouk_eigencheck(two_l, alpha)
