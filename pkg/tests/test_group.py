from __future__ import annotations

from fractions import Fraction

import pytest

from mvcheb.exact import LaurentPoly
from mvcheb.group import (
    gamma_group,
    group_first_order_image,
    group_operator_relation_check,
    group_second_order_image,
    lambda_group,
    lgrid_det,
    phi0,
    phi0_identity_checks,
    sigma_identity_sides,
    upsilon_identity_sides,
)
from mvcheb.diffops import build_Dtilde, build_Etilde


def test_phi0_examples():
    w, winv = LaurentPoly.monomial(1), LaurentPoly.monomial(-1)
    assert phi0(1) == ((w, winv), (winv, w))
    assert phi0(0) == ((LaurentPoly.monomial(0),),)
    assert lgrid_det(phi0(1)) == LaurentPoly.from_dict({2: 1, -2: -1})


@pytest.mark.parametrize("two_l", range(5))
def test_phi0_identities(two_l):
    assert phi0_identity_checks(two_l)
    a, b = sigma_identity_sides(two_l)
    c, d = upsilon_identity_sides(two_l)
    assert a == b and c == d


def test_lambda_group_diagonal():
    for two_l in range(5):
        ell = Fraction(two_l, 2)
        lam = lambda_group(two_l, 0)
        for row in range(two_l + 1):
            j = -ell + row
            assert lam[row][row] == (j * j + ell * (ell + 2)) / 4
    # j (l + 1) / 2 at j = -1, l = 1
    assert gamma_group(2, 0)[0][0] == -1


@pytest.mark.parametrize("two_l", [1, 2, 3, 4])
def test_relation_to_interval_operators(two_l):
    assert group_second_order_image(two_l) == build_Dtilde(two_l)
    assert group_first_order_image(two_l) == build_Etilde(two_l).scale(-2)
    assert group_operator_relation_check(two_l)


def test_relation_needs_positive_size():
    with pytest.raises(ValueError):
        group_operator_relation_check(0)
