from __future__ import annotations

from fractions import Fraction

import pytest

from mvcheb.exact import Poly


@pytest.fixture
def x():
    return Poly.monomial(1)


def F(a, b=1):
    return Fraction(a, b)
