"""The matrix weight, its LDU and UDL factorizations, determinant, moments
and the integral and Fourier identities attached to it.

Every function takes the matrix size through ``two_l`` (the integer 2l), either
directly or wrapped in a :class:`WeightSpec`. The weight is ``sqrt(1-x^2)``
times a polynomial matrix; only the polynomial part is ever stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exact import (
    LaurentPoly,
    MatPoly,
    PiRational,
    Poly,
    compose_laurent,
    exchange_matrix,
    integrate_halfcircle,
    matpoly_det,
    poch,
)
from .special import (
    HALF,
    _alpha_raw,
    _racah_00,
    chebyshev_u,
    gegenbauer,
    hyp_poly,
    racah_integral_constant,
)

ONE_MINUS_X2 = Poly((1, 0, -1))


@dataclass(frozen=True)
class WeightSpec:
    two_l: int

    def __post_init__(self):
        if not isinstance(self.two_l, int) or self.two_l < 0:
            raise ValueError(f"2l must be a non-negative integer, got {self.two_l!r}")

    @property
    def size(self) -> int:
        return self.two_l + 1

    @property
    def ell(self) -> Fraction:
        return Fraction(self.two_l, 2)


def two_l_of(spec) -> int:
    if isinstance(spec, WeightSpec):
        return spec.two_l
    return WeightSpec(spec).two_l


@dataclass(frozen=True)
class WeightFactorization:
    """``W = sqrt(1-x^2) * L * diag(c_k (1-x^2)^k) * L^t``."""

    L: MatPoly
    Tdiag: tuple  # ((c_k, k), ...)
    polynomial_part: MatPoly

    def T(self) -> MatPoly:
        n = len(self.Tdiag)
        return MatPoly.build(
            n, n, lambda i, j: ONE_MINUS_X2 ** self.Tdiag[i][1] * self.Tdiag[i][0] if i == j else Poly()
        )


def alpha_coeff(spec, m: int, n: int, t: int) -> Fraction:
    """Coefficient of ``U_{n+m-2t}`` in the (n, m) weight entry, ``m <= n``."""
    two_l = two_l_of(spec)
    if not (0 <= m <= n <= two_l and 0 <= t <= m):
        raise ValueError(f"need 0 <= t <= m <= n <= 2l, got t={t} m={m} n={n} 2l={two_l}")
    return _alpha_raw(two_l, m, n, t)


@lru_cache(maxsize=None)
def _weight_poly(two_l: int) -> MatPoly:
    size = two_l + 1
    rows = [[Poly()] * size for _ in range(size)]
    for n in range(size):
        for m in range(n + 1):
            entry = Poly()
            for t in range(m + 1):
                a = _alpha_raw(two_l, m, n, t)
                if a:
                    entry = entry + chebyshev_u(n + m - 2 * t) * a
            rows[n][m] = entry
            rows[m][n] = entry
    return MatPoly(rows)


def weight_poly(spec) -> MatPoly:
    """Polynomial part of the weight: ``W(x) = sqrt(1-x^2) * weight_poly(x)``."""
    return _weight_poly(two_l_of(spec))


def lower_L_entry(m: int, k: int) -> Poly:
    if k > m:
        return Poly()
    return gegenbauer(k + 1, m - k) * Fraction(
        factorial(m) * factorial(2 * k + 1), factorial(m + k + 1) * factorial(k)
    )


@lru_cache(maxsize=None)
def _lower_L(two_l: int) -> MatPoly:
    size = two_l + 1
    return MatPoly.build(size, size, lower_L_entry)


def lower_L(spec) -> MatPoly:
    """Unipotent lower-triangular Gegenbauer factor."""
    return _lower_L(two_l_of(spec))


def c_const(two_l: int, k: int) -> Fraction:
    return (
        Fraction(4**k * factorial(k) ** 4 * (2 * k + 1), factorial(2 * k + 1) ** 2)
        * Fraction(factorial(two_l + k + 1) * factorial(two_l - k), factorial(two_l) ** 2)
    )


def diag_T(spec) -> list[tuple[Fraction, int]]:
    """Pairs ``(c_k, k)`` meaning ``c_k * (1-x^2)^k``."""
    two_l = two_l_of(spec)
    return [(c_const(two_l, k), k) for k in range(two_l + 1)]


def factorization(spec) -> WeightFactorization:
    return WeightFactorization(lower_L(spec), tuple(diag_T(spec)), weight_poly(spec))


def ldu_product(spec) -> MatPoly:
    f = factorization(spec)
    return f.L @ f.T() @ f.L.T


def verify_ldu(spec) -> bool:
    return ldu_product(spec) == weight_poly(spec)


def udl_product(spec) -> MatPoly:
    f = factorization(spec)
    J = exchange_matrix(two_l_of(spec) + 1)
    jlj = J @ f.L @ J
    return jlj @ (J @ f.T() @ J) @ jlj.T


def udl_check(spec) -> bool:
    return udl_product(spec) == weight_poly(spec)


@dataclass(frozen=True)
class DetResult:
    constant: Fraction
    exponent: Fraction  # total power of (1 - x^2), counting the square-root prefactor
    matches: bool


def det_weight(spec) -> DetResult:
    """Determinant of the full weight as ``constant * (1-x^2)^exponent``."""
    two_l = two_l_of(spec)
    d = matpoly_det(weight_poly(spec))
    power = 0
    while d.degree > 0:
        q, r = d.divmod(ONE_MINUS_X2)
        if not r.is_zero():
            break
        d, power = q, power + 1
    exponent = Fraction(two_l + 1, 2) + power
    constant = d.coeff(0) if d.degree <= 0 else None
    expected_const = Fraction(1)
    for c, _ in diag_T(two_l):
        expected_const *= c
    expected_exp = 2 * (Fraction(two_l, 2) + HALF) ** 2
    ok = d.degree <= 0 and constant == expected_const and exponent == expected_exp
    return DetResult(constant if constant is not None else Fraction(0), exponent, ok)


# ---------------------------------------------------------------------------
# Racah integral


def racah_integral_sides(k: int, t: int, m: int, n: int) -> tuple[PiRational, PiRational]:
    """Both sides of the half-circle integral of two Gegenbauer polynomials and ``U``.

    For ``t > m`` the right side is zero. ``U`` with negative index is the
    zero polynomial.
    """
    if not (0 <= k <= m <= n and 0 <= t <= n):
        raise ValueError(f"need 0 <= k <= m <= n and 0 <= t <= n, got k={k} t={t} m={m} n={n}")
    r = n + m - 2 * t
    u = chebyshev_u(r) if r >= 0 else Poly()
    integrand = (
        ONE_MINUS_X2**k * gegenbauer(k + 1, n - k) * gegenbauer(k + 1, m - k) * u
    )
    lhs = integrate_halfcircle(integrand)
    if t > m:
        return lhs, PiRational(0)
    rhs = racah_integral_constant(k, m, n) * _racah_00(k, t, m, n)
    return lhs, rhs


def racah_integral_check(k: int, t: int, m: int, n: int) -> bool:
    lhs, rhs = racah_integral_sides(k, t, m, n)
    return lhs == rhs


# ---------------------------------------------------------------------------
# Fourier expansion in z = e^{it}


_Z = LaurentPoly.monomial(1)
_COS = (_Z + LaurentPoly.monomial(-1)) * HALF


def cg_fourier_sides(spec, n: int, m: int) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    """Gegenbauer-side sum, binomial sum and ``weight_poly(cos t)`` in ``z``.

    The Gegenbauer-side coefficient carries ``(-1)^k``; this is what the LDU
    coefficients and the Hahn expansion of ``sin^k t C_{n-k}^(k+1)(cos t)``
    combine to.
    """
    two_l = two_l_of(spec)
    if not (0 <= n <= two_l and 0 <= m <= two_l):
        raise ValueError("indices out of range")
    one_minus_z2 = LaurentPoly(0, [1]) - LaurentPoly.monomial(2)
    lhs = LaurentPoly()
    for k in range(min(m, n) + 1):
        coef = (
            (-1) ** k
            * (2 * k + 1)
            * poch(m - k + 1, k)
            * poch(n - k + 1, k)
            / (poch(m + 1, k + 1) * poch(n + 1, k + 1))
            * Fraction(factorial(two_l + k + 1) * factorial(two_l - k), factorial(two_l) ** 2)
        )
        fn = LaurentPoly.from_poly(hyp_poly((k - n, k + 1), (-n,)), 2)
        fm = LaurentPoly.from_poly(hyp_poly((k - m, k + 1), (-m,)), 2)
        lhs = lhs + LaurentPoly.monomial(-(n + m)) * one_minus_z2 ** (2 * k) * fn * fm * coef

    terms: dict[int, Fraction] = {}
    for j in range(two_l + 1):
        denom = comb(two_l, j) ** 2
        for j1 in range(0, min(n, j) + 1):
            j2 = j - j1
            if j2 > two_l - n:
                continue
            for i1 in range(0, min(m, j) + 1):
                i2 = j - i1
                if i2 > two_l - m:
                    continue
                e = (n - j1 + j2) - (m - i1 + i2)
                c = Fraction(
                    comb(n, j1) * comb(two_l - n, j2) * comb(m, i1) * comb(two_l - m, i2), denom
                )
                terms[e] = terms.get(e, Fraction(0)) + c
    rhs = LaurentPoly.from_dict({e: c for e, c in terms.items() if c})

    direct = compose_laurent(weight_poly(two_l)[n, m], _COS)
    return lhs, rhs, direct


def cg_fourier_check(spec, n: int, m: int) -> bool:
    lhs, rhs, direct = cg_fourier_sides(spec, n, m)
    return lhs == rhs == direct


# ---------------------------------------------------------------------------
# Moments


def generalized_moment(spec, p: int) -> tuple:
    """Grid of ``int (1-x)^p W(x) dx`` by exact term-by-term integration."""
    if p < 0:
        raise ValueError("moment order must be non-negative")
    w = weight_poly(spec)
    factor = Poly((1, -1)) ** p
    return tuple(
        tuple(integrate_halfcircle(factor * w[i, j]) for j in range(w.cols)) for i in range(w.rows)
    )


def generalized_moment_closed(spec, p: int) -> tuple:
    """The same grid from the single-sum closed form."""
    two_l = two_l_of(spec)
    if p < 0:
        raise ValueError("moment order must be non-negative")
    pref = Fraction(2**p) * poch(Fraction(3, 2), p) / factorial(p + 2)
    size = two_l + 1
    grid = [[None] * size for _ in range(size)]
    for n in range(size):
        for m in range(n + 1):
            s = Fraction(0)
            for t in range(m + 1):
                r = n + m - 2 * t
                s += _alpha_raw(two_l, m, n, t) * (r + 1) * poch(-p, r) / poch(p + 3, r)
            grid[n][m] = grid[m][n] = PiRational(pref * s)
    return tuple(tuple(row) for row in grid)


def h0_expected(spec) -> tuple:
    two_l = two_l_of(spec)
    size = two_l + 1
    return tuple(
        tuple(
            PiRational(Fraction((two_l + 1) ** 2, 2 * (n + 1) * (two_l - n + 1)) if n == m else 0)
            for m in range(size)
        )
        for n in range(size)
    )
