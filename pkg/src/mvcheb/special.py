"""Classical families evaluated exactly: Chebyshev, Gegenbauer, terminating
hypergeometric series, Racah, Hahn and Krawtchouk, plus a few finite
summation identities built from them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .exact import (
    GaussianRational,
    LaurentPoly,
    PiRational,
    Poly,
    as_fraction,
    compose_laurent,
    poch,
)

HALF = Fraction(1, 2)
THREE_HALVES = Fraction(3, 2)


class NonTerminatingSeriesError(ValueError):
    pass


class SeriesPoleError(ZeroDivisionError):
    """A denominator parameter reaches zero before the series terminates."""


@dataclass(frozen=True)
class HypSeriesSpec:
    """A terminating generalized hypergeometric series pFq(num; den; arg)."""

    numerator: tuple
    denominator: tuple
    argument: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(as_fraction(a) for a in self.numerator))
        object.__setattr__(self, "denominator", tuple(as_fraction(b) for b in self.denominator))
        if not isinstance(self.argument, Poly):
            object.__setattr__(self, "argument", as_fraction(self.argument))

    @property
    def termination_index(self) -> int:
        return termination_index(self.numerator)

    def check(self) -> int:
        """Validate the parameters and return the termination index."""
        n = self.termination_index
        for b in self.denominator:
            if b.denominator == 1 and b <= 0 and -b < n:
                raise SeriesPoleError(
                    f"denominator parameter {b} vanishes at index {-b} before termination at {n}"
                )
        return n


def termination_index(numerator: Sequence[Fraction]) -> int:
    cands = [int(-a) for a in numerator if a.denominator == 1 and a <= 0]
    if not cands:
        raise NonTerminatingSeriesError(
            f"no non-positive integer among numerator parameters {list(map(str, numerator))}"
        )
    return min(cands)


def hyp_terms(spec: HypSeriesSpec) -> list[Fraction]:
    """Coefficients ``t_j`` with series = sum t_j * arg**j, via term ratios."""
    n = spec.check()
    terms = [Fraction(1)]
    t = Fraction(1)
    for j in range(n):
        num = Fraction(1)
        for a in spec.numerator:
            num *= a + j
        den = Fraction(j + 1)
        for b in spec.denominator:
            den *= b + j
        t = t * num / den
        terms.append(t)
    return terms


def hyp_terminating(spec: HypSeriesSpec) -> Fraction:
    """Exact value of a terminating pFq at a rational argument."""
    z = spec.argument
    if isinstance(z, Poly):
        raise TypeError("use hyp_poly for a polynomial argument")
    total = Fraction(0)
    power = Fraction(1)
    for c in hyp_terms(spec):
        total += c * power
        power *= z
    return total


def hyp(num: Sequence, den: Sequence, z=1) -> Fraction:
    return hyp_terminating(HypSeriesSpec(tuple(num), tuple(den), z))


def hyp_poly(num: Sequence, den: Sequence, arg: Poly | None = None) -> Poly:
    """Terminating pFq with a polynomial argument; ``arg`` defaults to the variable."""
    coeffs = hyp_terms(HypSeriesSpec(tuple(num), tuple(den), 1))
    series = Poly(coeffs)
    if arg is None:
        return series
    return series.compose(arg)


# ---------------------------------------------------------------------------
# Chebyshev and Gegenbauer


_HALF_MINUS_HALF_X = Poly((HALF, -HALF))


@lru_cache(maxsize=None)
def chebyshev_u(r: int) -> Poly:
    """Chebyshev polynomial of the second kind, ``U_r(x)``."""
    if r < 0:
        raise ValueError("degree must be non-negative")
    return hyp_poly((-r, r + 2), (THREE_HALVES,), _HALF_MINUS_HALF_X) * (r + 1)


@lru_cache(maxsize=None)
def _gegenbauer(alpha: Fraction, n: int) -> Poly:
    series = hyp_poly((-n, n + 2 * alpha), (alpha + HALF,), _HALF_MINUS_HALF_X)
    return series * (poch(2 * alpha, n) / factorial(n))


def gegenbauer(alpha, n: int) -> Poly:
    """Gegenbauer polynomial ``C_n^(alpha)(x)`` for ``alpha > 0``."""
    alpha = as_fraction(alpha)
    if alpha <= 0:
        raise ValueError(f"Gegenbauer parameter must be positive, got {alpha}")
    if n < 0:
        raise ValueError("degree must be non-negative")
    return _gegenbauer(alpha, n)


def gegenbauer_or_zero(alpha, n: int) -> Poly:
    """As :func:`gegenbauer` but a negative degree gives the zero polynomial."""
    return Poly() if n < 0 else gegenbauer(alpha, n)


def gegenbauer_connection(gamma, beta, n: int) -> list[Fraction]:
    """Coefficients ``a_k`` with ``C_n^(gamma) = sum_k a_k C_{n-2k}^(beta)``."""
    gamma, beta = as_fraction(gamma), as_fraction(beta)
    if gamma <= 0 or beta <= 0:
        raise ValueError("Gegenbauer parameters must be positive")
    out = []
    for k in range(n // 2 + 1):
        out.append(
            poch(gamma - beta, k)
            * poch(gamma, n - k)
            / (factorial(k) * poch(beta + 1, n - k))
            * (beta + n - 2 * k)
            / beta
        )
    return out


def gegenbauer_linearize(alpha, n: int, m: int) -> list[Fraction]:
    """Coefficients ``b_k`` with ``C_n C_m = sum_k b_k C_{n+m-2k}`` (same parameter)."""
    a = as_fraction(alpha)
    if a <= 0:
        raise ValueError("Gegenbauer parameter must be positive")
    out = []
    for k in range(min(n, m) + 1):
        s = n + m - 2 * k
        out.append(
            (s + a)
            * factorial(s)
            * poch(a, k)
            / ((n + m - k + a) * factorial(k))
            * poch(a, n - k)
            * poch(a, m - k)
            * poch(2 * a, n + m - k)
            / (factorial(n - k) * factorial(m - k) * poch(a, n + m - k) * poch(2 * a, s))
        )
    return out


# ---------------------------------------------------------------------------
# Discrete families


def racah(k: int, t: int, a, b, g, d) -> Fraction:
    """Racah polynomial ``R_k(lambda(t); a, b, g, d)`` as a balanced 4F3 at 1."""
    a, b, g, d = map(as_fraction, (a, b, g, d))
    if k < 0 or t < 0:
        raise ValueError("indices must be non-negative")
    return hyp((-k, k + a + b + 1, -t, t + g + d + 1), (a + 1, b + d + 1, g + 1), 1)


def hahn(k: int, j: int, a, b, N: int) -> Fraction:
    """Hahn polynomial ``Q_k(j; a, b, N)``."""
    if not 0 <= k <= N:
        raise ValueError(f"Hahn degree {k} outside 0..{N}")
    a, b = as_fraction(a), as_fraction(b)
    return hyp((-k, k + a + b + 1, -j), (a + 1, -N), 1)


def krawtchouk(n: int, x: int, p, N: int) -> Fraction:
    """Krawtchouk polynomial ``K_n(x; p, N)``."""
    p = as_fraction(p)
    if not (0 <= n <= N and 0 <= x <= N):
        raise ValueError(f"degree {n} or point {x} outside 0..{N}")
    if p == 0:
        raise ValueError("p must be nonzero")
    return hyp((-n, -x), (-N,), 1 / p)


# ---------------------------------------------------------------------------
# Finite identities


_Z = LaurentPoly.monomial(1)
_Z_INV = LaurentPoly.monomial(-1)
_COS = (_Z + _Z_INV) * HALF
# sin t = (z - 1/z) / (2i)
_SIN = (_Z - _Z_INV) * (GaussianRational(1) / GaussianRational(0, 2))


def hahn_fourier_sides(k: int, n: int) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    """Three Laurent expansions in ``z = e^{it}`` that should agree.

    Returns the Gegenbauer side, the Hahn sum and the 2F1 closed form. The
    Gegenbauer side carries the factor ``(-i)^k``; with ``i^k`` the identity
    fails for odd ``k`` by an overall sign.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    pref = (
        poch(n + 1, k + 1)
        * factorial(n - k)
        / (2**k * poch(THREE_HALVES, k) * poch(2 * k + 2, n - k))
    )
    phase = GaussianRational(0, -1) ** k
    gegen = compose_laurent(gegenbauer(k + 1, n - k), _COS)
    lhs = gegen * (_SIN**k) * (phase * pref)

    hahn_sum = LaurentPoly.from_dict({2 * j - n: hahn(k, j, 0, 0, n) for j in range(n + 1)})

    f = hyp_poly((k - n, k + 1), (-n,))
    closed = (
        LaurentPoly.monomial(-n)
        * (LaurentPoly(0, [1]) - LaurentPoly.monomial(2)) ** k
        * LaurentPoly.from_poly(f, 2)
    )
    return lhs, hahn_sum, closed


def hahn_fourier_check(k: int, n: int) -> bool:
    lhs, mid, rhs = hahn_fourier_sides(k, n)
    return lhs == mid == rhs


def _alpha_raw(two_l: int, m: int, n: int, t: int) -> Fraction:
    return (
        Fraction(two_l + 1, n + 1)
        * Fraction(factorial(two_l - m) * factorial(m), factorial(two_l))
        * (-1) ** (m - t)
        * poch(n - two_l, m - t)
        / poch(n + 2, m - t)
        * poch(two_l + 2 - t, t)
        / factorial(t)
    )


def _racah_00(k: int, t: int, m: int, n: int) -> Fraction:
    """``R_k(lambda(t); 0, 0, -m-1, -n-1)``."""
    return hyp((-k, k + 1, -t, t - m - n - 1), (1, -n, -m), 1)


def _check_kmn(two_l: int, n: int, m: int, k: int):
    if not (0 <= k <= m <= n <= two_l):
        raise ValueError(f"need 0 <= k <= m <= n <= 2l, got k={k} m={m} n={n} 2l={two_l}")


def racah_sum_sides(two_l: int, n: int, m: int, k: int) -> tuple[Fraction, Fraction]:
    _check_kmn(two_l, n, m, k)
    lhs = Fraction(0)
    for t in range(m + 1):
        lhs += (
            (-1) ** t
            * poch(n - two_l, m - t)
            / poch(n + 2, m - t)
            * poch(two_l + 2 - t, t)
            / factorial(t)
            * (m + n + 1 - 2 * t)
            * _racah_00(k, t, m, n)
        )
    rhs = (
        (-1) ** (m + k)
        * Fraction(factorial(two_l + k + 1) * factorial(two_l - k), factorial(two_l + 1))
        * Fraction(n + 1, factorial(m) * factorial(two_l - m))
    )
    return lhs, rhs


def racah_sum_check(two_l: int, n: int, m: int, k: int) -> bool:
    lhs, rhs = racah_sum_sides(two_l, n, m, k)
    return lhs == rhs


def beta_closed(two_l: int, m: int, n: int, k: int) -> Fraction:
    """Closed form of the LDU coefficient ``beta_k(m, n)``."""
    return (
        Fraction(factorial(m), factorial(m + k + 1))
        * Fraction(factorial(n), factorial(n + k + 1))
        * factorial(k) ** 2
        * 4**k
        * (2 * k + 1)
        * Fraction(factorial(two_l + k + 1) * factorial(two_l - k), factorial(two_l) ** 2)
    )


def racah_integral_constant(k: int, m: int, n: int) -> PiRational:
    """The prefactor multiplying the Racah polynomial in the half-circle integral.

    Uses ``sqrt(pi) * Gamma(k + 3/2) = (pi/2) * (3/2)_k``.
    """
    c = (
        HALF
        * poch(THREE_HALVES, k)
        / (k + 1)
        * poch(k + 1, m - k)
        / factorial(m - k)
        * poch(k + 1, n - k)
        / factorial(n - k)
        * (-1) ** k
        * poch(2 * k + 2, m + n - 2 * k)
        * factorial(k + 1)
        / factorial(n + m + 1)
    )
    return PiRational(c)


def beta_via_racah(two_l: int, m: int, n: int, k: int) -> Fraction:
    """``beta_k(m, n)`` recovered from the weight coefficients by Racah orthogonality."""
    _check_kmn(two_l, n, m, k)
    total = PiRational(0)
    for t in range(m + 1):
        total = total + PiRational(
            (m + n + 1 - 2 * t) * _racah_00(k, t, m, n) * _alpha_raw(two_l, m, n, t) * HALF
        )
    scale = (
        Fraction(2 * k + 1, (n + 1) * (m + 1))
        * poch(-m, k)
        * poch(-n, k)
        / (poch(m + 2, k) * poch(n + 2, k))
    )
    return (total * scale) / racah_integral_constant(k, m, n)
