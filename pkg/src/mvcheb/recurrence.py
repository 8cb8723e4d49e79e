"""Monic matrix orthogonal polynomials from the explicit three-term recurrence.

The family ``R_n`` on [0, 1] is canonical; ``P_n`` on [-1, 1] is always
obtained from it by substituting ``u = (1 - x) / 2`` and rescaling.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import (
    Grid,
    MatPoly,
    PiRational,
    Poly,
    grid_mul,
    grid_sub,
    grid_zeros,
    integrate_halfcircle,
    poch,
    reparam_u_to_x,
)
from .weight import two_l_of, weight_poly

U_VAR = Poly.monomial(1)


def _tridiag(size: int, entries) -> Grid:
    """Build a grid from ``(i, j, thunk)`` triples, dropping out-of-range positions."""
    g = [[Fraction(0)] * size for _ in range(size)]
    for i, j, value in entries:
        if 0 <= i < size and 0 <= j < size:
            g[i][j] += value()
    return tuple(tuple(r) for r in g)


def recurrence_X(spec, n: int) -> Grid:
    """Tridiagonal ``X_n`` of ``u R_n = R_{n+1} + X_n R_n + Y_n R_{n-1}``."""
    two_l = two_l_of(spec)
    if n < 0:
        raise ValueError("n must be non-negative")
    size = two_l + 1
    entries = []
    for i in range(size):
        entries.append((i, i - 1, lambda i=i: Fraction(-(i * i), 4 * (n + i) * (n + i + 1))))
        entries.append((i, i, lambda: Fraction(1, 2)))
        entries.append(
            (
                i,
                i + 1,
                lambda i=i: Fraction(
                    -((two_l - i) ** 2), 4 * (two_l + n - i) * (two_l + n - i + 1)
                ),
            )
        )
    return _tridiag(size, entries)


def recurrence_Y(spec, n: int) -> Grid:
    """Diagonal ``Y_n`` (requires ``n >= 1``)."""
    two_l = two_l_of(spec)
    if n < 1:
        raise ValueError("Y_n is defined for n >= 1")
    size = two_l + 1
    return _tridiag(
        size,
        [
            (
                i,
                i,
                lambda i=i: Fraction(
                    n * n * (two_l + n + 1) ** 2,
                    16 * (n + i) * (n + i + 1) * (two_l + n - i) * (two_l + n - i + 1),
                ),
            )
            for i in range(size)
        ],
    )


def _left_mul(grid: Grid, m: MatPoly) -> MatPoly:
    return MatPoly.from_grid(grid) @ m


@dataclass
class MonicPolySeq:
    """Growing list of ``R_0, R_1, ...`` for one matrix size (u-domain)."""

    two_l: int
    polys: list = field(default_factory=list)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def degree_max(self) -> int:
        return len(self.polys) - 1

    def extend_to(self, n: int) -> None:
        with self._lock:
            size = self.two_l + 1
            if not self.polys:
                self.polys.append(MatPoly.identity(size))
            while len(self.polys) <= n:
                k = len(self.polys) - 1
                rk = self.polys[k]
                nxt = rk * U_VAR - _left_mul(recurrence_X(self.two_l, k), rk)
                if k >= 1:
                    nxt = nxt - _left_mul(recurrence_Y(self.two_l, k), self.polys[k - 1])
                self.polys.append(nxt)

    def __getitem__(self, n: int) -> MatPoly:
        self.extend_to(n)
        return self.polys[n]


_SEQS: dict[int, MonicPolySeq] = {}
_SEQS_LOCK = threading.Lock()


def monic_sequence(spec) -> MonicPolySeq:
    two_l = two_l_of(spec)
    with _SEQS_LOCK:
        seq = _SEQS.get(two_l)
        if seq is None:
            seq = _SEQS[two_l] = MonicPolySeq(two_l)
    return seq


def monic_R(spec, n: int) -> MatPoly:
    """Monic ``R_n(u)`` orthogonal on [0, 1]."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    return monic_sequence(spec)[n]


def monic_P(spec, n: int) -> MatPoly:
    """Monic ``P_n(x) = (-2)^n R_n((1 - x) / 2)`` orthogonal on [-1, 1]."""
    return monic_R(spec, n).map(reparam_u_to_x) * Fraction((-2) ** n)


def x_recurrence_residual(spec, n: int) -> MatPoly:
    """``x P_n - P_{n+1} - (1 - 2X_n) P_n - 4 Y_n P_{n-1}``; zero when consistent."""
    size = two_l_of(spec) + 1
    pn = monic_P(spec, n)
    x_grid = recurrence_X(spec, n)
    one_minus_2x = tuple(
        tuple((1 if i == j else 0) - 2 * x_grid[i][j] for j in range(size)) for i in range(size)
    )
    res = pn * Poly.monomial(1) - monic_P(spec, n + 1) - _left_mul(one_minus_2x, pn)
    if n >= 1:
        y4 = tuple(tuple(4 * v for v in row) for row in recurrence_Y(spec, n))
        res = res - _left_mul(y4, monic_P(spec, n - 1))
    return res


# ---------------------------------------------------------------------------
# Inner product and norms


def inner_product_W(spec, a: MatPoly, b: MatPoly) -> tuple:
    """``int A(x) W(x) B(x)^t dx`` over [-1, 1], entrywise exact."""
    w = weight_poly(spec)
    if a.cols != w.rows or b.cols != w.rows:
        raise ValueError(f"operands need {w.rows} columns, got {a.cols} and {b.cols}")
    prod = a @ w @ b.T
    return tuple(tuple(integrate_halfcircle(e) for e in row) for row in prod.entries)


def squared_norm_H(spec, n: int) -> tuple:
    """Diagonal squared norm ``<P_n, P_n>`` from its closed form."""
    two_l = two_l_of(spec)
    if n < 0:
        raise ValueError("degree must be non-negative")
    size = two_l + 1
    nf = poch(1, n)

    def diag(i: int) -> Fraction:
        return (
            Fraction(1, 2)
            * nf**2
            * poch(two_l + 1, n + 1) ** 2
            / (poch(i + 1, n) ** 2 * poch(two_l - i + 1, n) ** 2)
            / (4**n * (n + i + 1) * (two_l - i + n + 1))
        )

    return tuple(
        tuple(PiRational(diag(i) if i == j else 0) for j in range(size)) for i in range(size)
    )


# ---------------------------------------------------------------------------
# Subleading coefficients


def coefficient_grid(m: MatPoly, k: int) -> Grid:
    if k < 0:
        return grid_zeros(m.rows, m.cols)
    return m.coefficient(k)


def extracted_leading_coeffs(spec, n: int) -> tuple[Grid, Grid]:
    """``(R^n_{n-1}, R^n_{n-2})`` read off the generated polynomial."""
    r = monic_R(spec, n)
    return coefficient_grid(r, n - 1), coefficient_grid(r, n - 2)


def leading_coeffs(spec, n: int) -> tuple[Grid, Grid]:
    """Closed forms of the two subleading coefficients of ``R_n``.

    The diagonal of the second uses the factor ``(j - 2l - n)``; the sums
    run over the matrix size.
    """
    two_l = two_l_of(spec)
    if n < 0:
        raise ValueError("degree must be non-negative")
    size = two_l + 1
    F = Fraction
    first = []
    for j in range(size):
        first += [
            (j, j - 1, lambda j=j: F(j * n, 4 * (n + j))),
            (j, j, lambda: F(-n, 2)),
            (j, j + 1, lambda j=j: F(n * (two_l - j), 4 * (two_l - j + n))),
        ]
    r1 = _tridiag(size, first)
    if n < 2:
        return r1, grid_zeros(size)
    c = n * (n - 1)
    second = []
    for j in range(size):
        second += [
            (j, j - 2, lambda j=j: F(c * j * (j - 1), 32 * (n + j) * (n + j - 1))),
            (j, j - 1, lambda j=j: F(-c * j, 8 * (n + j))),
            (
                j,
                j,
                lambda j=j: F(
                    c * (3 * j * j - 3 * two_l * j - 2 * n * n + n - 2 * n * two_l),
                    16 * (n + j) * (j - two_l - n),
                ),
            ),
            (j, j + 1, lambda j=j: F(-c * (two_l - j), 8 * (two_l + n - j))),
            (
                j,
                j + 2,
                lambda j=j: F(
                    c * (two_l - j) * (two_l - j - 1),
                    32 * (two_l - j + n - 1) * (two_l + n - j),
                ),
            ),
        ]
    return r1, _tridiag(size, second)


def coeffs_to_recurrence(
    rn1_n: Grid, rn1_np1: Grid, rn2_n: Grid, rn2_np1: Grid
) -> tuple[Grid, Grid]:
    """Recurrence matrices from subleading coefficients.

    ``X = R^n_{n-1} - R^{n+1}_n`` and
    ``Y = R^n_{n-2} - R^{n+1}_{n-1} - X R^n_{n-1}``.
    """
    shapes = {(len(g), len(g[0])) for g in (rn1_n, rn1_np1, rn2_n, rn2_np1)}
    if len(shapes) != 1:
        raise ValueError(f"shape mismatch among {sorted(shapes)}")
    x = grid_sub(rn1_n, rn1_np1)
    y = grid_sub(grid_sub(rn2_n, rn2_np1), grid_mul(x, rn1_n))
    return x, y


# ---------------------------------------------------------------------------
# Float layer


def nevai_deviation(spec, n: int) -> tuple[float, float]:
    """``max|X_n - 1/2|`` and ``max|Y_n - 1/16|`` over all entries, as floats."""
    size = two_l_of(spec) + 1
    x = recurrence_X(spec, n)
    y = recurrence_Y(spec, n)
    dx = max(abs(x[i][j] - (Fraction(1, 2) if i == j else 0)) for i in range(size) for j in range(size))
    dy = max(abs(y[i][j] - (Fraction(1, 16) if i == j else 0)) for i in range(size) for j in range(size))
    return float(dx), float(dy)
