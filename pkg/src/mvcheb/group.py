"""Group-side objects: the zero-degree spherical function on the torus and the
two radial operators in the coordinate ``z = (w^2 + w^-2) / 2``.

Matrices here are indexed by weights ``p, j`` in ``{-l, ..., l}``. They are
stored on rows ``0..2l`` with ``p = -l + row``. The comparison with the
interval operators of :mod:`mvcheb.diffops` reverses that order
(``row' = l - p``) before comparing.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .diffops import MatDiffOp, build_Dtilde, build_Etilde
from .exact import LaurentPoly, MatPoly, Poly, exchange_matrix
from .weight import two_l_of

LaurentGrid = tuple  # tuple of tuples of LaurentPoly


def weights(two_l: int) -> list[Fraction]:
    """Weight labels ``p = -l + row`` in storage order."""
    return [Fraction(r * 2 - two_l, 2) for r in range(two_l + 1)]


def _int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ValueError(f"expected an integer, got {x}")
    return int(x)


def phi0(spec) -> LaurentGrid:
    """Matrix coefficients of the zero-degree spherical function at ``a(w)``."""
    two_l = two_l_of(spec)
    ell = Fraction(two_l, 2)
    ws = weights(two_l)
    rows = []
    for p in ws:
        row = []
        for j in ws:
            pref = Fraction(
                factorial(_int(ell - j)) * factorial(_int(ell + j)) * factorial(_int(ell - p)) * factorial(_int(ell + p)),
                factorial(two_l),
            )
            terms: dict[int, Fraction] = {}
            lo = max(0, _int(-p - j))
            hi = min(_int(ell - p), _int(ell - j))
            for r in range(lo, hi + 1):
                e = _int(4 * r - 2 * ell + 2 * p + 2 * j)
                den = (
                    factorial(r)
                    * factorial(_int(ell - p) - r)
                    * factorial(_int(ell - j) - r)
                    * factorial(_int(p + j) + r)
                )
                terms[e] = terms.get(e, Fraction(0)) + pref / den
            row.append(LaurentPoly.from_dict({k: v for k, v in terms.items() if v}))
        rows.append(tuple(row))
    return tuple(rows)


# ---------------------------------------------------------------------------
# Laurent grid helpers


def lgrid_mul(a: LaurentGrid, b: LaurentGrid) -> LaurentGrid:
    n, m, k = len(a), len(b[0]), len(b)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = LaurentPoly()
            for t in range(k):
                if not a[i][t].is_zero() and not b[t][j].is_zero():
                    acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def lgrid_const(grid) -> LaurentGrid:
    return tuple(tuple(LaurentPoly.monomial(0, v) if v else LaurentPoly() for v in row) for row in grid)


def lgrid_scale(a: LaurentGrid, c: LaurentPoly) -> LaurentGrid:
    return tuple(tuple(e * c for e in row) for row in a)


def lgrid_add(a: LaurentGrid, b: LaurentGrid) -> LaurentGrid:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def lgrid_derivative(a: LaurentGrid) -> LaurentGrid:
    return tuple(tuple(e.derivative() for e in row) for row in a)


def lgrid_det(a: LaurentGrid) -> LaurentPoly:
    """Cofactor expansion; only used for small sizes."""
    n = len(a)
    if n == 1:
        return a[0][0]
    total = LaurentPoly()
    for j in range(n):
        if a[0][j].is_zero():
            continue
        minor = tuple(tuple(row[c] for c in range(n) if c != j) for row in a[1:])
        term = a[0][j] * lgrid_det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def _w(k: int) -> LaurentPoly:
    return LaurentPoly.monomial(k)


# ---------------------------------------------------------------------------
# Constant matrices in weight labels


def _by_weights(two_l: int, f) -> tuple:
    ws = weights(two_l)
    return tuple(tuple(Fraction(f(p, j)) for j in ws) for p in ws)


def s_matrix(two_l: int) -> tuple:
    """``S_{pj} = -(l-j) [p-j=1] - (l+j) [j-p=1]``."""
    ell = Fraction(two_l, 2)
    return _by_weights(two_l, lambda p, j: -(ell - j) * (p - j == 1) - (ell + j) * (j - p == 1))


def u_diag(two_l: int) -> tuple:
    return _by_weights(two_l, lambda p, j: -2 * p if p == j else 0)


def u_lu(two_l: int) -> tuple:
    """``(-2l+2j) [i=j+1] + (2l+2j) [i+1=j]``."""
    ell = Fraction(two_l, 2)
    return _by_weights(two_l, lambda i, j: (-2 * ell + 2 * j) * (i == j + 1) + (2 * ell + 2 * j) * (i + 1 == j))


def th_matrix(two_l: int) -> tuple:
    """Diagonal Cartan action ``2j``."""
    return _by_weights(two_l, lambda p, j: 2 * j if p == j else 0)


def sigma(two_l: int) -> LaurentGrid:
    """``l (w^2 + w^-2) I + S``."""
    ell = Fraction(two_l, 2)
    diag = lgrid_scale(lgrid_const(_identity(two_l)), (_w(2) + _w(-2)) * ell)
    return lgrid_add(diag, lgrid_const(s_matrix(two_l)))


def _identity(two_l: int) -> tuple:
    n = two_l + 1
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def lambda_group(two_l: int, d: int) -> tuple:
    ell = Fraction(two_l, 2)
    return _by_weights(two_l, lambda p, j: (d * d + j * j + 2 * d * (ell + 1) + ell * (ell + 2)) / 4 if p == j else 0)


def gamma_group(two_l: int, d: int) -> tuple:
    ell = Fraction(two_l, 2)
    return _by_weights(two_l, lambda p, j: j * (ell + d + 1) / 2 if p == j else 0)


# ---------------------------------------------------------------------------
# Identities for the spherical function


def sigma_identity_sides(spec) -> tuple[LaurentGrid, LaurentGrid]:
    """``(1/2) w (w^2 - w^-2) dPhi0/dw`` and ``Phi0 sigma``."""
    two_l = two_l_of(spec)
    ph = phi0(two_l)
    factor = (_w(3) - _w(-1)) * Fraction(1, 2)
    lhs = lgrid_scale(lgrid_derivative(ph), factor)
    return lhs, lgrid_mul(ph, sigma(two_l))


def upsilon_identity_sides(spec) -> tuple[LaurentGrid, LaurentGrid]:
    """``(w^4 - 1) b1(w) Phi0`` and ``(w^4 - 1) Phi0 upsilon``.

    ``b1(w) = (1/8) w T(H)`` is the ``d/dw`` coefficient of the first-order
    radial operator, and
    ``(w^4 - 1) upsilon = -(1/8) (w (1 + w^4) U_diag + w^3 U_lu)``.
    Clearing ``w^4 - 1`` keeps both sides Laurent polynomials.
    """
    two_l = two_l_of(spec)
    ph = phi0(two_l)
    b1 = lgrid_scale(lgrid_const(th_matrix(two_l)), LaurentPoly.monomial(1, Fraction(1, 8)))
    lhs = lgrid_scale(lgrid_mul(b1, ph), _w(4) - _w(0))
    return lhs, lgrid_mul(ph, upsilon_cleared(two_l))


def upsilon_cleared(two_l: int) -> LaurentGrid:
    """``(w^4 - 1) upsilon(w)``."""
    return lgrid_add(
        lgrid_scale(lgrid_const(u_diag(two_l)), (_w(1) + _w(5)) * Fraction(-1, 8)),
        lgrid_scale(lgrid_const(u_lu(two_l)), _w(3) * Fraction(-1, 8)),
    )


def phi0_identity_checks(spec) -> bool:
    """Both first-order identities for the zero-degree spherical function."""
    two_l = two_l_of(spec)
    a, b = sigma_identity_sides(two_l)
    c, d = upsilon_identity_sides(two_l)
    return a == b and c == d


# ---------------------------------------------------------------------------
# Radial operators in z and their relation to the interval operators


def omega_tilde(spec) -> MatDiffOp:
    """Left-acting ``(1/4)(z^2-1) d^2 + (1/4)((2l+3) z + S) d + Lambda_0``.

    Stored with the variable called ``x`` so that it can be compared with the
    interval operators after transposition.
    """
    two_l = two_l_of(spec)
    ell = Fraction(two_l, 2)
    size = two_l + 1
    ident = MatPoly.identity(size)
    z = Poly.monomial(1)
    f1 = (ident * z * (2 * ell + 3) + MatPoly.from_grid(s_matrix(two_l))) * Fraction(1, 4)
    f2 = ident * Poly((-1, 0, 1)) * Fraction(1, 4)
    return MatDiffOp((MatPoly.from_grid(lambda_group(two_l, 0)), f1, f2), "x")


def delta_tilde(spec) -> MatDiffOp:
    """Left-acting first-order radial operator ``(w^4-1)/w^3 upsilon d + Gamma_0``.

    In ``z`` its first-order coefficient is ``-(1/8)(2 z U_diag + U_lu)``.
    """
    two_l = two_l_of(spec)
    z = Poly.monomial(1)
    f1 = (MatPoly.from_grid(u_diag(two_l)) * z * 2 + MatPoly.from_grid(u_lu(two_l))) * Fraction(-1, 8)
    return MatDiffOp((MatPoly.from_grid(gamma_group(two_l, 0)), f1), "x")


def _relabel(op: MatDiffOp) -> MatDiffOp:
    """Reverse the weight order (``row' = l - p``)."""
    j = exchange_matrix(op.size)
    j = j if isinstance(j, MatPoly) else MatPoly.from_grid(j)
    return op.conjugate_constant(j, j)


def group_second_order_image(spec) -> MatDiffOp:
    """``-4 Omega^t + 2(l^2 + l)`` after relabeling."""
    two_l = two_l_of(spec)
    ell = Fraction(two_l, 2)
    return _relabel(omega_tilde(two_l).transpose()).scale(-4).plus_constant(2 * (ell * ell + ell))


def group_first_order_image(spec) -> MatDiffOp:
    """``-(2/l) Delta^t - (l+1)`` after relabeling."""
    two_l = two_l_of(spec)
    if two_l < 1:
        raise ValueError("the first-order relation needs 2l >= 1")
    ell = Fraction(two_l, 2)
    return _relabel(delta_tilde(two_l).transpose()).scale(-2 / ell).plus_constant(-(ell + 1))


def group_operator_relation_check(spec) -> bool:
    """Compare the images of both radial operators with the interval operators.

    The second-order image equals ``D~``; the first-order image equals
    ``-2 E~``, the x-form of the first-order operator on [0, 1].
    """
    two_l = two_l_of(spec)
    if two_l < 1:
        raise ValueError("the relation check needs 2l >= 1")
    return group_second_order_image(two_l) == build_Dtilde(two_l) and group_first_order_image(
        two_l
    ) == build_Etilde(two_l).scale(-2)
