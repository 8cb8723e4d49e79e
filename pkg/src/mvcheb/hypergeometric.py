"""Matrix hypergeometric construction of the monic polynomials.

The rows of ``R_n`` solve a second-order matrix hypergeometric equation with
structure triple ``(C_a, U_a, V_a)``. Its polynomial solutions are built from
matrix Pochhammer brackets. The free parameter ``alpha`` only has to separate
the eigenvalues; the resulting polynomials do not depend on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .diffops import de_matrices, lambda_D, lambda_E
from .exact import (
    Grid,
    Poly,
    SingularMatrixError,
    grid_add,
    grid_identity,
    grid_inverse,
    grid_mul,
    grid_scale,
    grid_sub,
    grid_transpose,
)
from .special import krawtchouk
from .weight import two_l_of

ALPHA_LADDER = (Fraction(1, 3), Fraction(2, 5), Fraction(5, 7), Fraction(7, 11))


class DegenerateAlphaError(ValueError):
    """Two eigenvalues coincide for the requested alpha."""


class BracketSingularError(ArithmeticError):
    def __init__(self, index: int):
        super().__init__(f"C + {index} is singular; the bracket recursion stops at index {index}")
        self.index = index


@dataclass(frozen=True)
class StructureTriple:
    C: Grid
    U: Grid
    V: Grid
    alpha: Fraction
    two_l: int

    @property
    def size(self) -> int:
        return self.two_l + 1

    def transposed(self) -> "StructureTriple":
        """Triple for the column form of the row equation (``U``, ``V`` are diagonal)."""
        return StructureTriple(grid_transpose(self.C), self.U, self.V, self.alpha, self.two_l)


def structure_matrices(spec, alpha=0) -> StructureTriple:
    """``C + alpha B0``, ``U - alpha B1``, ``V - alpha A0``."""
    two_l = two_l_of(spec)
    alpha = Fraction(alpha)
    m = de_matrices(two_l)
    if alpha == 0:
        return StructureTriple(m["C"], m["U"], m["V"], alpha, two_l)
    if two_l == 0:
        raise ValueError("alpha must be 0 when 2l = 0")
    return StructureTriple(
        grid_add(m["C"], grid_scale(m["B0"], alpha)),
        grid_sub(m["U"], grid_scale(m["B1"], alpha)),
        grid_sub(m["V"], grid_scale(m["A0"], alpha)),
        alpha,
        two_l,
    )


@dataclass(frozen=True)
class BracketSeq:
    triple: StructureTriple
    shift: Fraction
    brackets: tuple

    def step_matrix(self, i: int) -> Grid:
        """``i^2 + i (U - 1) + V + shift``."""
        return _step_matrix(self.triple, self.shift, i)


def _step_matrix(triple: StructureTriple, shift: Fraction, i: int) -> Grid:
    n = triple.size
    ident = grid_identity(n)
    u_minus = grid_sub(triple.U, ident)
    m = grid_add(grid_scale(u_minus, i), triple.V)
    return grid_add(m, grid_scale(ident, i * i + shift))


def bracket_seq(triple: StructureTriple, lam, n_max: int) -> BracketSeq:
    """Brackets ``[C, U, V + lam]_0 .. [C, U, V + lam]_{n_max}``."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    lam = Fraction(lam)
    size = triple.size
    out = [grid_identity(size)]
    for i in range(n_max):
        try:
            inv = grid_inverse(grid_add(triple.C, grid_scale(grid_identity(size), i)))
        except SingularMatrixError:
            raise BracketSingularError(i) from None
        out.append(grid_mul(inv, grid_mul(_step_matrix(triple, lam, i), out[-1])))
    return BracketSeq(triple, lam, tuple(out))


def bracket_consistency(seq: BracketSeq) -> bool:
    """``(C + i) [.]_{i+1} == (i^2 + i(U-1) + V + lam) [.]_i`` for every stored step."""
    size = seq.triple.size
    for i in range(len(seq.brackets) - 1):
        left = grid_mul(grid_add(seq.triple.C, grid_scale(grid_identity(size), i)), seq.brackets[i + 1])
        if left != grid_mul(seq.step_matrix(i), seq.brackets[i]):
            return False
    return True


def m_matrix(spec, alpha, n: int, lam) -> Grid:
    """Diagonal ``n^2 + n(U_a - 1) + V_a + lam``; singular exactly at the degree-``n`` eigenvalues."""
    return _step_matrix(structure_matrices(spec, alpha), Fraction(lam), n)


# ---------------------------------------------------------------------------
# Eigenvalues


def eigenvalue_lambda(spec, alpha, j: int, n: int) -> Fraction:
    """``Lambda_n(D)_jj + alpha Lambda_n(E)_jj``."""
    two_l = two_l_of(spec)
    alpha = Fraction(alpha)
    if not 0 <= j <= two_l:
        raise ValueError(f"index {j} outside 0..{two_l}")
    if n < 0:
        raise ValueError("degree must be non-negative")
    value = lambda_D(two_l, n)[j][j]
    if alpha:
        if two_l == 0:
            raise ValueError("alpha must be 0 when 2l = 0")
        value += alpha * lambda_E(two_l, n)[j][j]
    return value


def eigenvalue_collision(spec, alpha, n_max: int):
    """First pair ``((j, n), (i, m))`` with equal eigenvalues, else ``None``."""
    two_l = two_l_of(spec)
    seen: dict[Fraction, tuple[int, int]] = {}
    for n in range(n_max + 1):
        for j in range(two_l + 1):
            v = eigenvalue_lambda(two_l, alpha, j, n)
            if v in seen:
                return seen[v], (j, n)
            seen[v] = (j, n)
    return None


def degeneracy_check(spec, alpha, n_max: int) -> bool:
    """True when all eigenvalues up to degree ``n_max`` are pairwise distinct."""
    return eigenvalue_collision(spec, alpha, n_max) is None


def separation_witness(spec, alpha, n: int):
    """First ``((i, n), (r, m))`` with ``m < n`` and equal eigenvalues, else ``None``.

    This is the condition the bracket construction of degree ``n`` uses: every
    ``M_m(lambda_i(n))`` with ``m < n`` must be invertible. Coincidences within
    one degree do not affect it.
    """
    two_l = two_l_of(spec)
    lower = {}
    for m in range(n):
        for r in range(two_l + 1):
            lower.setdefault(eigenvalue_lambda(two_l, alpha, r, m), (r, m))
    for i in range(two_l + 1):
        v = eigenvalue_lambda(two_l, alpha, i, n)
        if v in lower:
            return (i, n), lower[v]
    return None


def colliding_alpha(spec, first: tuple[int, int], second: tuple[int, int]) -> Fraction | None:
    """The alpha making the eigenvalues at ``(j, n)`` and ``(i, m)`` coincide, if any."""
    two_l = two_l_of(spec)
    if two_l == 0:
        return None
    (j, n), (i, m) = first, second
    d_gap = lambda_D(two_l, m)[i][i] - lambda_D(two_l, n)[j][j]
    e_gap = lambda_E(two_l, n)[j][j] - lambda_E(two_l, m)[i][i]
    if e_gap == 0:
        return None
    return d_gap / e_gap


def choose_alpha(spec, n_max: int, ladder=ALPHA_LADDER) -> Fraction:
    """First alpha on the ladder that separates all eigenvalues up to ``n_max``."""
    two_l = two_l_of(spec)
    if two_l == 0:
        return Fraction(0)
    for a in ladder:
        if degeneracy_check(two_l, a, n_max):
            return a
    raise DegenerateAlphaError(f"every alpha in {list(map(str, ladder))} is degenerate up to degree {n_max}")


# ---------------------------------------------------------------------------
# Rows of R_n


def row_via_2h1(spec, alpha, n: int, i: int) -> list[Poly]:
    """Row ``i`` of ``R_n`` from the matrix hypergeometric series.

    Degree ``n`` must be separated from all lower degrees (see
    :func:`separation_witness`). The column form of the row equation uses the
    transposed triple. With
    ``F0 = n! [.]_n^{-1} e_i`` the series ``sum_k u^k/k! [.]_k F0`` stops at
    degree ``n`` and has ``u^n`` in position ``i``.
    """
    two_l = two_l_of(spec)
    alpha = Fraction(alpha)
    if not 0 <= i <= two_l:
        raise ValueError(f"row {i} outside 0..{two_l}")
    if n < 0:
        raise ValueError("degree must be non-negative")
    collision = separation_witness(two_l, alpha, n)
    if collision is not None:
        raise DegenerateAlphaError(f"alpha={alpha} gives equal eigenvalues at {collision[0]} and {collision[1]}")
    triple = structure_matrices(two_l, alpha).transposed()
    lam = eigenvalue_lambda(two_l, alpha, i, n)
    seq = bracket_seq(triple, lam, n + 1)
    size = two_l + 1
    try:
        top_inv = grid_inverse(seq.brackets[n])
    except SingularMatrixError:
        raise BracketSingularError(n) from None
    f0 = [factorial(n) * top_inv[r][i] for r in range(size)]
    # brackets[n + 1] F0 must vanish for the series to terminate
    tail = [sum(seq.brackets[n + 1][r][c] * f0[c] for c in range(size)) for r in range(size)]
    if any(tail):
        raise ArithmeticError("the series does not terminate at the expected degree")
    coeffs = [[Fraction(0)] * (n + 1) for _ in range(size)]
    for k in range(n + 1):
        bk = seq.brackets[k]
        scale = Fraction(1, factorial(k))
        for r in range(size):
            coeffs[r][k] = scale * sum(bk[r][c] * f0[c] for c in range(size))
    return [Poly(c) for c in coeffs]


def rows_via_2h1(spec, alpha, n: int) -> list[list[Poly]]:
    two_l = two_l_of(spec)
    return [row_via_2h1(two_l, alpha, n, i) for i in range(two_l + 1)]


# ---------------------------------------------------------------------------
# Spectrum of C_alpha


def krawtchouk_eigencheck(spec, alpha) -> bool:
    """Eigenvectors of ``C_alpha`` from Krawtchouk polynomials, eigenvalues ``3/2 + x``.

    At ``alpha = +-2l`` the matrix is triangular, so its diagonal entries are
    compared with ``3/2 + x`` directly.
    """
    two_l = two_l_of(spec)
    if two_l < 1:
        raise ValueError("the Krawtchouk description needs 2l >= 1")
    alpha = Fraction(alpha)
    c = structure_matrices(two_l, alpha).C
    size = two_l + 1
    if alpha in (two_l, -two_l):
        upper = all(c[r][s] == 0 for r in range(size) for s in range(r))
        lower = all(c[r][s] == 0 for r in range(size) for s in range(r + 1, size))
        diag = sorted(c[r][r] for r in range(size))
        return (upper or lower) and diag == [Fraction(2 * j + 3, 2) for j in range(size)]
    p = (two_l + alpha) / (2 * two_l)
    for x in range(size):
        v = [krawtchouk(k, x, p, two_l) for k in range(size)]
        cv = [sum(c[r][s] * v[s] for s in range(size)) for r in range(size)]
        if cv != [(Fraction(3, 2) + x) * e for e in v]:
            return False
    return True


__all__ = [
    "ALPHA_LADDER",
    "BracketSeq",
    "BracketSingularError",
    "DegenerateAlphaError",
    "StructureTriple",
    "bracket_consistency",
    "bracket_seq",
    "choose_alpha",
    "colliding_alpha",
    "degeneracy_check",
    "eigenvalue_collision",
    "eigenvalue_lambda",
    "separation_witness",
    "krawtchouk_eigencheck",
    "m_matrix",
    "row_via_2h1",
    "rows_via_2h1",
    "structure_matrices",
]
