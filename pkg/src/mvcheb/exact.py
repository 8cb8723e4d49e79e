"""Exact scalar, polynomial and polynomial-matrix arithmetic.

Everything here is immutable. Rationals are :class:`fractions.Fraction`;
quantities that are rational multiples of pi live in :class:`PiRational` so
that pi is never approximated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from numbers import Rational as _RationalABC
from typing import Callable, Iterable, Sequence

Rational = Fraction

Grid = tuple  # tuple[tuple[Fraction, ...], ...]


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def format_fraction(q: Fraction) -> str:
    q = as_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# Scalars


@dataclass(frozen=True)
class PiRational:
    """The number ``coefficient * pi``.

    Closed under addition and under scaling by rationals. Adding a plain
    rational raises ``TypeError``.
    """

    coefficient: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "coefficient", as_fraction(self.coefficient))

    def __add__(self, other):
        if isinstance(other, PiRational):
            return PiRational(self.coefficient + other.coefficient)
        if other == 0 and isinstance(other, int):
            # sum() starts from the int 0
            return self
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return PiRational(-self.coefficient)

    def __sub__(self, other):
        if isinstance(other, PiRational):
            return PiRational(self.coefficient - other.coefficient)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PiRational(self.coefficient * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PiRational):
            return self.coefficient / other.coefficient
        if isinstance(other, (int, Fraction)):
            return PiRational(self.coefficient / other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, PiRational):
            return self.coefficient == other.coefficient
        if isinstance(other, (int, Fraction)):
            # only zero is both rational and a multiple of pi
            return other == 0 and self.coefficient == 0
        return NotImplemented

    def __hash__(self):
        return hash(("pi", self.coefficient))

    def __float__(self):
        from math import pi

        return float(self.coefficient) * pi

    def __str__(self):
        if self.coefficient == 0:
            return "0"
        return f"{format_fraction(self.coefficient)}·pi"

    def __repr__(self):
        return f"PiRational({format_fraction(self.coefficient)})"


@dataclass(frozen=True)
class GaussianRational:
    """An element ``real + i*imag`` of Q(i)."""

    real: Fraction = Fraction(0)
    imag: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "real", as_fraction(self.real))
        object.__setattr__(self, "imag", as_fraction(self.imag))

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            raise TypeError("floating complex values are not exact")
        return cls(as_fraction(value), Fraction(0))

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.real + o.real, self.imag + o.imag)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.real, -self.imag)

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.real - o.real, self.imag - o.imag)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(
            self.real * o.real - self.imag * o.imag,
            self.real * o.imag + self.imag * o.real,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.real, -self.imag)

    def __truediv__(self, other):
        o = GaussianRational.coerce(other)
        norm = o.real * o.real + o.imag * o.imag
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        num = self * o.conjugate()
        return GaussianRational(num.real / norm, num.imag / norm)

    def __pow__(self, k: int):
        if k < 0:
            return GaussianRational(1) / (self ** (-k))
        result = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.real == o.real and self.imag == o.imag

    def __hash__(self):
        if self.imag == 0:
            return hash(self.real)
        return hash((self.real, self.imag))

    def __bool__(self):
        return bool(self.real) or bool(self.imag)

    def __str__(self):
        if self.imag == 0:
            return format_fraction(self.real)
        if self.real == 0:
            return f"{format_fraction(self.imag)}i"
        sign = "+" if self.imag > 0 else "-"
        return f"{format_fraction(self.real)}{sign}{format_fraction(abs(self.imag))}i"

    __repr__ = __str__


I = GaussianRational(0, 1)


def poch(a, k: int) -> Fraction:
    """Rising factorial ``(a)_k`` by direct product.

    Negative integer bases vanish exactly once the product crosses zero.
    """
    if k < 0:
        raise ValueError("Pochhammer length must be non-negative")
    a = as_fraction(a)
    result = Fraction(1)
    for j in range(k):
        result *= a + j
        if result == 0:
            break
    return result


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n or n < 0:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))


# ---------------------------------------------------------------------------
# Polynomials


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    c = [as_fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    """Dense univariate polynomial over Q, lowest degree first.

    The zero polynomial has ``degree == -1``.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim(coeffs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Poly":
        p = cls.__new__(cls)
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        p.coeffs = tuple(c)
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def linear(cls, a, b) -> "Poly":
        """The polynomial ``a + b*x``."""
        return cls((a, b))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)):
                other = Poly.const(other)
            else:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)):
                other = Poly.const(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Poly):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return Poly()
            out = [Fraction(0)] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai == 0:
                    continue
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
            return Poly._raw(out)
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly._raw(tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading()
        q = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / lead
            q[k] = c
            if c:
                for j, oj in enumerate(other.coeffs):
                    rem[k + j] -= c * oj
        return Poly._raw(q), Poly._raw(rem[:dq] if dq > 0 else [])

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    # calculus and composition --------------------------------------------

    def derivative(self, k: int = 1) -> "Poly":
        c = self.coeffs
        for _ in range(k):
            c = tuple(i * c[i] for i in range(1, len(c)))
        return Poly._raw(c)

    def compose(self, inner: "Poly") -> "Poly":
        """Return ``self(inner(x))`` by Horner's rule."""
        result = Poly()
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    def __call__(self, x):
        result = 0 * x
        for c in reversed(self.coeffs):
            result = result * x + (c if not isinstance(x, float) else float(c))
        return result

    # comparison / display -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def to_string(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = format_fraction(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{format_fraction(a)}{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Poly({self.to_string()})"


X = Poly.monomial(1)
ONE = Poly.const(1)
ZERO = Poly()


def integrate_halfcircle(p: Poly) -> PiRational:
    """Exact value of the integral of ``p(x) * sqrt(1 - x^2)`` over [-1, 1].

    The even moment ``x^(2m)`` contributes ``pi * (1/2)_m / (2 * (m+1)!)``.
    """
    total = Fraction(0)
    half = Fraction(1, 2)
    for k in range(0, len(p.coeffs), 2):
        c = p.coeffs[k]
        if c:
            m = k // 2
            total += c * poch(half, m) / (2 * factorial(m + 1))
    return PiRational(total)


def reparam_x_to_u(p: Poly) -> Poly:
    """Substitute ``x = 1 - 2u``."""
    return p.compose(Poly((1, -2)))


def reparam_u_to_x(p: Poly) -> Poly:
    """Substitute ``u = (1 - x) / 2``."""
    return p.compose(Poly((Fraction(1, 2), Fraction(-1, 2))))


# ---------------------------------------------------------------------------
# Laurent polynomials over Q(i)


class LaurentPoly:
    """Laurent polynomial ``sum c_k z^k`` with Gaussian-rational coefficients."""

    __slots__ = ("min_exp", "coeffs")

    def __init__(self, min_exp: int = 0, coeffs: Iterable = ()):
        c = [GaussianRational.coerce(v) for v in coeffs]
        lo = 0
        while lo < len(c) and not c[lo]:
            lo += 1
        hi = len(c)
        while hi > lo and not c[hi - 1]:
            hi -= 1
        self.coeffs = tuple(c[lo:hi])
        self.min_exp = min_exp + lo if self.coeffs else 0

    @classmethod
    def from_dict(cls, terms: dict) -> "LaurentPoly":
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(k, 0) for k in range(lo, hi + 1)])

    @classmethod
    def monomial(cls, k: int, c=1) -> "LaurentPoly":
        return cls(k, [c])

    @classmethod
    def from_poly(cls, p: Poly, power: int = 1) -> "LaurentPoly":
        """Embed ``p(z**power)``."""
        return cls.from_dict({power * k: c for k, c in enumerate(p.coeffs) if c})

    def terms(self) -> dict:
        return {self.min_exp + i: c for i, c in enumerate(self.coeffs) if c}

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_exp(self) -> int:
        return self.min_exp + len(self.coeffs) - 1

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly(0, [GaussianRational.coerce(other)])
            except TypeError:
                return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.max_exp, other.max_exp)
        out = [GaussianRational()] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.min_exp - lo + i] = out[self.min_exp - lo + i] + c
        for i, c in enumerate(other.coeffs):
            out[other.min_exp - lo + i] = out[other.min_exp - lo + i] + c
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.min_exp, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            if self.is_zero() or other.is_zero():
                return LaurentPoly()
            out = [GaussianRational()] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return LaurentPoly(self.min_exp + other.min_exp, out)
        try:
            g = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return LaurentPoly(self.min_exp, [c * g for c in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = LaurentPoly(0, [1])
        for _ in range(k):
            result = result * self
        return result

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly.from_dict(
            {k - 1: c * k for k, c in self.terms().items() if k != 0}
        )

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.min_exp == other.min_exp and self.coeffs == other.coeffs
        try:
            return self == LaurentPoly(0, [GaussianRational.coerce(other)])
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.min_exp, self.coeffs))

    def to_string(self, var: str = "z") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in sorted(self.terms().items(), reverse=True):
            cs = str(c)
            if " " in cs or ("+" in cs[1:] or "-" in cs[1:]):
                cs = f"({cs})"
            parts.append(f"{cs}*{var}^{k}" if k else cs)
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self.to_string()})"


def compose_laurent(p: Poly, inner: LaurentPoly) -> LaurentPoly:
    """Evaluate the polynomial ``p`` at a Laurent polynomial."""
    result = LaurentPoly()
    for c in reversed(p.coeffs):
        result = result * inner + c
    return result


# ---------------------------------------------------------------------------
# Constant grids


def grid_zeros(rows: int, cols: int | None = None) -> Grid:
    cols = rows if cols is None else cols
    return tuple(tuple(Fraction(0) for _ in range(cols)) for _ in range(rows))


def grid_identity(n: int) -> Grid:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def grid_from(rows: Sequence[Sequence]) -> Grid:
    return tuple(tuple(as_fraction(v) for v in row) for row in rows)


def grid_diag(values: Sequence) -> Grid:
    n = len(values)
    return tuple(
        tuple(as_fraction(values[i]) if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )


def grid_add(a: Grid, b: Grid) -> Grid:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def grid_sub(a: Grid, b: Grid) -> Grid:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def grid_scale(a: Grid, c) -> Grid:
    return tuple(tuple(x * c for x in row) for row in a)


def grid_mul(a: Grid, b: Grid) -> Grid:
    if len(a[0]) != len(b):
        raise ValueError("grid shape mismatch")
    bt = list(zip(*b))
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in bt)
        for row in a
    )


def grid_transpose(a: Grid) -> Grid:
    return tuple(zip(*a))


def grid_is_diagonal(a: Grid) -> bool:
    return all(a[i][j] == 0 for i in range(len(a)) for j in range(len(a[0])) if i != j)


class SingularMatrixError(ArithmeticError):
    pass


def grid_inverse(a: Grid) -> Grid:
    """Exact inverse by Gauss-Jordan elimination with full pivot search per column."""
    n = len(a)
    m = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError(f"matrix is singular (no pivot in column {col})")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def grid_det(a: Grid) -> Fraction:
    n = len(a)
    m = [list(row) for row in a]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] / m[col][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


# ---------------------------------------------------------------------------
# Polynomial matrices


class MatPoly:
    """Rectangular matrix of :class:`Poly` entries."""

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[Sequence]):
        rows = tuple(
            tuple(e if isinstance(e, Poly) else Poly.const(e) for e in row) for row in entries
        )
        if not rows or not rows[0]:
            raise ValueError("MatPoly needs at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("MatPoly rows have unequal length")
        self.entries = rows

    @classmethod
    def identity(cls, n: int) -> "MatPoly":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "MatPoly":
        cols = rows if cols is None else cols
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def from_grid(cls, grid: Grid) -> "MatPoly":
        return cls([[Poly.const(v) for v in row] for row in grid])

    @classmethod
    def build(cls, rows: int, cols: int, f: Callable[[int, int], object]) -> "MatPoly":
        return cls([[f(i, j) for j in range(cols)] for i in range(rows)])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx) -> Poly:
        i, j = idx
        return self.entries[i][j]

    def map(self, f: Callable[[Poly], Poly]) -> "MatPoly":
        return MatPoly([[f(e) for e in row] for row in self.entries])

    @property
    def degree(self) -> int:
        return max(e.degree for row in self.entries for e in row)

    def coefficient(self, k: int) -> Grid:
        return tuple(tuple(e.coeff(k) for e in row) for row in self.entries)

    def transpose(self) -> "MatPoly":
        return MatPoly(list(zip(*self.entries)))

    @property
    def T(self) -> "MatPoly":
        return self.transpose()

    def derivative(self, k: int = 1) -> "MatPoly":
        return self.map(lambda p: p.derivative(k))

    def compose(self, inner: Poly) -> "MatPoly":
        return self.map(lambda p: p.compose(inner))

    def __add__(self, other: "MatPoly") -> "MatPoly":
        if not isinstance(other, MatPoly):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return MatPoly(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def __neg__(self):
        return self.map(lambda p: -p)

    def __sub__(self, other: "MatPoly") -> "MatPoly":
        return self + (-other)

    def __mul__(self, c):
        """Entrywise scaling by a rational or by a scalar polynomial."""
        if isinstance(c, (int, Fraction, Poly)):
            return self.map(lambda p: p * c)
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other: "MatPoly") -> "MatPoly":
        if not isinstance(other, MatPoly):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = list(zip(*other.entries))
        out = []
        for row in self.entries:
            new_row = []
            for col in ocols:
                acc = ZERO
                for a, b in zip(row, col):
                    if a.coeffs and b.coeffs:
                        acc = acc + a * b
                new_row.append(acc)
            out.append(new_row)
        return MatPoly(out)

    def eval(self, x) -> list[list]:
        return [[e(x) for e in row] for row in self.entries]

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def __eq__(self, other):
        if not isinstance(other, MatPoly):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def first_difference(self, other: "MatPoly") -> tuple[int, int, Poly, Poly] | None:
        """Index and values of the first differing entry, or ``None``."""
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        for i in range(self.rows):
            for j in range(self.cols):
                if self.entries[i][j] != other.entries[i][j]:
                    return i, j, self.entries[i][j], other.entries[i][j]
        return None

    def to_strings(self, var: str = "x") -> list[list[str]]:
        return [[e.to_string(var) for e in row] for row in self.entries]

    def __repr__(self):
        return f"MatPoly({self.to_strings()})"


def exchange_matrix(n: int) -> MatPoly:
    """The anti-diagonal involution ``J``."""
    return MatPoly.build(n, n, lambda i, j: ONE if i + j == n - 1 else ZERO)


def matpoly_det(m: MatPoly) -> Poly:
    """Determinant by fraction-free (Bareiss) elimination over Q[x]."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    a = [list(row) for row in m.entries]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def invert_unitriangular(m: MatPoly) -> MatPoly:
    """Polynomial inverse of a unipotent lower-triangular matrix."""
    n = m.rows
    if m.cols != n:
        raise ValueError("matrix is not square")
    for i in range(n):
        if m[i, i] != ONE:
            raise ValueError(f"diagonal entry ({i},{i}) is not 1")
        for j in range(i + 1, n):
            if not m[i, j].is_zero():
                raise ValueError(f"entry ({i},{j}) above the diagonal is nonzero")
    inv = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    # column by column forward substitution: inv[i][j] = -sum_{k<i} m[i][k] inv[k][j]
    for j in range(n):
        for i in range(j + 1, n):
            acc = ZERO
            for k in range(j, i):
                if not m[i, k].is_zero() and not inv[k][j].is_zero():
                    acc = acc + m[i, k] * inv[k][j]
            inv[i][j] = -acc
    return MatPoly(inv)
