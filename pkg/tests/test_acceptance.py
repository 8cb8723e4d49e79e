"""Acceptance criteria 1-13, one test each.

Every test prints a single ``criterion N: PASS|FAIL`` line with its runtime.
Run standalone with ``python3 tests/test_acceptance.py`` to get only the
summary lines.
"""

from __future__ import annotations

import sys
import time
from fractions import Fraction

import pytest

from mvcheb import diffops, group, hypergeometric, recurrence, special, weight
from mvcheb.diffops import apply_right
from mvcheb.exact import MatPoly, PiRational, Poly

# criteria without an explicit runtime bound get this one
DEFAULT_LIMIT = 60.0

_printer = print


def _report(number: int, title: str, ok: bool, elapsed: float, limit: float, detail: str = "") -> None:
    status = "PASS" if ok and elapsed < limit else "FAIL"
    line = f"criterion {number:2d}: {status}  {title}  ({elapsed:.2f}s, limit {limit:.0f}s)"
    if detail:
        line += f"  [{detail}]"
    _printer(line)


@pytest.fixture(autouse=True)
def _show_lines(capsys, monkeypatch):
    # print the summary line straight to the terminal even when output is captured
    def show(line):
        with capsys.disabled():
            sys.stdout.write("\n" + line + "\n")

    monkeypatch.setattr(sys.modules[__name__], "_printer", show)


def _timed(fn):
    start = time.perf_counter()
    ok, detail = fn()
    return ok, detail, time.perf_counter() - start


def _first_failure(cases):
    for label, ok in cases:
        if not ok:
            return False, f"first failure: {label}"
    return True, ""


# ---------------------------------------------------------------------------


def check_ldu():
    return _first_failure((f"2l={tl}", weight.verify_ldu(tl)) for tl in range(7))


def check_det():
    return _first_failure((f"2l={tl}", weight.det_weight(tl).matches) for tl in range(6))


def check_udl_fourier():
    def cases():
        for tl in range(5):
            yield f"udl 2l={tl}", weight.udl_check(tl)
            for n in range(tl + 1):
                for m in range(tl + 1):
                    yield f"fourier 2l={tl} n={n} m={m}", weight.cg_fourier_check(tl, n, m)

    return _first_failure(cases())


def check_racah_integral():
    def cases():
        for n in range(5):
            for m in range(n + 1):
                for k in range(m + 1):
                    for t in range(n + 1):
                        yield f"k={k} t={t} m={m} n={n}", weight.racah_integral_check(k, t, m, n)

    vanishing = sum(
        1 for n in range(5) for m in range(n + 1) for k in range(m + 1) for t in range(m + 1, n + 1)
    )
    ok, detail = _first_failure(cases())
    return ok, detail or f"{vanishing} cases with t > m"


def check_orthogonality():
    def cases():
        for tl in range(5):
            size = tl + 1
            zero = tuple(tuple(PiRational(0) for _ in range(size)) for _ in range(size))
            ident = MatPoly.identity(size)
            yield f"H0 2l={tl}", (
                recurrence.squared_norm_H(tl, 0) == weight.h0_expected(tl)
                and recurrence.inner_product_W(tl, ident, ident) == weight.h0_expected(tl)
            )
            ps = [recurrence.monic_P(tl, n) for n in range(5)]
            for n in range(5):
                for m in range(5):
                    want = recurrence.squared_norm_H(tl, n) if n == m else zero
                    yield f"2l={tl} n={n} m={m}", recurrence.inner_product_W(tl, ps[n], ps[m]) == want
        yield "(H1)00 at 2l=1", recurrence.squared_norm_H(1, 1)[0][0] == PiRational(Fraction(3, 16))

    return _first_failure(cases())


def _eigen(p, op, lam):
    return apply_right(p, op) == MatPoly.from_grid(lam) @ p


def check_eigen():
    def cases():
        for tl in range(5):
            dt, et = diffops.build_Dtilde(tl), diffops.build_Etilde(tl) if tl else None
            for n in range(6):
                p = recurrence.monic_P(tl, n)
                yield f"D~ 2l={tl} n={n}", _eigen(p, dt, diffops.lambda_Dtilde(tl, n))
                if tl:
                    yield f"E~ 2l={tl} n={n}", _eigen(p, et, diffops.lambda_Etilde(tl, n))
        for tl in range(1, 4):
            yield f"[D~,E~] 2l={tl}", diffops.commutator(diffops.build_Dtilde(tl), diffops.build_Etilde(tl)).is_zero()
            yield f"[D,E] 2l={tl}", diffops.commutator(diffops.build_D(tl), diffops.build_E(tl)).is_zero()
        for tl in range(5):
            ops = [diffops.build_Dtilde(tl), diffops.build_D(tl)]
            if tl:
                ops += [diffops.build_Etilde(tl), diffops.build_E(tl)]
            for op in ops:
                yield f"symmetry 2l={tl}", diffops.symmetry_check(tl, op, 3)

    return _first_failure(cases())


def check_two_h_one():
    strict = []

    def cases():
        for tl in range(1, 4):
            for a in (Fraction(1, 3), Fraction(-1, 3), Fraction(5, 7)):
                if not hypergeometric.degeneracy_check(tl, a, 4):
                    strict.append(f"2l={tl} alpha={a}")
                for n in range(5):
                    sep = hypergeometric.separation_witness(tl, a, n)
                    yield f"separation 2l={tl} alpha={a} n={n}", sep is None
                    if sep is not None:
                        continue
                    r = recurrence.monic_R(tl, n)
                    rows = hypergeometric.rows_via_2h1(tl, a, n)
                    yield f"rows 2l={tl} alpha={a} n={n}", all(
                        rows[i] == [r[i, j] for j in range(tl + 1)] for i in range(tl + 1)
                    )
        yield "2l=0", all(hypergeometric.row_via_2h1(0, 0, n, 0) == [recurrence.monic_R(0, n)[0, 0]] for n in range(5))

    ok, detail = _first_failure(cases())
    note = "strictly degenerate within one degree: " + ", ".join(strict) if strict else "all strictly non-degenerate"
    return ok, (detail + "; " if detail else "") + note


def check_decoupling():
    def cases():
        for tl in range(1, 4):
            got = diffops.conjugate_by_M(tl, diffops.combine_D_alpha(tl, -tl))
            yield f"D-2lE 2l={tl}", got == diffops.script_D_expected(tl) and got.is_diagonal()
            yield f"E 2l={tl}", diffops.conjugate_by_M(tl, diffops.build_E(tl)) == diffops.script_E_expected(tl)
            yield f"alpha=0 2l={tl}", not diffops.conjugate_by_M(tl, diffops.build_D(tl)).is_diagonal()

    return _first_failure(cases())


def check_closed_form():
    def cases():
        for tl in range(5):
            for n in range(5):
                yield f"R_n M 2l={tl} n={n}", diffops.scriptR_factorization_check(tl, n)
                yield f"P_n L 2l={tl} n={n}", diffops.scriptP_gegenbauer_check(tl, n)
                for k in range(tl + 1):
                    yield f"c_k 2l={tl} k={k} n={n}", diffops.c_recurrence(tl, k, n) == [
                        diffops.c_closed(tl, k, j, n) for j in range(tl + 1)
                    ]
                    for m in range(5):
                        yield f"c-orth 2l={tl} n={n} m={m} k={k}", diffops.c_orthogonality_check(tl, n, m, k)

    return _first_failure(cases())


def check_group():
    def cases():
        for tl in range(1, 5):
            yield f"relation 2l={tl}", group.group_operator_relation_check(tl)
        for tl in range(4):
            yield f"phi0 2l={tl}", group.phi0_identity_checks(tl)

    return _first_failure(cases())


def check_appendix():
    def cases():
        for tl in range(5):
            for n in range(min(4, tl) + 1):
                for m in range(n + 1):
                    for k in range(m + 1):
                        yield f"racah sum 2l={tl} n={n} m={m} k={k}", special.racah_sum_check(tl, n, m, k)
                        yield f"beta 2l={tl} n={n} m={m} k={k}", (
                            special.beta_via_racah(tl, m, n, k) == special.beta_closed(tl, m, n, k)
                        )
        for tl in range(4):
            for p in range(5):
                yield f"moment 2l={tl} p={p}", weight.generalized_moment(tl, p) == weight.generalized_moment_closed(tl, p)

    return _first_failure(cases())


def check_scalar():
    x = Poly.monomial(1)
    chebyshev_op = (Poly(), x * -3, Poly((1, 0, -1)))

    def cases():
        op = diffops.build_Dtilde(0)
        yield "D~ is the Chebyshev operator", tuple(op.coeff(i)[0, 0] for i in range(3)) == chebyshev_op
        for n in range(11):
            p = recurrence.monic_P(0, n)
            yield f"P_{n}", p[0, 0] == special.chebyshev_u(n) * Fraction(1, 2**n)
            yield f"H_{n}", recurrence.squared_norm_H(0, n) == ((PiRational(Fraction(1, 2 ** (2 * n + 1))),),)
            yield f"eigenvalue n={n}", diffops.lambda_Dtilde(0, n)[0][0] == -n * (n + 2) and _eigen(
                p, op, diffops.lambda_Dtilde(0, n)
            )

    return _first_failure(cases())


def check_nevai():
    devs = [recurrence.nevai_deviation(4, n) for n in range(10, 201)]
    xs = [d[0] for d in devs]
    ys = [d[1] for d in devs]
    mono_x = all(a > b for a, b in zip(xs, xs[1:]))
    mono_y = all(a > b for a, b in zip(ys, ys[1:]))
    bound = 0.3 / 200
    ok = mono_x and mono_y and xs[-1] < bound and ys[-1] < bound
    detail = f"n=200: |X-1/2|={xs[-1]:.3e}, |Y-1/16|={ys[-1]:.3e}, bound {bound:.1e}"
    return ok, detail


CRITERIA = [
    (1, "LDU factorization, 2l <= 6", check_ldu, 5.0),
    (2, "determinant exponent and constant, 2l <= 5", check_det, 10.0),
    (3, "UDL and Fourier expansion, 2l <= 4", check_udl_fourier, 30.0),
    (4, "Racah integral, k <= m <= n <= 4, t <= n", check_racah_integral, DEFAULT_LIMIT),
    (5, "orthogonality and norms, n, m <= 4, 2l <= 4", check_orthogonality, DEFAULT_LIMIT),
    (6, "eigen-equations, commutation, symmetry", check_eigen, DEFAULT_LIMIT),
    (7, "hypergeometric rows, n <= 4, 2l <= 3", check_two_h_one, DEFAULT_LIMIT),
    (8, "decoupling by M, 2l <= 3", check_decoupling, DEFAULT_LIMIT),
    (9, "Racah x Gegenbauer closed form, n <= 4, 2l <= 4", check_closed_form, DEFAULT_LIMIT),
    (10, "group-side operator relation and spherical-function identities", check_group, DEFAULT_LIMIT),
    (11, "Racah sum, beta and moments", check_appendix, DEFAULT_LIMIT),
    (12, "scalar reduction, n <= 10", check_scalar, DEFAULT_LIMIT),
    (13, "Nevai limits at 2l = 4, n = 10..200", check_nevai, DEFAULT_LIMIT),
]


@pytest.mark.parametrize(
    "number, title, check, limit", CRITERIA, ids=[f"criterion_{c[0]:02d}" for c in CRITERIA]
)
def test_criterion(number, title, check, limit):
    ok, detail, elapsed = _timed(check)
    _report(number, title, ok, elapsed, limit, detail)
    assert ok, detail
    assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit:.0f}s"


if __name__ == "__main__":
    failed = 0
    for number, title, check, limit in CRITERIA:
        ok, detail, elapsed = _timed(check)
        _report(number, title, ok, elapsed, limit, detail)
        failed += not (ok and elapsed < limit)
    sys.exit(1 if failed else 0)
