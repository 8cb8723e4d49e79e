"""Verification suites over parameter ranges, with exact witnesses on failure.

Each suite yields cases ``(case_id, params, thunk)``; a thunk returns ``None``
on success or a short witness string describing the first differing entry.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from . import diffops, group, hypergeometric, recurrence, special, weight
from .exact import LaurentPoly, MatPoly, PiRational, Poly, format_fraction

log = logging.getLogger(__name__)

DEFAULT_ALPHAS = (Fraction(1, 3), Fraction(-1, 3), Fraction(5, 7))


# ---------------------------------------------------------------------------
# Rendering of witnesses


def render_value(v) -> str:
    if isinstance(v, Fraction):
        return format_fraction(v)
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Poly):
        return v.to_string()
    if isinstance(v, LaurentPoly):
        return v.to_string("z")
    return str(v)


def first_difference(a, b, path: str = "") -> str | None:
    """Describe the first position where ``a`` and ``b`` differ, or ``None``."""
    if isinstance(a, MatPoly) and isinstance(b, MatPoly):
        if a.shape != b.shape:
            return f"{path}shape {a.shape} != {b.shape}"
        d = a.first_difference(b)
        if d is None:
            return None
        i, j, x, y = d
        return f"{path}[{i},{j}]: {render_value(x)} != {render_value(y)}"
    if isinstance(a, diffops.MatDiffOp) and isinstance(b, diffops.MatDiffOp):
        k = max(len(a.coeffs), len(b.coeffs))
        for i in range(k):
            w = first_difference(a.coeff(i), b.coeff(i), f"{path}order {i} ")
            if w:
                return w
        return None
    if isinstance(a, (tuple, list)) and isinstance(b, (tuple, list)):
        if len(a) != len(b):
            return f"{path}length {len(a)} != {len(b)}"
        for idx, (x, y) in enumerate(zip(a, b)):
            w = first_difference(x, y, f"{path}[{idx}]")
            if w:
                return w
        return None
    if a != b:
        return f"{path}: {render_value(a)} != {render_value(b)}"
    return None


def _expect(cond: bool, message: str) -> str | None:
    return None if cond else message


# ---------------------------------------------------------------------------
# Report


@dataclass
class CaseResult:
    case_id: str
    params: dict
    passed: bool
    witness: str | None = None


@dataclass
class VerifyReport:
    suite: str
    cases: list = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def failures(self) -> list:
        return [c for c in self.cases if not c.passed]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "cases": [
                {"case": c.case_id, "params": c.params, "passed": c.passed, "witness": c.witness}
                for c in self.cases
            ],
        }


Case = tuple  # (case_id, params, thunk)


@dataclass(frozen=True)
class Ranges:
    two_l_max: int = 2
    degree_max: int = 3
    alphas: tuple = DEFAULT_ALPHAS


# ---------------------------------------------------------------------------
# Suites


def _ldu(r: Ranges) -> Iterator[Case]:
    for tl in range(r.two_l_max + 1):
        yield f"ldu/2l={tl}", {"two_l": tl}, lambda tl=tl: first_difference(
            weight.ldu_product(tl), weight.weight_poly(tl)
        )


def _det(r: Ranges) -> Iterator[Case]:
    def run(tl):
        res = weight.det_weight(tl)
        return _expect(
            res.matches,
            f"constant {format_fraction(res.constant)}, exponent {format_fraction(res.exponent)}",
        )

    for tl in range(r.two_l_max + 1):
        yield f"det/2l={tl}", {"two_l": tl}, lambda tl=tl: run(tl)


def _udl(r: Ranges) -> Iterator[Case]:
    for tl in range(r.two_l_max + 1):
        yield f"udl/2l={tl}", {"two_l": tl}, lambda tl=tl: first_difference(
            weight.udl_product(tl), weight.weight_poly(tl)
        )


def _fourier(r: Ranges) -> Iterator[Case]:
    def cg(tl, n, m):
        lhs, rhs, direct = weight.cg_fourier_sides(tl, n, m)
        return first_difference(lhs, rhs, "gegenbauer vs binomial ") or first_difference(
            rhs, direct, "binomial vs W(cos t) "
        )

    def hahn(k, n):
        a, b, c = special.hahn_fourier_sides(k, n)
        return first_difference(a, b, "gegenbauer vs hahn ") or first_difference(b, c, "hahn vs closed ")

    for tl in range(r.two_l_max + 1):
        for n in range(tl + 1):
            for m in range(tl + 1):
                yield f"fourier/2l={tl}/n={n}/m={m}", {"two_l": tl, "n": n, "m": m}, (
                    lambda tl=tl, n=n, m=m: cg(tl, n, m)
                )
    for n in range(r.degree_max + 1):
        for k in range(n + 1):
            yield f"fourier/hahn/n={n}/k={k}", {"n": n, "k": k}, lambda k=k, n=n: hahn(k, n)


def _racah_integral(r: Ranges) -> Iterator[Case]:
    def run(k, t, m, n):
        lhs, rhs = weight.racah_integral_sides(k, t, m, n)
        return first_difference(lhs, rhs)

    top = r.degree_max
    for n in range(top + 1):
        for m in range(n + 1):
            for k in range(m + 1):
                for t in range(n + 1):
                    yield (
                        f"racah-integral/n={n}/m={m}/k={k}/t={t}",
                        {"n": n, "m": m, "k": k, "t": t},
                        lambda k=k, t=t, m=m, n=n: run(k, t, m, n),
                    )


def _moments(r: Ranges) -> Iterator[Case]:
    for tl in range(r.two_l_max + 1):
        yield f"moments/2l={tl}/h0", {"two_l": tl}, lambda tl=tl: first_difference(
            weight.generalized_moment(tl, 0), weight.h0_expected(tl)
        )
        for p in range(r.degree_max + 1):
            yield f"moments/2l={tl}/p={p}", {"two_l": tl, "p": p}, lambda tl=tl, p=p: first_difference(
                weight.generalized_moment(tl, p), weight.generalized_moment_closed(tl, p)
            )


def _orthogonality(r: Ranges) -> Iterator[Case]:
    def run(tl, n, m):
        got = recurrence.inner_product_W(tl, recurrence.monic_P(tl, n), recurrence.monic_P(tl, m))
        size = tl + 1
        want = recurrence.squared_norm_H(tl, n) if n == m else tuple(
            tuple(PiRational(0) for _ in range(size)) for _ in range(size)
        )
        return first_difference(got, want)

    for tl in range(r.two_l_max + 1):
        for n in range(r.degree_max + 1):
            for m in range(n + 1):
                yield f"orthogonality/2l={tl}/n={n}/m={m}", {"two_l": tl, "n": n, "m": m}, (
                    lambda tl=tl, n=n, m=m: run(tl, n, m)
                )


def eigen_witness(p: MatPoly, op: diffops.MatDiffOp, lam) -> str | None:
    return first_difference(diffops.apply_right(p, op), MatPoly.from_grid(lam) @ p)


def _eigen(r: Ranges) -> Iterator[Case]:
    def run(tl, n):
        pn, rn = recurrence.monic_P(tl, n), recurrence.monic_R(tl, n)
        w = eigen_witness(pn, diffops.build_Dtilde(tl), diffops.lambda_Dtilde(tl, n))
        w = w or eigen_witness(rn, diffops.build_D(tl), diffops.lambda_D(tl, n))
        if tl >= 1:
            w = w or eigen_witness(pn, diffops.build_Etilde(tl), diffops.lambda_Etilde(tl, n))
            w = w or eigen_witness(rn, diffops.build_E(tl), diffops.lambda_E(tl, n))
        return w

    for tl in range(r.two_l_max + 1):
        for n in range(r.degree_max + 1):
            yield f"eigen/2l={tl}/n={n}", {"two_l": tl, "n": n}, lambda tl=tl, n=n: run(tl, n)


def _commute(r: Ranges) -> Iterator[Case]:
    def run(tl):
        zx = diffops.commutator(diffops.build_Dtilde(tl), diffops.build_Etilde(tl))
        zu = diffops.commutator(diffops.build_D(tl), diffops.build_E(tl))
        zeros = (MatPoly.zeros(tl + 1),)
        return first_difference(zx, diffops.MatDiffOp(zeros, "x"), "x ") or first_difference(
            zu, diffops.MatDiffOp(zeros, "u"), "u "
        )

    for tl in range(1, r.two_l_max + 1):
        yield f"commute/2l={tl}", {"two_l": tl}, lambda tl=tl: run(tl)


def _symmetry(r: Ranges) -> Iterator[Case]:
    def run(tl, name):
        op = {
            "Dtilde": diffops.build_Dtilde,
            "Etilde": diffops.build_Etilde,
            "D": diffops.build_D,
            "E": diffops.build_E,
        }[name](tl)
        w = diffops.symmetry_witness(tl, op, r.degree_max)
        if w is None:
            return None
        a, b, i, j, left, right = w
        return f"a={a} b={b} [{i},{j}]: {left} != {right}"

    for tl in range(r.two_l_max + 1):
        for name in ("Dtilde", "D") + (("Etilde", "E") if tl else ()):
            yield f"symmetry/2l={tl}/{name}", {"two_l": tl, "op": name}, lambda tl=tl, name=name: run(tl, name)


def _two_h_one(r: Ranges) -> Iterator[Case]:
    def run(tl, a, n):
        sep = hypergeometric.separation_witness(tl, a, n)
        if sep is not None:
            return f"eigenvalues {sep[0]} and {sep[1]} coincide"
        rn = recurrence.monic_R(tl, n)
        for i in range(tl + 1):
            w = first_difference(hypergeometric.row_via_2h1(tl, a, n, i), [rn[i, j] for j in range(tl + 1)], f"row {i} ")
            if w:
                return w
        return None

    for tl in range(r.two_l_max + 1):
        alphas = (Fraction(0),) if tl == 0 else r.alphas
        for a in alphas:
            for n in range(r.degree_max + 1):
                yield (
                    f"2h1/2l={tl}/alpha={format_fraction(a)}/n={n}",
                    {"two_l": tl, "alpha": format_fraction(a), "n": n},
                    lambda tl=tl, a=a, n=n: run(tl, a, n),
                )


def _decouple(r: Ranges) -> Iterator[Case]:
    def ops(tl):
        conj = diffops.conjugate_by_M(tl, diffops.combine_D_alpha(tl, -tl))
        w = first_difference(conj, diffops.script_D_expected(tl), "D-2lE ")
        w = w or first_difference(diffops.conjugate_by_M(tl, diffops.build_E(tl)), diffops.script_E_expected(tl), "E ")
        if not w and diffops.conjugate_by_M(tl, diffops.build_D(tl)).is_diagonal():
            w = "conjugate of D (alpha = 0) is unexpectedly diagonal"
        return w

    for tl in range(1, r.two_l_max + 1):
        yield f"decouple/2l={tl}", {"two_l": tl}, lambda tl=tl: ops(tl)
        for n in range(r.degree_max + 1):
            yield f"decouple/2l={tl}/n={n}", {"two_l": tl, "n": n}, lambda tl=tl, n=n: (
                _expect(diffops.script_R_eigen_check(tl, n), "R_n M is not an eigenfunction")
                or _expect(diffops.n_lambda_row_check(tl, n), "c_k N(lambda) != mu c_k")
            )


def _c_closed(r: Ranges) -> Iterator[Case]:
    def run(tl, n):
        w = diffops.scriptR_factorization_witness(tl, n)
        if w:
            return f"R_n M entry {w} differs from the closed form"
        if not diffops.scriptP_gegenbauer_check(tl, n):
            return "P_n L differs from the Gegenbauer form"
        for k in range(tl + 1):
            w = first_difference(
                diffops.c_recurrence(tl, k, n), [diffops.c_closed(tl, k, j, n) for j in range(tl + 1)], f"k={k} "
            )
            if w:
                return w
            for m in range(r.degree_max + 1):
                if not diffops.c_orthogonality_check(tl, n, m, k):
                    s = diffops.c_orthogonality_sides(tl, n, m, k)
                    return f"orthogonality k={k} m={m}: {s}"
        return None

    for tl in range(r.two_l_max + 1):
        for n in range(r.degree_max + 1):
            yield f"c-closed/2l={tl}/n={n}", {"two_l": tl, "n": n}, lambda tl=tl, n=n: run(tl, n)


def _group(r: Ranges) -> Iterator[Case]:
    def phi(tl):
        a, b = group.sigma_identity_sides(tl)
        c, d = group.upsilon_identity_sides(tl)
        return first_difference(a, b, "sigma ") or first_difference(c, d, "upsilon ")

    def rel(tl):
        return first_difference(group.group_second_order_image(tl), diffops.build_Dtilde(tl), "second order ") or (
            first_difference(group.group_first_order_image(tl), diffops.build_Etilde(tl).scale(-2), "first order ")
        )

    for tl in range(r.two_l_max + 1):
        yield f"group/phi0/2l={tl}", {"two_l": tl}, lambda tl=tl: phi(tl)
        if tl:
            yield f"group/relation/2l={tl}", {"two_l": tl}, lambda tl=tl: rel(tl)


def _appendix(r: Ranges) -> Iterator[Case]:
    def run(tl, n, m, k):
        lhs, rhs = special.racah_sum_sides(tl, n, m, k)
        return first_difference(lhs, rhs, "racah sum ") or first_difference(
            special.beta_via_racah(tl, m, n, k), special.beta_closed(tl, m, n, k), "beta "
        )

    for tl in range(r.two_l_max + 1):
        for n in range(tl + 1):
            for m in range(n + 1):
                for k in range(m + 1):
                    yield (
                        f"appendix/2l={tl}/n={n}/m={m}/k={k}",
                        {"two_l": tl, "n": n, "m": m, "k": k},
                        lambda tl=tl, n=n, m=m, k=k: run(tl, n, m, k),
                    )


SUITES: dict[str, Callable[[Ranges], Iterator[Case]]] = {
    "ldu": _ldu,
    "det": _det,
    "udl": _udl,
    "fourier": _fourier,
    "racah-integral": _racah_integral,
    "moments": _moments,
    "orthogonality": _orthogonality,
    "eigen": _eigen,
    "commute": _commute,
    "symmetry": _symmetry,
    "2h1": _two_h_one,
    "decouple": _decouple,
    "c-closed": _c_closed,
    "group": _group,
    "appendix": _appendix,
}


def thread_count() -> int:
    raw = os.environ.get("MVCHEB_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        n = os.cpu_count() or 1
    return max(1, n)


def _run_case(case: Case) -> CaseResult:
    case_id, params, thunk = case
    try:
        witness = thunk()
    except Exception as exc:  # a crash is a failed case, reported with its message
        log.debug("case %s raised", case_id, exc_info=True)
        witness = f"{type(exc).__name__}: {exc}"
    return CaseResult(case_id, params, witness is None, witness)


def run_suite(name: str, ranges: Ranges | None = None, threads: int | None = None) -> VerifyReport:
    if name not in SUITES:
        raise KeyError(name)
    ranges = ranges or Ranges()
    threads = threads or thread_count()
    start = time.perf_counter()
    cases = list(SUITES[name](ranges))
    if threads > 1 and len(cases) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_case, cases))
    else:
        results = [_run_case(c) for c in cases]
    results.sort(key=lambda c: c.case_id)
    return VerifyReport(name, results, (time.perf_counter() - start) * 1000)


def run_suites(names, ranges: Ranges | None = None, threads: int | None = None) -> list[VerifyReport]:
    return [run_suite(n, ranges, threads) for n in names]
