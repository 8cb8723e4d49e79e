"""Rendering of exact tables as JSON, CSV or aligned text, and parsing them back."""

from __future__ import annotations

import csv
import io
import json
import re
from fractions import Fraction
from typing import Any

from .exact import LaurentPoly, MatPoly, PiRational, Poly, format_fraction


def _float_str(v: float, precision: int | None) -> str:
    if precision is None:
        return repr(float(v))
    return f"{float(v):.{precision}g}"


def _float_num(v, precision: int | None) -> float:
    return float(_float_str(v, precision))


def poly_to_float_string(p: Poly, var: str, precision: int | None = None) -> str:
    if p.is_zero():
        return "0.0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        parts.append(f"{_float_str(c, precision)}{'*' + mono if mono else ''}")
    return " + ".join(parts)


def value_to_json(v: Any, var: str = "x", as_float: bool = False, precision: int | None = None) -> Any:
    """Convert exact objects to JSON-ready strings (or floats with ``as_float``)."""
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, (int, Fraction)):
        return _float_num(v, precision) if as_float else format_fraction(Fraction(v))
    if isinstance(v, PiRational):
        return _float_num(float(v), precision) if as_float else str(v)
    if isinstance(v, Poly):
        return poly_to_float_string(v, var, precision) if as_float else v.to_string(var)
    if isinstance(v, LaurentPoly):
        return v.to_string(var)
    if isinstance(v, MatPoly):
        return [[value_to_json(e, var, as_float, precision) for e in row] for row in v.entries]
    if isinstance(v, float):
        return _float_num(v, precision)
    if isinstance(v, dict):
        return {str(k): value_to_json(x, var, as_float, precision) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [value_to_json(x, var, as_float, precision) for x in v]
    return str(v)


def to_json(params: dict, data: dict, equation: str) -> str:
    doc = {"params": params, "data": data, "provenance": {"equation": equation}}
    return json.dumps(doc, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def _walk(prefix: str, v: Any, out: list):
    if isinstance(v, dict):
        for k, x in v.items():
            _walk(f"{prefix}.{k}" if prefix else str(k), x, out)
    elif isinstance(v, list) and v and isinstance(v[0], list):
        for i, row in enumerate(v):
            for j, e in enumerate(row):
                out.append((prefix, i, j, e))
    elif isinstance(v, list):
        for i, e in enumerate(v):
            out.append((prefix, i, "", e))
    else:
        out.append((prefix, "", "", v))


def to_csv(data: dict) -> str:
    """One exact entry per row: ``table,row,col,value``."""
    rows: list = []
    _walk("", data, rows)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["table", "row", "col", "value"])
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def to_pretty(data: dict) -> str:
    lines: list[str] = []

    def emit(name: str, v: Any):
        if isinstance(v, dict):
            for k, x in v.items():
                emit(f"{name}.{k}" if name else str(k), x)
        elif isinstance(v, list) and v and isinstance(v[0], list):
            lines.append(f"{name}:")
            width = max(len(str(e)) for row in v for e in row)
            for row in v:
                lines.append("  [ " + "  ".join(str(e).rjust(width) for e in row) + " ]")
        else:
            lines.append(f"{name}: {v}")

    emit("", data)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Parsing back


_TERM = re.compile(r"^(?P<coef>\d+(?:/\d+)?)?\*?(?P<var>[a-z])?(?:\^(?P<exp>\d+))?$")


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


def parse_pi(text: str) -> Fraction:
    """Coefficient of ``pi`` in a ``p/q·pi`` string (``0`` allowed)."""
    text = text.strip()
    if text == "0":
        return Fraction(0)
    if not text.endswith("·pi"):
        raise ValueError(f"not a multiple of pi: {text!r}")
    return Fraction(text[: -len("·pi")])


def parse_poly(text: str) -> Poly:
    """Inverse of ``Poly.to_string`` for any variable name."""
    text = text.strip()
    if text == "0":
        return Poly()
    tokens = re.findall(r"[+-]|[^\s+-]+", text)
    sign = 1
    coeffs: dict[int, Fraction] = {}
    for tok in tokens:
        if tok in "+-":
            sign = -1 if tok == "-" else 1
            continue
        m = _TERM.match(tok)
        if not m:
            raise ValueError(f"cannot parse term {tok!r}")
        c = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("var"):
            k = int(m.group("exp")) if m.group("exp") else 1
        else:
            k = 0
        coeffs[k] = coeffs.get(k, Fraction(0)) + sign * c
        sign = 1
    top = max(coeffs) if coeffs else -1
    return Poly([coeffs.get(k, 0) for k in range(top + 1)])
