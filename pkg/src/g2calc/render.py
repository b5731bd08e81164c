"""Deterministic text and JSON renderings of differential forms."""

from __future__ import annotations

import json
from typing import Sequence

from .exterior import Chart, DifferentialForm
from .poly import ComplexPolynomial, Polynomial, _unicode_name

FORMATS = ("unicode", "ascii", "json")


def _basis(form: DifferentialForm, idx: tuple[int, ...], unicode: bool) -> str:
    names = [form.chart.coords[i] for i in idx]
    if unicode:
        return "∧".join("d" + _unicode_name(n) for n in names)
    return "^".join("d" + n for n in names)


def _coeff_parts(c: ComplexPolynomial, unicode: bool) -> tuple[str, str]:
    """(sign, body) for a coefficient; body is empty for a bare ±1."""
    if c.im.is_zero():
        p = c.re
        if len(p) == 1 and p.is_constant():
            v = p.constant_value()
            return ("-" if v < 0 else "+"), ("" if abs(v) == 1 else str(abs(v)))
        if len(p) == 1:
            s = p.to_str(unicode)
            return ("-", s[1:]) if s.startswith("-") else ("+", s)
        return "+", f"({p.to_str(unicode)})"
    if c.re.is_zero():
        sign, body = _coeff_parts(ComplexPolynomial(c.im), unicode)
        return sign, f"{body}{'·' if unicode and body else '*' if body else ''}i"
    re = c.re.to_str(unicode)
    im = c.im.to_str(unicode)
    return "+", f"({re} + i·({im}))" if unicode else f"({re} + i*({im}))"


def render_form(form: DifferentialForm, fmt: str = "unicode", order: Sequence[tuple[int, ...]] | None = None) -> str:
    """Render ``form`` as ``unicode``, ``ascii`` or ``json`` text.

    Terms appear in lexicographic index order unless ``order`` lists index
    tuples to put first (remaining terms follow canonically).
    """
    if fmt == "json":
        return json.dumps(form_to_json(form), ensure_ascii=False, separators=(", ", ": "))
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    unicode = fmt == "unicode"
    if form.is_zero():
        return "0"
    items = _ordered_items(form, order)
    mul = "·" if unicode else "*"
    out = []
    for n, (idx, c) in enumerate(items):
        sign, body = _coeff_parts(c, unicode)
        if idx:
            basis = _basis(form, idx, unicode)
            term = f"{body}{mul}{basis}" if body else basis
        else:
            term = body or "1"
        if n == 0:
            out.append(("-" if sign == "-" else "") + term)
        else:
            out.append(f" {sign} {term}")
    return "".join(out)


def _ordered_items(form: DifferentialForm, order):
    terms = form.terms
    items = []
    for idx in order or ():
        idx = tuple(idx)
        if idx in terms:
            items.append((idx, terms.pop(idx)))
    items.extend(sorted(terms.items()))
    return items


def form_to_json(form: DifferentialForm) -> dict:
    """``{chart, degree, terms: [{indices, re, im}]}`` with 1-based indices."""
    return {
        "chart": {"name": form.chart.name, "coords": list(form.chart.coords)},
        "degree": form.degree,
        "terms": [
            {"indices": [i + 1 for i in idx], "re": c.re.to_str(), "im": c.im.to_str()}
            for idx, c in form.items()
        ],
    }


def form_from_json(data: dict | str) -> DifferentialForm:
    if isinstance(data, str):
        data = json.loads(data)
    chart = Chart(data["chart"]["name"], tuple(data["chart"]["coords"]))
    terms = {}
    for t in data["terms"]:
        idx = tuple(i - 1 for i in t["indices"])
        terms[idx] = ComplexPolynomial(
            Polynomial.parse(t["re"], chart.coords), Polynomial.parse(t["im"], chart.coords)
        )
    return DifferentialForm(chart, data["degree"], terms)
