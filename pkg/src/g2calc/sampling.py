"""Seeded random polynomials, forms and maps for the randomized law checks."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .exterior import Chart, DifferentialForm, PolyMap
from .poly import ComplexPolynomial, Polynomial

DEFAULT_SEED = 20240601


def rational(rng: random.Random, span: int = 5, denom: int = 3) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, denom))


def nonzero_rational(rng: random.Random, span: int = 5, denom: int = 3) -> Fraction:
    while True:
        q = rational(rng, span, denom)
        if q:
            return q


def polynomial(rng: random.Random, variables, max_terms: int = 3, max_degree: int = 2) -> Polynomial:
    variables = tuple(variables)
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = [0] * len(variables)
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(len(variables))] += 1
        terms[tuple(exps)] = rational(rng)
    return Polynomial(variables, terms)


def complex_polynomial(rng: random.Random, variables, **kw) -> ComplexPolynomial:
    im = polynomial(rng, variables, **kw) if rng.random() < 0.3 else Polynomial.zero(variables)
    return ComplexPolynomial(polynomial(rng, variables, **kw), im)


def form(rng: random.Random, chart: Chart, degree: int | None = None, max_terms: int = 3, **kw) -> DifferentialForm:
    if degree is None:
        degree = rng.randint(0, chart.dim)
    index_sets = list(itertools.combinations(range(chart.dim), degree))
    chosen = rng.sample(index_sets, min(len(index_sets), rng.randint(1, max_terms)))
    return DifferentialForm(chart, degree, {idx: complex_polynomial(rng, chart.coords, **kw) for idx in chosen})


def poly_map(rng: random.Random, source: Chart, target: Chart, **kw) -> PolyMap:
    """Random polynomial map; each component carries a nonzero linear term so the map is rarely degenerate."""
    comps = []
    for _ in target.coords:
        linear = source.coord(rng.choice(source.coords)) * nonzero_rational(rng)
        comps.append(polynomial(rng, source.coords, **kw) + linear)
    return PolyMap(source, target, tuple(comps))


def point(rng: random.Random, chart: Chart) -> dict[str, Fraction]:
    return {c: rational(rng) for c in chart.coords}


def invertible_matrix(rng: random.Random, n: int, span: int = 4) -> list[list[Fraction]]:
    from .linalg import det

    while True:
        m = [[rational(rng, span) for _ in range(n)] for _ in range(n)]
        if det(m):
            return m


def complex_matrix3(rng: random.Random, span: int = 4) -> list[list[tuple[Fraction, Fraction]]]:
    """Invertible 3×3 matrix over Q(i), entries as (re, im)."""
    from .g2 import complex_det3

    while True:
        m = [[(rational(rng, span), rational(rng, span)) for _ in range(3)] for _ in range(3)]
        if complex_det3(m) != (0, 0):
            return m
