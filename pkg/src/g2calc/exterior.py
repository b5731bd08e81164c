"""Differential forms with polynomial coefficients on coordinate charts.

A form is stored as ``{index_tuple: ComplexPolynomial}`` with strictly increasing
0-based index tuples into ``chart.coords``.  Every sign is produced by counting
inversions when a concatenated index tuple is sorted, so the representation is
unique and equality is structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .poly import ComplexPolynomial, Polynomial, Scalar

__all__ = [
    "Chart",
    "ChartMismatchError",
    "DifferentialForm",
    "PolyMap",
    "VectorField",
    "eval_at_point",
    "exterior_derivative",
    "interior_product",
    "pullback",
    "wedge",
]


class ChartMismatchError(ValueError):
    """Raised when objects living on different charts are combined."""


@dataclass(frozen=True)
class Chart:
    name: str
    coords: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        if not self.coords:
            raise ValueError("a chart needs at least one coordinate")
        if len(set(self.coords)) != len(self.coords):
            raise ValueError(f"duplicate coordinate names in {self.coords}")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def index(self, name: str) -> int:
        try:
            return self.coords.index(name)
        except ValueError:
            raise KeyError(f"{name!r} is not a coordinate of chart {self.name!r}") from None

    def coord(self, name: str) -> Polynomial:
        return Polynomial.variable(name, self.coords)

    def const(self, value: Scalar) -> Polynomial:
        return Polynomial.constant(value, self.coords)

    def d(self, *names: str) -> "DifferentialForm":
        """``d(name1) ∧ d(name2) ∧ ...`` as a form with coefficient 1."""
        return DifferentialForm.monomial(self, [self.index(n) for n in names])

    def zero_form(self, degree: int) -> "DifferentialForm":
        return DifferentialForm(self, degree, {})

    def function(self, f: Polynomial | ComplexPolynomial | Scalar) -> "DifferentialForm":
        return DifferentialForm(self, 0, {(): _as_coeff(f, self.coords)})


def _as_coeff(f, variables) -> ComplexPolynomial:
    if isinstance(f, ComplexPolynomial):
        coeff = f
    elif isinstance(f, Polynomial):
        coeff = ComplexPolynomial(f)
    else:
        coeff = ComplexPolynomial.constant(f, variables)
    if coeff.variables != tuple(variables):
        raise ChartMismatchError(f"coefficient over {coeff.variables}, chart has {tuple(variables)}")
    return coeff


def _sort_sign(indices: Sequence[int]) -> tuple[int, tuple[int, ...]] | None:
    """Sign of the sorting permutation and the sorted tuple; None on a repeat."""
    if len(set(indices)) != len(indices):
        return None
    inversions = sum(1 for a in range(len(indices)) for b in range(a + 1, len(indices)) if indices[a] > indices[b])
    return (-1 if inversions % 2 else 1), tuple(sorted(indices))


class DifferentialForm:
    """Degree-``k`` form on ``chart``; immutable."""

    __slots__ = ("chart", "degree", "_terms")

    def __init__(self, chart: Chart, degree: int, terms: Mapping[Sequence[int], object] | None = None):
        if degree < 0:
            raise ValueError("degree must be non-negative")
        self.chart = chart
        self.degree = degree
        clean: dict[tuple[int, ...], ComplexPolynomial] = {}
        for idx, coeff in (terms or {}).items():
            idx = tuple(idx)
            if len(idx) != degree:
                raise ValueError(f"index tuple {idx} does not match degree {degree}")
            if any(not 0 <= i < chart.dim for i in idx):
                raise ValueError(f"index tuple {idx} out of range for chart {chart.name}")
            sorted_ = _sort_sign(idx)
            if sorted_ is None:
                continue
            sign, key = sorted_
            coeff = _as_coeff(coeff, chart.coords) * sign
            total = clean[key] + coeff if key in clean else coeff
            if total.is_zero():
                clean.pop(key, None)
            else:
                clean[key] = total
        self._terms = clean

    @classmethod
    def _raw(cls, chart: Chart, degree: int, terms: dict) -> "DifferentialForm":
        f = object.__new__(cls)
        f.chart, f.degree, f._terms = chart, degree, terms
        return f

    @classmethod
    def monomial(cls, chart: Chart, indices: Sequence[int], coeff=1) -> "DifferentialForm":
        return cls(chart, len(indices), {tuple(indices): coeff})

    @property
    def terms(self) -> dict[tuple[int, ...], ComplexPolynomial]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (lexicographic) index order."""
        return sorted(self._terms.items())

    def coefficient(self, *names: str) -> ComplexPolynomial:
        """Coefficient of ``d(names[0]) ∧ ...``, sign-adjusted for unsorted names."""
        idx = [self.chart.index(n) for n in names]
        sorted_ = _sort_sign(idx)
        if sorted_ is None or len(idx) != self.degree:
            return ComplexPolynomial.zero(self.chart.coords)
        sign, key = sorted_
        return self._terms.get(key, ComplexPolynomial.zero(self.chart.coords)) * sign

    def is_zero(self) -> bool:
        return not self._terms

    def is_real(self) -> bool:
        return all(c.is_real() for c in self._terms.values())

    def real(self) -> "DifferentialForm":
        return DifferentialForm._raw(
            self.chart, self.degree,
            {k: ComplexPolynomial(c.re) for k, c in self._terms.items() if not c.re.is_zero()},
        )

    def imag(self) -> "DifferentialForm":
        return DifferentialForm._raw(
            self.chart, self.degree,
            {k: ComplexPolynomial(c.im) for k, c in self._terms.items() if not c.im.is_zero()},
        )

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DifferentialForm):
            return NotImplemented
        if self.chart != other.chart:
            return False
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.chart, self.degree, frozenset(self._terms.items())))

    def _check(self, other: "DifferentialForm") -> None:
        if self.chart != other.chart:
            raise ChartMismatchError(f"{self.chart.name} vs {other.chart.name}")

    def __add__(self, other: "DifferentialForm") -> "DifferentialForm":
        if not isinstance(other, DifferentialForm):
            return NotImplemented
        self._check(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.degree != other.degree:
            raise ValueError(f"cannot add forms of degree {self.degree} and {other.degree}")
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out[k] + c if k in out else c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return DifferentialForm._raw(self.chart, self.degree, out)

    def __neg__(self) -> "DifferentialForm":
        return DifferentialForm._raw(self.chart, self.degree, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "DifferentialForm") -> "DifferentialForm":
        return self + (-other)

    def __mul__(self, scalar) -> "DifferentialForm":
        """Multiply by a function (int, Fraction, Polynomial or ComplexPolynomial)."""
        if isinstance(scalar, DifferentialForm):
            return NotImplemented
        s = _as_coeff(scalar, self.chart.coords)
        out = {}
        for k, c in self._terms.items():
            p = c * s
            if not p.is_zero():
                out[k] = p
        return DifferentialForm._raw(self.chart, self.degree, out)

    __rmul__ = __mul__

    def __xor__(self, other: "DifferentialForm") -> "DifferentialForm":
        return wedge(self, other)

    def __repr__(self) -> str:
        from .render import render_form

        return f"<{self.degree}-form on {self.chart.name}: {render_form(self, 'ascii')}>"


@dataclass(frozen=True)
class VectorField:
    chart: Chart
    components: tuple[Polynomial, ...]

    def __post_init__(self):
        comps = tuple(
            c if isinstance(c, Polynomial) else Polynomial.constant(c, self.chart.coords) for c in self.components
        )
        object.__setattr__(self, "components", comps)
        if len(comps) != self.chart.dim:
            raise ValueError(f"expected {self.chart.dim} components, got {len(comps)}")
        if any(c.variables != self.chart.coords for c in comps):
            raise ChartMismatchError("vector field components must be polynomials over the chart coordinates")

    @classmethod
    def coordinate(cls, chart: Chart, name: str) -> "VectorField":
        """The coordinate vector field d/d(name)."""
        i = chart.index(name)
        return cls(chart, tuple(int(j == i) for j in range(chart.dim)))


@dataclass(frozen=True)
class PolyMap:
    """Map ``source -> target`` given by one polynomial in the source coordinates per target coordinate."""

    source: Chart
    target: Chart
    components: tuple[Polynomial, ...]

    def __post_init__(self):
        comps = tuple(
            c if isinstance(c, Polynomial) else Polynomial.constant(c, self.source.coords) for c in self.components
        )
        object.__setattr__(self, "components", comps)
        if len(comps) != self.target.dim:
            raise ValueError(f"expected {self.target.dim} components, got {len(comps)}")
        if any(c.variables != self.source.coords for c in comps):
            raise ChartMismatchError("map components must be polynomials over the source coordinates")

    @classmethod
    def identity(cls, chart: Chart) -> "PolyMap":
        return cls(chart, chart, tuple(chart.coord(c) for c in chart.coords))

    @classmethod
    def linear(cls, source: Chart, target: Chart, matrix: Sequence[Sequence[Scalar]]) -> "PolyMap":
        """``target_i = sum_j matrix[i][j] * source_j``."""
        xs = [source.coord(c) for c in source.coords]
        comps = []
        for row in matrix:
            p = source.const(0)
            for a, x in zip(row, xs):
                if a:
                    p = p + x * Fraction(a)
            comps.append(p)
        return cls(source, target, tuple(comps))

    @classmethod
    def from_dict(cls, source: Chart, target: Chart, images: Mapping[str, Polynomial | Scalar]) -> "PolyMap":
        """Components given by target coordinate name; unlisted ones map to 0."""
        unknown = set(images) - set(target.coords)
        if unknown:
            raise KeyError(f"not target coordinates: {sorted(unknown)}")
        return cls(source, target, tuple(images.get(c, 0) for c in target.coords))

    def substitution(self) -> dict[str, Polynomial]:
        return dict(zip(self.target.coords, self.components))

    def jacobian(self) -> list[list[Polynomial]]:
        """``J[i][j] = d(component_i)/d(source_j)``."""
        return [[c.partial(v) for v in self.source.coords] for c in self.components]

    def __call__(self, point: Mapping[str, Scalar]) -> dict[str, Fraction]:
        return {t: c.eval(point) for t, c in zip(self.target.coords, self.components)}

    def then(self, other: "PolyMap") -> "PolyMap":
        """``other ∘ self``."""
        if other.source != self.target:
            raise ChartMismatchError(f"cannot compose: {self.target.name} -> {other.source.name}")
        sub = self.substitution()
        return PolyMap(self.source, other.target, tuple(c.compose(sub) for c in other.components))


def wedge(*forms: DifferentialForm) -> DifferentialForm:
    if not forms:
        raise ValueError("wedge of no forms")
    result = forms[0]
    for b in forms[1:]:
        result = _wedge2(result, b)
    return result


def _wedge2(a: DifferentialForm, b: DifferentialForm) -> DifferentialForm:
    a._check(b)
    degree = a.degree + b.degree
    out: dict[tuple[int, ...], ComplexPolynomial] = {}
    if degree <= a.chart.dim:
        for I, f in a._terms.items():
            for J, g in b._terms.items():
                sorted_ = _sort_sign(I + J)
                if sorted_ is None:
                    continue
                sign, key = sorted_
                c = f * g * sign
                s = out[key] + c if key in out else c
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
    return DifferentialForm._raw(a.chart, degree, out)


def exterior_derivative(a: DifferentialForm) -> DifferentialForm:
    """d(f dx_I) = sum_v (df/dv) dv ∧ dx_I."""
    coords = a.chart.coords
    out: dict[tuple[int, ...], ComplexPolynomial] = {}
    for I, f in a._terms.items():
        for v, name in enumerate(coords):
            if v in I:
                continue
            df = f.partial(name)
            if df.is_zero():
                continue
            pos = sum(1 for i in I if i < v)
            key = I[:pos] + (v,) + I[pos:]
            c = df if pos % 2 == 0 else -df
            s = out[key] + c if key in out else c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return DifferentialForm._raw(a.chart, a.degree + 1, out)


def interior_product(Y: VectorField, a: DifferentialForm) -> DifferentialForm:
    """Contraction of ``a`` with ``Y`` in the first slot."""
    if Y.chart != a.chart:
        raise ChartMismatchError(f"{Y.chart.name} vs {a.chart.name}")
    if a.degree == 0:
        raise ValueError("interior product of a 0-form is undefined")
    out: dict[tuple[int, ...], ComplexPolynomial] = {}
    for I, f in a._terms.items():
        for p, i in enumerate(I):
            y = Y.components[i]
            if y.is_zero():
                continue
            key = I[:p] + I[p + 1:]
            c = f * y
            if p % 2:
                c = -c
            s = out[key] + c if key in out else c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return DifferentialForm._raw(a.chart, a.degree - 1, out)


def pullback(F: PolyMap, a: DifferentialForm) -> DifferentialForm:
    """F*(f dx_I) = (f∘F) dF_{i1} ∧ ... ∧ dF_{ik}."""
    if a.chart != F.target:
        raise ChartMismatchError(f"form lives on {a.chart.name}, map targets {F.target.name}")
    src = F.source
    sub = F.substitution()
    dF = [exterior_derivative(src.function(c)) for c in F.components]
    wedges: dict[tuple[int, ...], DifferentialForm] = {(): src.function(1)}

    def dF_wedge(I: tuple[int, ...]) -> DifferentialForm:
        if I not in wedges:
            wedges[I] = _wedge2(dF_wedge(I[:-1]), dF[I[-1]])
        return wedges[I]

    result = src.zero_form(a.degree)
    for I, f in a._terms.items():
        basis = dF_wedge(I)
        if basis.is_zero():
            continue
        g = f.compose(sub)
        if g.is_zero():
            continue
        result = result + basis * g
    return DifferentialForm._raw(src, a.degree, result._terms)


def eval_at_point(a: DifferentialForm, point: Mapping[str, Scalar]) -> DifferentialForm:
    """Freeze every coefficient at ``point``; the result has constant coefficients."""
    coords = a.chart.coords
    out = {}
    for I, f in a._terms.items():
        re, im = f.eval(point)
        if re or im:
            out[I] = ComplexPolynomial.constant(re, coords, im)
    return DifferentialForm._raw(a.chart, a.degree, out)


def top_coefficient(a: DifferentialForm) -> ComplexPolynomial:
    """Coefficient of dx_1 ∧ ... ∧ dx_n for a top-degree form."""
    n = a.chart.dim
    if a.degree != n:
        raise ValueError(f"expected a {n}-form, got degree {a.degree}")
    return a._terms.get(tuple(range(n)), ComplexPolynomial.zero(a.chart.coords))


def evaluate_on_vectors(a: DifferentialForm, vectors: Iterable[VectorField]) -> ComplexPolynomial:
    """a(v1, ..., vk) via repeated first-slot contraction."""
    vectors = list(vectors)
    if len(vectors) != a.degree:
        raise ValueError(f"{a.degree}-form needs {a.degree} vectors, got {len(vectors)}")
    for v in vectors:
        a = interior_product(v, a)
    return a._terms.get((), ComplexPolynomial.zero(a.chart.coords))
