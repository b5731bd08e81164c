"""Tautological and symplectic forms on T*X, chart transitions, conormal bundles."""

from __future__ import annotations

from dataclasses import dataclass, field

from .exterior import Chart, DifferentialForm, PolyMap, exterior_derivative, pullback, wedge
from .poly import Polynomial

__all__ = [
    "ChartInvarianceReport",
    "ConormalInclusion",
    "CotangentChart",
    "LagrangianReport",
    "canonical_symplectic",
    "conormal_inclusion",
    "cotangent_chart",
    "tautological_form",
    "verify_chart_invariance",
    "verify_lagrangian",
]


@dataclass(frozen=True)
class CotangentChart:
    """Chart (x1..xn, xi1..xin) on T*U, positions first."""

    n: int
    chart: Chart

    @property
    def positions(self) -> tuple[str, ...]:
        return self.chart.coords[: self.n]

    @property
    def momenta(self) -> tuple[str, ...]:
        return self.chart.coords[self.n:]


def cotangent_chart(n: int, position: str = "x", momentum: str = "xi", name: str | None = None) -> CotangentChart:
    if n < 1:
        raise ValueError(f"base dimension must be >= 1, got {n}")
    coords = tuple(f"{position}{i}" for i in range(1, n + 1)) + tuple(f"{momentum}{i}" for i in range(1, n + 1))
    return CotangentChart(n, Chart(name or f"T*R{n}", coords))


def _chart_for(n: int, chart: CotangentChart | None) -> CotangentChart:
    if chart is None:
        return cotangent_chart(n)
    if chart.n != n:
        raise ValueError(f"chart has base dimension {chart.n}, expected {n}")
    return chart


def tautological_form(n: int, chart: CotangentChart | None = None) -> DifferentialForm:
    """α = Σ ξ_i dx_i."""
    tc = _chart_for(n, chart)
    c = tc.chart
    return DifferentialForm(c, 1, {(i,): c.coord(p) for i, p in enumerate(tc.momenta)})


def canonical_symplectic(n: int, chart: CotangentChart | None = None) -> DifferentialForm:
    """ω = −dα = Σ dx_i ∧ dξ_i."""
    return -exterior_derivative(tautological_form(n, chart))


def symplectic_volume(n: int) -> DifferentialForm:
    """ω^n, the n-fold wedge power."""
    omega = canonical_symplectic(n)
    return wedge(*([omega] * n))


@dataclass
class ChartInvarianceReport:
    n: int
    alpha_x: DifferentialForm
    pulled_back: DifferentialForm

    @property
    def passed(self) -> bool:
        return self.pulled_back == self.alpha_x

    @property
    def witness(self) -> DifferentialForm:
        return self.pulled_back - self.alpha_x


def _is_identity(m: PolyMap) -> bool:
    return m.source == m.target and m == PolyMap.identity(m.source)


def verify_chart_invariance(transition: PolyMap, inverse: PolyMap, n: int | None = None) -> ChartInvarianceReport:
    """Check that Σ ξ_i dx_i = Σ η_j dy_j under a base change y = y(x).

    ``transition`` maps base chart X to base chart Y, ``inverse`` maps Y back.
    The cotangent transition is y_j = y_j(x), η_j = Σ_i ξ_i ∂x_i/∂y_j
    evaluated at y(x); pulling back α_Y along it must give α_X exactly.
    """
    X, Y = transition.source, transition.target
    n = X.dim if n is None else n
    if X.dim != n or Y.dim != n or inverse.source != Y or inverse.target != X:
        raise ValueError("transition and inverse must be mutually inverse maps between n-dim base charts")
    if not (_is_identity(transition.then(inverse)) and _is_identity(inverse.then(transition))):
        raise ValueError("transition is not inverted by the supplied inverse")

    TX = CotangentChart(n, Chart(f"T*{X.name}", X.coords + tuple(f"xi{i}" for i in range(1, n + 1))))
    TY = CotangentChart(n, Chart(f"T*{Y.name}", Y.coords + tuple(f"eta{i}" for i in range(1, n + 1))))
    vars_tx = TX.chart.coords

    def lift(p: Polynomial) -> Polynomial:
        # base polynomial on X -> same polynomial on T*X
        return p.compose({v: TX.chart.coord(v) for v in X.coords})

    y_of_x = [lift(c) for c in transition.components]
    at_y = {v: y for v, y in zip(Y.coords, y_of_x)}
    xi = [TX.chart.coord(m) for m in TX.momenta]
    dx_dy = inverse.jacobian()  # dx_dy[i][j] = ∂x_i/∂y_j as polynomials in y
    eta = []
    for j in range(n):
        e = Polynomial.zero(vars_tx)
        for i in range(n):
            e = e + xi[i] * dx_dy[i][j].compose(at_y)
        eta.append(e)
    cotangent_map = PolyMap(TX.chart, TY.chart, tuple(y_of_x + eta))
    return ChartInvarianceReport(
        n=n,
        alpha_x=tautological_form(n, TX),
        pulled_back=pullback(cotangent_map, tautological_form(n, TY)),
    )


@dataclass(frozen=True)
class ConormalInclusion:
    """Adapted-coordinate inclusion N*S ∩ T*U -> T*U for S = {x_{k+1} = ... = x_n = 0}."""

    n: int
    k: int
    ambient: CotangentChart
    map: PolyMap
    zero_set: tuple[str, ...] = field(default=())

    @property
    def source(self) -> Chart:
        return self.map.source


def conormal_inclusion(n: int, k: int, ambient: CotangentChart | None = None) -> ConormalInclusion:
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got n={n}, k={k}")
    tc = _chart_for(n, ambient)
    xs, ps = tc.positions, tc.momenta
    source_coords = xs[:k] + ps[k:]
    source = Chart(f"N*S(n={n},k={k})", source_coords)
    images = {c: source.coord(c) for c in source_coords}
    zero_set = xs[k:] + ps[:k]
    return ConormalInclusion(n, k, tc, PolyMap.from_dict(source, tc.chart, images), zero_set)


@dataclass
class LagrangianReport:
    n: int
    k: int
    alpha_pullback: DifferentialForm
    omega_pullback: DifferentialForm
    source_dim: int

    @property
    def passed(self) -> bool:
        return (
            self.alpha_pullback.is_zero()
            and self.omega_pullback.is_zero()
            and self.source_dim == self.n
        )


def verify_lagrangian(n: int, k: int) -> LagrangianReport:
    inc = conormal_inclusion(n, k)
    return LagrangianReport(
        n=n,
        k=k,
        alpha_pullback=pullback(inc.map, tautological_form(n, inc.ambient)),
        omega_pullback=pullback(inc.map, canonical_symplectic(n, inc.ambient)),
        source_dim=inc.source.dim,
    )
