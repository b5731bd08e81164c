"""The closed G2-structure φ = Re Ω + ω∧dt on T*X × R for a 3-manifold X.

Everything is computed in the 7-dimensional chart (x1, x2, x3, ξ1, ξ2, ξ3, t).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import linalg
from .cotangent import canonical_symplectic, cotangent_chart
from .exterior import (
    Chart,
    DifferentialForm,
    PolyMap,
    VectorField,
    evaluate_on_vectors,
    exterior_derivative,
    interior_product,
    pullback,
    top_coefficient,
    wedge,
)
from .octonions import R7, standard_phi0
from .poly import ComplexPolynomial, Polynomial

__all__ = [
    "BilinearReport",
    "ConormalReport",
    "CounterexampleReport",
    "DeterminantReport",
    "FrameMap",
    "G2_CHART",
    "G2Verdict",
    "PHI0_PAIRING_SCALE",
    "PHI_TERM_ORDER",
    "TSTAR_X",
    "build_Omega",
    "build_Phi",
    "build_phi",
    "closedness",
    "complex_det3",
    "conormal_map",
    "induced_pairing",
    "is_g2_type",
    "phi0",
    "pulled_back_phi",
    "verify_1dim_counterexample",
    "verify_conormal_vanishing",
    "verify_determinant_invariance",
]

G2_CHART = Chart("T*X×R", ("x1", "x2", "x3", "xi1", "xi2", "xi3", "t"))
TSTAR_X = cotangent_chart(3, name="T*X")

# projection T*X × R -> T*X
_PROJECT = PolyMap.from_dict(G2_CHART, TSTAR_X.chart, {c: G2_CHART.coord(c) for c in TSTAR_X.chart.coords})

# top coefficient of (e_i⌟φ₀)∧(e_i⌟φ₀)∧φ₀; frozen from a brute-force shuffle-sum evaluation
PHI0_PAIRING_SCALE = 6

# Re Ω terms first, then ω∧dt, as printed in the expansion of φ
PHI_TERM_ORDER = tuple(
    tuple(G2_CHART.index(n) for n in names)
    for names in (
        ("x1", "x2", "x3"),
        ("x1", "xi2", "xi3"),
        ("x2", "xi1", "xi3"),
        ("x3", "xi1", "xi2"),
        ("x1", "xi1", "t"),
        ("x2", "xi2", "t"),
        ("x3", "xi3", "t"),
    )
)


def build_Omega(chart: Chart = G2_CHART) -> DifferentialForm:
    """Ω = (dx1 + i dξ1) ∧ (dx2 + i dξ2) ∧ (dx3 + i dξ3) on any chart with those coordinates."""
    i = ComplexPolynomial.constant(0, chart.coords, im=1)
    factors = [chart.d(f"x{j}") + chart.d(f"xi{j}") * i for j in (1, 2, 3)]
    return wedge(*factors)


def build_phi() -> DifferentialForm:
    omega = pullback(_PROJECT, canonical_symplectic(3, TSTAR_X))
    return build_Omega().real() + wedge(omega, G2_CHART.d("t"))


@dataclass(frozen=True)
class FrameMap:
    """Invertible constant linear map between 7-dimensional charts."""

    map: PolyMap
    matrix: tuple[tuple[Fraction, ...], ...] = field(init=False)

    def __post_init__(self):
        rows = []
        for comp in self.map.components:
            if comp.degree > 1 or comp.eval({v: 0 for v in comp.variables}):
                raise ValueError("frame map components must be linear without constant term")
            rows.append(tuple(comp.partial(v).constant_value() for v in self.map.source.coords))
        object.__setattr__(self, "matrix", tuple(rows))
        if self.determinant == 0:
            raise ValueError("frame map is singular")

    @property
    def determinant(self) -> Fraction:
        return linalg.det(self.matrix)

    def push(self, vector: Sequence) -> list[Fraction]:
        """Image of a source tangent vector (constant components)."""
        return [sum((a * Fraction(v) for a, v in zip(row, vector)), Fraction(0)) for row in self.matrix]

    def inverse(self) -> "FrameMap":
        return FrameMap(PolyMap.linear(self.map.target, self.map.source, linalg.inverse(self.matrix)))


def build_Phi() -> FrameMap:
    """Frame R7 -> T*X×R with Φ*dx1 = dx3, Φ*dx2 = dx2, Φ*dx3 = −dx1, Φ*dξi = dx_{3+i}, Φ*dt = −dx7."""
    X = [R7.coord(c) for c in R7.coords]
    images = {
        "x1": X[2],
        "x2": X[1],
        "x3": -X[0],
        "xi1": X[3],
        "xi2": X[4],
        "xi3": X[5],
        "t": -X[6],
    }
    return FrameMap(PolyMap.from_dict(R7, G2_CHART, images))


@dataclass
class BilinearReport:
    """B[i][j] = top coefficient of (∂i⌟φ)∧(∂j⌟φ)∧φ."""

    matrix: list[list[Polynomial]]
    symmetric: bool
    samples: list[tuple[dict, int]] = field(default_factory=list)
    scale: Fraction | None = None

    def at(self, point: Mapping | None = None) -> list[list[Fraction]]:
        if point is None:
            return [[p.constant_value() for p in row] for row in self.matrix]
        return [[p.eval(point) for p in row] for row in self.matrix]

    @property
    def definite_everywhere_sampled(self) -> bool:
        return bool(self.samples) and all(sign != 0 for _, sign in self.samples)


def induced_pairing(phi: DifferentialForm, points: Iterable[Mapping] = ()) -> BilinearReport:
    chart = phi.chart
    if chart.dim != 7:
        raise ValueError(f"induced pairing needs a 7-dimensional chart, got {chart.dim}")
    if phi.degree != 3 or not phi.is_real():
        raise ValueError("induced pairing needs a real 3-form")
    contractions = [interior_product(VectorField.coordinate(chart, c), phi) for c in chart.coords]
    B: list[list[Polynomial | None]] = [[None] * 7 for _ in range(7)]
    for i in range(7):
        for j in range(i, 7):
            B[i][j] = top_coefficient(wedge(contractions[i], contractions[j], phi)).re
    symmetric = True
    for i in range(7):
        for j in range(i):
            B[i][j] = top_coefficient(wedge(contractions[i], contractions[j], phi)).re
            symmetric &= B[i][j] == B[j][i]
    report = BilinearReport(matrix=B, symmetric=symmetric)
    for pt in points:
        report.samples.append((dict(pt), linalg.definiteness(report.at(pt))))
    diag = B[0][0]
    if diag.is_constant() and all(
        B[i][j] == (diag if i == j else 0) for i in range(7) for j in range(7)
    ):
        report.scale = diag.constant_value()
    return report


@dataclass
class G2Verdict:
    is_g2: bool
    orientation: int  # +1 / -1 sign of the definite pairing, 0 when not definite
    matrix: list[list[Fraction]]


def is_g2_type(phi: DifferentialForm) -> G2Verdict:
    """Constant 3-form on a 7-dim space is of G2 type iff its pairing is definite."""
    if any(not c.re.is_constant() or not c.im.is_zero() for c in phi.terms.values()):
        raise ValueError("is_g2_type expects a real constant-coefficient 3-form")
    if phi.is_zero():
        return G2Verdict(False, 0, [[Fraction(0)] * 7 for _ in range(7)])
    m = induced_pairing(phi).at()
    sign = linalg.definiteness(m)
    return G2Verdict(sign != 0, sign, m)


def _complex(z) -> tuple[Fraction, Fraction]:
    if isinstance(z, tuple):
        return Fraction(z[0]), Fraction(z[1])
    if isinstance(z, complex):
        raise TypeError("pass complex entries as (re, im) pairs of exact numbers")
    return Fraction(z), Fraction(0)


def _cmul(a, b):
    return a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]


def complex_det3(A) -> tuple[Fraction, Fraction]:
    """Leibniz expansion of a 3×3 determinant over Q(i)."""
    total = (Fraction(0), Fraction(0))
    for perm in itertools.permutations(range(3)):
        inversions = sum(1 for a in range(3) for b in range(a + 1, 3) if perm[a] > perm[b])
        term = (Fraction(-1 if inversions % 2 else 1), Fraction(0))
        for r in range(3):
            term = _cmul(term, A[r][perm[r]])
        total = (total[0] + term[0], total[1] + term[1])
    return total


@dataclass
class DeterminantReport:
    omega_value: tuple[Fraction, Fraction]
    det_c: tuple[Fraction, Fraction]
    abs2_det_c: Fraction
    det_r: Fraction
    volume_split_order: Fraction
    volume_interleaved_order: Fraction
    reorder_sign: int

    @property
    def lhs(self) -> Fraction:
        return self.omega_value[0] ** 2 + self.omega_value[1] ** 2

    @property
    def passed(self) -> bool:
        return (
            self.omega_value == self.det_c
            and self.lhs == self.abs2_det_c == self.det_r
            and self.volume_split_order == self.det_r == self.volume_interleaved_order
        )


def verify_determinant_invariance(A: Sequence[Sequence]) -> DeterminantReport:
    """Check (Re Ω)² + (Im Ω)² = |det_C A|² = det_R A on the frame f_j = A e_j.

    R^6 = C^3 uses the basis (e1, e2, e3, Je1, Je2, Je3) with coordinates
    (x1, x2, x3, ξ1, ξ2, ξ3), so z_j = x_j + i ξ_j and J∂x_j = ∂ξ_j.
    """
    A = [[_complex(z) for z in row] for row in A]
    if len(A) != 3 or any(len(r) != 3 for r in A):
        raise ValueError("A must be 3×3")
    det_c = complex_det3(A)
    if det_c == (0, 0):
        raise ValueError("A is singular")
    chart = TSTAR_X.chart

    # f_j has x-components Re A[:, j] and ξ-components Im A[:, j]; J f_j = i f_j
    f = [[A[r][j][0] for r in range(3)] + [A[r][j][1] for r in range(3)] for j in range(3)]
    Jf = [[-A[r][j][1] for r in range(3)] + [A[r][j][0] for r in range(3)] for j in range(3)]
    value = evaluate_on_vectors(build_Omega(chart), [VectorField(chart, tuple(v)) for v in f])
    omega_value = (value.re.constant_value(), value.im.constant_value())

    realified = [
        [A[r][c][0] for c in range(3)] + [-A[r][c][1] for c in range(3)] for r in range(3)
    ] + [[A[r][c][1] for c in range(3)] + [A[r][c][0] for c in range(3)] for r in range(3)]
    # columns in the order (f1, f2, f3, Jf1, Jf2, Jf3) and (f1, Jf1, f2, Jf2, f3, Jf3)
    split_cols = f + Jf
    interleaved_cols = [f[0], Jf[0], f[1], Jf[1], f[2], Jf[2]]
    interleave = [0, 3, 1, 4, 2, 5]  # basis e1, Je1, e2, Je2, e3, Je3 in split coordinates
    split_vol = linalg.det(linalg.transpose(split_cols))
    interleaved_vol = linalg.det([[col[k] for col in interleaved_cols] for k in interleave])
    inversions = sum(1 for a in range(6) for b in range(a + 1, 6) if interleave[a] > interleave[b])
    return DeterminantReport(
        omega_value=omega_value,
        det_c=det_c,
        abs2_det_c=det_c[0] ** 2 + det_c[1] ** 2,
        det_r=linalg.det(realified),
        volume_split_order=split_vol,
        volume_interleaved_order=interleaved_vol,
        reorder_sign=-1 if inversions % 2 else 1,
    )


def _inclusion(source_coords: Sequence[str], name: str) -> PolyMap:
    source = Chart(name, tuple(source_coords))
    return PolyMap.from_dict(source, G2_CHART, {c: source.coord(c) for c in source_coords})


def conormal_map(times_r: bool = False) -> PolyMap:
    """N*S (x3 = ξ1 = ξ2 = t = 0) or N*S×R (x3 = ξ1 = ξ2 = 0) into T*X×R, for S = {x3 = 0}."""
    if times_r:
        return _inclusion(("x1", "x2", "xi3", "t"), "N*S×R")
    return _inclusion(("x1", "x2", "xi3"), "N*S")


@dataclass
class ConormalReport:
    on_conormal: DifferentialForm
    on_conormal_times_r: DifferentialForm
    phi_dt_on_conormal_times_r: DifferentialForm

    @property
    def passed(self) -> bool:
        return (
            self.on_conormal.is_zero()
            and self.on_conormal_times_r.is_zero()
            and self.phi_dt_on_conormal_times_r.is_zero()
        )


def verify_conormal_vanishing() -> ConormalReport:
    phi = build_phi()
    a, b = conormal_map(False), conormal_map(True)
    return ConormalReport(
        on_conormal=pullback(a, phi),
        on_conormal_times_r=pullback(b, phi),
        phi_dt_on_conormal_times_r=pullback(b, wedge(phi, G2_CHART.d("t"))),
    )


@dataclass
class CounterexampleReport:
    phi_pullback: DifferentialForm
    omega_pullback: DifferentialForm

    @property
    def surviving_terms(self) -> list[tuple[Fraction, tuple[str, ...]]]:
        chart = self.phi_pullback.chart
        return [
            (c.re.constant_value(), tuple(chart.coords[i] for i in idx)) for idx, c in self.phi_pullback.items()
        ]

    @property
    def passed(self) -> bool:
        return not self.phi_pullback.is_zero() and self.omega_pullback.is_zero()


def verify_1dim_counterexample() -> CounterexampleReport:
    """S = {x2 = x3 = 0} is a curve; N*S sits at x2 = x3 = ξ1 = t = 0."""
    inc = _inclusion(("x1", "xi2", "xi3"), "N*S(k=1)")
    omega = pullback(_PROJECT, canonical_symplectic(3, TSTAR_X))
    return CounterexampleReport(phi_pullback=pullback(inc, build_phi()), omega_pullback=pullback(inc, omega))


def closedness() -> DifferentialForm:
    """dφ, which must vanish."""
    return exterior_derivative(build_phi())


def pulled_back_phi() -> DifferentialForm:
    return pullback(build_Phi().map, build_phi())


def phi0() -> DifferentialForm:
    return standard_phi0(R7)
