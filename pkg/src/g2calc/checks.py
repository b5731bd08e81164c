"""Named verification checks grouped by CLI subcommand."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import cotangent, g2, octonions
from .exterior import Chart, DifferentialForm, PolyMap, exterior_derivative, pullback
from .linalg import inverse
from .render import form_to_json, render_form
from .sampling import DEFAULT_SEED, complex_matrix3, invertible_matrix, point, rational


@dataclass
class VerificationReport:
    check: str
    status: str  # "pass" | "fail"
    detail: str = ""
    witness: str | None = None
    duration_ms: int = 0
    form: DifferentialForm | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "fail" and self.witness is None:
            self.witness = self.detail or "(no witness)"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {
            "check": self.check,
            "status": self.status,
            "detail": self.detail,
            "witness": self.witness,
            "duration_ms": self.duration_ms,
        }
        if self.form is not None:
            out["form"] = form_to_json(self.form)
        return out


def _report(name: str, ok: bool, detail: str, witness: str | None = None, form=None) -> VerificationReport:
    return VerificationReport(name, "pass" if ok else "fail", detail, None if ok else (witness or detail), form=form)


# --- phi0 -------------------------------------------------------------------

def check_phi0_terms(rng) -> VerificationReport:
    phi0 = octonions.standard_phi0()
    expected = {
        (0, 1, 2): 1, (0, 3, 4): 1, (0, 5, 6): 1, (1, 3, 5): 1,
        (1, 4, 6): -1, (2, 3, 6): -1, (2, 4, 5): -1,
    }
    got = {k: c.re.constant_value() for k, c in phi0.terms.items()}
    return _report(
        "phi0.terms", got == expected and phi0.is_real(),
        f"φ₀ = {render_form(phi0)} (e_{{246}} read as e^{{246}})", render_form(phi0), phi0,
    )


def check_phi0_from_cross(rng) -> VerificationReport:
    phi = octonions.phi_from_cross()
    match = octonions.match_phi0(phi)
    if match is None:
        return _report("phi0.from_cross", False, "no signed permutation found", render_form(phi), phi)
    return _report(
        "phi0.from_cross", True, f"⟨u×v,w⟩ = {render_form(phi)}; P*φ = φ₀ for P: {match.describe()}", form=phi
    )


# --- cross ------------------------------------------------------------------

def _rand_oct(rng, imaginary=False) -> octonions.Octonion:
    comps = [rational(rng) for _ in range(8)]
    if imaginary:
        comps[0] = Fraction(0)
    return octonions.Octonion(tuple(comps))


def check_units(rng) -> VerificationReport:
    one = octonions.Octonion.basis(0)
    bad = []
    for i in range(1, 8):
        e = octonions.Octonion.basis(i)
        if e * e != one.scale(-1) or one * e != e or e * one != e:
            bad.append(f"e{i}")
    return _report("cross.units", not bad, "e_i² = −1 and 1 is a two-sided identity", ", ".join(bad))


def check_normed(rng, count: int = 1000) -> VerificationReport:
    for _ in range(count):
        u, v = _rand_oct(rng), _rand_oct(rng)
        if (u * v).norm2() != u.norm2() * v.norm2():
            return _report("cross.normed", False, "|uv| ≠ |u||v|", f"u={u.components}, v={v.components}")
    return _report("cross.normed", True, f"|uv|² = |u|²|v|² on {count} random pairs")


def check_cross_laws(rng, count: int = 300) -> VerificationReport:
    for _ in range(count):
        u, v, w = (_rand_oct(rng, True) for _ in range(3))
        a, b = rational(rng), rational(rng)
        x = octonions.cross(u, v)
        problems = []
        if not octonions.cross(u, u).is_zero():
            problems.append("u×u ≠ 0")
        if x.dot(u) or x.dot(v):
            problems.append("u×v not orthogonal to u, v")
        if x.norm2() + u.dot(v) ** 2 != u.norm2() * v.norm2():
            problems.append("|u×v|² + ⟨u,v⟩² ≠ |u|²|v|²")
        if octonions.cross(u.scale(a) + w.scale(b), v) != x.scale(a) + octonions.cross(w, v).scale(b):
            problems.append("not bilinear")
        if octonions.cross(v, u) != -x:
            problems.append("not antisymmetric")
        if problems:
            return _report("cross.laws", False, "; ".join(problems), f"u={u.components}, v={v.components}")
    e12 = octonions.cross(octonions.Octonion.basis(1), octonions.Octonion.basis(2))
    return _report(
        "cross.laws", True,
        f"alternating, bilinear, orthogonal, Lagrange identity on {count} triples; e1×e2 = {e12.components[3]}·e3",
    )


def check_phi_on_basis(rng) -> VerificationReport:
    phi = octonions.phi_from_cross()
    basis = [octonions.Octonion.basis(i) for i in range(1, 8)]
    for i in range(7):
        for j in range(7):
            for k in range(7):
                direct = octonions.phi_value(basis[i], basis[j], basis[k])
                if len({i, j, k}) < 3:
                    from_form = Fraction(0)
                else:
                    from_form = phi.coefficient(*(phi.chart.coords[n] for n in (i, j, k))).re.constant_value()
                if direct != from_form:
                    return _report("cross.phi_basis", False, "form disagrees with ⟨u×v,w⟩", f"(e{i+1},e{j+1},e{k+1})")
    return _report("cross.phi_basis", True, "φ(e_i,e_j,e_k) = ⟨e_i×e_j,e_k⟩ on all 343 basis triples")


# --- omega ------------------------------------------------------------------

def _expected(chart: Chart, terms) -> DifferentialForm:
    out = chart.zero_form(3)
    for sign, names in terms:
        out = out + chart.d(*names) * sign
    return out


OMEGA_RE = ((1, ("x1", "x2", "x3")), (-1, ("x1", "xi2", "xi3")), (1, ("x2", "xi1", "xi3")), (-1, ("x3", "xi1", "xi2")))
OMEGA_IM = ((1, ("x1", "x2", "xi3")), (-1, ("x1", "x3", "xi2")), (1, ("x2", "x3", "xi1")), (-1, ("xi1", "xi2", "xi3")))
PHI_EXPANSION = OMEGA_RE + ((1, ("x1", "xi1", "t")), (1, ("x2", "xi2", "t")), (1, ("x3", "xi3", "t")))


def check_omega_expansion(rng) -> VerificationReport:
    Om = g2.build_Omega()
    re_ok = Om.real() == _expected(g2.G2_CHART, OMEGA_RE)
    im_ok = Om.imag() == _expected(g2.G2_CHART, OMEGA_IM)
    detail = f"Re Ω = {render_form(Om.real())}; Im Ω = {render_form(Om.imag())}"
    return _report("omega.expansion", re_ok and im_ok and len(Om.real()) == 4 and len(Om.imag()) == 4, detail,
                   render_form(Om), Om)


def check_symplectic(rng) -> VerificationReport:
    for n in range(1, 7):
        tc = cotangent.cotangent_chart(n)
        omega = cotangent.canonical_symplectic(n)
        direct = tc.chart.zero_form(2)
        for x, p in zip(tc.positions, tc.momenta):
            direct = direct + tc.chart.d(x, p)
        if omega != direct or omega != -exterior_derivative(cotangent.tautological_form(n)):
            return _report("omega.symplectic", False, f"ω ≠ Σ dx∧dξ at n={n}", render_form(omega), omega)
    return _report("omega.symplectic", True, "ω = −dα = Σ dxᵢ∧dξᵢ for n = 1..6")


# --- phi / closedness ---------------------------------------------------------

def check_phi_expansion(rng) -> VerificationReport:
    phi = g2.build_phi()
    ok = phi == _expected(g2.G2_CHART, PHI_EXPANSION) and len(phi) == 7 and phi.is_real()
    text = render_form(phi, order=g2.PHI_TERM_ORDER)
    return _report("phi.expansion", ok, f"φ = {text}", text, phi)


def check_closedness(rng) -> VerificationReport:
    dphi = g2.closedness()
    return _report("closedness.dphi", dphi.is_zero() and dphi.degree == 4, "dφ = 0", render_form(dphi), dphi)


def check_domega(rng) -> VerificationReport:
    for n in range(1, 7):
        d = exterior_derivative(cotangent.canonical_symplectic(n))
        if not d.is_zero():
            return _report("closedness.domega", False, f"dω ≠ 0 at n={n}", render_form(d), d)
    return _report("closedness.domega", True, "dω = 0 for n = 1..6")


# --- pullback-phi0 ------------------------------------------------------------

def check_pullback_phi0(rng) -> VerificationReport:
    Phi = g2.build_Phi()
    pulled = g2.pulled_back_phi()
    det = Phi.determinant
    inv = Phi.inverse()
    roundtrip = all(
        inv.push(Phi.push([int(i == j) for i in range(7)])) == [int(i == j) for i in range(7)] for j in range(7)
    )
    ok = pulled == g2.phi0() and abs(det) == 1 and roundtrip
    return _report("pullback-phi0", ok, f"Φ*φ = φ₀; det Φ = {det}", render_form(pulled), pulled)


# --- pairing ------------------------------------------------------------------

def check_pairing_phi0(rng) -> VerificationReport:
    rep = g2.induced_pairing(g2.phi0())
    ok = rep.symmetric and rep.scale == g2.PHI0_PAIRING_SCALE
    return _report("pairing.phi0", ok, f"B(φ₀) = {rep.scale}·I₇", str(rep.at()))


def check_pairing_phi(rng, count: int = 10) -> VerificationReport:
    pts = [point(rng, g2.G2_CHART) for _ in range(count)]
    rep = g2.induced_pairing(g2.build_phi(), pts)
    signs = {s for _, s in rep.samples}
    ok = rep.symmetric and rep.definite_everywhere_sampled
    return _report(
        "pairing.phi", ok,
        f"B(φ) definite at {count} random points (sign {signs.pop() if len(signs) == 1 else signs}); "
        f"scale {rep.scale} (det Φ = {g2.build_Phi().determinant})",
        str(rep.samples),
    )


def check_g2_type(rng) -> VerificationReport:
    phi0 = g2.phi0()
    chart = phi0.chart
    verdicts = {
        "φ₀": g2.is_g2_type(phi0).is_g2,
        "φ at a point": g2.is_g2_type(g2.build_phi()).is_g2,
        "0 (negated)": not g2.is_g2_type(chart.zero_form(3)).is_g2,
        "dx123 (negated)": not g2.is_g2_type(chart.d("x1", "x2", "x3")).is_g2,
    }
    m = invertible_matrix(rng, 7)
    verdicts["random GL⁺ pullback"] = g2.is_g2_type(pullback(PolyMap.linear(chart, chart, m), phi0)).is_g2
    bad = [k for k, v in verdicts.items() if not v]
    return _report("pairing.g2_type", not bad, "G2-type verdicts: " + ", ".join(verdicts), ", ".join(bad))


# --- invariance ---------------------------------------------------------------

def transition_corpus(rng) -> list[tuple[str, PolyMap, PolyMap]]:
    """(label, y = y(x), x = x(y)) pairs in dimensions 2 and 3."""
    out = []
    for n in (2, 3):
        X = Chart(f"X{n}", tuple(f"x{i}" for i in range(1, n + 1)))
        Y = Chart(f"Y{n}", tuple(f"y{i}" for i in range(1, n + 1)))
        x = [X.coord(c) for c in X.coords]
        y = [Y.coord(c) for c in Y.coords]
        out.append((f"identity n={n}", PolyMap(X, Y, tuple(x)), PolyMap(Y, X, tuple(y))))
        A = invertible_matrix(rng, n)
        out.append((f"linear n={n}", PolyMap.linear(X, Y, A), PolyMap.linear(Y, X, inverse(A))))
        if n == 2:
            out.append(("quadratic shear n=2", PolyMap(X, Y, (x[0], x[1] + x[0] ** 2)),
                        PolyMap(Y, X, (y[0], y[1] - y[0] ** 2))))
            out.append(("cubic shear n=2", PolyMap(X, Y, (x[0] + x[1] ** 3, x[1])),
                        PolyMap(Y, X, (y[0] - y[1] ** 3, y[1]))))
        else:
            shear = PolyMap(X, Y, (x[0], x[1] + x[0] ** 2, x[2]))
            shear_inv = PolyMap(Y, X, (y[0], y[1] - y[0] ** 2, y[2]))
            out.append(("quadratic shear n=3", shear, shear_inv))
            tri = PolyMap(X, Y, (x[0], x[1] + x[0] ** 2, x[2] + x[0] * x[1]))
            tri_inv = PolyMap(Y, X, (y[0], y[1] - y[0] ** 2, y[2] - y[0] * (y[1] - y[0] ** 2)))
            out.append(("triangular n=3", tri, tri_inv))
            # linear after shear: X -> Y -> Y
            L = PolyMap.linear(Y, Y, A)
            L_inv = PolyMap.linear(Y, Y, inverse(A))
            out.append(("linear∘shear n=3", shear.then(L), L_inv.then(shear_inv)))
    return out


def check_chart_invariance(rng) -> VerificationReport:
    labels = []
    for label, fwd, inv in transition_corpus(rng):
        rep = cotangent.verify_chart_invariance(fwd, inv)
        if not rep.passed:
            return _report("invariance.chart", False, f"α not invariant under {label}", render_form(rep.witness))
        labels.append(label)
    return _report("invariance.chart", True, f"Σξdx = Σηdy under {len(labels)} transitions: " + "; ".join(labels))


def check_determinant_invariance(rng, count: int = 100) -> VerificationReport:
    fixed = [
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[2, 0, 0], [0, 1, 0], [0, 0, 1]],
    ]
    signs = set()
    for A in fixed + [complex_matrix3(rng) for _ in range(count)]:
        rep = g2.verify_determinant_invariance(A)
        signs.add(rep.reorder_sign)
        if not rep.passed:
            return _report("invariance.determinant", False, "(ReΩ)²+(ImΩ)² ≠ |det_C A|² = det_R A", str(rep))
    return _report(
        "invariance.determinant", True,
        f"(ReΩ)²+(ImΩ)² = |det_C A|² = det_R A on {count + len(fixed)} matrices; "
        f"e1∧Je1∧… → e1∧e2∧e3∧Je1∧… reordering sign {signs.pop()}",
    )


# --- conormal / lagrangian / counterexample ------------------------------------

def check_conormal(rng) -> list[VerificationReport]:
    rep = g2.verify_conormal_vanishing()
    return [
        _report("conormal.proposition", rep.on_conormal.is_zero(), "i*φ = 0 on N*S (x3=ξ1=ξ2=t=0)",
                render_form(rep.on_conormal), rep.on_conormal),
        _report("conormal.corollary", rep.on_conormal_times_r.is_zero(), "i*φ = 0 on N*S×R (x3=ξ1=ξ2=0)",
                render_form(rep.on_conormal_times_r), rep.on_conormal_times_r),
        _report("conormal.phi_dt", rep.phi_dt_on_conormal_times_r.is_zero(), "i*(φ∧dt) = 0 on N*S×R",
                render_form(rep.phi_dt_on_conormal_times_r)),
    ]


def check_lagrangian(rng, max_n: int = 5) -> VerificationReport:
    pairs = []
    for n in range(2, max_n + 1):
        for k in range(1, n):
            rep = cotangent.verify_lagrangian(n, k)
            if not rep.passed:
                return _report("lagrangian", False, f"(n={n}, k={k})",
                               f"α: {render_form(rep.alpha_pullback)}; ω: {render_form(rep.omega_pullback)}")
            pairs.append((n, k))
    return _report("lagrangian", True, f"i*α = i*ω = 0 for all {len(pairs)} pairs 1 ≤ k < n ≤ {max_n}")


def check_counterexample(rng) -> VerificationReport:
    rep = g2.verify_1dim_counterexample()
    source = rep.phi_pullback.chart
    expected = -source.d("x1", "xi2", "xi3")
    ok = rep.passed and rep.phi_pullback == expected
    return _report(
        "counterexample", ok,
        f"k=1: i*φ = {render_form(rep.phi_pullback)} ≠ 0; i*ω = {render_form(rep.omega_pullback)}",
        render_form(rep.phi_pullback), rep.phi_pullback,
    )


SUBCOMMANDS: dict[str, list[Callable]] = {
    "phi0": [check_phi0_terms, check_phi0_from_cross],
    "cross": [check_units, check_normed, check_cross_laws, check_phi_on_basis],
    "omega": [check_omega_expansion, check_symplectic],
    "phi": [check_phi_expansion],
    "closedness": [check_closedness, check_domega],
    "pullback-phi0": [check_pullback_phi0],
    "pairing": [check_pairing_phi0, check_pairing_phi, check_g2_type],
    "invariance": [check_chart_invariance, check_determinant_invariance],
    "conormal": [check_conormal],
    "lagrangian": [check_lagrangian],
    "counterexample": [check_counterexample],
}


def run_checks(subcommand: str, seed: int = DEFAULT_SEED) -> list[VerificationReport]:
    names = list(SUBCOMMANDS) if subcommand == "all" else [subcommand]
    reports: list[VerificationReport] = []
    for name in names:
        for fn in SUBCOMMANDS[name]:
            # each check gets its own stream so subcommands reproduce in isolation
            rng = random.Random(f"{seed}:{fn.__name__}")
            start = time.perf_counter()
            result = fn(rng)
            elapsed = int((time.perf_counter() - start) * 1000)
            for rep in result if isinstance(result, list) else [result]:
                rep.duration_ms = elapsed
                reports.append(rep)
    return reports
