import itertools
import random
from fractions import Fraction

import pytest
import sympy

from g2calc import linalg, sampling
from g2calc.exterior import DifferentialForm, PolyMap, exterior_derivative, pullback, wedge
from g2calc.g2 import (
    G2_CHART,
    PHI0_PAIRING_SCALE,
    TSTAR_X,
    build_Omega,
    build_Phi,
    build_phi,
    complex_det3,
    conormal_map,
    induced_pairing,
    is_g2_type,
    verify_1dim_counterexample,
    verify_conormal_vanishing,
    verify_determinant_invariance,
)
from g2calc.cotangent import canonical_symplectic
from g2calc.octonions import R7, standard_phi0

from .helpers import shuffle_pairing_oracle, strike_out_oracle

def test_pairing_oracle_constant():
    oracle = [[shuffle_pairing_oracle(i, j) for j in range(1, 8)] for i in range(1, 8)]
    assert oracle == [[PHI0_PAIRING_SCALE * (i == j) for j in range(7)] for i in range(7)]
    assert PHI0_PAIRING_SCALE == 6


def test_pairing_phi0_matches_oracle():
    rep = induced_pairing(standard_phi0())
    assert rep.symmetric
    assert rep.scale == 6
    assert rep.at() == [[shuffle_pairing_oracle(i, j) for j in range(1, 8)] for i in range(1, 8)]


def test_Omega_expansion():
    Om = build_Omega()
    assert Om.real().coefficient("x1", "xi2", "xi3").re == -1
    assert Om.imag().coefficient("xi1", "xi2", "xi3").re == -1
    assert len(Om.real()) == 4 and len(Om.imag()) == 4
    assert wedge(Om, Om).is_zero()


def test_phi_terms():
    phi = build_phi()
    assert len(phi) == 7 and phi.is_real()
    assert phi.coefficient("x1", "xi1", "t").re == 1
    assert phi.coefficient("x3", "xi1", "xi2").re == -1
    assert {abs(c.re.constant_value()) for c in phi.terms.values()} == {1}


def test_phi_closed():
    d = exterior_derivative(build_phi())
    assert d.is_zero() and d.degree == 4


def test_Phi_pulls_phi_back_to_phi0():
    Phi = build_Phi()
    assert pullback(Phi.map, build_phi()) == standard_phi0()
    assert Phi.determinant == -1
    assert Phi.determinant == as_sympy_det(Phi.matrix)
    inv = Phi.inverse()
    for j in range(7):
        e = [int(i == j) for i in range(7)]
        assert inv.push(Phi.push(e)) == e


def test_Phi_vector_table():
    Phi = build_Phi()
    col = lambda j: Phi.push([int(i == j) for i in range(7)])
    assert col(0) == [0, 0, -1, 0, 0, 0, 0]  # ∂/∂x1 ↦ −∂/∂x3
    assert col(2) == [1, 0, 0, 0, 0, 0, 0]  # ∂/∂x3 ↦ ∂/∂x1
    assert col(6) == [0, 0, 0, 0, 0, 0, -1]  # ∂/∂x7 ↦ −∂/∂t


def as_sympy_det(rows):
    return Fraction(str(sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows]).det()))


def test_linalg_det_matches_sympy():
    rng = random.Random(11)
    for n in range(1, 7):
        for _ in range(10):
            m = [[sampling.rational(rng) for _ in range(n)] for _ in range(n)]
            assert linalg.det(m) == as_sympy_det(m)


def test_phi_pairing_definite_at_random_points():
    rng = random.Random(5)
    pts = [sampling.point(rng, G2_CHART) for _ in range(10)]
    rep = induced_pairing(build_phi(), pts)
    assert rep.symmetric and rep.definite_everywhere_sampled
    # det Φ = −1 flips the orientation: B(φ) = −6·I
    assert rep.scale == -6


def test_pairing_rejects_wrong_dimension():
    with pytest.raises(ValueError):
        induced_pairing(TSTAR_X.chart.d("x1", "x2", "x3"))


def test_degenerate_pairing_is_singular():
    rep = induced_pairing(R7.d("x1", "x2", "x3"))
    assert linalg.det(rep.at()) == 0


def test_is_g2_type_verdicts():
    assert is_g2_type(standard_phi0()).is_g2
    assert is_g2_type(standard_phi0()).orientation == 1
    v = is_g2_type(build_phi())
    assert v.is_g2 and v.orientation == -1
    assert not is_g2_type(R7.zero_form(3)).is_g2
    with pytest.raises(ValueError):
        is_g2_type(R7.d("x1", "x2", "x3") * R7.coord("x4"))


def test_is_g2_type_under_positive_linear_pullback():
    rng = random.Random(17)
    for _ in range(5):
        m = sampling.invertible_matrix(rng, 7)
        if linalg.det(m) < 0:
            m[0] = [-a for a in m[0]]
        assert is_g2_type(pullback(PolyMap.linear(R7, R7, m), standard_phi0())).is_g2


def test_degenerate_forms_are_not_g2():
    rng = random.Random(23)
    phi0 = standard_phi0()
    for drop in range(7):
        # strike every term that involves coordinate `drop`
        kept = {k: c for k, c in phi0.terms.items() if drop not in k}
        assert not is_g2_type(DifferentialForm(R7, 3, kept)).is_g2
    for _ in range(5):
        terms = {k: sampling.nonzero_rational(rng) for k in itertools.combinations(range(6), 3) if rng.random() < 0.5}
        assert not is_g2_type(DifferentialForm(R7, 3, terms)).is_g2


def test_pairing_congruence_under_linear_maps():
    rng = random.Random(29)
    phi0 = standard_phi0()
    B = induced_pairing(phi0).at()
    for _ in range(5):
        M = sampling.invertible_matrix(rng, 7, span=2)
        pulled = pullback(PolyMap.linear(R7, R7, M), phi0)
        expected = [[x * linalg.det(M) for x in row] for row in linalg.matmul(linalg.matmul(linalg.transpose(M), B), M)]
        assert induced_pairing(pulled).at() == expected


def test_re_omega_wedge_omega_vanishes():
    re_Om = build_Omega(TSTAR_X.chart).real()
    assert wedge(re_Om, canonical_symplectic(3, TSTAR_X)).is_zero()
    assert wedge(build_Omega(TSTAR_X.chart).imag(), canonical_symplectic(3, TSTAR_X)).is_zero()


def test_determinant_invariance_examples():
    rep = verify_determinant_invariance([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert rep.passed and rep.omega_value == (1, 0) and rep.det_r == 1
    rep = verify_determinant_invariance([[2, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert rep.passed and rep.abs2_det_c == 4 == rep.det_r
    with pytest.raises(ValueError):
        verify_determinant_invariance([[1, 0, 0], [0, 1, 0], [0, 0, 0]])


def test_determinant_invariance_reorder_sign():
    # e1∧Je1∧e2∧Je2∧e3∧Je3 = −e1∧e2∧e3∧Je1∧Je2∧Je3; det_R is basis independent
    rep = verify_determinant_invariance([[1, (0, 1), 0], [0, 1, 0], [(2, 1), 0, 3]])
    assert rep.reorder_sign == -1
    assert rep.volume_split_order == rep.volume_interleaved_order == rep.det_r


def test_determinant_invariance_random_against_sympy():
    rng = random.Random(31)
    for _ in range(100):
        A = sampling.complex_matrix3(rng)
        rep = verify_determinant_invariance(A)
        assert rep.passed
        S = sympy.Matrix(3, 3, lambda r, c: sympy.Rational(str(A[r][c][0])) + sympy.I * sympy.Rational(str(A[r][c][1])))
        d = sympy.expand(S.det())
        assert rep.det_c == (Fraction(str(sympy.re(d))), Fraction(str(sympy.im(d))))
        assert complex_det3(A) == rep.det_c


def test_conormal_vanishing():
    rep = verify_conormal_vanishing()
    assert rep.passed
    assert rep.on_conormal.chart.coords == ("x1", "x2", "xi3")
    assert rep.on_conormal_times_r.chart.coords == ("x1", "x2", "xi3", "t")


def test_conormal_maps_zero_sets():
    a = conormal_map(False)
    image = a({"x1": 2, "x2": 3, "xi3": 5})
    assert image == {"x1": 2, "x2": 3, "x3": 0, "xi1": 0, "xi2": 0, "xi3": 5, "t": 0}


def test_counterexample_matches_strike_out_oracle():
    survivors = strike_out_oracle(build_phi(), {"x2", "x3", "xi1", "t"})
    assert survivors == {("x1", "xi2", "xi3"): -1}
    rep = verify_1dim_counterexample()
    assert rep.passed
    assert rep.surviving_terms == [(-1, ("x1", "xi2", "xi3"))]
    assert rep.omega_pullback.is_zero()


def test_two_dim_strike_out_oracle_agrees():
    assert strike_out_oracle(build_phi(), {"x3", "xi1", "xi2", "t"}) == {}
    assert strike_out_oracle(build_phi(), {"x3", "xi1", "xi2"}) == {}
