import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from g2calc.exterior import pullback
from g2calc.octonions import (
    CROSS_TABLE,
    Octonion,
    _cd_mul,
    cross,
    match_phi0,
    oct_mul,
    phi_from_cross,
    phi_value,
    standard_phi0,
)

from .helpers import small_fractions

octs = st.lists(small_fractions, min_size=8, max_size=8).map(lambda c: Octonion(tuple(c)))
imag = st.lists(small_fractions, min_size=7, max_size=7).map(Octonion.imaginary)
E = [Octonion.basis(i) for i in range(8)]


def test_identity_and_units():
    u = Octonion((1, 2, 3, 4, 5, 6, 7, 8))
    assert oct_mul(E[0], u) == u == oct_mul(u, E[0])
    for i in range(1, 8):
        assert oct_mul(E[i], E[i]) == E[0].scale(-1)


def test_table_shape():
    for i in range(8):
        assert sorted(k for _, k in CROSS_TABLE[i]) == list(range(8))


@given(octs, octs)
def test_table_matches_recursive_doubling(u, v):
    assert oct_mul(u, v).components == _cd_mul(u.components, v.components)


@given(octs, octs)
def test_normed_algebra(u, v):
    assert oct_mul(u, v).norm2() == u.norm2() * v.norm2()


def test_normed_algebra_1000_pairs():
    rng = random.Random(7)
    for _ in range(1000):
        u = Octonion(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(8)))
        v = Octonion(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(8)))
        assert (u * v).norm2() == u.norm2() * v.norm2()


@given(imag, imag)
def test_cross_laws(u, v):
    assert cross(u, u).is_zero()
    x = cross(u, v)
    assert x.is_imaginary()
    assert x.dot(u) == 0 and x.dot(v) == 0
    assert x.norm2() + u.dot(v) ** 2 == u.norm2() * v.norm2()
    assert cross(v, u) == -x


@given(imag, imag, imag, small_fractions)
def test_cross_bilinear(u, v, w, a):
    assert cross(u.scale(a) + w, v) == cross(u, v).scale(a) + cross(w, v)


def test_cross_basis_value_read_off_table():
    # (0,i)(0,j) block: e1 e2 = e3 in the quaternion part
    assert CROSS_TABLE[1][2] == (1, 3)
    assert cross(E[1], E[2]) == E[3]


def test_cross_rejects_real_part():
    with pytest.raises(ValueError):
        cross(E[0], E[1])


def test_standard_phi0():
    phi0 = standard_phi0()
    assert phi0.coefficient("x1", "x2", "x3").re == 1
    assert phi0.coefficient("x2", "x5", "x7").re == -1
    assert phi0.coefficient("x1", "x2", "x4").is_zero()
    assert len(phi0) == 7


def test_phi_from_cross_shape():
    phi = phi_from_cross()
    assert len(phi) == 7
    assert {abs(c.re.constant_value()) for c in phi.terms.values()} == {1}
    assert phi.is_real()


def test_phi_from_cross_alternating():
    rng = random.Random(3)
    for _ in range(50):
        u, v, w = (Octonion.imaginary([Fraction(rng.randint(-5, 5)) for _ in range(7)]) for _ in range(3))
        base = phi_value(u, v, w)
        for perm in itertools.permutations(range(3)):
            args = [(u, v, w)[i] for i in perm]
            inv = sum(1 for a in range(3) for b in range(a + 1, 3) if perm[a] > perm[b])
            assert phi_value(*args) == base * (-1) ** inv


def test_match_phi0_reports_signed_permutation():
    phi = phi_from_cross()
    match = match_phi0(phi)
    assert match is not None
    # exhaustive oracle over the reported map: pull back and compare
    assert pullback(match.as_polymap(), phi) == standard_phi0()
    # this table differs from φ₀ only in the orientation of e7
    assert match.perm == tuple(range(7))
    assert match.signs == (1, 1, 1, 1, 1, 1, -1)


def test_match_phi0_on_phi0_is_identity_or_automorphism():
    m = match_phi0(standard_phi0())
    assert pullback(m.as_polymap(), standard_phi0()) == standard_phi0()


def test_match_phi0_fails_on_wrong_support():
    phi = standard_phi0()
    assert match_phi0(phi - phi.chart.d("x1", "x2", "x3")) is None
