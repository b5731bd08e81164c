import json
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from g2calc import sampling
from g2calc.cotangent import canonical_symplectic
from g2calc.g2 import PHI_TERM_ORDER, build_Omega, build_phi
from g2calc.render import form_from_json, form_to_json, render_form

from .helpers import CHART4


def test_omega_n1():
    omega = canonical_symplectic(1)
    assert render_form(omega) == "dx1∧dξ1"
    assert render_form(omega, "ascii") == "dx1^dxi1"


def test_zero_form():
    assert render_form(CHART4.zero_form(2)) == "0"
    assert render_form(CHART4.zero_form(2), "ascii") == "0"


def test_phi_in_expansion_order():
    text = render_form(build_phi(), order=PHI_TERM_ORDER)
    assert text == (
        "dx1∧dx2∧dx3 - dx1∧dξ2∧dξ3 + dx2∧dξ1∧dξ3 - dx3∧dξ1∧dξ2"
        " + dx1∧dξ1∧dt + dx2∧dξ2∧dt + dx3∧dξ3∧dt"
    )


def test_phi_canonical_order_is_lexicographic():
    assert render_form(build_phi(), "ascii") == (
        "dx1^dx2^dx3 + dx1^dxi1^dt - dx1^dxi2^dxi3 + dx2^dxi1^dxi3"
        " + dx2^dxi2^dt - dx3^dxi1^dxi2 + dx3^dxi3^dt"
    )


def test_complex_and_polynomial_coefficients():
    c = CHART4
    f = c.d("x1") * (c.coord("x1") * 2 + 1) - c.d("x2") * c.coord("xi1")
    assert render_form(f, "ascii") == "(2*x1 + 1)*dx1 - xi1*dx2"
    assert render_form(build_Omega(), "ascii").startswith("dx1^dx2^dx3 + i*dx1^dx2^dxi3")


def test_json_schema():
    data = json.loads(render_form(canonical_symplectic(1), "json"))
    assert data == {
        "chart": {"name": "T*R1", "coords": ["x1", "xi1"]},
        "degree": 2,
        "terms": [{"indices": [1, 2], "re": "1", "im": "0"}],
    }


def test_json_roundtrip_fixed():
    for f in (build_phi(), build_Omega(), canonical_symplectic(3)):
        text = render_form(f, "json")
        assert form_from_json(text) == f
        assert render_form(form_from_json(text), "json") == text


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32))
def test_json_roundtrip_random(seed):
    f = sampling.form(random.Random(seed), CHART4)
    text = render_form(f, "json")
    assert render_form(form_from_json(text), "json") == text
    assert form_from_json(form_to_json(f)) == f


def test_rendering_is_deterministic():
    assert render_form(build_phi()) == render_form(build_phi())


def test_mixed_complex_coefficient():
    c = CHART4
    from g2calc.poly import ComplexPolynomial

    f = c.d("x1") * ComplexPolynomial(c.coord("x1"), c.const(2))
    assert render_form(f, "ascii") == "(x1 + i*(2))*dx1"
    assert form_from_json(render_form(f, "json")) == f
