"""Exact exterior calculus on coordinate charts and a closed G2-structure on T*X × R."""

from .cotangent import (
    canonical_symplectic,
    conormal_inclusion,
    tautological_form,
    verify_chart_invariance,
    verify_lagrangian,
)
from .exterior import (
    Chart,
    DifferentialForm,
    PolyMap,
    VectorField,
    eval_at_point,
    exterior_derivative,
    interior_product,
    pullback,
    wedge,
)
from .g2 import (
    build_Omega,
    build_Phi,
    build_phi,
    induced_pairing,
    is_g2_type,
    verify_1dim_counterexample,
    verify_conormal_vanishing,
    verify_determinant_invariance,
)
from .octonions import Octonion, cross, oct_mul, phi_from_cross, standard_phi0
from .poly import ComplexPolynomial, Polynomial
from .render import render_form

__version__ = "0.1.0"
