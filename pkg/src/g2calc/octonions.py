"""Octonions, the 2-fold cross product on Im O, and the 3-form it defines.

The multiplication table comes from Cayley-Dickson doubling of the
quaternions with ``(p, q)(r, s) = (pr - s̄q, sp + qr̄)``.  Basis order is
``1, e1, ..., e7`` where ``e1, e2, e3`` are the quaternion units i, j, k and
``e4 .. e7`` are ``(0, 1), (0, i), (0, j), (0, k)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exterior import Chart, DifferentialForm, PolyMap, pullback

__all__ = [
    "CROSS_TABLE",
    "Octonion",
    "R7",
    "SignedPermutation",
    "cross",
    "match_phi0",
    "oct_mul",
    "phi_from_cross",
    "phi_value",
    "standard_phi0",
]

R7 = Chart("R7", tuple(f"x{i}" for i in range(1, 8)))


def _conj(a: tuple) -> tuple:
    if len(a) == 1:
        return a
    h = len(a) // 2
    return _conj(a[:h]) + tuple(-x for x in a[h:])


def _cd_mul(a: tuple, b: tuple) -> tuple:
    """Recursive Cayley-Dickson product on coefficient tuples of length 2^m."""
    if len(a) == 1:
        return (a[0] * b[0],)
    h = len(a) // 2
    p, q, r, s = a[:h], a[h:], b[:h], b[h:]
    left = tuple(x - y for x, y in zip(_cd_mul(p, r), _cd_mul(_conj(s), q)))
    right = tuple(x + y for x, y in zip(_cd_mul(s, p), _cd_mul(q, _conj(r))))
    return left + right


def _build_table() -> tuple[tuple[tuple[int, int], ...], ...]:
    table = []
    for i in range(8):
        row = []
        for j in range(8):
            ei = tuple(int(k == i) for k in range(8))
            ej = tuple(int(k == j) for k in range(8))
            prod = _cd_mul(ei, ej)
            (k,) = [n for n, x in enumerate(prod) if x]
            row.append((prod[k], k))
        table.append(tuple(row))
    return tuple(table)


# CROSS_TABLE[i][j] = (sign, k) meaning e_i e_j = sign * e_k, with e_0 = 1
CROSS_TABLE = _build_table()


@dataclass(frozen=True)
class Octonion:
    components: tuple[Fraction, ...]

    def __post_init__(self):
        comps = tuple(Fraction(c) for c in self.components)
        if len(comps) != 8:
            raise ValueError("an octonion has 8 components")
        object.__setattr__(self, "components", comps)

    @classmethod
    def basis(cls, i: int) -> "Octonion":
        return cls(tuple(int(k == i) for k in range(8)))

    @classmethod
    def imaginary(cls, v: Sequence) -> "Octonion":
        if len(v) != 7:
            raise ValueError("imaginary part has 7 components")
        return cls((0, *v))

    @property
    def re(self) -> Fraction:
        return self.components[0]

    @property
    def im(self) -> tuple[Fraction, ...]:
        return self.components[1:]

    def is_imaginary(self) -> bool:
        return self.re == 0

    def conjugate(self) -> "Octonion":
        return Octonion((self.re, *(-x for x in self.im)))

    def imag_part(self) -> "Octonion":
        return Octonion((0, *self.im))

    def norm2(self) -> Fraction:
        return sum(x * x for x in self.components)

    def dot(self, other: "Octonion") -> Fraction:
        return sum(a * b for a, b in zip(self.components, other.components))

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion(tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion(tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> "Octonion":
        return Octonion(tuple(-a for a in self.components))

    def scale(self, c) -> "Octonion":
        return Octonion(tuple(c * a for a in self.components))

    def __mul__(self, other: "Octonion") -> "Octonion":
        return oct_mul(self, other)

    def is_zero(self) -> bool:
        return not any(self.components)


def oct_mul(u: Octonion, v: Octonion) -> Octonion:
    out = [Fraction(0)] * 8
    for i, a in enumerate(u.components):
        if not a:
            continue
        row = CROSS_TABLE[i]
        for j, b in enumerate(v.components):
            if b:
                sign, k = row[j]
                out[k] += sign * a * b
    return Octonion(tuple(out))


def cross(u: Octonion, v: Octonion) -> Octonion:
    """u × v = Im(v̄ u) on imaginary octonions."""
    if not (u.is_imaginary() and v.is_imaginary()):
        raise ValueError("cross product is defined on imaginary octonions only")
    return oct_mul(v.conjugate(), u).imag_part()


def phi_value(u: Octonion, v: Octonion, w: Octonion) -> Fraction:
    """⟨u × v, w⟩."""
    return cross(u, v).dot(w)


def phi_from_cross() -> DifferentialForm:
    """The 3-form ⟨u×v, w⟩ on R7, with coordinate x_i dual to e_i."""
    terms = {}
    for i, j, k in itertools.combinations(range(1, 8), 3):
        c = phi_value(Octonion.basis(i), Octonion.basis(j), Octonion.basis(k))
        if c:
            terms[(i - 1, j - 1, k - 1)] = c
    return DifferentialForm(R7, 3, terms)


# e^{123}+e^{145}+e^{167}+e^{246}-e^{257}-e^{347}-e^{356}
PHI0_TERMS = (
    (1, (1, 2, 3)),
    (1, (1, 4, 5)),
    (1, (1, 6, 7)),
    (1, (2, 4, 6)),
    (-1, (2, 5, 7)),
    (-1, (3, 4, 7)),
    (-1, (3, 5, 6)),
)


def standard_phi0(chart: Chart = R7) -> DifferentialForm:
    if chart.dim != 7:
        raise ValueError("φ₀ lives on a 7-dimensional chart")
    return DifferentialForm(chart, 3, {tuple(i - 1 for i in idx): s for s, idx in PHI0_TERMS})


@dataclass(frozen=True)
class SignedPermutation:
    """The linear map e_i ↦ signs[i] · e_{perm[i]} (0-based, 7 entries)."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def as_polymap(self, source: Chart = R7, target: Chart = R7) -> PolyMap:
        """Map whose pullback sends dy_{perm[i]} to signs[i]·dx_i."""
        images = {}
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            images[target.coords[p]] = source.coord(source.coords[i]) * s
        return PolyMap.from_dict(source, target, images)

    def describe(self) -> str:
        return ", ".join(
            f"e{i + 1}->{'-' if s < 0 else '+'}e{p + 1}" for i, (p, s) in enumerate(zip(self.perm, self.signs))
        )


def match_phi0(phi: DifferentialForm, target: DifferentialForm | None = None) -> SignedPermutation | None:
    """Find a signed permutation P with P*phi == target (default φ₀).

    Candidates are permutations carrying the support triples of ``target``
    onto those of ``phi``; signs are then searched exhaustively.
    """
    if target is None:
        target = standard_phi0(phi.chart)
    n = phi.chart.dim
    src_terms = {k: c.re.constant_value() for k, c in phi.terms.items()}
    tgt_terms = {k: c.re.constant_value() for k, c in target.terms.items()}
    src_support = {frozenset(k) for k in src_terms}
    if len(src_support) != len(tgt_terms):
        return None
    for perm in itertools.permutations(range(n)):
        if {frozenset(perm[i] for i in k) for k in tgt_terms} != src_support:
            continue
        for signs in itertools.product((1, -1), repeat=n):
            if _pulls_back(src_terms, tgt_terms, perm, signs):
                found = SignedPermutation(perm, signs)
                assert pullback(found.as_polymap(target.chart, phi.chart), phi) == target
                return found
    return None


def _pulls_back(src_terms, tgt_terms, perm, signs) -> bool:
    for idx, c in tgt_terms.items():
        image = [perm[i] for i in idx]
        inversions = sum(1 for a in range(3) for b in range(a + 1, 3) if image[a] > image[b])
        coeff = src_terms[tuple(sorted(image))] * (-1) ** inversions
        for i in idx:
            coeff *= signs[i]
        if coeff != c:
            return False
    return True
