"""Exact multivariate polynomials with rational coefficients.

Polynomials live over an explicit, ordered tuple of variable names.  Terms are
stored sparsely as ``{exponent_vector: Fraction}`` with zero coefficients never
kept, so two polynomials over the same variables are equal iff their term maps
are equal.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]

__all__ = [
    "ComplexPolynomial",
    "Polynomial",
    "VariableMismatchError",
    "poly_add",
    "poly_compose",
    "poly_eval",
    "poly_mul",
    "poly_partial",
]


class VariableMismatchError(ValueError):
    """Raised when polynomials over different variable lists are combined."""


def _grlex_key(exps: tuple[int, ...]) -> tuple:
    return (sum(exps), exps)


class Polynomial:
    """Sparse polynomial over ``variables`` with :class:`Fraction` coefficients.

    Instances are immutable.  Use the ``zero``/``constant``/``variable``
    constructors rather than building term maps by hand.
    """

    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple[int, ...], Scalar] | None = None):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for variables {self.variables}")
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, variables: tuple[str, ...], terms: dict) -> "Polynomial":
        # trusted fast path: terms already canonical
        p = object.__new__(cls)
        p.variables = variables
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, variables: Iterable[str]) -> "Polynomial":
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, value: Scalar, variables: Iterable[str]) -> "Polynomial":
        variables = tuple(variables)
        value = Fraction(value)
        return cls._raw(variables, {(0,) * len(variables): value} if value else {})

    @classmethod
    def variable(cls, name: str, variables: Iterable[str]) -> "Polynomial":
        variables = tuple(variables)
        if name not in variables:
            raise KeyError(f"unknown variable {name!r}")
        exps = tuple(int(v == name) for v in variables)
        return cls._raw(variables, {exps: Fraction(1)})

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    def items(self):
        """Terms in descending graded-lex order of exponent vectors."""
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((0,) * len(self.variables), Fraction(0))

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.variables != self.variables:
                raise VariableMismatchError(f"{self.variables} != {other.variables}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.variables)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial.zero(self.variables)
            return Polynomial._raw(self.variables, {e: c * other for e, c in self._terms.items()})
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._raw(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def partial(self, var: str) -> "Polynomial":
        try:
            i = self.variables.index(var)
        except ValueError:
            raise KeyError(f"unknown variable {var!r}") from None
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                out[tuple(d)] = c * e[i]
        return Polynomial._raw(self.variables, out)

    def eval(self, point: Mapping[str, Scalar]) -> Fraction:
        missing = [v for v in self.variables if v not in point]
        if missing:
            raise KeyError(f"no value for {missing}")
        vals = [Fraction(point[v]) for v in self.variables]
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for x, k in zip(vals, e):
                if k:
                    term *= x**k
            total += term
        return total

    def compose(self, substitution: Mapping[str, "Polynomial"]) -> "Polynomial":
        missing = [v for v in self.variables if v not in substitution]
        if missing:
            raise KeyError(f"substitution does not cover {missing}")
        images = [substitution[v] for v in self.variables]
        target = {p.variables for p in images}
        if len(target) > 1:
            raise VariableMismatchError("substituted polynomials use different variable lists")
        target_vars = images[0].variables if images else ()
        powers: list[dict[int, Polynomial]] = [{} for _ in images]

        def power(i: int, k: int) -> Polynomial:
            cache = powers[i]
            if k not in cache:
                cache[k] = images[i] ** k
            return cache[k]

        result = Polynomial.zero(target_vars)
        for e, c in self._terms.items():
            term = Polynomial.constant(c, target_vars)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_str()!r}, {self.variables!r})"

    def to_str(self, unicode: bool = False) -> str:
        """Deterministic rendering, e.g. ``2*x1^2*xi1 - 1/3*x2 + 5``."""
        if not self._terms:
            return "0"
        mul = "·" if unicode else "*"
        parts = []
        for e, c in self.items():
            factors = []
            for name, k in zip(self.variables, e):
                if k:
                    shown = _unicode_name(name) if unicode else name
                    factors.append(shown if k == 1 else f"{shown}^{k}")
            mag = abs(c)
            if factors:
                body = mul.join(factors) if mag == 1 else f"{mag}{mul}" + mul.join(factors)
            else:
                body = str(mag)
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    @classmethod
    def parse(cls, text: str, variables: Iterable[str]) -> "Polynomial":
        """Inverse of :meth:`to_str` (ASCII form)."""
        variables = tuple(variables)
        text = text.strip()
        if text == "0":
            return cls.zero(variables)
        tokens = re.findall(r"[+-]|[^\s+-]+", text)
        sign = 1
        terms: dict[tuple[int, ...], Fraction] = {}
        expect_term = True
        for tok in tokens:
            if tok in "+-":
                sign = -1 if tok == "-" else 1
                expect_term = True
                continue
            if not expect_term:
                raise ValueError(f"malformed polynomial {text!r}")
            coeff = Fraction(sign)
            exps = [0] * len(variables)
            for factor in tok.split("*"):
                if factor and (factor[0].isdigit()):
                    coeff *= Fraction(factor)
                    continue
                name, _, k = factor.partition("^")
                if name not in variables:
                    raise ValueError(f"unknown variable {name!r} in {text!r}")
                exps[variables.index(name)] += int(k) if k else 1
            e = tuple(exps)
            terms[e] = terms.get(e, 0) + coeff
            sign, expect_term = 1, False
        return cls(variables, terms)


_GREEK = {"xi": "ξ", "eta": "η"}


def _unicode_name(name: str) -> str:
    m = re.fullmatch(r"([a-z]+)(\d*)", name)
    if m and m.group(1) in _GREEK:
        return _GREEK[m.group(1)] + m.group(2)
    return name


class ComplexPolynomial:
    """A pair ``re + i*im`` of polynomials over one variable list."""

    __slots__ = ("re", "im")

    def __init__(self, re: Polynomial, im: Polynomial | None = None):
        if im is None:
            im = Polynomial.zero(re.variables)
        if re.variables != im.variables:
            raise VariableMismatchError("real and imaginary parts use different variables")
        self.re = re
        self.im = im

    @classmethod
    def zero(cls, variables: Iterable[str]) -> "ComplexPolynomial":
        z = Polynomial.zero(variables)
        return cls(z, z)

    @classmethod
    def constant(cls, re: Scalar, variables: Iterable[str], im: Scalar = 0) -> "ComplexPolynomial":
        return cls(Polynomial.constant(re, variables), Polynomial.constant(im, variables))

    @property
    def variables(self) -> tuple[str, ...]:
        return self.re.variables

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def is_real(self) -> bool:
        return self.im.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            other = ComplexPolynomial(other)
        if not isinstance(other, ComplexPolynomial):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    @staticmethod
    def _lift(x, variables) -> "ComplexPolynomial":
        if isinstance(x, ComplexPolynomial):
            return x
        if isinstance(x, Polynomial):
            return ComplexPolynomial(x)
        if isinstance(x, complex):
            raise TypeError("floating complex values are not exact; pass re/im Fractions")
        if isinstance(x, (int, Fraction)):
            return ComplexPolynomial.constant(x, variables)
        raise TypeError(f"cannot combine ComplexPolynomial with {type(x).__name__}")

    def __add__(self, other) -> "ComplexPolynomial":
        try:
            other = self._lift(other, self.variables)
        except TypeError:
            return NotImplemented
        return ComplexPolynomial(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "ComplexPolynomial":
        return ComplexPolynomial(-self.re, -self.im)

    def __sub__(self, other) -> "ComplexPolynomial":
        return self + (-self._lift(other, self.variables))

    def __mul__(self, other) -> "ComplexPolynomial":
        if isinstance(other, (int, Fraction, Polynomial)):
            return ComplexPolynomial(self.re * other, self.im * other)
        try:
            other = self._lift(other, self.variables)
        except TypeError:
            return NotImplemented
        if other.im.is_zero():
            return ComplexPolynomial(self.re * other.re, self.im * other.re)
        if self.im.is_zero():
            return ComplexPolynomial(self.re * other.re, self.re * other.im)
        return ComplexPolynomial(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "ComplexPolynomial":
        return ComplexPolynomial(self.re, -self.im)

    def partial(self, var: str) -> "ComplexPolynomial":
        return ComplexPolynomial(self.re.partial(var), self.im.partial(var))

    def compose(self, substitution: Mapping[str, Polynomial]) -> "ComplexPolynomial":
        return ComplexPolynomial(self.re.compose(substitution), self.im.compose(substitution))

    def eval(self, point: Mapping[str, Scalar]) -> tuple[Fraction, Fraction]:
        return self.re.eval(point), self.im.eval(point)

    def __repr__(self) -> str:
        return f"ComplexPolynomial({self.re.to_str()!r}, {self.im.to_str()!r})"


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a._coerce(b) + a


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * a._coerce(b)


def poly_partial(p: Polynomial, var: str) -> Polynomial:
    return p.partial(var)


def poly_eval(p: Polynomial, point: Mapping[str, Scalar]) -> Fraction:
    return p.eval(point)


def poly_compose(p: Polynomial, substitution: Mapping[str, Polynomial]) -> Polynomial:
    return p.compose(substitution)
