import itertools
from fractions import Fraction

from hypothesis import strategies as st

from g2calc.exterior import Chart
from g2calc.poly import Polynomial

VARS = ("x1", "x2", "xi1")
CHART3 = Chart("U", ("x1", "x2", "xi1"))
CHART4 = Chart("V", ("x1", "x2", "xi1", "xi2"))

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def polynomials(variables=VARS, max_terms=4, max_exp=2):
    exps = st.tuples(*[st.integers(0, max_exp) for _ in variables])
    return st.dictionaries(exps, small_fractions, max_size=max_terms).map(lambda d: Polynomial(variables, d))


def points(variables=VARS):
    return st.fixed_dictionaries({v: small_fractions for v in variables})


def as_fraction(x) -> Fraction:
    return Fraction(int(x.p), int(x.q))


PHI0_TERMS = {(1, 2, 3): 1, (1, 4, 5): 1, (1, 6, 7): 1, (2, 4, 6): 1, (2, 5, 7): -1, (3, 4, 7): -1, (3, 5, 6): -1}


def _sign(seq):
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return -1 if inv % 2 else 1


def _phi0_trilinear(a, b, c):
    if len({a, b, c}) < 3:
        return 0
    return PHI0_TERMS.get(tuple(sorted((a, b, c))), 0) * _sign((a, b, c))


def shuffle_pairing_oracle(i, j):
    """(e_i⌟φ₀)∧(e_j⌟φ₀)∧φ₀ on (e1..e7) as a (2,2,3)-shuffle sum, no form engine involved."""
    idx = list(range(1, 8))
    total = 0
    for S in itertools.combinations(idx, 2):
        rest = [x for x in idx if x not in S]
        for T in itertools.combinations(rest, 2):
            U = [x for x in rest if x not in T]
            total += _sign(list(S) + list(T) + U) * _phi0_trilinear(i, *S) * _phi0_trilinear(j, *T) * _phi0_trilinear(*U)
    return total


def strike_out_oracle(phi, zeroed):
    """Monomials of φ containing no differential of a zeroed coordinate."""
    coords = phi.chart.coords
    return {
        tuple(coords[i] for i in idx): c.re.constant_value()
        for idx, c in phi.terms.items()
        if not any(coords[i] in zeroed for i in idx)
    }
