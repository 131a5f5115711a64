"""Random elements, the ideal corpus and small independent oracles."""

import random
from fractions import Fraction
from itertools import combinations, product
from math import comb

from hypothesis import strategies as st

from weylfan import Poly, WeylElement, parse_weyl

CORPUS_N1 = {
    "airy": ["d^2 - x"],
    "euler": ["x*d + 1"],
    "cubic": ["d^3 - x*d - 1"],
    "pair": ["x^2*d - 1", "d^2"],
    "unit": ["x", "d"],
}
CORPUS_N2 = {"w2": ["d1^2 - x2", "d2"]}


def corpus(name):
    if name in CORPUS_N1:
        return [parse_weyl(t, 1) for t in CORPUS_N1[name]]
    return [parse_weyl(t, 2) for t in CORPUS_N2[name]]


def random_coeff(rng):
    return Fraction(rng.randint(-5, 5), rng.randint(1, 3))


def random_element(rng, n, cls=WeylElement, max_terms=6, max_exp=5):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = tuple(rng.randint(0, max_exp) for _ in range(2 * n))
        terms[e] = random_coeff(rng)
    return cls(terms, n)


def random_weyl(rng, n, **kw):
    return random_element(rng, n, WeylElement, **kw)


def random_poly(rng, n, **kw):
    return random_element(rng, n, Poly, **kw)


def random_weight(rng, n, hi=5):
    return tuple(rng.randint(0, hi) for _ in range(2 * n))


def elements(cls=WeylElement, n=1, max_terms=5, max_exp=4):
    exps = st.tuples(*[st.integers(0, max_exp)] * (2 * n))
    coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda t: cls(t, n))


def weights(n=1, hi=6):
    return st.tuples(*[st.integers(0, hi)] * (2 * n))


def region_weights(n=1, hi=6):
    return weights(n, hi).filter(lambda w: all(w[i] + w[n + i] > 0 for i in range(n)))


def seeded(seed):
    return random.Random(seed)


# -- independent Krull dimension: degree of the Hilbert polynomial ---------


def _standard_count(gens, nvars, D):
    """Monomials of total degree <= D outside the monomial ideal (inclusion-exclusion)."""
    total = 0
    for k in range(len(gens) + 1):
        for S in combinations(gens, k):
            lcm = tuple(max(col) for col in zip(*S)) if S else (0,) * nvars
            rest = D - sum(lcm)
            if rest >= 0:
                total += (-1) ** k * comb(rest + nvars, nvars)
    return total


def hilbert_krull(gens, nvars):
    """Krull dimension as the degree of ``D -> #standard monomials of degree <= D``."""
    gens = sorted(set(map(tuple, gens)))
    start = sum(max((g[i] for g in gens), default=0) for i in range(nvars)) + 1
    vals = [_standard_count(gens, nvars, start + t) for t in range(nvars + 2)]
    if all(v == 0 for v in vals):
        return float("-inf")
    deg = 0
    while any(vals):
        vals = [b - a for a, b in zip(vals, vals[1:])]
        deg += 1
    return deg - 1


def all_exponents(n, total):
    return [a for a in product(range(total + 1), repeat=n) if sum(a) <= total]
