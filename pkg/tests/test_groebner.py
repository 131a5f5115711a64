from fractions import Fraction
from itertools import combinations, product

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from weylfan import (
    COMMUTATIVE,
    NEG_INF,
    WEYL,
    OrderSpec,
    Poly,
    WeylElement,
    buchberger,
    divide,
    ideal_equal,
    initial_ideal_comm,
    initial_ideal_weyl,
    krull_dim_quotient,
    leading_term,
    parse_poly,
    parse_weyl,
    reduce,
    reduce_basis,
    s_element,
    symbol,
)
from weylfan.groebner import divides, leading_monomial_ideal, minimal_monomials
from helpers import CORPUS_N1, corpus, hilbert_krull, random_poly, random_weyl, seeded

LEX = OrderSpec.lex(1)
W = lambda t, n=1: parse_weyl(t, n)  # noqa: E731
P = lambda t, n=1: parse_poly(t, n)  # noqa: E731
AIRY = W("d^2 - x")


def test_leading_term_examples():
    assert leading_term(LEX.refine((0, 1)), AIRY)[0] == (0, 2)
    assert leading_term(LEX.refine((1, 0)), AIRY)[0] == (1, 0)
    m = W("3*x^2*d")
    assert leading_term(LEX, m) == ((2, 1), 3)
    with pytest.raises(ValueError):
        leading_term(LEX, WeylElement.zero(1))


def test_reduce_examples():
    g = W("x*d + 3")
    assert reduce(g, [g], LEX).is_zero()
    assert reduce(W("d*x"), [W("x*d")], LEX) == WeylElement.one(1)
    assert reduce(W("d*x"), [W("x*d")], LEX.refine((3, 1))) == WeylElement.one(1)
    assert reduce(W("x^3*d - 5"), [WeylElement.one(1)], LEX).is_zero()


def test_s_element_examples():
    order = OrderSpec.lex(1)
    s = s_element(P("X^2 - Y"), P("X*Y - 1"), order)
    assert s == P("X - Y^2")
    f = W("x*d^2 + d")
    self_pair = s_element(f, f, order)
    assert self_pair.is_zero()


def test_s_element_cancels_leads():
    rng = seeded(20)
    order = LEX.refine((1, 2))
    for _ in range(40):
        f, g = random_weyl(rng, 1), random_weyl(rng, 1)
        if f.is_zero() or g.is_zero():
            continue
        s = s_element(f, g, order)
        lcm = tuple(max(a, b) for a, b in zip(f.leading(order)[0], g.leading(order)[0]))
        assert s.is_zero() or order.key(s.leading(order)[0]) < order.key(lcm)


def test_buchberger_examples():
    assert [str(g) for g in buchberger([W("x"), W("d")], LEX)] == ["1"]
    for w in [(0, 1), (1, 0), (2, 1), (1, 1), (5, 3)]:
        for perm in [(0, 1), (1, 0)]:
            gb = buchberger([AIRY], OrderSpec.lex(1, perm).refine(w))
            assert len(gb) == 1 and gb[0] in (AIRY, -AIRY)
    gb = buchberger([P("X^2 - Y"), P("X*Y - 1")], LEX)
    assert set(gb.elements) == {P("X - Y^2"), P("Y^3 - 1")}
    assert buchberger([], LEX).elements == []


def test_empty_and_zero_generators():
    assert buchberger([WeylElement.zero(1)], LEX).elements == []


def _sympy_gb(polys, order_name):
    X, Y = sympy.symbols("X Y")
    exprs = [sum(sympy.Rational(c.numerator, c.denominator) * X**e[0] * Y**e[1] for e, c in p.terms.items()) for p in polys]
    G = sympy.groebner(exprs, X, Y, order=order_name)
    out = set()
    for g in G.exprs:
        poly = sympy.Poly(g, X, Y)
        lc = poly.coeffs(order=order_name)[0]
        out.add(Poly({m: Fraction(int(q.p), int(q.q)) for m, c in poly.terms() for q in [sympy.Rational(c) / lc]}, 1))
    return out


@pytest.mark.parametrize("seed", range(12))
def test_commutative_against_sympy(seed):
    rng = seeded(100 + seed)
    polys = [random_poly(rng, 1, max_terms=3, max_exp=3) for _ in range(rng.randint(1, 3))]
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return
    assert set(buchberger(polys, LEX).elements) == _sympy_gb(polys, "lex")
    assert set(buchberger(polys, LEX.refine((1, 1))).elements) == _sympy_gb(polys, "grlex")


def _recombine(division, G):
    total = division.remainder
    for q, g in zip(division.quotients, G):
        total = total + q * g
    return total


@pytest.mark.parametrize("n", [1, 2])
def test_division_contract(n):
    rng = seeded(30 + n)
    for _ in range(40):
        G = [g for g in (random_weyl(rng, n, max_terms=3, max_exp=3) for _ in range(rng.randint(1, 3))) if not g.is_zero()]
        f = random_weyl(rng, n, max_exp=4)
        order = OrderSpec(n, (tuple(rng.randint(0, 3) for _ in range(2 * n)),))
        div = divide(f, G, order)
        assert _recombine(div, G) == f
        leads = [g.leading(order)[0] for g in G]
        assert not any(divides(le, e) for e in div.remainder.terms for le in leads)


def _criterion(gb):
    G, order = gb.elements, gb.order
    return all(reduce(s_element(f, g, order), G, order).is_zero() for f, g in combinations(G, 2))


ORDERS = [OrderSpec.lex(1), OrderSpec.lex(1).refine((1, 1)), OrderSpec.lex(1, (1, 0)).refine((2, 3))]


@pytest.mark.parametrize("name", sorted(CORPUS_N1))
@pytest.mark.parametrize("order", ORDERS, ids=["lex", "deg", "w23"])
def test_criterion_and_membership(name, order):
    gens = corpus(name)
    gb = buchberger(gens, order)
    assert _criterion(gb)
    for g in gens:
        assert reduce(g, gb.elements, order).is_zero()
    rng = seeded(40)
    for _ in range(15):
        w = WeylElement.zero(1)
        for g in gens:
            w = w + random_weyl(rng, 1, max_terms=3, max_exp=3) * g
        assert reduce(w, gb.elements, order).is_zero()


def test_reduced_basis_invariants():
    rng = seeded(50)
    for _ in range(20):
        gens = [random_weyl(rng, 1, max_terms=3, max_exp=3) for _ in range(2)]
        order = OrderSpec.lex(1).refine((rng.randint(0, 3), rng.randint(1, 3)))
        gb = buchberger(gens, order)
        leads = gb.leading_exponents()
        assert leads == sorted(leads, key=order.key)
        for g, le in zip(gb, leads):
            assert g.terms[le] == 1
            for h, lh in zip(gb, leads):
                if h is not g:
                    assert not any(divides(lh, e) for e in g.terms)


def test_determinism_under_permutation():
    rng = seeded(60)
    for _ in range(10):
        gens = [random_weyl(rng, 1, max_terms=3, max_exp=3) for _ in range(3)]
        a = buchberger(gens, LEX).elements
        b = buchberger(gens[::-1], LEX).elements
        assert a == b


def test_reduce_basis_idempotent():
    gb = buchberger([W("d^3 - x*d - 1"), W("x*d^2")], LEX)
    assert reduce_basis(gb).elements == gb.elements


def test_ideal_equal_examples():
    assert ideal_equal([W("x"), W("d")], [WeylElement.one(1)], LEX)
    assert not ideal_equal([P("Y^2")], [P("Y")], LEX)
    gens = [W("x^2*d - 1"), W("d^2"), W("x*d")]
    assert ideal_equal(gens, gens[::-1], LEX)


@given(
    st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)), max_size=4),
    st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)), max_size=4),
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
)
def test_leading_exponents_multiply(a, b, w):
    u = WeylElement({e: i + 1 for i, e in enumerate(a)}, 2)
    v = WeylElement({e: i + 2 for i, e in enumerate(b)}, 2)
    if u.is_zero() or v.is_zero():
        return
    order = OrderSpec(2, (w,), (3, 1, 0, 2))
    lu, lv = u.leading(order)[0], v.leading(order)[0]
    assert (u * v).leading(order)[0] == tuple(x + y for x, y in zip(lu, lv))


def test_initial_ideal_examples():
    assert initial_ideal_weyl([AIRY], (0, 1), LEX) == [P("Y^2")]
    assert initial_ideal_weyl([AIRY], (2, 1), LEX) in ([P("X - Y^2")], [P("Y^2 - X")])
    assert initial_ideal_weyl([AIRY], (1, 0), LEX) == [P("X")]
    with pytest.raises(ValueError):
        initial_ideal_weyl([AIRY], (0, 0), LEX)
    assert initial_ideal_comm([P("Y^2")], (1, 1), LEX) == [P("Y^2")]
    assert initial_ideal_comm([P("Y^2 - X")], (1, 1), LEX) == [P("Y^2")]
    assert ideal_equal(initial_ideal_comm([P("Y^2 - X")], (2, 1), LEX), [P("Y^2 - X")], LEX)


def test_initial_ideal_contains_symbols():
    # symbols of random members of L reduce to zero modulo the initial ideal basis
    rng = seeded(70)
    for name in ["airy", "cubic", "euler"]:
        gens = corpus(name)
        for omega in [(0, 1), (2, 1), (1, 1), (3, 2)]:
            init = initial_ideal_weyl(gens, omega, LEX)
            for _ in range(10):
                f = WeylElement.zero(1)
                for g in gens:
                    f = f + random_weyl(rng, 1, max_terms=3, max_exp=3) * g
                if not f.is_zero():
                    assert reduce(symbol(omega, f), init, LEX).is_zero()


def test_initial_basis_is_groebner():
    for name in ["airy", "cubic", "pair"]:
        init = initial_ideal_weyl(corpus(name), (1, 1), LEX)
        gb = buchberger(init, LEX, COMMUTATIVE(1), reduced=False)
        assert set(leading_monomial_ideal(gb.elements, LEX)) == set(leading_monomial_ideal(init, LEX))


def test_krull_examples():
    assert krull_dim_quotient([], 2) == 2
    assert krull_dim_quotient([(0, 2)], 2) == 1
    assert krull_dim_quotient([(1, 0), (0, 1)], 2) == 0
    assert krull_dim_quotient([(0, 0)], 2) == NEG_INF
    assert krull_dim_quotient([(1, 1)], 2) == 1


@given(st.lists(st.tuples(*[st.integers(0, 2)] * 4), max_size=5))
def test_krull_matches_hilbert_degree(gens):
    assert krull_dim_quotient(gens, 4) == hilbert_krull(gens, 4)


def test_hilbert_oracle_sanity():
    assert hilbert_krull([(0, 2)], 2) == 1
    assert hilbert_krull([], 3) == 3
    assert hilbert_krull([(0, 0, 0)], 3) == float("-inf")


def test_minimal_monomials():
    assert minimal_monomials([(2, 1), (1, 1), (3, 0), (1, 1)]) == [(1, 1), (3, 0)]


def test_weyl_n2_unit_ideal():
    gens = corpus("w2")
    assert buchberger(gens, OrderSpec.lex(2), WEYL(2)).is_unit()
    # d2 and d1^2 - x2 do not commute: [d2, d1^2 - x2] = -1
    assert (gens[1] * gens[0] - gens[0] * gens[1]) == -WeylElement.one(2)


def test_mixed_rings_rejected():
    with pytest.raises(Exception):
        buchberger([W("x"), P("X")], LEX)
    with pytest.raises(Exception):
        buchberger([W("x"), W("x1", 2)], LEX)


def test_commutative_n2_membership():
    order = OrderSpec(2, ((1, 1, 1, 1),))
    gens = [P("X1*Y1 - X2", 2), P("Y2^2 - Y1", 2)]
    gb = buchberger(gens, order)
    assert _criterion(gb)
    rng = seeded(80)
    for _ in range(10):
        f = sum((random_poly(rng, 2, max_terms=2, max_exp=2) * g for g in gens), Poly.zero(2))
        assert reduce(f, gb.elements, order).is_zero()


def test_grid_of_orders_product():
    # lead exponent of a product is additive under every small weight order
    u, v = W("x*d^2 + x^3 - 2*d"), W("d^3 - x^2*d + 1")
    for w in product(range(4), repeat=2):
        for perm in [(0, 1), (1, 0)]:
            o = OrderSpec(1, (w,), perm)
            assert (u * v).leading(o)[0] == tuple(a + b for a, b in zip(u.leading(o)[0], v.leading(o)[0]))
