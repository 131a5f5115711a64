from hypothesis import given

from weylfan import NEG_INF, Poly, deg_nu, padd, parse_poly, pmul, tau_initial
from helpers import elements, weights

P = lambda t, n=1: parse_poly(t, n)  # noqa: E731


def test_products():
    assert pmul(P("X + Y"), P("X - Y")) == P("X^2 - Y^2")
    p = P("3*X^2*Y - 1/2")
    assert pmul(p, Poly.one(1)) == p
    assert pmul(P("X"), P("Y")) == pmul(P("Y"), P("X"))
    assert padd(P("X"), P("-X")).is_zero()


def test_tau_examples():
    assert tau_initial((1, 1), P("Y^2 - X")) == P("Y^2")
    assert tau_initial((1, 2), P("Y^2 - X^2")) == P("Y^2")
    h = P("Y^2 - X")
    assert tau_initial((2, 1), h) == h
    assert tau_initial((1, 1), Poly.zero(1)).is_zero()


def test_deg_examples():
    assert deg_nu((1, 1), P("Y^2 - X")) == 2
    assert deg_nu((1, 1), Poly.zero(1)) == NEG_INF
    assert deg_nu((0, 1), P("X^5")) == 0


@given(elements(Poly), elements(Poly), weights())
def test_tau_multiplicative(p, q, nu):
    assert tau_initial(nu, p * q) == tau_initial(nu, p) * tau_initial(nu, q)


@given(elements(Poly), weights())
def test_tau_idempotent(p, nu):
    t = tau_initial(nu, p)
    assert tau_initial(nu, t) == t


@given(elements(Poly), elements(Poly), weights())
def test_degree_additive(p, q, nu):
    assert deg_nu(nu, p * q) == deg_nu(nu, p) + deg_nu(nu, q)


@given(elements(Poly, n=2, max_exp=3), elements(Poly, n=2, max_exp=3), elements(Poly, n=2, max_exp=3))
def test_ring_axioms_n2(p, q, r):
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
