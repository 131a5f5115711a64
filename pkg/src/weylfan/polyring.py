"""Commutative polynomials in ``Q[X_1..X_n, Y_1..Y_n]`` and weight-initial forms."""

from __future__ import annotations

from .core import ArityError, Exp, SparseElement, Weight

__all__ = ["Poly", "padd", "pmul", "tau_initial", "deg_nu"]


class Poly(SparseElement):
    """Commutative polynomial; exponent layout ``(X-exponents, Y-exponents)``."""

    __slots__ = ()

    def _mono_product(self, e1: Exp, e2: Exp):
        return (tuple(a + b for a, b in zip(e1, e2)), 1),


def padd(p: Poly, q: Poly) -> Poly:
    return p + q


def pmul(p: Poly, q: Poly) -> Poly:
    return p * q


def tau_initial(nu: Weight, p: Poly) -> Poly:
    """Sum of the terms of ``p`` of maximal ``nu``-weight (0 maps to 0)."""
    if len(nu) != 2 * p.n:
        raise ArityError(f"weight of length {len(nu)} for arity {p.n}")
    return Poly._raw(p.top_part(nu), p.n)


def deg_nu(nu: Weight, p: Poly):
    return p.degree(nu)
