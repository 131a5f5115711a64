"""Arithmetic in the n-th Weyl algebra over Q.

Elements are kept in canonical form ``sum c * x^l d^m`` with every ``x``
to the left of every ``d``.  The product of two basis monomials is

    x^a d^b * x^c d^e = sum_k prod_i k_i! C(b_i, k_i) C(c_i, k_i) x^(a+c-k) d^(b+e-k)

which follows from ``d x = x d + 1``.  ``apply`` evaluates an operator on
``Q[X]`` directly from the definition (multiply / differentiate), and is
kept independent of the product so it can serve as a check on it.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import Mapping

from .core import ArityError, Exp, SparseElement, Weight, to_rational

__all__ = ["WeylElement", "PolyX", "add", "mul", "apply", "deg_omega", "symbol", "commutator", "xi", "d"]


@lru_cache(maxsize=200_000)
def _weyl_mono_product(e1: Exp, e2: Exp) -> tuple:
    n = len(e1) // 2
    per_var = []
    for i in range(n):
        b, c = e1[n + i], e2[i]
        opts = []
        for k in range(min(b, c) + 1):
            opts.append((k, factorial(k) * comb(b, k) * comb(c, k)))
        per_var.append(opts)
    base_x = [e1[i] + e2[i] for i in range(n)]
    base_d = [e1[n + i] + e2[n + i] for i in range(n)]
    out = []
    for choice in product(*per_var):
        coeff = 1
        xs, ds = list(base_x), list(base_d)
        for i, (k, v) in enumerate(choice):
            coeff *= v
            xs[i] -= k
            ds[i] -= k
        out.append((tuple(xs) + tuple(ds), coeff))
    return tuple(out)


class WeylElement(SparseElement):
    """An element of the Weyl algebra ``Q<x_1..x_n, d_1..d_n>``."""

    __slots__ = ()

    def _mono_product(self, e1, e2):
        return _weyl_mono_product(e1, e2)


def xi(i: int, n: int) -> WeylElement:
    """The multiplication operator ``x_i`` (1-based)."""
    return WeylElement.gen(i - 1, n)


def d(i: int, n: int) -> WeylElement:
    """The derivation ``d_i`` (1-based)."""
    return WeylElement.gen(n + i - 1, n)


class PolyX:
    """A polynomial in ``Q[X_1..X_n]``, the module the Weyl algebra acts on."""

    __slots__ = ("n", "terms")

    def __init__(self, terms: Mapping[tuple, object] | None = None, n: int = 1):
        self.n = n
        clean = {}
        for a, c in (terms or {}).items():
            c = to_rational(c)
            if c:
                if len(a) != n:
                    raise ArityError(f"exponent {a!r} does not have {n} entries")
                clean[tuple(a)] = c
        self.terms = dict(sorted(clean.items()))

    @classmethod
    def monomial(cls, alpha, c=1):
        return cls({tuple(alpha): c}, len(alpha))

    def __eq__(self, other):
        if not isinstance(other, PolyX):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(self.terms.items())))

    def __add__(self, other):
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out.get(a, 0) + c
        return PolyX(out, self.n)

    def __repr__(self):
        return f"PolyX({self.terms!r}, n={self.n})"


def _check_pair(u, v):
    if not isinstance(u, WeylElement) or not isinstance(v, WeylElement):
        raise TypeError("expected WeylElement operands")
    if u.n != v.n:
        raise ArityError(f"arity {u.n} does not match arity {v.n}")


def add(u: WeylElement, v: WeylElement) -> WeylElement:
    _check_pair(u, v)
    return u + v


def mul(u: WeylElement, v: WeylElement) -> WeylElement:
    _check_pair(u, v)
    return u * v


def commutator(u: WeylElement, v: WeylElement) -> WeylElement:
    return mul(u, v) - mul(v, u)


def apply(w: WeylElement, p: PolyX) -> PolyX:
    """Image of ``p`` under the differential operator ``w``."""
    if w.n != p.n:
        raise ArityError(f"operator of arity {w.n} applied to polynomial in {p.n} variables")
    n = w.n
    out: dict = {}
    for e, c in w.terms.items():
        lam, mu = e[:n], e[n:]
        for alpha, pc in p.terms.items():
            coeff = c * pc
            # d^mu X^alpha = prod alpha_i!/(alpha_i-mu_i)! X^(alpha-mu)
            for a, m in zip(alpha, mu):
                if m > a:
                    coeff = 0
                    break
                coeff *= factorial(a) // factorial(a - m)
            if not coeff:
                continue
            beta = tuple(a - m + l for a, m, l in zip(alpha, mu, lam))
            out[beta] = out.get(beta, 0) + coeff
    return PolyX(out, n)


def deg_omega(omega: Weight, w: WeylElement):
    """Largest ``omega``-weight over the support; ``NEG_INF`` for zero."""
    return w.degree(omega)


def symbol(omega: Weight, w: WeylElement):
    """Top-``omega``-weight part of ``w`` read in ``Q[X, Y]``."""
    from .polyring import Poly

    if len(omega) != 2 * w.n:
        raise ArityError(f"weight of length {len(omega)} for arity {w.n}")
    return Poly._raw(w.top_part(omega), w.n)

