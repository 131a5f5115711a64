"""Division and Buchberger's algorithm for left ideals of the Weyl algebra
and ideals of the commutative ring ``Q[X, Y]``.

Both rings share the engine.  The only ring-dependent step is left
multiplication by a basis monomial (``SparseElement.lmul_monomial``); in the
Weyl algebra the extra terms it produces have componentwise smaller
exponents than the leading one, so leading exponents multiply exactly as in
the commutative case under every normal ordering.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .core import NEG_INF, ArityError, Exp, OrderSpec, SparseElement, Weight, is_in_region
from .polyring import Poly, tau_initial
from .weyl import WeylElement, symbol

__all__ = [
    "RingInstance",
    "WEYL",
    "COMMUTATIVE",
    "GroebnerBasis",
    "Division",
    "leading_term",
    "divides",
    "reduce",
    "divide",
    "s_element",
    "buchberger",
    "reduce_basis",
    "ideal_equal",
    "initial_ideal_weyl",
    "initial_ideal_comm",
    "minimal_monomials",
    "leading_monomial_ideal",
    "krull_dim_quotient",
]


@dataclass(frozen=True)
class RingInstance:
    kind: str  # "weyl" or "commutative"
    n: int

    @property
    def element_type(self):
        return WeylElement if self.kind == "weyl" else Poly

    @classmethod
    def of(cls, elem: SparseElement) -> "RingInstance":
        return cls("weyl" if isinstance(elem, WeylElement) else "commutative", elem.n)


def WEYL(n: int) -> RingInstance:
    return RingInstance("weyl", n)


def COMMUTATIVE(n: int) -> RingInstance:
    return RingInstance("commutative", n)


@dataclass
class GroebnerBasis:
    elements: list
    order: OrderSpec
    reduced: bool = False
    ring: RingInstance | None = None

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def leading_exponents(self) -> list:
        return [leading_term(self.order, g)[0] for g in self.elements]

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].total_degree() == 0


@dataclass
class Division:
    remainder: SparseElement
    quotients: list = field(default_factory=list)


def leading_term(order: OrderSpec, f: SparseElement) -> tuple[Exp, Fraction]:
    if f.is_zero():
        raise ValueError("leading_term of the zero element")
    if f.n != order.n:
        raise ArityError(f"order of arity {order.n} applied to element of arity {f.n}")
    return f.leading(order)


def divides(a: Exp, b: Exp) -> bool:
    return all(x <= y for x, y in zip(a, b))


def divide(f: SparseElement, G: Sequence[SparseElement], order: OrderSpec, record: bool = True) -> Division:
    """Left division of ``f`` by ``G``.

    Returns the remainder ``r`` and, when ``record`` is set, quotients ``q_i``
    with ``f = sum q_i * G[i] + r``.  No term of ``r`` is divisible by a
    leading exponent of ``G``.
    """
    cls = type(f)
    n = f.n
    for g in G:
        if g.is_zero():
            raise ValueError("cannot divide by zero")
        if g.n != n or type(g) is not cls:
            raise ArityError("divisors must live in the same ring as the dividend")
    leads = [g.leading(order) for g in G]
    key = order.key
    p = dict(f.terms)
    rem: dict = {}
    quots = [dict() for _ in G] if record else None
    while p:
        e = max(p, key=key)
        c = p[e]
        for i, (le, lc) in enumerate(leads):
            if divides(le, e):
                m = tuple(x - y for x, y in zip(e, le))
                coeff = c / lc
                for ex, k in _product_terms(G[i], m):
                    v = p.get(ex, 0) - coeff * k
                    if v:
                        p[ex] = v
                    else:
                        p.pop(ex, None)
                if record:
                    quots[i][m] = quots[i].get(m, 0) + coeff
                break
        else:
            rem[e] = c
            del p[e]
    remainder = cls._raw(rem, n)
    quotients = [cls(q, n) for q in quots] if record else []
    return Division(remainder, quotients)


def _product_terms(g: SparseElement, m: Exp) -> list:
    # terms of M_m * g as (exp, coeff) pairs, merged
    out: dict = {}
    for e2, c2 in g.terms.items():
        for ex, k in g._mono_product(m, e2):
            out[ex] = out.get(ex, 0) + c2 * k
    return [(e, c) for e, c in out.items() if c]


def reduce(f: SparseElement, G: Sequence[SparseElement], order: OrderSpec) -> SparseElement:
    return divide(f, G, order, record=False).remainder


def s_element(f: SparseElement, g: SparseElement, order: OrderSpec) -> SparseElement:
    """``M_a f / lc(f) - M_b g / lc(g)`` with ``a + lt(f) = b + lt(g) = lcm``."""
    ef, cf = f.leading(order)
    eg, cg = g.leading(order)
    lcm = tuple(max(x, y) for x, y in zip(ef, eg))
    mf = tuple(x - y for x, y in zip(lcm, ef))
    mg = tuple(x - y for x, y in zip(lcm, eg))
    return f.lmul_monomial(mf, 1 / cf) - g.lmul_monomial(mg, 1 / cg)


def buchberger(
    gens: Iterable[SparseElement],
    order: OrderSpec,
    ring: RingInstance | None = None,
    reduced: bool = True,
    trace: list | None = None,
) -> GroebnerBasis:
    """Gröbner basis of the left ideal (or ideal) generated by ``gens``.

    Pairs are processed smallest lcm first.  When ``trace`` is a list, the
    support of every S-element and every nonzero remainder is appended to it.
    """
    gens = [g for g in gens]
    if ring is None and gens:
        ring = RingInstance.of(gens[0])
    for g in gens:
        if ring is not None and (RingInstance.of(g) != ring):
            raise ArityError("all generators must live in the same ring")
        if g.n != order.n:
            raise ArityError(f"order of arity {order.n} used with elements of arity {g.n}")
    G = []
    for g in gens:
        if not g.is_zero():
            G.append(g.monic(order))
            if trace is not None:
                trace.append(g.support())
    if any(g.total_degree() == 0 for g in G):
        one = type(G[0]).one(G[0].n)
        return GroebnerBasis([one], order, True, ring)
    key = order.key
    pairs = list(combinations(range(len(G)), 2))
    while pairs:
        best = min(
            range(len(pairs)),
            key=lambda t: (key(_lcm(G[pairs[t][0]], G[pairs[t][1]], order)), pairs[t]),
        )
        i, j = pairs.pop(best)
        s = s_element(G[i], G[j], order)
        if trace is not None and s:
            trace.append(s.support())
        r = reduce(s, G, order)
        if r.is_zero():
            continue
        if trace is not None:
            trace.append(r.support())
        r = r.monic(order)
        if r.total_degree() == 0:
            return GroebnerBasis([r], order, True, ring)
        G.append(r)
        pairs.extend((k, len(G) - 1) for k in range(len(G) - 1))
    gb = GroebnerBasis(G, order, False, ring)
    return reduce_basis(gb) if reduced else gb


def _lcm(f, g, order):
    ef = f.leading(order)[0]
    eg = g.leading(order)[0]
    return tuple(max(x, y) for x, y in zip(ef, eg))


def reduce_basis(B: GroebnerBasis) -> GroebnerBasis:
    """Monic, autoreduced form, sorted by ascending leading exponent."""
    order = B.order
    key = order.key
    elems = sorted((g.monic(order) for g in B.elements if not g.is_zero()), key=lambda g: key(g.leading(order)[0]))
    minimal = []
    for g in elems:
        eg = g.leading(order)[0]
        if not any(divides(h.leading(order)[0], eg) for h in minimal):
            minimal.append(g)
    out = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        r = reduce(g, others, order) if others else g
        out.append(r.monic(order))
    out.sort(key=lambda g: key(g.leading(order)[0]))
    return GroebnerBasis(out, order, True, B.ring)


def ideal_equal(A: Iterable, B: Iterable, order: OrderSpec, ring: RingInstance | None = None) -> bool:
    """True iff the reduced bases of the two (left) ideals coincide."""
    ga = buchberger(list(A), order, ring)
    gb = buchberger(list(B), order, ring)
    return ga.elements == gb.elements


def initial_ideal_weyl(gens: Sequence[WeylElement], omega: Weight, base: OrderSpec) -> list[Poly]:
    """Symbols of a ``(base)_omega``-Gröbner basis; a ``base``-Gröbner basis of the initial ideal."""
    if not is_in_region(omega):
        raise ValueError(f"weight {omega!r} is outside the region Omega")
    gb = buchberger(gens, base.refine(omega), WEYL(base.n))
    return [symbol(omega, b) for b in gb.elements]


def initial_ideal_comm(gens: Sequence[Poly], nu: Weight, base: OrderSpec) -> list[Poly]:
    """``tau^nu`` of a ``(base)_nu``-Gröbner basis; any ``nu`` is allowed."""
    gb = buchberger(gens, base.refine(nu), COMMUTATIVE(base.n))
    return [tau_initial(nu, b) for b in gb.elements]


def minimal_monomials(exps: Iterable[Exp]) -> list:
    """Minimal generators of the monomial ideal spanned by ``exps``, sorted."""
    uniq = sorted(set(exps), key=lambda e: (sum(e), e))
    out = []
    for e in uniq:
        if not any(divides(m, e) for m in out):
            out.append(e)
    return sorted(out)


def leading_monomial_ideal(elements: Iterable[SparseElement], order: OrderSpec) -> list:
    return minimal_monomials(g.leading(order)[0] for g in elements if not g.is_zero())


def krull_dim_quotient(monomial_gens: Iterable[Exp], nvars: int):
    """Krull dimension of ``Q[z_1..z_N] / (monomials)``.

    It is the largest size of a variable set ``S`` such that no generator is
    supported inside ``S``; ``NEG_INF`` for the unit ideal.
    """
    supports = []
    for e in monomial_gens:
        if len(e) != nvars:
            raise ArityError(f"monomial {e!r} is not in {nvars} variables")
        supports.append(frozenset(i for i, v in enumerate(e) if v))
    if any(not s for s in supports):
        return NEG_INF
    supports = [s for s in supports if not any(t < s for t in supports)]
    # largest sizes first; the empty set always qualifies
    for size in range(nvars, -1, -1):
        for S in combinations(range(nvars), size):
            chosen = set(S)
            if not any(s <= chosen for s in supports):
                return size
    raise AssertionError("unreachable")
