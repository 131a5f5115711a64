"""Weight fans of left ideals of the first Weyl algebra.

For ``n = 1`` a weight ``(w1, w2)`` in the region is determined up to scaling
by its slope ``w2 / w1`` in ``[0, inf]``.  Initial ideals only change where
two exponents of some relevant element tie, i.e. at finitely many rational
slopes, so the classes of weights with equal initial ideal are unions of
slope intervals.  ``fan_1d`` finds them exactly: candidate breakpoints are
harvested from every support met during Gröbner computations (inputs,
S-elements, remainders, outputs) until no new ones appear, and each open
interval is checked at two interior samples.

For ``n >= 2`` only ``grid_sample`` is available; it has no completeness
guarantee and only bounds the number of classes from below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .core import ArityError, OrderSpec, Weight, is_in_region, make_weight, primitive
from .groebner import COMMUTATIVE, WEYL, GroebnerBasis, buchberger
from .polyring import Poly
from .weyl import WeylElement, symbol

__all__ = [
    "INF",
    "SlopeCone",
    "FanDecomposition",
    "UniversalBasis",
    "slope_of",
    "weight_for_slope",
    "simplest_between",
    "tie_slopes",
    "fan_1d",
    "ugb",
    "bound_c",
    "chi",
    "gamma",
    "classify_region",
    "grid_sample",
    "reference_ideal",
]

INF = math.inf
CERTIFICATE = "certified-by-sampling"


def slope_of(omega: Weight):
    """``omega_2 / omega_1`` as a Fraction, ``INF`` when ``omega_1 == 0``."""
    if len(omega) != 2:
        raise ArityError("slopes are only defined for n = 1")
    if not is_in_region(omega):
        raise ValueError(f"weight {omega!r} is outside the region Omega")
    return INF if omega[0] == 0 else Fraction(omega[1], omega[0])


def weight_for_slope(r) -> Weight:
    if r == INF:
        return (0, 1)
    r = Fraction(r)
    return (r.denominator, r.numerator)


def simplest_between(a, b) -> Fraction:
    """The rational of least denominator in the open interval ``(a, b)``."""
    a = Fraction(a)
    if b != INF and not a < b:
        raise ValueError("empty interval")
    k = math.floor(a)
    if b == INF or k + 1 < b:
        return Fraction(k + 1)
    if a == k:
        return k + Fraction(1, math.floor(1 / (Fraction(b) - k)) + 1)
    return k + 1 / simplest_between(1 / (Fraction(b) - k), 1 / (a - k))


def tie_slopes(supports: Iterable[Iterable[tuple]]) -> set:
    """Positive finite slopes where two exponents of one support tie."""
    out = set()
    for supp in supports:
        exps = list(supp)
        for i in range(len(exps)):
            l1, m1 = exps[i]
            for j in range(i + 1, len(exps)):
                dl = l1 - exps[j][0]
                dm = m1 - exps[j][1]
                if dl * dm < 0:
                    out.add(Fraction(-dl, dm))
    return out


def reference_ideal(polys: Sequence[Poly], order: OrderSpec) -> tuple:
    """Reduced Gröbner basis under ``order``, used as an ideal fingerprint."""
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return ()
    return tuple(buchberger(polys, order, COMMUTATIVE(order.n)).elements)


@dataclass
class SlopeCone:
    lower: Fraction
    upper: object  # Fraction or INF
    lower_closed: bool
    upper_closed: bool
    weight: Weight
    gb: GroebnerBasis
    initial_gens: list
    ideal: tuple = field(repr=False)
    certificate: str = CERTIFICATE

    @property
    def degenerate(self) -> bool:
        return self.lower == self.upper

    def contains(self, r) -> bool:
        if r < self.lower or r > self.upper:
            return False
        if r == self.lower and not self.lower_closed:
            return False
        if r == self.upper and not self.upper_closed:
            return False
        return True

    def interval(self) -> str:
        lo = "[" if self.lower_closed else "("
        hi = "]" if self.upper_closed else ")"
        up = "inf" if self.upper == INF else str(self.upper)
        if self.degenerate:
            return "{" + up + "}"
        return f"{lo}{self.lower}, {up}{hi}"


@dataclass
class FanDecomposition:
    cones: list
    generators: tuple = ()
    breakpoints: tuple = ()

    def __len__(self):
        return len(self.cones)

    def __iter__(self):
        return iter(self.cones)

    def classify(self, omega: Weight) -> int:
        r = slope_of(omega)
        for i, cone in enumerate(self.cones):
            if cone.contains(r):
                return i
        raise RuntimeError(f"slope {r} is not covered by the fan")  # pragma: no cover

    def distinct_ideals(self) -> list:
        seen = []
        for c in self.cones:
            if c.ideal not in seen:
                seen.append(c.ideal)
        return seen


@dataclass(frozen=True)
class UniversalBasis:
    elements: tuple

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def _require_n1(gens):
    for g in gens:
        if not isinstance(g, WeylElement):
            raise TypeError("generators must be Weyl elements")
        if g.n != 1:
            raise NotImplementedError("exact fan enumeration is only available for n = 1; use grid_sample")


class _GBCache:
    def __init__(self, gens, base: OrderSpec):
        self.gens = list(gens)
        self.base = base
        self.memo: dict = {}

    def at(self, r, base: OrderSpec | None = None):
        base = base or self.base
        key = (r, base.perm)
        if key not in self.memo:
            trace: list = []
            w = weight_for_slope(r)
            gb = buchberger(self.gens, base.refine(w), WEYL(1), trace=trace)
            trace.extend(g.support() for g in gb.elements)
            initial = [symbol(w, g) for g in gb.elements]
            self.memo[key] = (w, gb, initial, trace)
        return self.memo[key]


def _samples(lo, hi):
    s1 = simplest_between(lo, hi)
    s2 = s1 + 1 if hi == INF else simplest_between(s1, hi)
    return s1, s2


def fan_1d(gens: Sequence[WeylElement], base: OrderSpec | None = None, max_rounds: int = 50) -> FanDecomposition:
    """Exact decomposition of the slope range ``[0, inf]`` into classes."""
    gens = [g for g in gens if not g.is_zero()]
    _require_n1(gens)
    base = base or OrderSpec.lex(1)
    ref = OrderSpec.lex(1)
    cache = _GBCache(gens, base)
    breaks = tie_slopes(g.support() for g in gens)
    for _ in range(max_rounds):
        pts = [Fraction(0)] + sorted(breaks) + [INF]
        found = set()
        mismatched = False
        for r in pts:
            found |= tie_slopes(cache.at(r)[3])
        for lo, hi in zip(pts, pts[1:]):
            s1, s2 = _samples(lo, hi)
            a, b = cache.at(s1), cache.at(s2)
            found |= tie_slopes(a[3]) | tie_slopes(b[3])
            if a[1].elements != b[1].elements:
                mismatched = True
                mid = simplest_between(s1, s2)
                found |= tie_slopes(cache.at(mid)[3])
        found.discard(Fraction(0))
        if found <= breaks:
            if mismatched:
                raise RuntimeError("reduced bases differ inside an interval with no tie; cannot certify the fan")
            break
        breaks |= found
    else:
        raise RuntimeError("breakpoint harvesting did not reach a fixed point")

    pts = [Fraction(0)] + sorted(breaks) + [INF]
    raw = []
    for idx, r in enumerate(pts):
        w, gb, initial, _ = cache.at(r)
        raw.append(SlopeCone(r, r, True, True, w, gb, initial, reference_ideal(initial, ref)))
        if idx + 1 < len(pts):
            s1, _ = _samples(r, pts[idx + 1])
            w, gb, initial, _ = cache.at(s1)
            raw.append(SlopeCone(r, pts[idx + 1], False, False, w, gb, initial, reference_ideal(initial, ref)))

    groups: list = []
    for cone in raw:
        if groups and groups[-1][-1].ideal == cone.ideal:
            groups[-1].append(cone)
        else:
            groups.append([cone])
    merged = []
    for pieces in groups:
        first, last = pieces[0], pieces[-1]
        # representative weight: the first open piece, if any
        rep = next((c for c in pieces if not c.degenerate), first)
        merged.append(
            SlopeCone(
                first.lower, last.upper, first.lower_closed, last.upper_closed,
                rep.weight, rep.gb, rep.initial_gens, rep.ideal,
            )
        )
    return FanDecomposition(merged, tuple(gens), tuple(sorted(breaks)))


def classify_region(gens, omega: Weight) -> int:
    """Index of the fan cone whose slope range contains ``omega``."""
    fan = gens if isinstance(gens, FanDecomposition) else fan_1d(gens)
    return fan.classify(make_weight(omega, 1))


def ugb(gens: Sequence[WeylElement], fan: FanDecomposition | None = None) -> UniversalBasis:
    """Union of reduced Gröbner bases over the fan, both lex tie-breaks."""
    gens = [g for g in gens if not g.is_zero()]
    _require_n1(gens)
    if fan is None:
        fan = fan_1d(gens)
    slopes = set(fan.breakpoints) | {Fraction(0), INF}
    for cone in fan.cones:
        slopes.add(slope_of(cone.weight))
        if not cone.degenerate:
            slopes.update(_samples(cone.lower, cone.upper))
    elements: dict = {}
    for perm in ((0, 1), (1, 0)):
        base = OrderSpec.lex(1, perm)
        cache = _GBCache(gens, base)
        for r in sorted(slopes):
            for g in cache.at(r)[1].elements:
                elements.setdefault(_canonical(g), g)
    if not gens:
        return UniversalBasis(())
    ordered = sorted(elements.values(), key=lambda g: (g.total_degree(), len(g), str(g)))
    return UniversalBasis(tuple(ordered))


def _canonical(g: WeylElement) -> WeylElement:
    # scale so that the largest exponent (flat tuple order) has coefficient 1
    top = max(g.terms)
    return g.scale(1 / g.terms[top])


def bound_c(basis: Iterable) -> int:
    """``prod_u sum_k C(#supp(u), k) = prod_u 2^#supp(u)``."""
    total = 1
    for u in basis:
        total *= sum(math.comb(len(u), k) for k in range(len(u) + 1))
    return total


def chi(gens: Sequence[WeylElement], fan: FanDecomposition | None = None, basis: UniversalBasis | None = None):
    """Number of distinct initial ideals, with the finiteness bound from the basis."""
    fan = fan or fan_1d(gens)
    basis = basis or ugb(gens, fan)
    return len(fan.distinct_ideals()), bound_c(basis)


def gamma(gens: Sequence[WeylElement], nu: Weight, basis: Iterable | None = None) -> int:
    """Largest ``nu``-degree over a universal Gröbner basis.

    This is an upper bound for the infimum over all universal bases.  For
    ``n >= 2`` a basis must be supplied unless the ideal is the whole ring
    (then ``{1}`` is universal).
    """
    gens = [g for g in gens if not g.is_zero()]
    if basis is None:
        n = gens[0].n if gens else len(nu) // 2
        if n == 1:
            basis = ugb(gens)
        else:
            gb = buchberger(gens, OrderSpec.lex(n), WEYL(n)) if gens else None
            if gb is not None and gb.is_unit():
                basis = gb.elements
            else:
                raise NotImplementedError("universal Gröbner bases are only constructed for n = 1; pass basis=")
    degs = [u.degree(nu) for u in basis if not u.is_zero()]
    return int(max(degs)) if degs else 0


def grid_sample(gens: Sequence[WeylElement], bound: int, base: OrderSpec | None = None) -> list:
    """``(omega, class_id)`` for every ``omega`` in the region with entries <= bound.

    Class ids number the distinct initial ideals in order of first
    appearance.  The number of ids is only a lower bound on the true count.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("grid_sample needs at least one generator")
    n = gens[0].n
    base = base or OrderSpec.lex(n)
    ids: dict = {}
    memo: dict = {}
    out = []
    for omega in product(range(bound + 1), repeat=2 * n):
        if not is_in_region(omega):
            continue
        key = primitive(omega)
        if key not in memo:
            gb = buchberger(gens, base.refine(key), WEYL(n))
            memo[key] = reference_ideal([symbol(key, g) for g in gb.elements], base)
        ideal = memo[key]
        if ideal not in ids:
            ids[ideal] = len(ids)
        out.append((omega, ids[ideal]))
    return out
