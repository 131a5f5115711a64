"""Exponent vectors, weights, normal orderings and the sparse element base.

Exponents are flat tuples ``(l_1, ..., l_n, m_1, ..., m_n)``: the first half
indexes the multiplications ``x_i`` (or ``X_i``), the second half the
derivations ``d_i`` (or ``Y_i``).  The same layout is used for Weyl elements
and commutative polynomials, so transporting a canonical basis monomial
``x^l d^m`` to ``X^l Y^m`` is a change of type, not of data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "NEG_INF",
    "LESS",
    "EQUAL",
    "GREATER",
    "ArityError",
    "Exp",
    "Weight",
    "exp_pair",
    "split_exp",
    "make_weight",
    "parse_weight",
    "weight_degree",
    "is_in_region",
    "primitive",
    "OrderSpec",
    "cmp",
    "refine",
    "to_rational",
]

# Degree of the zero element.  Kept distinct from every integer.
NEG_INF = -math.inf

LESS, EQUAL, GREATER = -1, 0, 1

MAX_WEIGHT_ENTRY = 2**31 - 1

Exp = tuple  # flat exponent tuple of length 2n
Weight = tuple  # flat weight tuple of length 2n


class ArityError(ValueError):
    """Raised when objects built for different numbers of variables meet."""


def exp_pair(lam: Sequence[int], mu: Sequence[int]) -> Exp:
    if len(lam) != len(mu):
        raise ArityError(f"lambda has length {len(lam)} but mu has length {len(mu)}")
    if any(v < 0 for v in lam) or any(v < 0 for v in mu):
        raise ValueError("exponents must be non-negative")
    return tuple(int(v) for v in lam) + tuple(int(v) for v in mu)


def split_exp(e: Exp) -> tuple[tuple[int, ...], tuple[int, ...]]:
    n = len(e) // 2
    return e[:n], e[n:]


def make_weight(entries: Iterable[int], n: int | None = None) -> Weight:
    w = tuple(int(v) for v in entries)
    if len(w) == 0 or len(w) % 2:
        raise ArityError(f"a weight needs 2n entries, got {len(w)}")
    if n is not None and len(w) != 2 * n:
        raise ArityError(f"expected a weight with {2 * n} entries, got {len(w)}")
    for v in w:
        if v < 0:
            raise ValueError(f"weight entries must be non-negative, got {v}")
        if v > MAX_WEIGHT_ENTRY:
            raise ValueError(f"weight entry {v} exceeds 2^31-1")
    return w


def parse_weight(text: str, n: int | None = None) -> Weight:
    """Parse ``"1,2"`` into a weight; ``n`` defaults to half the length."""
    try:
        entries = [int(tok) for tok in text.replace(" ", "").split(",") if tok != ""]
    except ValueError as exc:
        raise ValueError(f"malformed weight {text!r}") from exc
    return make_weight(entries, n)


def weight_degree(nu: Weight, e: Exp) -> int:
    if len(nu) != len(e):
        raise ArityError(f"weight of length {len(nu)} applied to exponent of length {len(e)}")
    return sum(a * b for a, b in zip(nu, e))


def is_in_region(omega: Weight) -> bool:
    """True iff every conjugate pair ``omega_i + omega_{n+i}`` is positive."""
    n = len(omega) // 2
    return all(omega[i] + omega[n + i] > 0 for i in range(n))


def primitive(w: Weight) -> Weight:
    """Divide out the gcd of the entries; the zero vector is returned as is."""
    g = 0
    for v in w:
        g = math.gcd(g, v)
    if g <= 1:
        return tuple(w)
    return tuple(v // g for v in w)


@dataclass(frozen=True)
class OrderSpec:
    """A lexicographic order refined by a chain of weight vectors.

    Exponents are compared by ``refinements[0]``-degree, then
    ``refinements[1]``-degree, ..., and finally lexicographically with
    variables ranked by ``perm`` (``perm[0]`` is the most significant).
    Smaller weighted degree means smaller exponent.
    """

    n: int
    refinements: tuple = ()
    perm: tuple = ()
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("arity must be at least 1")
        perm = tuple(self.perm) if self.perm else tuple(range(2 * self.n))
        if sorted(perm) != list(range(2 * self.n)):
            raise ValueError(f"{perm!r} is not a permutation of the {2 * self.n} variables")
        object.__setattr__(self, "perm", perm)
        refs = tuple(make_weight(w, self.n) for w in self.refinements)
        object.__setattr__(self, "refinements", refs)

    @classmethod
    def lex(cls, n: int, perm: Sequence[int] | None = None) -> "OrderSpec":
        return cls(n, (), tuple(perm) if perm else ())

    def refine(self, nu: Weight) -> "OrderSpec":
        return OrderSpec(self.n, (make_weight(nu, self.n),) + self.refinements, self.perm)

    def key(self, e: Exp) -> tuple:
        k = self._cache.get(e)
        if k is None:
            if len(e) != 2 * self.n:
                raise ArityError(f"order on {2 * self.n} variables applied to exponent of length {len(e)}")
            k = tuple(sum(a * b for a, b in zip(w, e)) for w in self.refinements)
            k += tuple(e[i] for i in self.perm)
            self._cache[e] = k
        return k

    def describe(self) -> str:
        chain = ";".join(",".join(map(str, w)) for w in self.refinements)
        base = "lex" if self.perm == tuple(range(2 * self.n)) else "lex[" + ",".join(map(str, self.perm)) + "]"
        return f"{chain};{base}" if chain else base


def cmp(order: OrderSpec, a: Exp, b: Exp) -> int:
    ka, kb = order.key(a), order.key(b)
    if ka < kb:
        return LESS
    if ka > kb:
        return GREATER
    return EQUAL


def refine(order: OrderSpec, nu: Weight) -> OrderSpec:
    return order.refine(nu)


def to_rational(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not accepted; use Fraction or int")
    return Fraction(c)


class SparseElement:
    """Finite map exponent -> nonzero rational, shared by both ring types.

    Instances are treated as immutable.  Subclasses provide
    ``_mono_product(e1, e2)`` returning ``[(exp, int_coeff), ...]``.
    """

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, terms: Mapping[Exp, object] | None = None, n: int = 1):
        self.n = n
        clean = {}
        if terms:
            for e, c in terms.items():
                c = to_rational(c)
                if c:
                    if len(e) != 2 * n:
                        raise ArityError(f"exponent {e!r} does not have {2 * n} entries")
                    clean[tuple(e)] = c
        self.terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, n: int):
        # terms must already be pruned; ordering restored here
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = dict(sorted(terms.items()))
        obj._hash = None
        return obj

    # construction helpers -------------------------------------------------
    @classmethod
    def zero(cls, n: int):
        return cls._raw({}, n)

    @classmethod
    def one(cls, n: int):
        return cls._raw({(0,) * (2 * n): Fraction(1)}, n)

    @classmethod
    def constant(cls, c, n: int):
        c = to_rational(c)
        return cls._raw({(0,) * (2 * n): c} if c else {}, n)

    @classmethod
    def monomial(cls, e: Exp, c=1, n: int | None = None):
        n = len(e) // 2 if n is None else n
        return cls({tuple(e): c}, n)

    @classmethod
    def gen(cls, index: int, n: int):
        """Variable number ``index`` in the flat layout (0 <= index < 2n)."""
        e = [0] * (2 * n)
        e[index] = 1
        return cls._raw({tuple(e): Fraction(1)}, n)

    # basic protocol -------------------------------------------------------
    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.n != self.n:
            raise ArityError(f"arity {self.n} does not match arity {other.n}")

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return self.constant(other, self.n)
        self._check(other)
        return other

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Exp, Fraction]]:
        return iter(self.terms.items())

    def support(self) -> frozenset:
        return frozenset(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.constant(other, self.n)
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.n, tuple(self.terms.items())))
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return self._raw(out, self.n)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({e: -c for e, c in self.terms.items()}, self.n)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "SparseElement":
        c = to_rational(c)
        if not c:
            return self.zero(self.n)
        return self._raw({e: c * v for e, v in self.terms.items()}, self.n)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                c12 = c1 * c2
                for e, k in self._mono_product(e1, e2):
                    v = out.get(e, 0) + c12 * k
                    if v:
                        out[e] = v
                    else:
                        del out[e]
        return self._raw(out, self.n)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = self.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def lmul_monomial(self, e: Exp, c) -> "SparseElement":
        """Return ``c * M_e * self`` where ``M_e`` is the basis monomial of ``e``."""
        out: dict = {}
        for e2, c2 in self.terms.items():
            cc = c * c2
            for ex, k in self._mono_product(e, e2):
                v = out.get(ex, 0) + cc * k
                if v:
                    out[ex] = v
                else:
                    del out[ex]
        return self._raw(out, self.n)

    def _mono_product(self, e1: Exp, e2: Exp):
        raise NotImplementedError

    # weights and degrees --------------------------------------------------
    def degree(self, w: Weight):
        if len(w) != 2 * self.n:
            raise ArityError(f"weight of length {len(w)} for arity {self.n}")
        if not self.terms:
            return NEG_INF
        return max(sum(a * b for a, b in zip(w, e)) for e in self.terms)

    def top_part(self, w: Weight) -> dict:
        d = self.degree(w)
        if d == NEG_INF:
            return {}
        return {e: c for e, c in self.terms.items() if sum(a * b for a, b in zip(w, e)) == d}

    def leading(self, order: OrderSpec) -> tuple[Exp, Fraction]:
        if not self.terms:
            raise ValueError("the zero element has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def monic(self, order: OrderSpec):
        _, c = self.leading(order)
        return self.scale(1 / c)

    def total_degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def __repr__(self):
        from .parse import format_element

        return f"{type(self).__name__}({format_element(self)!r}, n={self.n})"

    def __str__(self):
        from .parse import format_element

        return format_element(self)
