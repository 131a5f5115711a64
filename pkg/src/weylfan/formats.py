"""JSON and CSV forms of bases, fans and reports.

Rationals are written as strings (``"3"``, ``"-1/2"``) so nothing passes
through floating point.  Output is deterministic: keys are sorted and lists
have a fixed order.
"""

from __future__ import annotations

import io
import json
from fractions import Fraction
from typing import Iterable, Sequence

from .core import OrderSpec, SparseElement
from .fan import INF, FanDecomposition
from .parse import format_element
from .polyring import Poly
from .weyl import WeylElement

__all__ = [
    "rational_str",
    "element_to_json",
    "element_from_json",
    "basis_to_json",
    "basis_from_json",
    "fan_to_json",
    "fan_to_csv",
    "dumps",
]


def rational_str(q) -> str:
    if q == INF:
        return "inf"
    return str(Fraction(q))


def element_to_json(elem: SparseElement, order: OrderSpec | None = None) -> list:
    """Terms ``{"l": lambda, "m": mu, "c": "p/q"}``, largest exponent first."""
    n = elem.n
    key = order.key if order is not None else (lambda e: (sum(e), e))
    out = []
    for e in sorted(elem.terms, key=key, reverse=True):
        out.append({"l": list(e[:n]), "m": list(e[n:]), "c": rational_str(elem.terms[e])})
    return out


def element_from_json(terms: Sequence[dict], n: int, kind: str = "weyl") -> SparseElement:
    cls = WeylElement if kind == "weyl" else Poly
    data = {}
    for t in terms:
        lam, mu = tuple(t["l"]), tuple(t["m"])
        if len(lam) != n or len(mu) != n:
            raise ValueError(f"term {t!r} does not have arity {n}")
        data[lam + mu] = data.get(lam + mu, 0) + Fraction(t["c"])
    return cls(data, n)


def basis_to_json(elements: Iterable[SparseElement], order: OrderSpec) -> list:
    """A basis as a list of elements, sorted by ascending leading exponent."""
    elems = [g for g in elements if not g.is_zero()]
    elems.sort(key=lambda g: order.key(g.leading(order)[0]))
    return [element_to_json(g, order) for g in elems]


def basis_from_json(data: Sequence, n: int, kind: str = "weyl") -> list:
    return [element_from_json(terms, n, kind) for terms in data]


def fan_to_json(fan: FanDecomposition) -> list:
    out = []
    for cone in fan.cones:
        out.append(
            {
                "lower": rational_str(cone.lower),
                "upper": rational_str(cone.upper),
                "closed": [cone.lower_closed, cone.upper_closed],
                "initial": [format_element(p) for p in cone.ideal],
                "weight": list(cone.weight),
            }
        )
    return out


def fan_to_csv(fan: FanDecomposition) -> str:
    buf = io.StringIO()
    buf.write("cone,lower,upper,lower_closed,upper_closed,weight,initial\n")
    for i, cone in enumerate(fan.cones):
        initial = "; ".join(format_element(p) for p in cone.ideal)
        weight = ",".join(map(str, cone.weight))
        buf.write(
            f'{i},{rational_str(cone.lower)},{rational_str(cone.upper)},'
            f'{str(cone.lower_closed).lower()},{str(cone.upper_closed).lower()},"{weight}","{initial}"\n'
        )
    return buf.getvalue()


def _default(obj):
    if isinstance(obj, Fraction):
        return rational_str(obj)
    if isinstance(obj, float):  # only infinities reach here
        return "inf" if obj > 0 else "-inf"
    if isinstance(obj, (set, frozenset, tuple)):
        return sorted(obj) if isinstance(obj, (set, frozenset)) else list(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _clean(obj):
    # json would print inf as Infinity; map infinities to strings first
    if isinstance(obj, float) and obj in (INF, -INF):
        return "inf" if obj > 0 else "-inf"
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(_clean(obj), sort_keys=True, indent=2, default=_default) + "\n"
