"""Characteristic ideals of cyclic modules ``W/L`` and the stabilization check.

Everything is decided at the level of ideals of ``Q[X, Y]``: two ideals are
equal iff their reduced Gröbner bases under a fixed reference order agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .core import OrderSpec, Weight, is_in_region, make_weight, primitive
from .fan import gamma as _gamma
from .fan import reference_ideal
from .groebner import initial_ideal_comm, initial_ideal_weyl, krull_dim_quotient, leading_monomial_ideal
from .weyl import WeylElement

__all__ = [
    "CharIdeal",
    "StabilizationReport",
    "char_ideal",
    "critical_cone_ideal",
    "graded_twice",
    "stabilization_check",
    "verify_stabilization",
    "kappa_hat",
    "dim_char_variety",
    "dimension_constancy",
    "common_dimension",
]


@dataclass(frozen=True)
class CharIdeal:
    omega: Weight
    gens: tuple
    reduced_gb: tuple

    def is_unit(self) -> bool:
        return len(self.reduced_gb) == 1 and self.reduced_gb[0].total_degree() == 0


@dataclass(frozen=True)
class StabilizationReport:
    nu: Weight
    omega: Weight
    gamma_bound: int
    checked_range: tuple  # (1, gamma_bound + tail), inclusive
    passes: tuple  # one bool per s in checked_range
    onset: int | None
    all_pass_beyond_gamma: bool


def _arity(gens, weight):
    for g in gens:
        return g.n
    return len(weight) // 2


def _key(gens):
    return tuple(g for g in gens if not g.is_zero())


@lru_cache(maxsize=None)
def _char_ideal(gens: tuple, omega: Weight, base: OrderSpec) -> CharIdeal:
    n = base.n
    if gens:
        init = tuple(initial_ideal_weyl(list(gens), omega, base))
    else:
        init = ()
    return CharIdeal(omega, init, reference_ideal(init, OrderSpec.lex(n)))


def char_ideal(gens: Sequence[WeylElement], omega: Weight, base: OrderSpec | None = None) -> CharIdeal:
    """Generators of the initial ideal of ``L`` for ``omega`` and its reduced basis.

    ``omega`` enters only through its direction, so results are cached on the
    primitive vector.
    """
    gens = _key(gens)
    n = _arity(gens, omega)
    omega = make_weight(omega, n)
    if not is_in_region(omega):
        raise ValueError(f"weight {omega!r} is outside the region Omega")
    base = base or OrderSpec.lex(n)
    c = _char_ideal(gens, primitive(omega), base)
    return CharIdeal(omega, c.gens, c.reduced_gb)


@lru_cache(maxsize=None)
def _graded(polys: tuple, nu: Weight, n: int) -> tuple:
    if not polys:
        return ()
    init = initial_ideal_comm(list(polys), nu, OrderSpec.lex(n))
    return reference_ideal(init, OrderSpec.lex(n))


def graded_twice(gens: Sequence[WeylElement], nu: Weight, omega: Weight) -> tuple:
    """Reduced basis of the ``nu``-initial ideal of the ``omega``-initial ideal."""
    c = char_ideal(gens, omega)
    n = _arity(gens, omega)
    return _graded(c.reduced_gb, primitive(make_weight(nu, n)), n)


def critical_cone_ideal(gens: Sequence[WeylElement], omega: Weight) -> list:
    """Total-degree leading-form ideal of the ``omega``-characteristic ideal."""
    n = _arity(gens, omega)
    c = char_ideal(gens, omega)
    if not c.reduced_gb:
        return []
    return initial_ideal_comm(list(c.reduced_gb), (1,) * (2 * n), OrderSpec.lex(n))


def stabilization_check(gens: Sequence[WeylElement], nu: Weight, omega: Weight, s: int) -> bool:
    """Does ``Gr^nu Gr^omega L`` equal ``Gr^(nu + s omega) L``?"""
    if s < 1:
        raise ValueError("s must be a positive integer")
    n = _arity(gens, omega)
    nu = make_weight(nu, n)
    omega = make_weight(omega, n)
    lhs = graded_twice(gens, nu, omega)
    rhs = char_ideal(gens, tuple(a + s * b for a, b in zip(nu, omega))).reduced_gb
    return lhs == rhs


def verify_stabilization(
    gens: Sequence[WeylElement],
    nu: Weight,
    omegas: Sequence[Weight],
    tail: int,
    gamma_bound: int | None = None,
    basis=None,
) -> list[StabilizationReport]:
    """Check every ``s`` in ``1 .. gamma + tail`` for each ``omega``.

    ``onset`` is the least ``s`` from which equality holds through the end of
    the range, or ``None`` if it fails at the end.
    """
    n = _arity(gens, nu)
    nu = make_weight(nu, n)
    g = _gamma(list(gens), nu, basis) if gamma_bound is None else gamma_bound
    top = g + tail
    reports = []
    for omega in omegas:
        omega = make_weight(omega, n)
        if not is_in_region(omega):
            raise ValueError(f"weight {omega!r} is outside the region Omega")
        passes = tuple(stabilization_check(gens, nu, omega, s) for s in range(1, top + 1))
        onset = None
        for s in range(top, 0, -1):
            if passes[s - 1]:
                onset = s
            else:
                break
        beyond = all(passes[g:]) if top > g else True
        reports.append(StabilizationReport(nu, omega, g, (1, top), passes, onset, beyond))
    return reports


def kappa_hat(reports_or_gens, nu: Weight | None = None, omegas=None, tail: int | None = None) -> int:
    """``max(onset - 1)`` over a finite set of weights.

    Accepts either reports from ``verify_stabilization`` or the arguments to
    produce them.  This only estimates the true threshold, which ranges over
    all of the region.
    """
    if nu is None:
        reports = reports_or_gens
    else:
        reports = verify_stabilization(reports_or_gens, nu, omegas, tail)
    worst = 0
    for r in reports:
        if r.onset is None:
            raise ValueError(f"no stabilization observed for omega={r.omega}")
        worst = max(worst, r.onset - 1)
    return worst


def dim_char_variety(gens: Sequence[WeylElement], omega: Weight, base: OrderSpec | None = None):
    """Krull dimension of ``Q[X, Y] / Gr^omega L`` (``NEG_INF`` when ``L = W``)."""
    n = _arity(gens, omega)
    c = char_ideal(gens, omega)
    ideal = c.reduced_gb
    if base is not None and ideal:
        ideal = reference_ideal(list(ideal), base)
        order = base
    else:
        order = OrderSpec.lex(n)
    if not ideal:
        return 2 * n
    return krull_dim_quotient(leading_monomial_ideal(ideal, order), 2 * n)


def dimension_constancy(gens: Sequence[WeylElement], omegas: Sequence[Weight]) -> bool:
    if not omegas:
        raise ValueError("need at least one weight")
    dims = {dim_char_variety(gens, w) for w in omegas}
    return len(dims) == 1


def common_dimension(gens, omegas):
    """The shared dimension if constant over ``omegas``, else ``None``."""
    dims = {dim_char_variety(gens, w) for w in omegas}
    return dims.pop() if len(dims) == 1 else None

