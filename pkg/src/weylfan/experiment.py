"""Half-line incidence experiment for ``n = 1``.

Half-lines ``nu + s*omega`` with ``nu`` in ``[0, window]^2`` and primitive
``omega`` are cut to ``s_min < s <= s_max``.  Two of them are incident when
they share a point; connected components of the incidence graph are the
colour classes.  A lattice point ``p != 0`` of the window gets the colour of
the component holding the origin half-line through ``p``, and the coloured
points of each class turn out to form a cone.

All geometry is integer arithmetic; intersection parameters are compared as
cross-multiplied fractions, and the angular pruning key is an exact integer
rank of the slope.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
from numba import njit

from .fan import INF, chi as _chi
from .fan import fan_1d, gamma as _gamma, ugb

__all__ = [
    "HalfLine",
    "ColourClass",
    "ConeExperiment",
    "enumerate_halflines",
    "halfline_cones",
    "run_experiment",
    "lower_semiquadrant_vertices",
    "fibonacci",
    "fibonacci_vertex_set",
    "fibonacci_report",
    "ConjectureReport",
    "conjecture_report",
    "emit_figure",
]


@dataclass(frozen=True)
class HalfLine:
    nu: tuple
    omega: tuple
    s_min: int  # points are nu + s*omega for s_min < s <= s_max

    def point(self, s):
        return (self.nu[0] + s * self.omega[0], self.nu[1] + s * self.omega[1])


@dataclass(frozen=True)
class ColourClass:
    id: int
    members: frozenset  # indices into ConeExperiment.halflines
    vertex: tuple
    directions: tuple  # (slope_lo, slope_hi) of member directions, INF for (0, 1)
    degenerate: bool
    points: tuple = field(default=(), repr=False)  # coloured lattice points, sorted


@dataclass
class ConeExperiment:
    s0: int
    window: int
    s_max: int
    threshold: str
    halflines: list
    classes: list
    n_components: int

    @property
    def n_degenerate(self) -> int:
        return sum(c.degenerate for c in self.classes)


def _slope(w) -> Fraction | float:
    return INF if w[0] == 0 else Fraction(w[1], w[0])


def enumerate_halflines(s0: int, window: int, s_max: int, threshold: str = "scaled") -> list[HalfLine]:
    """All half-lines of the experiment whose cut segment is non-empty.

    With ``threshold="scaled"`` the cut is ``s > s0 * |nu|_1``; with
    ``"fixed"`` it is ``s > s0``.
    """
    if threshold not in ("scaled", "fixed"):
        raise ValueError(f"unknown threshold {threshold!r}")
    out = []
    dirs = [(c, d) for c in range(window + 1) for d in range(window + 1) if (c, d) != (0, 0) and math.gcd(c, d) == 1]
    for a in range(window + 1):
        for b in range(window + 1):
            lo = s0 * (a + b) if threshold == "scaled" else s0
            if lo >= s_max:
                continue
            for c, d in dirs:
                out.append(HalfLine((a, b), (c, d), lo))
    return out


@njit(cache=True)
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit(cache=True)
def _components(H, rlo, rhi):
    # rows of H: a, b, c, d, lo, hi, sorted by rlo
    N = H.shape[0]
    parent = np.arange(N)
    for i in range(N):
        a1, b1, c1, d1, lo1, hi1 = H[i]
        for j in range(i + 1, N):
            if rlo[j] > rhi[i]:
                break
            ri = _find(parent, i)
            rj = _find(parent, j)
            if ri == rj:
                continue
            a2, b2, c2, d2, lo2, hi2 = H[j]
            da = a2 - a1
            db = b2 - b1
            D = c1 * d2 - d1 * c2
            hit = False
            if D != 0:
                # nu1 + s w1 = nu2 + t w2  ->  s = sn/D, t = tn/D
                sn = da * d2 - db * c2
                tn = da * d1 - db * c1
                if D < 0:
                    D = -D
                    sn = -sn
                    tn = -tn
                hit = sn > lo1 * D and sn <= hi1 * D and tn > lo2 * D and tn <= hi2 * D
            elif da * d1 - db * c1 == 0:
                # same line and same direction: nu2 = nu1 + k w
                k = da // c1 if c1 != 0 else db // d1
                hit = max(lo1, k + lo2) < min(hi1, k + hi2)
            if hit:
                parent[ri] = rj
    for i in range(N):
        parent[i] = _find(parent, i)
    return parent


def _angular_ranks(H: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Exact ranks of the endpoint angles of every segment.

    The angle of ``(x, y)`` is ordered by ``y / (x + y)``; with
    ``M > (max x + y)^2`` the integer ``floor(M y / (x + y))`` separates
    distinct fractions and keeps equal ones equal.
    """
    a, b, c, d, lo, hi = (H[:, k] for k in range(6))
    x0, y0 = a + lo * c, b + lo * d
    x1, y1 = a + hi * c, b + hi * d
    smax = int(max((x0 + y0).max(), (x1 + y1).max()))
    M = (smax + 1) ** 2
    if (smax + 1) * M >= 2**62:
        raise OverflowError("window or s_max too large for 64-bit angular keys")
    # the near end is the origin only for nu = 0 with lo = 0; its angle is that of the far end
    tot0 = x0 + y0
    k1 = (y1 * M) // (x1 + y1)
    k0 = np.where(tot0 > 0, (y0 * M) // np.maximum(tot0, 1), k1)
    klo, khi = np.minimum(k0, k1), np.maximum(k0, k1)
    keys = np.unique(np.concatenate([klo, khi]))
    return np.searchsorted(keys, klo), np.searchsorted(keys, khi)


def run_experiment(
    s0: int,
    window: int = 17,
    s_max: int = 100,
    threshold: str = "scaled",
) -> ConeExperiment:
    """Enumerate, intersect and colour; see ``halfline_cones``."""
    if isinstance(window, bool) or not isinstance(window, int) or window < 1:
        raise ValueError(f"invalid window {window!r}")
    if not isinstance(s0, int) or s0 < 0:
        raise ValueError(f"s0 must be a non-negative integer, got {s0!r}")
    s_max = Fraction(s_max)
    if s_max.denominator != 1:
        # every cut is at an integer, so a rational s_max only matters through its floor
        s_max = math.floor(s_max)
    s_max = int(s_max)
    if s_max <= 0:
        raise ValueError("s_max must be positive")

    halflines = enumerate_halflines(s0, window, s_max, threshold)
    H = np.array([(*h.nu, *h.omega, h.s_min, s_max) for h in halflines], dtype=np.int64)
    rlo, rhi = _angular_ranks(H)
    perm = np.argsort(rlo, kind="stable")
    parent_sorted = _components(H[perm], rlo[perm], rhi[perm])
    comp = np.empty(len(H), dtype=np.int64)
    comp[perm] = perm[parent_sorted]

    origin = {h.omega: i for i, h in enumerate(halflines) if h.nu == (0, 0)}
    coloured: dict[int, list] = {}
    for x in range(window + 1):
        for y in range(window + 1):
            if (x, y) == (0, 0):
                continue
            g = math.gcd(x, y)
            coloured.setdefault(int(comp[origin[(x // g, y // g)]]), []).append((x, y))

    raw = []
    for root, pts in coloured.items():
        members = np.nonzero(comp == root)[0]
        sub = H[members]
        dirs = {(int(c), int(d)) for c, d in sub[:, 2:4]}
        on_ray = bool(np.all(sub[:, 0] * sub[:, 3] - sub[:, 1] * sub[:, 2] == 0))
        slopes = sorted(_slope(w) for w in dirs)
        raw.append((_vertex(pts), (slopes[0], slopes[-1]), len(dirs) == 1 and on_ray, members, pts))
    raw.sort(key=lambda r: (_slope(r[0]), r[0], r[1]))
    classes = [
        ColourClass(i, frozenset(int(m) for m in members), v, dr, deg, tuple(sorted(pts)))
        for i, (v, dr, deg, members, pts) in enumerate(raw)
    ]
    return ConeExperiment(s0, window, s_max, threshold, halflines, classes, len(np.unique(comp)))


def _vertex(points) -> tuple:
    xm = min(p[0] for p in points)
    ym = min(p[1] for p in points)
    if (xm, ym) in points:
        return (xm, ym)
    return min(points, key=lambda p: (p[0] + p[1], p[0]))


def halfline_cones(s0: int, window: int = 17, s_max: int = 100, threshold: str = "scaled") -> list[ColourClass]:
    """Colour classes of the experiment, ordered by vertex then direction."""
    return run_experiment(s0, window, s_max, threshold).classes


def lower_semiquadrant_vertices(classes: Sequence[ColourClass]) -> set:
    return {c.vertex for c in classes if c.vertex[0] > c.vertex[1]}


def fibonacci(k: int) -> int:
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def fibonacci_vertex_set(s0: int) -> set:
    """Pairs with ``F(1) <= x1 <= F(2+s0)``, ``F(0) <= x2 <= F(1+s0)``, coprime, ``x1 > x2``."""
    if s0 < 0:
        raise ValueError("s0 must be non-negative")
    out = set()
    for x1 in range(fibonacci(1), fibonacci(2 + s0) + 1):
        for x2 in range(fibonacci(0), fibonacci(1 + s0) + 1):
            if math.gcd(x1, x2) == 1 and x1 > x2:
                out.add((x1, x2))
    return out


def fibonacci_report(max_s0: int = 8) -> list[dict]:
    """Cardinality of the Fibonacci set against ``2^s0`` for ``s0 = 0..max_s0``."""
    rows = []
    for s0 in range(max_s0 + 1):
        size = len(fibonacci_vertex_set(s0))
        rows.append({"s0": s0, "size": size, "power": 2**s0, "match": size == 2**s0})
    return rows


@dataclass(frozen=True)
class ConjectureReport:
    chi: int
    gamma: int
    bound: int
    satisfied: bool

    def as_dict(self) -> dict:
        return {"chi": self.chi, "gamma": self.gamma, "bound": self.bound, "satisfied": self.satisfied}


def conjecture_report(gens) -> ConjectureReport:
    """``chi <= 2^(1 + gamma) + 1`` with ``gamma`` taken at ``nu = (1, 1)``.  Reported, not asserted."""
    gens = list(gens)
    if any(g.n != 1 for g in gens):
        raise ValueError("the conjecture report is only available for n = 1")
    fan = fan_1d(gens)
    basis = ugb(gens, fan)
    chi, _ = _chi(gens, fan, basis)
    g = _gamma(gens, (1, 1), basis)
    bound = 2 ** (1 + g) + 1
    return ConjectureReport(chi, g, bound, chi <= bound)


_SCALE = 24
_MARGIN = 20
_TONES = ("#d9d9d9", "#9e9e9e")


def _fmt_slope(s) -> str:
    return "inf" if s == INF else str(s)


def _direction(slope) -> tuple:
    if slope == INF:
        return (0, 1)
    return (slope.denominator, slope.numerator)


def emit_figure(classes: Sequence[ColourClass], format: str = "svg", window: int | None = None) -> bytes:
    """CSV rows or an SVG drawing of the colour classes.

    In the SVG each wedge is a filled polygon (alternating two tones),
    degenerate classes are drawn as black rays, and coloured lattice points
    are dots in their class tone.
    """
    if format == "csv":
        buf = io.StringIO()
        buf.write("class_id,degenerate,vertex_x,vertex_y,slope_lo,slope_hi\n")
        for c in classes:
            lo, hi = c.directions
            buf.write(f"{c.id},{str(c.degenerate).lower()},{c.vertex[0]},{c.vertex[1]},{_fmt_slope(lo)},{_fmt_slope(hi)}\n")
        return buf.getvalue().encode()
    if format != "svg":
        raise ValueError(f"unknown figure format {format!r}")

    if window is None:
        window = max((max(p) for c in classes for p in c.points), default=1)
    side = window * _SCALE
    size = side + 2 * _MARGIN

    def xy(p):
        return (_MARGIN + p[0] * _SCALE, _MARGIN + side - p[1] * _SCALE)

    far = 2 * window + 2
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<defs><clipPath id="win"><rect x="{_MARGIN}" y="{_MARGIN}" width="{side}" height="{side}"/></clipPath></defs>',
        f'<rect x="{_MARGIN}" y="{_MARGIN}" width="{side}" height="{side}" fill="white" stroke="black"/>',
    ]
    wedge_count = 0
    for c in classes:
        tone = "#000000" if c.degenerate else _TONES[wedge_count % 2]
        if not c.degenerate:
            wedge_count += 1
        out.append(f'<g class="cone" id="class-{c.id}" data-degenerate="{str(c.degenerate).lower()}" clip-path="url(#win)">')
        v = c.vertex
        d_lo, d_hi = (_direction(s) for s in c.directions)
        if c.degenerate:
            x0, y0 = xy(v)
            x1, y1 = xy((v[0] + far * d_lo[0], v[1] + far * d_lo[1]))
            out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="{tone}" stroke-width="2"/>')
        else:
            corners = [v, (v[0] + far * d_lo[0], v[1] + far * d_lo[1]), (v[0] + far * d_hi[0], v[1] + far * d_hi[1])]
            pts = " ".join(f"{a},{b}" for a, b in map(xy, corners))
            out.append(f'<polygon points="{pts}" fill="{tone}" stroke="none"/>')
        for p in c.points:
            cx, cy = xy(p)
            out.append(f'<circle cx="{cx}" cy="{cy}" r="2" fill="{tone}"/>')
        out.append("</g>")
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode()
