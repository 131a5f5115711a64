"""Command-line interface.

Exit status: 0 on success, 1 when a checked statement fails (stabilization,
dimension constancy, parse round-trip), 2 on usage errors.  Results go to
standard output, diagnostics to standard error.
"""

from __future__ import annotations

import argparse
import random
import sys
from itertools import product

from . import charvar, experiment, fan as fanmod, formats
from .core import NEG_INF, ArityError, OrderSpec, is_in_region, parse_weight
from .groebner import WEYL, buchberger, initial_ideal_weyl
from .parse import ParseError, format_element, parse_poly, parse_weyl, random_expression, read_generators

DEFAULT_SEED = 20240601


class UsageError(Exception):
    pass


def parse_order(text: str, n: int) -> OrderSpec:
    """``lex`` or a weight chain ``w1,w2;v1,v2`` (outermost first), optionally ending in ``;lex``."""
    parts = [p.strip() for p in text.split(";") if p.strip()]
    if parts and parts[-1] == "lex":
        parts = parts[:-1]
    weights = tuple(parse_weight(p, n) for p in parts)
    return OrderSpec(n, weights)


def _weights_in_grid(n: int, bound: int) -> list:
    return [w for w in product(range(bound + 1), repeat=2 * n) if is_in_region(w)]


def _generators(args) -> list:
    texts = list(args.exprs)
    gens = [parse_weyl(t, args.n) for t in texts]
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            gens += read_generators(fh.read(), args.n)
    if not gens:
        raise UsageError("no generators given (positional expressions or --file)")
    return gens


def _weight(args, name="weight", required=True):
    text = getattr(args, name)
    if text is None:
        if required:
            raise UsageError(f"--{name} is required")
        return None
    return parse_weight(text, args.n)


def _omega(args):
    w = _weight(args)
    if not is_in_region(w):
        raise UsageError(f"weight {w} is outside the region Omega")
    return w


def cmd_gb(args, out):
    gens = _generators(args)
    order = parse_order(args.order, args.n)
    w = _weight(args, required=False)
    if w is not None:
        order = order.refine(w)
    gb = buchberger(gens, order, WEYL(args.n))
    out.write(formats.dumps(formats.basis_to_json(gb.elements, order)))
    return 0


def cmd_in(args, out):
    gens = _generators(args)
    omega = _omega(args)
    base = parse_order(args.order, args.n)
    init = initial_ideal_weyl(gens, omega, base)
    out.write(formats.dumps([format_element(p) for p in init]))
    return 0


def _require_n1(args):
    if args.n != 1:
        raise UsageError(f"{args.command} is only available for n = 1")


def cmd_fan(args, out):
    _require_n1(args)
    fan = fanmod.fan_1d(_generators(args))
    if args.format == "csv":
        out.write(formats.fan_to_csv(fan))
    else:
        out.write(formats.dumps(formats.fan_to_json(fan)))
    return 0


def cmd_ugb(args, out):
    _require_n1(args)
    basis = fanmod.ugb(_generators(args))
    out.write(formats.dumps(formats.basis_to_json(basis.elements, OrderSpec.lex(1))))
    return 0


def cmd_chi(args, out):
    _require_n1(args)
    gens = _generators(args)
    fan = fanmod.fan_1d(gens)
    chi, bound = fanmod.chi(gens, fan)
    out.write(formats.dumps({"chi": chi, "bound_C": bound}))
    return 0


def cmd_gamma(args, out):
    gens = _generators(args)
    nu = _weight(args, "nu")
    out.write(formats.dumps({"gamma": fanmod.gamma(gens, nu), "nu": list(nu)}))
    return 0


def cmd_charvar(args, out):
    gens = _generators(args)
    c = charvar.char_ideal(gens, _omega(args))
    out.write(formats.dumps({"omega": list(c.omega), "ideal": [format_element(p) for p in c.reduced_gb]}))
    return 0


def cmd_cone(args, out):
    gens = _generators(args)
    ideal = charvar.critical_cone_ideal(gens, _omega(args))
    out.write(formats.dumps([format_element(p) for p in ideal]))
    return 0


def cmd_stab(args, out):
    gens = _generators(args)
    nu = _weight(args, "nu")
    if args.weight is not None:
        omegas = [_omega(args)]
    else:
        omegas = _weights_in_grid(args.n, args.grid)
    if args.s is not None:
        if len(omegas) != 1:
            raise UsageError("--s needs a single --weight")
        ok = charvar.stabilization_check(gens, nu, omegas[0], args.s)
        out.write(formats.dumps({"nu": list(nu), "omega": list(omegas[0]), "s": args.s, "pass": ok}))
        return 0 if ok else 1
    reports = charvar.verify_stabilization(gens, nu, omegas, args.tail)
    rows = [
        {
            "nu": list(r.nu),
            "omega": list(r.omega),
            "gamma": r.gamma_bound,
            "checked": list(r.checked_range),
            "onset": r.onset,
            "pass": r.all_pass_beyond_gamma,
        }
        for r in reports
    ]
    out.write(formats.dumps(rows))
    return 0 if all(r.all_pass_beyond_gamma for r in reports) else 1


def _dim_str(v) -> str:
    return "-inf" if v == NEG_INF else str(int(v))


def cmd_dim(args, out):
    gens = _generators(args)
    if args.weight is not None:
        out.write(_dim_str(charvar.dim_char_variety(gens, _omega(args))) + "\n")
        return 0
    omegas = _weights_in_grid(args.n, args.grid)
    dims = {charvar.dim_char_variety(gens, w) for w in omegas}
    if len(dims) != 1:
        sys.stderr.write("dimension is not constant: " + ", ".join(sorted(map(_dim_str, dims))) + "\n")
        return 1
    out.write(_dim_str(dims.pop()) + "\n")
    return 0


def cmd_experiment(args, out):
    result = experiment.run_experiment(args.s0, args.window, args.smax)
    fmt = args.format
    if fmt in ("svg", "csv"):
        data = experiment.emit_figure(result.classes, fmt, window=args.window)
        out.write(data.decode())
        return 0
    rows = [
        {
            "id": c.id,
            "vertex": list(c.vertex),
            "slope_lo": formats.rational_str(c.directions[0]),
            "slope_hi": formats.rational_str(c.directions[1]),
            "degenerate": c.degenerate,
            "members": len(c.members),
        }
        for c in result.classes
    ]
    out.write(
        formats.dumps(
            {
                "s0": args.s0,
                "window": args.window,
                "s_max": args.smax,
                "classes": rows,
                "count": len(rows),
                "degenerate": result.n_degenerate,
            }
        )
    )
    return 0


def cmd_parse_check(args, out):
    parse = parse_weyl if args.ring == "weyl" else parse_poly
    texts = list(args.exprs)
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            texts += [ln.split("#", 1)[0].strip() for ln in fh if ln.split("#", 1)[0].strip()]
    if not texts:
        rng = random.Random(args.seed)
        texts = [random_expression(rng, args.n, args.ring) for _ in range(100)]
    failed = 0
    for t in texts:
        e = parse(t, args.n)
        printed = format_element(e)
        back = parse(printed, args.n)
        if back != e:
            failed += 1
            sys.stderr.write(f"round-trip mismatch: {t!r} -> {printed!r}\n")
        if args.exprs or args.file:
            out.write(printed + "\n")
    if not (args.exprs or args.file):
        out.write(formats.dumps({"checked": len(texts), "failed": failed, "seed": args.seed}))
    return 1 if failed else 0


COMMANDS = {
    "gb": (cmd_gb, "Gröbner basis of a left ideal"),
    "in": (cmd_in, "generators of the weight initial ideal"),
    "fan": (cmd_fan, "weight fan for n = 1"),
    "ugb": (cmd_ugb, "universal Gröbner basis for n = 1"),
    "chi": (cmd_chi, "number of distinct initial ideals and the finiteness bound"),
    "gamma": (cmd_gamma, "largest nu-degree over a universal basis"),
    "charvar": (cmd_charvar, "reduced basis of the characteristic ideal"),
    "cone": (cmd_cone, "critical cone ideal"),
    "stab": (cmd_stab, "check Gr^nu Gr^omega L = Gr^(nu + s omega) L"),
    "dim": (cmd_dim, "Krull dimension of the characteristic variety"),
    "experiment": (cmd_experiment, "half-line incidence cones"),
    "parse-check": (cmd_parse_check, "parse, print and re-parse expressions"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weylfan", description="Gröbner bases and weight fans in Weyl algebras.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("exprs", nargs="*", help="generators, one expression each")
        p.add_argument("--n", type=int, default=1, help="number of variable pairs")
        p.add_argument("--file", help="read generators from a file, one per line")
        p.add_argument("--order", default="lex", help='"lex" or a weight chain "w1,w2;v1,v2"')
        p.add_argument("--weight", help="weight omega, comma separated")
        p.add_argument("--nu", help="weight nu, comma separated")
        p.add_argument("--s", type=int, help="single multiplier for stab")
        p.add_argument("--grid", type=int, default=7, help="largest weight entry for grid sweeps")
        p.add_argument("--tail", type=int, default=5, help="check s up to gamma + tail")
        p.add_argument("--s0", type=int, default=3)
        p.add_argument("--window", type=int, default=17)
        p.add_argument("--smax", type=int, default=100)
        p.add_argument("--format", choices=("json", "csv", "svg"), default="json")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--ring", choices=("weyl", "poly"), default="weyl", help="parse-check only")
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.n < 1:
        sys.stderr.write("error: --n must be at least 1\n")
        return 2
    handler = COMMANDS[args.command][0]
    try:
        return handler(args, out)
    except (UsageError, ParseError, ArityError, NotImplementedError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
