"""Exact Gröbner bases in Weyl algebras, weight initial ideals, characteristic
ideals and their weight fans."""

from .core import (
    EQUAL,
    GREATER,
    LESS,
    NEG_INF,
    ArityError,
    OrderSpec,
    cmp,
    exp_pair,
    is_in_region,
    make_weight,
    parse_weight,
    refine,
    weight_degree,
)
from .groebner import (
    COMMUTATIVE,
    WEYL,
    GroebnerBasis,
    RingInstance,
    buchberger,
    divide,
    ideal_equal,
    initial_ideal_comm,
    initial_ideal_weyl,
    krull_dim_quotient,
    leading_term,
    reduce,
    reduce_basis,
    s_element,
)
from .parse import ParseError, format_element, parse_poly, parse_weyl
from .polyring import Poly, deg_nu, padd, pmul, tau_initial
from .weyl import PolyX, WeylElement, add, apply, deg_omega, mul, symbol

from .charvar import (
    CharIdeal,
    StabilizationReport,
    char_ideal,
    critical_cone_ideal,
    dim_char_variety,
    dimension_constancy,
    kappa_hat,
    stabilization_check,
    verify_stabilization,
)
from .experiment import (
    ColourClass,
    HalfLine,
    conjecture_report,
    emit_figure,
    fibonacci_vertex_set,
    halfline_cones,
    run_experiment,
)
from .fan import FanDecomposition, SlopeCone, UniversalBasis, bound_c, chi, classify_region, fan_1d, gamma, grid_sample, ugb

__version__ = "0.1.0"

__all__ = [
    "ArityError",
    "COMMUTATIVE",
    "CharIdeal",
    "ColourClass",
    "EQUAL",
    "FanDecomposition",
    "GREATER",
    "GroebnerBasis",
    "HalfLine",
    "LESS",
    "NEG_INF",
    "OrderSpec",
    "ParseError",
    "Poly",
    "PolyX",
    "RingInstance",
    "SlopeCone",
    "StabilizationReport",
    "UniversalBasis",
    "WEYL",
    "WeylElement",
    "add",
    "apply",
    "bound_c",
    "buchberger",
    "char_ideal",
    "chi",
    "classify_region",
    "cmp",
    "conjecture_report",
    "critical_cone_ideal",
    "deg_nu",
    "deg_omega",
    "dim_char_variety",
    "dimension_constancy",
    "divide",
    "emit_figure",
    "exp_pair",
    "fan_1d",
    "fibonacci_vertex_set",
    "format_element",
    "gamma",
    "grid_sample",
    "halfline_cones",
    "ideal_equal",
    "initial_ideal_comm",
    "initial_ideal_weyl",
    "is_in_region",
    "kappa_hat",
    "krull_dim_quotient",
    "leading_term",
    "make_weight",
    "mul",
    "padd",
    "parse_poly",
    "parse_weight",
    "parse_weyl",
    "pmul",
    "reduce",
    "reduce_basis",
    "refine",
    "run_experiment",
    "s_element",
    "stabilization_check",
    "symbol",
    "tau_initial",
    "ugb",
    "verify_stabilization",
    "weight_degree",
]
