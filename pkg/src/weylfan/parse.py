"""Text form of Weyl elements and commutative polynomials.

Grammar (``*`` is the ring product, so it does not commute for Weyl input)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := ['-'] (rational | var ['^' nat] | '(' expr ')')

Weyl variables are ``x1..xn`` and ``d1..dn``; polynomial variables are
``X1..Xn`` and ``Y1..Yn``.  When ``n == 1`` the bare names ``x, d`` (or
``X, Y``) are accepted and used for printing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .core import SparseElement
from .polyring import Poly
from .weyl import WeylElement

__all__ = ["ParseError", "parse_weyl", "parse_poly", "format_element", "read_generators", "random_expression"]


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.column = col


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(.))")


@dataclass
class _Tok:
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        if m.group(1) is not None:
            toks.append(_Tok("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            toks.append(_Tok("name", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*^()/":
                raise ParseError(f"unexpected character {ch!r}", text, m.start(3))
            toks.append(_Tok("op", ch, m.start(3)))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


def _variable_table(cls, n: int) -> dict[str, int]:
    lo, hi = ("x", "d") if cls is WeylElement else ("X", "Y")
    table = {}
    for i in range(1, n + 1):
        table[f"{lo}{i}"] = i - 1
        table[f"{hi}{i}"] = n + i - 1
    if n == 1:
        table[lo] = 0
        table[hi] = 1
    return table


class _Parser:
    def __init__(self, text: str, cls, n: int):
        if n < 1:
            raise ValueError("arity must be at least 1")
        self.text = text
        self.cls = cls
        self.n = n
        self.vars = _variable_table(cls, n)
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, op: str) -> _Tok:
        tok = self.take()
        if tok.kind != "op" or tok.text != op:
            raise ParseError(f"expected {op!r} but found {tok.text or 'end of input'!r}", self.text, tok.pos)
        return tok

    def parse(self) -> SparseElement:
        if self.peek().kind == "end":
            raise ParseError("empty expression", self.text, 0)
        value = self.expr()
        tok = self.peek()
        if tok.kind in ("name", "int") or tok.text == "(":
            raise ParseError(f"missing '*' before {tok.text!r} (juxtaposition is not allowed)", self.text, tok.pos)
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", self.text, tok.pos)
        return value

    def expr(self):
        value = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.take().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek().kind == "op" and self.peek().text == "*":
            self.take()
            value = value * self.factor()
        return value

    def factor(self):
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.take()
            return -self.factor()
        if tok.kind == "int":
            self.take()
            num = int(tok.text)
            if self.peek().kind == "op" and self.peek().text == "/":
                self.take()
                den_tok = self.take()
                if den_tok.kind != "int":
                    raise ParseError("expected a denominator", self.text, den_tok.pos)
                den = int(den_tok.text)
                if den == 0:
                    raise ParseError("zero denominator", self.text, den_tok.pos)
                return self.cls.constant(Fraction(num, den), self.n)
            return self.cls.constant(num, self.n)
        if tok.kind == "name":
            self.take()
            if tok.text not in self.vars:
                if re.fullmatch(r"[xdXY]\d+", tok.text):
                    raise ParseError(f"variable {tok.text!r} exceeds arity n={self.n}", self.text, tok.pos)
                if tok.text in ("x", "d", "X", "Y"):
                    raise ParseError(f"bare {tok.text!r} is only allowed when n=1", self.text, tok.pos)
                raise ParseError(f"unknown variable {tok.text!r}", self.text, tok.pos)
            value = self.cls.gen(self.vars[tok.text], self.n)
            if self.peek().kind == "op" and self.peek().text == "^":
                self.take()
                exp_tok = self.take()
                if exp_tok.kind != "int":
                    raise ParseError("expected a non-negative integer exponent", self.text, exp_tok.pos)
                value = value ** int(exp_tok.text)
            return value
        if tok.kind == "op" and tok.text == "(":
            self.take()
            value = self.expr()
            self.expect(")")
            return value
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", self.text, tok.pos)


def parse_weyl(text: str, n: int) -> WeylElement:
    """Parse text into a canonical-form Weyl element; products are normalized."""
    return _Parser(text, WeylElement, n).parse()


def parse_poly(text: str, n: int) -> Poly:
    return _Parser(text, Poly, n).parse()


def _var_names(elem: SparseElement) -> list[str]:
    lo, hi = ("x", "d") if isinstance(elem, WeylElement) else ("X", "Y")
    if elem.n == 1:
        return [lo, hi]
    return [f"{lo}{i}" for i in range(1, elem.n + 1)] + [f"{hi}{i}" for i in range(1, elem.n + 1)]


def _format_monomial(e, names) -> str:
    parts = []
    for v, k in zip(names, e):
        if k == 1:
            parts.append(v)
        elif k > 1:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def format_element(elem: SparseElement, order=None) -> str:
    """Print in a form ``parse_weyl``/``parse_poly`` read back unchanged.

    Terms are listed from the largest exponent down, by ``order`` when given,
    otherwise by total degree then the flat exponent tuple.
    """
    if not elem.terms:
        return "0"
    names = _var_names(elem)
    if order is None:
        key = lambda e: (sum(e), e)  # noqa: E731
    else:
        key = order.key
    out = []
    for e in sorted(elem.terms, key=key, reverse=True):
        c = elem.terms[e]
        mono = _format_monomial(e, names)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def read_generators(text: str, n: int, kind: str = "weyl") -> list:
    """One generator per line; blank lines and ``#`` comments are skipped."""
    parse = parse_weyl if kind == "weyl" else parse_poly
    gens = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            gens.append(parse(line, n))
    return gens


def random_expression(rng, n: int, kind: str = "weyl", depth: int = 2) -> str:
    """A random well-formed expression, for round-trip checks."""
    if kind == "weyl":
        names = ["x", "d"] if n == 1 else [f"x{i}" for i in range(1, n + 1)] + [f"d{i}" for i in range(1, n + 1)]
    else:
        names = ["X", "Y"] if n == 1 else [f"X{i}" for i in range(1, n + 1)] + [f"Y{i}" for i in range(1, n + 1)]

    def factor(level):
        r = rng.random()
        if r < 0.25:
            num, den = rng.randint(0, 9), rng.randint(1, 4)
            return str(num) if den == 1 else f"{num}/{den}"
        if r < 0.8 or level == 0:
            v = rng.choice(names)
            k = rng.randint(0, 3)
            return v if k == 1 else f"{v}^{k}"
        return "(" + expr(level - 1) + ")"

    def term(level):
        parts = [factor(level) for _ in range(rng.randint(1, 3))]
        return ("-" if rng.random() < 0.2 else "") + "*".join(parts)

    def expr(level):
        out = term(level)
        for _ in range(rng.randint(0, 3)):
            out += rng.choice([" + ", " - "]) + term(level)
        return out

    return expr(depth)
