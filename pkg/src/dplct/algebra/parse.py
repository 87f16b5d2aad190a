"""Parser for the polynomial text grammar shared by the CLI and JSON inputs.

Variables come from {x, y, z, w, s, t}; coefficients are integers or
``p/q``; ``^`` is exponentiation, ``*`` may be omitted, parentheses nest.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .forms import BinaryForm, TernaryForm

VARIABLES = "xyzwst"

_TOKEN = re.compile(r"\s*(?:(\d+)|([xyzwst])|(\*\*|[-+*/^()]))")


class PolynomialSyntaxError(ValueError):
    def __init__(self, text: str, pos: int, message: str):
        pointer = " " * pos + "^"
        super().__init__(f"{message} at position {pos}\n  {text}\n  {pointer}")
        self.pos = pos


Poly = dict  # exponent tuple over VARIABLES -> Fraction


def _add(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Fraction(0)) + v
        if not out[k]:
            del out[k]
    return out


def _mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            out[k] = out.get(k, Fraction(0)) + va * vb
    return {k: v for k, v in out.items() if v}


def _const(c) -> Poly:
    c = Fraction(c)
    return {(0,) * len(VARIABLES): c} if c else {}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                j = pos
                while j < len(text) and text[j].isspace():
                    j += 1
                raise PolynomialSyntaxError(text, j, f"unexpected character {text[j]!r}")
            start = m.start(m.lastindex)
            if m.group(1):
                self.tokens.append(("num", m.group(1), start))
            elif m.group(2):
                self.tokens.append(("var", m.group(2), start))
            else:
                op = "^" if m.group(3) == "**" else m.group(3)
                self.tokens.append(("op", op, start))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, message: str):
        raise PolynomialSyntaxError(self.text, self.peek()[2], message)

    def parse(self) -> Poly:
        if not self.tokens:
            self.fail("empty polynomial")
        p = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self) -> Poly:
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        p = self.term()
        if sign < 0:
            p = _mul(p, _const(-1))
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            q = self.term()
            p = _add(p, q if op == "+" else _mul(q, _const(-1)))
        return p

    def _starts_factor(self) -> bool:
        kind, val, _ = self.peek()
        return kind in ("num", "var") or (kind == "op" and val == "(")

    def term(self) -> Poly:
        p = self.power()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                p = _mul(p, self.power())
            elif kind == "op" and val == "/":
                self.take()
                kind2, _, pos = self.peek()
                q = self.power()
                if any(sum(k) for k in q) or not q:
                    raise PolynomialSyntaxError(self.text, pos, "division only by a nonzero constant")
                p = _mul(p, _const(1 / next(iter(q.values()))))
            elif self._starts_factor():
                p = _mul(p, self.power())
            else:
                return p

    def power(self) -> Poly:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            kind, val, _ = self.peek()
            if kind != "num":
                self.fail("exponent must be a non-negative integer")
            self.take()
            out = _const(1)
            for _ in range(int(val)):
                out = _mul(out, base)
            return out
        return base

    def atom(self) -> Poly:
        kind, val, _ = self.peek()
        if kind == "num":
            self.take()
            return _const(int(val))
        if kind == "var":
            self.take()
            e = [0] * len(VARIABLES)
            e[VARIABLES.index(val)] = 1
            return {tuple(e): Fraction(1)}
        if kind == "op" and val == "(":
            self.take()
            p = self.expr()
            if self.peek()[1] != ")":
                self.fail("expected ')'")
            self.take()
            return p
        if kind == "op" and val == "-":
            self.take()
            return _mul(self.power(), _const(-1))
        self.fail("expected a number, variable or '('")


def parse_polynomial(text: str, variables: str | None = None) -> dict:
    """Parse ``text`` into ``{exponent tuple: Fraction}`` over ``variables``.

    With ``variables=None`` exponents are indexed by the full alphabet
    ``xyzwst``.  Otherwise only the listed variables may occur and the
    tuples are ordered like ``variables``.
    """
    full = _Parser(text).parse()
    if variables is None:
        return full
    idx = [VARIABLES.index(v) for v in variables]
    out = {}
    for k, c in full.items():
        for j, e in enumerate(k):
            if e and j not in idx:
                bad = VARIABLES[j]
                raise PolynomialSyntaxError(
                    text, text.index(bad), f"variable {bad!r} not allowed here (expected {variables})"
                )
        out[tuple(k[j] for j in idx)] = c
    return out


def parse_binary_form(text: str, degree: int | None = None) -> BinaryForm:
    terms = parse_polynomial(text, "st")
    degs = {sum(k) for k in terms}
    if len(degs) > 1:
        raise ValueError(f"{text!r} is not homogeneous in s, t")
    d = degs.pop() if degs else (degree or 0)
    if degree is not None and terms and d != degree:
        raise ValueError(f"{text!r} has degree {d}, expected {degree}")
    if degree is not None:
        d = degree
    return BinaryForm.from_dict(d, {k[0]: c for k, c in terms.items()})


def parse_ternary_form(text: str, degree: int | None = None) -> TernaryForm:
    terms = parse_polynomial(text, "xyz")
    degs = {sum(k) for k in terms}
    if len(degs) > 1:
        raise ValueError(f"{text!r} is not homogeneous in x, y, z")
    d = degs.pop() if degs else (degree or 0)
    if degree is not None and d != degree:
        raise ValueError(f"{text!r} has degree {d}, expected {degree}")
    return TernaryForm(d, terms)


def parse_germ(text: str) -> dict:
    """Bivariate polynomial in x, y as ``{(i, j): Fraction}``."""
    return parse_polynomial(text, "xy")
