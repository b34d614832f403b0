"""Recursive-descent parser for polynomial text in X and Y.

Grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := 'X' | 'Y' | int | '(' expr ')'

Implicit multiplication ("2X", "XY") is rejected.  Integers are reduced mod p.
Over an extension field the symbol ``w`` denotes the class of T, so printed
coefficients such as ``(2*w + 1)`` read back unchanged.
"""
from __future__ import annotations

import re

from ..errors import PolySyntaxError
from ..gf import Field
from .bivariate import BivarPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\*\*|[-+*^()])|(\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        start = m.start(m.lastindex)
        num, ident, op, bad = m.groups()
        if bad is not None:
            raise PolySyntaxError(f"unexpected character {bad!r}", text, start)
        if ident is not None and ident not in ("X", "Y", "w"):
            raise PolySyntaxError(f"unknown identifier {ident!r}", text, start)
        if op == "**":
            op = "^"
        kind = "int" if num is not None else ("var" if ident is not None else op)
        tokens.append((kind, num or ident or op, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, field):
        self.text = text
        self.field = field
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise PolySyntaxError(msg, self.text, tok[2])

    def expr(self):
        neg = False
        if self.peek()[0] == "-":
            self.take()
            neg = True
        acc = self.term()
        if neg:
            acc = -acc
        while self.peek()[0] in "+-":
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.factor()
        nxt = self.peek()
        if nxt[0] in ("int", "var", "("):
            self.fail("implicit multiplication is not allowed; use '*'", nxt)
        return acc

    def factor(self):
        b = self.base()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] == "-":
                self.fail("negative exponent", tok)
            if tok[0] != "int":
                self.fail("expected a non-negative integer exponent", tok)
            self.take()
            b = b ** int(tok[1])
        return b

    def base(self):
        tok = self.take()
        kind = tok[0]
        if kind == "int":
            return BivarPoly.const(self.field, int(tok[1]))
        if kind == "var":
            if tok[1] == "w":
                if self.field.k == 1:
                    self.fail("unknown identifier 'w' (prime field has no generator symbol)", tok)
                return BivarPoly(self.field, {(0, 0): self.field.gen.code})
            return BivarPoly.x(self.field) if tok[1] == "X" else BivarPoly.y(self.field)
        if kind == "(":
            inner = self.expr()
            if self.peek()[0] != ")":
                self.fail("expected ')'")
            self.take()
            return inner
        if kind == "end":
            self.fail("unexpected end of input", tok)
        self.fail(f"unexpected token {tok[1]!r}", tok)


def parse_poly(text: str, field: Field) -> BivarPoly:
    """Parse ``text`` into a BivarPoly over ``field``."""
    p = _Parser(text, field)
    result = p.expr()
    if p.peek()[0] != "end":
        p.fail(f"unexpected token {p.peek()[1]!r}")
    return result
