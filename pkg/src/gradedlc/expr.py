"""A small infix grammar for operator expressions.

Tokens: X1..Xd, D1..Dd, E1..Ed, Y, dY, nonnegative integers, + - * ^ and
parentheses.  `^` binds tighter than `*`, which binds tighter than
`+`/`-`; unary minus is allowed.  Multiplication is the (noncommutative)
Weyl product, taken left to right.

    D1*X1        ->  X1*D1 + 1
    (E1-2)*X1^2  ->  X1^2*E1  (after expansion)
"""

from __future__ import annotations

import re

from .weyl import WeylElement, euler

_TOKEN = re.compile(r"\s*(dY|[XDE]\d+|Y|\d+|[-+*^()])")


class ExprError(ValueError):
    pass


def tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExprError(f"bad token at position {pos}: {text[pos:pos+10]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


def infer_shape(tokens) -> tuple[int, bool]:
    """(d, with_base) from the variables appearing in the expression."""
    d = 1
    with_base = False
    for t in tokens:
        if t in ("Y", "dY"):
            with_base = True
        elif t[0] in "XDE" and t[1:].isdigit():
            d = max(d, int(t[1:]))
    return d, with_base


class _Parser:
    def __init__(self, tokens, d, with_base):
        self.tokens = tokens
        self.pos = 0
        self.d = d
        self.with_base = with_base

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        t = self.peek()
        self.pos += 1
        return t

    def expect(self, tok):
        t = self.take()
        if t != tok:
            raise ExprError(f"expected {tok!r}, got {t!r}")

    def parse(self) -> WeylElement:
        e = self.expr()
        if self.peek() is not None:
            raise ExprError(f"trailing input at {self.peek()!r}")
        return e

    def expr(self):
        if self.peek() == "-":
            self.take()
            out = -self.term()
        else:
            out = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self):
        out = self.power()
        while self.peek() == "*":
            self.take()
            out = out * self.power()
        return out

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            exp = self.take()
            if exp is None or not exp.isdigit():
                raise ExprError("exponent must be a nonnegative integer")
            return base ** int(exp)
        return base

    def atom(self):
        t = self.take()
        if t is None:
            raise ExprError("unexpected end of expression")
        if t == "(":
            e = self.expr()
            self.expect(")")
            return e
        if t == "-":
            return -self.atom()
        if t.isdigit():
            return WeylElement.const(int(t), self.d, self.with_base)
        if t == "Y":
            if not self.with_base:
                raise ExprError("Y not available without the K[Y] base")
            return WeylElement.y(self.d)
        if t == "dY":
            if not self.with_base:
                raise ExprError("dY not available without the K[Y] base")
            return WeylElement.delta(self.d)
        if t[0] in "XDE" and t[1:].isdigit():
            i = int(t[1:])
            if not 1 <= i <= self.d:
                raise ExprError(f"variable index {i} exceeds d={self.d}")
            if t[0] == "X":
                return WeylElement.x(i, self.d, self.with_base)
            if t[0] == "D":
                return WeylElement.partial(i, self.d, self.with_base)
            return euler(i, self.d, self.with_base)
        raise ExprError(f"unexpected token {t!r}")


def parse(text: str, d: int | None = None, with_base: bool | None = None) -> WeylElement:
    tokens = tokenize(text)
    d_inf, base_inf = infer_shape(tokens)
    return _Parser(
        tokens, d if d is not None else d_inf,
        with_base if with_base is not None else base_inf,
    ).parse()
