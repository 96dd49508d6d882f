"""Recursive-descent parser for polynomial expressions over declared names.

Grammar (whitespace insensitive):

    expr    := term (("+" | "-") term)*
    term    := factor ("*" factor)*
    factor  := ("+" | "-")* primary ("^" INT)?
    primary := NAME | NUMBER | "(" expr ")"
    NUMBER  := INT ("/" INT)?          # "/" only between integer literals

Multiplication is always explicit; "**" is accepted as an alias for "^".
Errors carry the line and column of the offending token.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .poly import Poly, Ring

_TOKEN = re.compile(
    r"\s*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<int>\d+)|(?P<pow>\*\*|\^)"
    r"|(?P<op>[+\-*/()]))"
)


def _tokenize(text: str, line: int, col_offset: int):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(
                    f"unexpected character {text[pos:].strip()[0]!r}",
                    line,
                    col_offset + pos + 1,
                )
            break
        col = col_offset + m.start(m.lastgroup) + 1
        if m.lastgroup == "name":
            tokens.append(("name", m.group("name"), col))
        elif m.lastgroup == "int":
            tokens.append(("int", int(m.group("int")), col))
        elif m.lastgroup == "pow":
            tokens.append(("^", "^", col))
        else:
            tokens.append((m.group("op"), m.group("op"), col))
        pos = m.end()
    tokens.append(("end", None, col_offset + len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, tokens, ring: Ring, line: int):
        self.tokens = tokens
        self.ring = ring
        self.line = line
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.line, tok[2])

    def expr(self) -> Poly:
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op, _, _ = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Poly:
        value = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                value = value * self.factor()
            elif kind == "/":
                self.fail("'/' is only allowed between integer literals")
            else:
                return value

    def factor(self) -> Poly:
        sign = 1
        while self.peek()[0] in ("+", "-"):
            if self.take()[0] == "-":
                sign = -sign
        value = self.primary()
        if self.peek()[0] == "^":
            self.take()
            kind, exp, col = self.take()
            if kind != "int":
                self.fail("exponent must be a non-negative integer",
                          (kind, exp, col))
            value = value**exp
        return value if sign == 1 else -value

    def primary(self) -> Poly:
        kind, value, col = self.take()
        if kind == "name":
            if value not in self.ring.names:
                self.fail(f"unknown identifier {value!r}", (kind, value, col))
            return self.ring.var(value)
        if kind == "int":
            if self.peek()[0] == "/":
                self.take()
                k2, v2, c2 = self.take()
                if k2 != "int":
                    self.fail("'/' is only allowed between integer literals",
                              (k2, v2, c2))
                if v2 == 0:
                    self.fail("zero denominator in rational literal",
                              (k2, v2, c2))
                return self.ring.const(Fraction(value, v2))
            return self.ring.const(value)
        if kind == "(":
            inner = self.expr()
            k2, v2, c2 = self.take()
            if k2 != ")":
                self.fail("expected ')'", (k2, v2, c2))
            return inner
        self.fail("expected a name, number or '('", (kind, value, col))


def parse_expression(text: str, ring: Ring, line: int = 1, col_offset: int = 0) -> Poly:
    """Parse ``text`` into a polynomial of ``ring``."""
    parser = _Parser(_tokenize(text, line, col_offset), ring, line)
    value = parser.expr()
    kind, tok_value, col = parser.peek()
    if kind != "end":
        parser.fail(f"unexpected trailing {tok_value!r}")
    return value


def parse_scalar(text: str, line: int, col: int) -> Fraction:
    """Exact rational from an integer, p/q, or decimal literal."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"malformed rational literal {text!r}", line, col) from None
