"""Soft-number expression grammar for the command line.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := NUMBER ['z0'] | FUNC '(' expr ')' | '(' expr ')'

FUNC is one of exp, ln, sin, cos, tan, sqrt.  A NUMBER followed by ``z0``
is a soft-zero term, so ``2z0 + 3`` evaluates to the soft number (2, 3).
Exponents are nonnegative integer literals.
"""

from __future__ import annotations

import re
from typing import NamedTuple

from . import core
from .core import SoftNumber


class ExprParseError(ValueError):
    """Syntax error with its 0-based position in the source text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Token(NamedTuple):
    kind: str  # 'num', 'ident', 'op', 'end'
    text: str
    pos: int


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/^()]))"
)

_FUNCTIONS = ("exp", "ln", "sin", "cos", "tan", "sqrt")


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            tail = text[pos:].lstrip()
            if not tail:
                break
            raise ExprParseError(f"unexpected character {tail[0]!r}", len(text) - len(tail))
        for kind in ("num", "ident", "op"):
            if m.group(kind) is not None:
                tokens.append(_Token(kind, m.group(kind), m.start(kind)))
                break
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect_op(self, op: str) -> None:
        tok = self.advance()
        if tok.kind != "op" or tok.text != op:
            raise ExprParseError(f"expected {op!r}", tok.pos)

    def parse(self) -> SoftNumber:
        value = self.expression()
        tok = self.peek()
        if tok.kind != "end":
            raise ExprParseError(f"unexpected {tok.text!r}", tok.pos)
        return value

    def expression(self) -> SoftNumber:
        value = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.advance().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> SoftNumber:
        value = self.unary()
        while self.peek().kind == "op" and self.peek().text in "*/":
            tok = self.advance()
            rhs = self.unary()
            if tok.text == "*":
                value = value * rhs
            else:
                value = value / rhs
        return value

    def unary(self) -> SoftNumber:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            return -self.unary()
        return self.power()

    def power(self) -> SoftNumber:
        value = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.advance()
            exp_tok = self.advance()
            if exp_tok.kind != "num" or not re.fullmatch(r"\d+", exp_tok.text):
                raise ExprParseError("exponent must be a nonnegative integer", exp_tok.pos)
            value = core.pow_nat(value, int(exp_tok.text))
        return value

    def atom(self) -> SoftNumber:
        tok = self.advance()
        if tok.kind == "num":
            coeff = float(tok.text)
            nxt = self.peek()
            if nxt.kind == "ident" and nxt.text == "z0":
                self.advance()
                return SoftNumber(coeff, 0.0)
            return SoftNumber(0.0, coeff)
        if tok.kind == "ident":
            if tok.text == "z0":
                raise ExprParseError("z0 needs a leading coefficient (e.g. 1z0)", tok.pos)
            if tok.text not in _FUNCTIONS:
                raise ExprParseError(f"unknown function {tok.text!r}", tok.pos)
            self.expect_op("(")
            arg = self.expression()
            self.expect_op(")")
            return core.ANALYTIC_FUNCTIONS[tok.text](arg)
        if tok.kind == "op" and tok.text == "(":
            value = self.expression()
            self.expect_op(")")
            return value
        raise ExprParseError(f"expected a value, got {tok.text or 'end of input'!r}", tok.pos)


def evaluate(text: str) -> SoftNumber:
    """Parse and evaluate an expression to a soft number."""
    return _Parser(text).parse()
