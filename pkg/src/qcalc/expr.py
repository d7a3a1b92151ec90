"""Tokenizer and recursive-descent parser for quantity expressions.

Precedence, tightest first: ``^``, unary minus, ``*`` ``/`` and
juxtaposition, then ``+`` ``-``.  Binary operators are left-associative;
``^`` takes a literal rational exponent and cannot be chained.

A literal such as ``1/100`` written without spaces is a single rational
number, so ``1/100 m`` is one hundredth of a metre.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Union

from .errors import ParseError

__all__ = [
    "Token",
    "Number",
    "UnitRef",
    "Binary",
    "Power",
    "Neg",
    "Paren",
    "Expr",
    "tokenize",
    "parse",
    "unparse",
]

_TOKEN_RE = re.compile(
    r"""
    (?P<space>[ \t\r]+)
  | (?P<newline>\n)
  | (?P<number>\d+/\d+(?![\d.])|\d+(?:\.\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "number", "ident", "op" or "end"
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    """Split ``text`` into tokens, ending with an ``end`` token."""
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "newline":
            line += 1
            line_start = m.end()
        elif kind != "space":
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token("end", "", line, pos - line_start + 1))
    return tokens


def _literal_value(text: str) -> Fraction:
    if "/" in text:
        num, den = text.split("/")
        return Fraction(int(num), int(den)) if int(den) else None
    return Fraction(text)


@dataclass(frozen=True)
class Number:
    text: str
    value: Fraction = field(compare=False)


@dataclass(frozen=True)
class UnitRef:
    name: str
    line: int = field(default=1, compare=False)
    column: int = field(default=1, compare=False)


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Expr"
    right: "Expr"
    implicit: bool = field(default=False, compare=False)


@dataclass(frozen=True)
class Power:
    base: "Expr"
    exponent: Fraction


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Paren:
    inner: "Expr"


Expr = Union[Number, UnitRef, Binary, Power, Neg, Paren]

_OPERAND_START = ("number", "ident")


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def at(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def fail(self, message: str):
        tok = self.tok
        if tok.kind == "end" and self.pos > 0:
            # point at the dangling token rather than past the end
            prev = self.tokens[self.pos - 1]
            raise ParseError(f"{message} after {prev.text!r}", prev.line, prev.column)
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(f"{message}, found {found}", tok.line, tok.column)

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(f"expected {text!r}")
        return self.advance()

    def parse(self) -> Expr:
        if self.tok.kind == "end":
            raise ParseError("empty expression", self.tok.line, self.tok.column)
        node = self.expr()
        if self.tok.kind != "end":
            if self.at("^"):
                self.fail("exponents cannot be chained; use parentheses")
            self.fail("unexpected token")
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance().text
            node = Binary(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.unary()
        while True:
            if self.at("*") or self.at("/"):
                op = self.advance().text
                node = Binary(op, node, self.unary())
            elif self.tok.kind in _OPERAND_START or self.at("("):
                node = Binary("*", node, self.factor(), implicit=True)
            else:
                return node

    def unary(self) -> Expr:
        if self.at("-"):
            self.advance()
            return Neg(self.unary())
        return self.factor()

    def factor(self) -> Expr:
        node = self.atom()
        if self.at("^"):
            self.advance()
            node = Power(node, self.exponent())
        return node

    def atom(self) -> Expr:
        tok = self.tok
        if tok.kind == "number":
            self.advance()
            value = _literal_value(tok.text)
            if value is None:
                raise ParseError(f"zero denominator in {tok.text!r}", tok.line, tok.column)
            return Number(tok.text, value)
        if tok.kind == "ident":
            self.advance()
            return UnitRef(tok.text, tok.line, tok.column)
        if self.at("("):
            self.advance()
            inner = self.expr()
            self.expect(")")
            return Paren(inner)
        self.fail("expected a number, unit or '('")

    def exponent(self) -> Fraction:
        if self.at("("):
            self.advance()
            value = self.signed_rational()
            self.expect(")")
            return value
        return self.signed_rational()

    def signed_rational(self) -> Fraction:
        sign = 1
        if self.at("-"):
            self.advance()
            sign = -1
        tok = self.tok
        if tok.kind != "number" or "." in tok.text:
            self.fail("expected an integer or rational exponent")
        self.advance()
        value = _literal_value(tok.text)
        if value is None:
            raise ParseError(f"zero denominator in {tok.text!r}", tok.line, tok.column)
        return sign * value


def parse(source: str | list[Token]) -> Expr:
    """Parse an expression from text or from :func:`tokenize` output."""
    tokens = tokenize(source) if isinstance(source, str) else list(source)
    return _Parser(tokens).parse()


def _exponent_text(e: Fraction) -> str:
    if e.denominator == 1 and e > 0:
        return str(e.numerator)
    return f"({e.numerator})" if e.denominator == 1 else f"({e.numerator}/{e.denominator})"


def unparse(node: Expr) -> str:
    """Text form of a parsed tree; parsing it again gives an equal tree."""
    return "".join(_unparse(node))


def _unparse(node: Expr) -> Iterator[str]:
    if isinstance(node, Number):
        yield node.text
    elif isinstance(node, UnitRef):
        yield node.name
    elif isinstance(node, Paren):
        yield "("
        yield from _unparse(node.inner)
        yield ")"
    elif isinstance(node, Neg):
        yield "-"
        yield from _unparse(node.operand)
    elif isinstance(node, Power):
        yield from _unparse(node.base)
        yield "^" + _exponent_text(node.exponent)
    elif isinstance(node, Binary):
        yield from _unparse(node.left)
        yield " " if node.implicit else f" {node.op} "
        yield from _unparse(node.right)
    else:
        raise TypeError(f"not an expression node: {node!r}")
