"""Dimensions as exponent vectors with rational entries over named base symbols."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DimensionSyntaxError

__all__ = ["Dimension", "DIMENSIONLESS", "dim_mul", "dim_inv", "dim_pow", "SYMBOL_RE"]

SYMBOL_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_FACTOR_RE = re.compile(
    r"^(?P<sym>[A-Za-z_][A-Za-z0-9_]*)"
    r"(?:\^(?:(?P<int>[0-9]+)|\((?P<exp>-?[0-9]+(?:/[0-9]+)?)\)))?$"
)


def _format_exponent(e: Fraction) -> str:
    if e == 1:
        return ""
    if e.denominator == 1 and e > 0:
        return f"^{e.numerator}"
    if e.denominator == 1:
        return f"^({e.numerator})"
    return f"^({e.numerator}/{e.denominator})"


class Dimension:
    """Immutable element of the free abelian group on base symbols.

    Stored canonically: entries sorted by symbol, exponents exact and
    nonzero.  The empty dimension is the dimensionless identity.

    >>> L, T = Dimension({"m": 1}), Dimension({"s": 1})
    >>> str(L * T**-2)
    'm*s^(-2)'
    """

    __slots__ = ("_items", "_hash")

    def __init__(self, exponents: Mapping[str, object] | Iterable[tuple[str, object]] = ()):
        if isinstance(exponents, Mapping):
            exponents = exponents.items()
        acc: dict[str, Fraction] = {}
        for sym, exp in exponents:
            if not isinstance(sym, str) or not SYMBOL_RE.match(sym):
                raise DimensionSyntaxError(f"invalid base symbol {sym!r}")
            if isinstance(exp, float):
                raise TypeError("dimension exponents must be exact rationals")
            acc[sym] = acc.get(sym, Fraction(0)) + Fraction(exp)
        self._items = tuple(sorted((s, e) for s, e in acc.items() if e != 0))
        self._hash = hash(self._items)

    @classmethod
    def base(cls, symbol: str) -> Dimension:
        return cls({symbol: 1})

    @classmethod
    def parse(cls, text: str) -> Dimension:
        text = text.strip()
        if text in ("", "1"):
            return DIMENSIONLESS
        entries = []
        for part in text.split("*"):
            m = _FACTOR_RE.match(part.strip())
            if not m:
                raise DimensionSyntaxError(f"cannot parse dimension factor {part!r}")
            exp = m.group("int") or m.group("exp") or "1"
            entries.append((m.group("sym"), Fraction(exp)))
        return cls(entries)

    @property
    def items(self) -> tuple[tuple[str, Fraction], ...]:
        return self._items

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(s for s, _ in self._items)

    def exponent(self, symbol: str) -> Fraction:
        for s, e in self._items:
            if s == symbol:
                return e
        return Fraction(0)

    def as_dict(self) -> dict[str, Fraction]:
        return dict(self._items)

    def is_dimensionless(self) -> bool:
        return not self._items

    def __bool__(self):
        return bool(self._items)

    def __eq__(self, other):
        if not isinstance(other, Dimension):
            return NotImplemented
        return self._items == other._items

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self._items < other._items

    def __mul__(self, other):
        if not isinstance(other, Dimension):
            return NotImplemented
        return Dimension(self._items + other._items)

    def __truediv__(self, other):
        if not isinstance(other, Dimension):
            return NotImplemented
        return self * other.inv()

    def inv(self) -> Dimension:
        return Dimension((s, -e) for s, e in self._items)

    def __pow__(self, e):
        if isinstance(e, float):
            raise TypeError("dimension exponents must be exact rationals")
        e = Fraction(e)
        return Dimension((s, x * e) for s, x in self._items)

    def __str__(self):
        if not self._items:
            return "1"
        return "*".join(s + _format_exponent(e) for s, e in self._items)

    def __repr__(self):
        return f"Dimension({str(self)!r})"


DIMENSIONLESS = Dimension()


def dim_mul(a: Dimension, b: Dimension) -> Dimension:
    return a * b


def dim_inv(a: Dimension) -> Dimension:
    return a.inv()


def dim_pow(a: Dimension, e) -> Dimension:
    return a**e
