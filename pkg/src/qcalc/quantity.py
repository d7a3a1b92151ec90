"""Quantities of the canonical partially additive field.

A :class:`Quantity` is a scalar value paired with a :class:`Dimension`.
Addition is partial: summing quantities of different dimensions yields an
:class:`Undefined` value, which absorbs every further operation.  Equality
between partial results is strong equality -- both undefined, or both
defined and equal -- so all ``Undefined`` instances compare equal regardless
of their diagnostic payload.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .dimensions import DIMENSIONLESS, Dimension
from .errors import FieldMismatchError, NoRootError, ZeroInverseError
from .scalars import ExactRational, ScalarField

__all__ = [
    "Quantity",
    "Undefined",
    "PartialResult",
    "CanonicalPaf",
    "q_add",
    "q_sub",
    "q_mul",
    "q_div",
    "q_neg",
    "q_inv",
    "q_pow",
    "summable",
    "zero_of",
    "is_zero",
    "is_dimensionless",
    "strong_eq",
]


@dataclass(frozen=True, eq=False)
class Undefined:
    """The undefined element, with an optional diagnostic."""

    left: Dimension | None = None
    right: Dimension | None = None
    op: str = ""
    reason: str = ""

    def __eq__(self, other):
        return isinstance(other, Undefined)

    def __hash__(self):
        return hash(Undefined)

    @property
    def message(self) -> str:
        if self.reason:
            return self.reason
        if self.left is not None and self.right is not None:
            return f"incompatible dimensions: {self.left} vs {self.right}"
        return "undefined"

    def __str__(self):
        return f"undefined: {self.message}"

    def _absorb(self, other=None):
        return self

    __add__ = __radd__ = __sub__ = __rsub__ = _absorb
    __mul__ = __rmul__ = __truediv__ = __rtruediv__ = _absorb

    def __neg__(self):
        return self

    def __pow__(self, e):
        return self

    def inv(self):
        return self


@dataclass(frozen=True)
class Quantity:
    value: object
    dim: Dimension = DIMENSIONLESS
    field: ScalarField = field(default_factory=ExactRational, compare=True, repr=False)

    def __post_init__(self):
        if not isinstance(self.dim, Dimension):
            object.__setattr__(self, "dim", _as_dimension(self.dim))
        object.__setattr__(self, "value", self.field.coerce(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def is_dimensionless(self) -> bool:
        return self.dim.is_dimensionless()

    def zero(self) -> Quantity:
        return Quantity(self.field.zero, self.dim, self.field)

    def _lift(self, other):
        """Plain numbers act as dimensionless quantities of this field."""
        if isinstance(other, (Quantity, Undefined)):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Quantity(self.field.coerce(other), DIMENSIONLESS, self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        return other if other is NotImplemented else q_add(self, other)

    def __radd__(self, other):
        other = self._lift(other)
        return other if other is NotImplemented else q_add(other, self)

    def __sub__(self, other):
        other = self._lift(other)
        return other if other is NotImplemented else q_sub(self, other)

    def __rsub__(self, other):
        other = self._lift(other)
        return other if other is NotImplemented else q_sub(other, self)

    def __mul__(self, other):
        other = self._lift(other)
        return other if other is NotImplemented else q_mul(self, other)

    def __rmul__(self, other):
        other = self._lift(other)
        return other if other is NotImplemented else q_mul(other, self)

    def __truediv__(self, other):
        other = self._lift(other)
        return other if other is NotImplemented else q_div(self, other)

    def __rtruediv__(self, other):
        other = self._lift(other)
        return other if other is NotImplemented else q_div(other, self)

    def __neg__(self):
        return q_neg(self)

    def __pow__(self, e):
        return q_pow(self, e)

    def inv(self) -> Quantity:
        return q_inv(self)

    def __str__(self):
        value = self.field.format(self.value)
        if self.dim.is_dimensionless():
            return value
        return f"{value} {self.dim}"


PartialResult = Union[Quantity, Undefined]


def _as_dimension(dim) -> Dimension:
    if isinstance(dim, Dimension):
        return dim
    if isinstance(dim, str):
        return Dimension.parse(dim)
    return Dimension(dim)


def _same_field(a: Quantity, b: Quantity) -> ScalarField:
    if a.field != b.field:
        raise FieldMismatchError(f"cannot combine {a.field!r} with {b.field!r}")
    return a.field


def q_add(a: PartialResult, b: PartialResult) -> PartialResult:
    if isinstance(a, Undefined):
        return a
    if isinstance(b, Undefined):
        return b
    f = _same_field(a, b)
    if a.dim != b.dim:
        return Undefined(a.dim, b.dim, "+")
    return Quantity(f.add(a.value, b.value), a.dim, f)


def q_neg(a: PartialResult) -> PartialResult:
    if isinstance(a, Undefined):
        return a
    return Quantity(a.field.neg(a.value), a.dim, a.field)


def q_sub(a: PartialResult, b: PartialResult) -> PartialResult:
    if isinstance(a, Undefined):
        return a
    if isinstance(b, Undefined):
        return b
    f = _same_field(a, b)
    if a.dim != b.dim:
        return Undefined(a.dim, b.dim, "-")
    return Quantity(f.sub(a.value, b.value), a.dim, f)


def q_mul(a: PartialResult, b: PartialResult) -> PartialResult:
    if isinstance(a, Undefined):
        return a
    if isinstance(b, Undefined):
        return b
    f = _same_field(a, b)
    return Quantity(f.mul(a.value, b.value), a.dim * b.dim, f)


def q_inv(a: PartialResult) -> PartialResult:
    """Multiplicative inverse; raises :class:`ZeroInverseError` on a zero."""
    if isinstance(a, Undefined):
        return a
    if a.is_zero():
        raise ZeroInverseError(f"zero quantity {a} has no inverse")
    return Quantity(a.field.inv(a.value), a.dim.inv(), a.field)


def q_div(a: PartialResult, b: PartialResult) -> PartialResult:
    if isinstance(a, Undefined):
        return a
    if isinstance(b, Undefined):
        return b
    return q_mul(a, q_inv(b))


def q_pow(a: PartialResult, e) -> PartialResult:
    """Rational power ``a**(p/q)``: the canonical q-th root raised to p.

    A zero base is allowed only for positive exponents.
    """
    if isinstance(a, Undefined):
        return a
    if isinstance(e, float):
        raise TypeError("exponents must be exact rationals")
    e = Fraction(e)
    f = a.field
    if a.is_zero():
        if e <= 0:
            raise ZeroInverseError(f"zero quantity {a} raised to non-positive power {e}")
        return Quantity(f.zero, a.dim**e, f)
    value = a.value
    if e.denominator != 1:
        root = f.nth_root(value, e.denominator)
        if root is None:
            raise NoRootError(f"{f.format(value)} has no {_ordinal(e.denominator)} root in {type(f).__name__}")
        value = root
    return Quantity(f.pow(value, e.numerator), a.dim**e, f)


def _ordinal(n: int) -> str:
    if n == 2:
        return "square"
    if n == 3:
        return "cube"
    return f"{n}th"


def summable(a: Quantity, b: Quantity) -> bool:
    return a.dim == b.dim


def zero_of(a: Quantity) -> Quantity:
    return a.zero()


def is_zero(a: Quantity) -> bool:
    return a.is_zero()


def is_dimensionless(a: Quantity) -> bool:
    return a.dim.is_dimensionless()


def strong_eq(a: PartialResult, b: PartialResult) -> bool:
    """Both undefined, or both defined and equal."""
    if isinstance(a, Undefined) or isinstance(b, Undefined):
        return isinstance(a, Undefined) and isinstance(b, Undefined)
    return a == b


class CanonicalPaf:
    """The canonical model over one scalar field and a set of base symbols.

    All quantities built through an instance share its field, so the
    arithmetic never mixes carriers.  ``symbols`` restricts the dimensions
    that may be used; ``None`` allows any.
    """

    def __init__(self, field: ScalarField | None = None, symbols: Iterable[str] | None = None):
        self.field = field if field is not None else ExactRational()
        self.symbols = None if symbols is None else tuple(sorted(symbols))

    def __repr__(self):
        return f"CanonicalPaf({self.field!r}, symbols={self.symbols!r})"

    def dimension(self, dim) -> Dimension:
        d = _as_dimension(dim)
        if self.symbols is not None:
            unknown = [s for s in d.symbols if s not in self.symbols]
            if unknown:
                raise ValueError(f"undeclared base symbols: {', '.join(unknown)}")
        return d

    def quantity(self, value, dim: Dimension | str | Mapping = DIMENSIONLESS) -> Quantity:
        return Quantity(value, self.dimension(dim), self.field)

    __call__ = quantity

    @property
    def one(self) -> Quantity:
        return Quantity(self.field.one, DIMENSIONLESS, self.field)

    def zero(self, dim=DIMENSIONLESS) -> Quantity:
        return Quantity(self.field.zero, self.dimension(dim), self.field)

    def random_dimension(self, rng: random.Random, exponents=(-2, -1, 0, 0, 1, 2, Fraction(1, 2))) -> Dimension:
        if not self.symbols:
            return DIMENSIONLESS
        return Dimension((s, rng.choice(exponents)) for s in self.symbols)

    def random_quantity(self, rng: random.Random, dims: list[Dimension] | None = None, p_zero: float = 0.1) -> Quantity:
        """Random quantity; ``dims`` gives a pool to draw from so that collisions are frequent."""
        dim = rng.choice(dims) if dims else self.random_dimension(rng)
        value = self.field.zero if rng.random() < p_zero else self.field.random(rng)
        return Quantity(value, dim, self.field)
