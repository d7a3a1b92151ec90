"""Unit systems, value/unit decomposition and the named-unit registry."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .dimensions import DIMENSIONLESS, Dimension
from .errors import MissingUnitError, NotDimensionlessError
from .quantity import Quantity, q_inv, q_mul, q_pow
from .scalars import ExactRational, ScalarField

__all__ = [
    "UnitSystem",
    "UnitRegistry",
    "Decomposition",
    "CoherenceResult",
    "coherent_from_base_units",
    "decompose",
    "recompose",
    "is_coherent",
]


class UnitSystem:
    """One nonzero unit per dimension.

    ``units`` is an explicit table.  When ``base`` maps base symbols to
    base units, every other dimension is generated on demand as the product
    of powers of base units (explicit entries still take precedence).
    Generation is memoised; the memo is a pure cache.
    """

    def __init__(self, units: Mapping[Dimension, Quantity] | None = None, base: Mapping[str, Quantity] | None = None):
        self._units: dict[Dimension, Quantity] = {}
        for dim, unit in (units or {}).items():
            dim = dim if isinstance(dim, Dimension) else Dimension.parse(dim)
            _check_unit(unit, dim)
            self._units[dim] = unit
        self._base: dict[str, Quantity] = {}
        for sym, unit in (base or {}).items():
            _check_unit(unit, Dimension.base(sym))
            self._base[sym] = unit
        self._fields = {u.field for u in itertools.chain(self._units.values(), self._base.values())}
        if len(self._fields) > 1:
            raise ValueError("all units of a system must share one scalar field")
        self._cache: dict[Dimension, Quantity] = {}

    @property
    def base(self) -> dict[str, Quantity]:
        return dict(self._base)

    @property
    def explicit(self) -> dict[Dimension, Quantity]:
        return dict(self._units)

    @property
    def is_generated(self) -> bool:
        return bool(self._base) and not self._units

    def has_unit(self, dim: Dimension) -> bool:
        try:
            self.unit(dim)
        except MissingUnitError:
            return False
        return True

    def unit(self, dim: Dimension) -> Quantity:
        """The system's unit of dimension ``dim``.

        Raises MissingUnitError if it is neither tabulated nor generable,
        and NoRootError if a fractional power of a base unit has no root.
        """
        if dim in self._units:
            return self._units[dim]
        if dim in self._cache:
            return self._cache[dim]
        if not self._base:
            raise MissingUnitError(f"no unit for dimension {dim}")
        missing = [s for s in dim.symbols if s not in self._base]
        if missing:
            raise MissingUnitError(f"no base unit for {', '.join(missing)} (dimension {dim})")
        field = next(iter(self._fields))
        unit = Quantity(field.one, DIMENSIONLESS, field)
        for sym, exp in dim.items:
            unit = q_mul(unit, q_pow(self._base[sym], exp))
        self._cache[dim] = unit
        return unit

    __getitem__ = unit


def _check_unit(unit: Quantity, dim: Dimension) -> None:
    if not isinstance(unit, Quantity):
        raise TypeError(f"unit must be a Quantity, got {unit!r}")
    if unit.dim != dim:
        raise ValueError(f"unit {unit} does not have dimension {dim}")
    if unit.is_zero():
        raise ValueError(f"unit for {dim} must be nonzero")


def coherent_from_base_units(base: Mapping[str, Quantity]) -> UnitSystem:
    """Coherent system generated by assigning a unit to each base dimension."""
    if not base:
        raise ValueError("at least one base unit is required")
    return UnitSystem(base=base)


@dataclass(frozen=True)
class Decomposition:
    value: Quantity
    unit: Quantity

    def __iter__(self):
        return iter((self.value, self.unit))


def decompose(q: Quantity, system: UnitSystem) -> Decomposition:
    """Split ``q`` into a dimensionless value and the system's unit: q = value * unit."""
    unit = system.unit(q.dim)
    value = q_mul(q, q_inv(unit))
    return Decomposition(value, unit)


def recompose(value: Quantity, unit: Quantity) -> Quantity:
    if not value.is_dimensionless():
        raise NotDimensionlessError(f"numerical value {value} is not dimensionless")
    if unit.is_zero():
        raise ValueError("a unit must be nonzero")
    return q_mul(value, unit)


@dataclass(frozen=True)
class CoherenceResult:
    coherent: bool
    witness: tuple[Dimension, ...] | None = None
    reason: str = ""

    def __bool__(self):
        return self.coherent


def is_coherent(system: UnitSystem, probe: Iterable[Dimension]) -> CoherenceResult:
    """Check the group law of ``system`` on the probed dimensions.

    Products are checked for every unordered pair (including a dimension
    with itself), then inverses, then the dimensionless unit.  The first
    failure is returned as the witness.
    """
    probe = list(dict.fromkeys(probe))
    for i, d1 in enumerate(probe):
        for d2 in probe[i:]:
            if q_mul(system.unit(d1), system.unit(d2)) != system.unit(d1 * d2):
                return CoherenceResult(False, (d1, d2), f"unit({d1})*unit({d2}) != unit({d1 * d2})")
    for d in probe:
        if q_inv(system.unit(d)) != system.unit(d.inv()):
            return CoherenceResult(False, (d,), f"unit({d})^-1 != unit({d.inv()})")
    one = system.unit(DIMENSIONLESS)
    if one.value != one.field.one:
        return CoherenceResult(False, (DIMENSIONLESS,), "dimensionless unit is not 1")
    return CoherenceResult(True)


class UnitRegistry:
    """Named units over one scalar field, plus the coherent base-unit system.

    Each ``declare_base(sym)`` creates a base dimension ``sym`` whose unit,
    also named ``sym``, is ``(1, {sym: 1})``.
    """

    def __init__(self, field: ScalarField | None = None):
        self.field = field if field is not None else ExactRational()
        self._names: dict[str, Quantity] = {}
        self._bases: list[str] = []
        self._system: UnitSystem | None = None

    @property
    def bases(self) -> tuple[str, ...]:
        return tuple(self._bases)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self._names)

    def __contains__(self, name):
        return name in self._names

    def __getitem__(self, name) -> Quantity:
        return self._names[name]

    def get(self, name, default=None):
        return self._names.get(name, default)

    def declare_base(self, symbol: str) -> Quantity:
        if symbol in self._names:
            raise ValueError(f"{symbol!r} is already defined")
        unit = Quantity(self.field.one, Dimension.base(symbol), self.field)
        self._names[symbol] = unit
        self._bases.append(symbol)
        self._system = None
        return unit

    def define(self, name: str, quantity: Quantity) -> None:
        if name in self._names:
            raise ValueError(f"{name!r} is already defined")
        if quantity.field != self.field:
            raise ValueError(f"unit {name!r} is over a different scalar field")
        if quantity.is_zero():
            raise ValueError(f"unit {name!r} must be nonzero")
        unknown = [s for s in quantity.dim.symbols if s not in self._bases]
        if unknown:
            raise ValueError(f"unit {name!r} uses undeclared base dimensions {unknown}")
        self._names[name] = quantity

    @property
    def system(self) -> UnitSystem:
        """Coherent system generated by the base units."""
        if self._system is None:
            if self._bases:
                self._system = coherent_from_base_units({s: self._names[s] for s in self._bases})
            else:
                self._system = UnitSystem({DIMENSIONLESS: Quantity(self.field.one, DIMENSIONLESS, self.field)})
        return self._system
