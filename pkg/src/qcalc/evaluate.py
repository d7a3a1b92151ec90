"""Evaluate parsed expressions against a unit registry and render results."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoRootError, ParseError, UnknownUnitError, ZeroInverseError
from .expr import Binary, Expr, Neg, Number, Paren, Power, UnitRef, parse
from .quantity import PartialResult, Quantity, Undefined, q_add, q_div, q_mul, q_neg, q_pow, q_sub
from .units import UnitRegistry, decompose

__all__ = ["EvalOutcome", "evaluate", "render", "run"]

_BINARY = {"+": q_add, "-": q_sub, "*": q_mul, "/": q_div}

# error kinds reported by run()
ERROR_KINDS = {
    ZeroInverseError: "ZeroInverse",
    NoRootError: "NoRoot",
    UnknownUnitError: "UnknownUnit",
}


def evaluate(expr: Expr, registry: UnitRegistry) -> PartialResult:
    """Evaluate bottom-up over the registry's scalar field.

    Returns a :class:`Quantity` or :class:`Undefined`.  Inverting a zero,
    a missing root and an unknown unit name raise.
    """
    field = registry.field
    if isinstance(expr, Number):
        return Quantity(field.parse(expr.text), field=field)
    if isinstance(expr, UnitRef):
        unit = registry.get(expr.name)
        if unit is None:
            raise UnknownUnitError(expr.name)
        return unit
    if isinstance(expr, Paren):
        return evaluate(expr.inner, registry)
    if isinstance(expr, Neg):
        return q_neg(evaluate(expr.operand, registry))
    if isinstance(expr, Power):
        return q_pow(evaluate(expr.base, registry), expr.exponent)
    if isinstance(expr, Binary):
        left = evaluate(expr.left, registry)
        right = evaluate(expr.right, registry)
        return _BINARY[expr.op](left, right)
    raise TypeError(f"not an expression node: {expr!r}")


def render(q: PartialResult, registry: UnitRegistry) -> str:
    """Value in the registry's base-unit system followed by the dimension."""
    if isinstance(q, Undefined):
        return str(q)
    value, _ = decompose(q, registry.system)
    text = q.field.format(value.value)
    if q.dim.is_dimensionless():
        return text
    return f"{text} {q.dim}"


@dataclass(frozen=True)
class EvalOutcome:
    """Result of evaluating one line of input.

    ``status`` is ``"defined"``, ``"undefined"``, ``"error"`` (an
    evaluation error) or ``"syntax"``.
    """

    status: str
    text: str
    quantity: Quantity | None = None
    kind: str = ""

    @property
    def exit_code(self) -> int:
        return {"defined": 0, "undefined": 1, "error": 1, "syntax": 2}[self.status]


def run(source: str, registry: UnitRegistry) -> EvalOutcome:
    """Parse, evaluate and render ``source``; never raises for bad input."""
    try:
        expr = parse(source)
    except ParseError as exc:
        return EvalOutcome("syntax", f"syntax error at {exc}", kind="Syntax")
    try:
        result = evaluate(expr, registry)
    except tuple(ERROR_KINDS) as exc:
        kind = next(k for cls, k in ERROR_KINDS.items() if isinstance(exc, cls))
        return EvalOutcome("error", f"error: {kind}: {exc}", kind=kind)
    if isinstance(result, Undefined):
        return EvalOutcome("undefined", str(result))
    return EvalOutcome("defined", render(result, registry), result)
