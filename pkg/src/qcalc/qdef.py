"""Reader for ``.qdef`` unit-definition files.

Each non-blank line is either ``base <ident>`` or
``unit <ident> = <expression>``; ``#`` starts a comment.  A unit's
expression may use number literals and units defined on earlier lines.
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import DefinitionError, NoRootError, ParseError, UnknownUnitError, ZeroInverseError
from .evaluate import evaluate
from .expr import parse
from .quantity import Undefined
from .scalars import ExactRational, ScalarField
from .units import UnitRegistry

__all__ = ["load_definitions", "parse_definitions"]

_IDENT = r"[A-Za-z_][A-Za-z0-9_]*"
_BASE_RE = re.compile(rf"base\s+({_IDENT})\s*$")
_UNIT_RE = re.compile(rf"unit\s+({_IDENT})\s*=\s*(.*)$")


def parse_definitions(text: str, field: ScalarField | None = None, path=None) -> UnitRegistry:
    registry = UnitRegistry(field if field is not None else ExactRational())
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        def fail(message):
            raise DefinitionError(message, lineno, path)

        if m := _BASE_RE.match(line):
            name = m.group(1)
            if name in registry:
                fail(f"{name!r} is already defined")
            registry.declare_base(name)
            continue
        m = _UNIT_RE.match(line)
        if m is None:
            fail(f"expected 'base <name>' or 'unit <name> = <expression>', got {line!r}")
        name, source = m.groups()
        if name in registry:
            fail(f"{name!r} is already defined")
        try:
            value = evaluate(parse(source), registry)
        except ParseError as exc:
            fail(f"syntax error in definition of {name!r} at column {exc.column + m.start(2)}: {exc.message}")
        except UnknownUnitError as exc:
            fail(f"definition of {name!r} uses {exc}")
        except (ZeroInverseError, NoRootError) as exc:
            fail(f"definition of {name!r} failed: {exc}")
        if isinstance(value, Undefined):
            fail(f"definition of {name!r} is {value}")
        if value.is_zero():
            fail(f"unit {name!r} must be nonzero")
        registry.define(name, value)
    return registry


def load_definitions(path, field: ScalarField | None = None) -> UnitRegistry:
    path = Path(path)
    return parse_definitions(path.read_text(encoding="utf-8"), field, path=str(path))
