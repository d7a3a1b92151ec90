"""Explicit finite partial algebras given by addition and multiplication tables."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np
import yaml

from ..errors import MalformedModelError, ModelTooLargeError

__all__ = ["FiniteModel", "UNDEF", "UNDEF_TEXT", "MAX_ELEMENTS", "MODES", "load_model"]

UNDEF = -1
UNDEF_TEXT = "u"
MAX_ELEMENTS = 64
MODES = ("paf", "fieldoid", "unconstrained")


def _as_table(rows, n: int, name: str) -> np.ndarray:
    try:
        table = np.array(rows, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise MalformedModelError(f"{name} table is not a rectangular integer array") from exc
    if table.shape != (n, n):
        raise MalformedModelError(f"{name} table has shape {table.shape}, expected ({n}, {n})")
    if n and (table.min() < UNDEF or table.max() >= n):
        raise MalformedModelError(f"{name} table has entries outside 0..{n - 1} and UNDEF")
    table = table.copy()
    table.flags.writeable = False
    return table


@dataclass(frozen=True, eq=False)
class FiniteModel:
    """Finite set ``Q`` with partial ``+`` and ``*`` tables.

    Table entries are element indices, or :data:`UNDEF` for the undefined
    element.  No constants are stored: zeros and identities are discovered
    by the checkers.  ``mode`` records what the model claims to be.
    """

    labels: tuple[str, ...]
    add: np.ndarray
    mul: np.ndarray
    mode: str = "paf"
    name: str = ""

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        if len(set(labels)) != len(labels):
            raise MalformedModelError("element labels must be distinct")
        if UNDEF_TEXT in labels:
            raise MalformedModelError(f"{UNDEF_TEXT!r} is reserved for the undefined element")
        if self.mode not in MODES:
            raise MalformedModelError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        n = len(labels)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "add", _as_table(self.add, n, "add"))
        object.__setattr__(self, "mul", _as_table(self.mul, n, "mul"))

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        if not isinstance(other, FiniteModel):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.mode == other.mode
            and np.array_equal(self.add, other.add)
            and np.array_equal(self.mul, other.mul)
        )

    def __repr__(self):
        return f"FiniteModel({self.name or 'unnamed'!r}, n={self.n}, mode={self.mode!r})"

    def index(self, label: str) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise KeyError(label) from None

    def label(self, i: int) -> str:
        return UNDEF_TEXT if i == UNDEF else self.labels[i]

    def sum(self, a: int, b: int) -> int:
        if a == UNDEF or b == UNDEF:
            return UNDEF
        return int(self.add[a, b])

    def prod(self, a: int, b: int) -> int:
        if a == UNDEF or b == UNDEF:
            return UNDEF
        return int(self.mul[a, b])

    def power(self, a: int, k: int) -> int:
        """``a**k`` for ``k >= 1`` by repeated multiplication."""
        result = a
        for _ in range(k - 1):
            result = self.prod(result, a)
        return result

    def ensure_checkable(self) -> None:
        if self.n > MAX_ELEMENTS:
            raise ModelTooLargeError(f"model has {self.n} elements; exhaustive checks are capped at {MAX_ELEMENTS}")

    def extended(self, table: str) -> np.ndarray:
        """Table with the undefined element appended as index ``n`` (absorbing)."""
        n = self.n
        t = getattr(self, table)
        ext = np.full((n + 1, n + 1), n, dtype=np.int64)
        ext[:n, :n] = np.where(t == UNDEF, n, t)
        return ext

    def submodel(self, indices: Sequence[int], mode: str | None = None, name: str = "") -> FiniteModel:
        """Restrict to ``indices``; products leaving the subset become UNDEF."""
        indices = list(indices)
        pos = {old: new for new, old in enumerate(indices)}

        def restrict(t):
            return [[pos.get(int(t[a, b]), UNDEF) for b in indices] for a in indices]

        return FiniteModel(
            tuple(self.labels[i] for i in indices),
            restrict(self.add),
            restrict(self.mul),
            mode or self.mode,
            name,
        )

    def relabel(self, labels: Iterable[str]) -> FiniteModel:
        return FiniteModel(tuple(labels), self.add, self.mul, self.mode, self.name)

    def permuted(self, order: Sequence[int]) -> FiniteModel:
        """Same structure with elements listed in ``order``."""
        return self.submodel(order, name=self.name)

    # serialization

    def to_dict(self) -> dict:
        def rows(t):
            return [[self.label(int(x)) for x in row] for row in t]

        return {"mode": self.mode, "elements": list(self.labels), "add": rows(self.add), "mul": rows(self.mul)}

    def to_text(self, comment: str = "") -> str:
        """YAML document with flow-style rows; labels are always quoted."""
        out = []
        for line in comment.splitlines():
            out.append(f"# {line}".rstrip())
        if self.name:
            out.append(f"name: {json.dumps(self.name)}")
        out.append(f"mode: {self.mode}")
        out.append("elements: [" + ", ".join(json.dumps(x) for x in self.labels) + "]")
        width = max([len(json.dumps(x)) for x in self.labels] + [3])
        for table in ("add", "mul"):
            out.append(f"{table}:")
            for row in getattr(self, table):
                cells = [json.dumps(self.label(int(x))).rjust(width) for x in row]
                out.append("  - [" + ", ".join(cells) + "]")
        return "\n".join(out) + "\n"

    @classmethod
    def from_dict(cls, data: dict, name: str = "") -> FiniteModel:
        if not isinstance(data, dict):
            raise MalformedModelError("model document must be a mapping")
        for key in ("elements", "add", "mul"):
            if key not in data:
                raise MalformedModelError(f"model document lacks {key!r}")
        labels = [str(x) for x in data["elements"]]
        index = {x: i for i, x in enumerate(labels)}

        def decode(rows, table):
            if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
                raise MalformedModelError(f"{table} must be a list of rows")
            out = []
            for r, row in enumerate(rows):
                decoded = []
                for x in row:
                    x = str(x)
                    if x == UNDEF_TEXT:
                        decoded.append(UNDEF)
                    elif x in index:
                        decoded.append(index[x])
                    else:
                        raise MalformedModelError(f"{table} row {r} has unknown entry {x!r}")
                out.append(decoded)
            if any(len(row) != len(labels) for row in out) or len(out) != len(labels):
                raise MalformedModelError(f"{table} table must be {len(labels)}x{len(labels)}")
            return out

        return cls(
            tuple(labels),
            decode(data["add"], "add"),
            decode(data["mul"], "mul"),
            str(data.get("mode", "paf")),
            str(data.get("name", name)),
        )

    @classmethod
    def from_text(cls, text: str, name: str = "") -> FiniteModel:
        try:
            data = yaml.safe_load(text)
        except yaml.YAMLError as exc:
            raise MalformedModelError(f"cannot parse model document: {exc}") from exc
        return cls.from_dict(data, name)

    def save(self, path, comment: str = "") -> None:
        Path(path).write_text(self.to_text(comment), encoding="utf-8")


def load_model(path) -> FiniteModel:
    path = Path(path)
    return FiniteModel.from_text(path.read_text(encoding="utf-8"), name=path.stem)
