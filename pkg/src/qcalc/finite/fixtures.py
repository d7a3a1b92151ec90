"""The model files shipped in ``qcalc/corpus``.

``python -m qcalc.finite.fixtures DIR`` rewrites them from the
constructions below.
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

from .construct import canonical_model, disjoint_union, partial_field_model, z4_extension_model
from .model import UNDEF, FiniteModel

__all__ = ["missing_inverse_model", "integers_mod4_model", "non_squareable_model", "fixture_models", "write_fixtures"]


def _edited(m: FiniteModel, table: str, cells, value: int, mode: str | None = None, name: str = "") -> FiniteModel:
    add, mul = np.array(m.add), np.array(m.mul)
    t = add if table == "add" else mul
    for a, b in cells:
        t[m.index(a), m.index(b)] = value
    return FiniteModel(m.labels, add, mul, mode or m.mode, name)


def missing_inverse_model() -> FiniteModel:
    """GF(3) x Z/2 with the product (2,1)*(2,1) deleted, so (2,1) has no inverse."""
    return _edited(canonical_model(3, [2]), "mul", [("(2,1)", "(2,1)")], UNDEF, name="missing_inverse")


def integers_mod4_model() -> FiniteModel:
    """Integers modulo 4: every axiom holds except that 2 has no inverse."""
    n = 4
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return FiniteModel(tuple(str(a) for a in range(n)), add, mul, name="z4_ring")


def non_squareable_model() -> FiniteModel:
    """Fieldoid union of GF(2) and GF(3) in which the 1 of GF(3) cannot be squared."""
    union = disjoint_union([canonical_model(2), canonical_model(3)], ["a", "b"])
    return _edited(union, "mul", [("b1", "b1")], UNDEF, name="non_squareable")


def fixture_models() -> dict[str, tuple[FiniteModel, str]]:
    """File stem -> (model, comment)."""
    union = disjoint_union([canonical_model(2), canonical_model(3, [2])], ["a", "b"])
    return {
        "partial_field": (partial_field_model(), "{-1, 0, 1} with 1 + 1 and -1 + -1 undefined.\nSums are not associative: (1 + 1) + -1 = u but 1 + (1 + -1) = 1."),
        "missing_inverse": (missing_inverse_model(), "GF(3) x Z/2 with the inverse entry (2,1) * (2,1) = (1,0) deleted."),
        "z4_ring": (integers_mod4_model(), "The ring of integers modulo 4, with total addition.\n2 has no multiplicative inverse and 2 * 2 = 0."),
        "gf2": (canonical_model(2), "GF(2) with trivial dimension group."),
        "gf3_z2": (canonical_model(3, [2]), "Canonical model GF(3) x Z/2; elements are (value, dimension)."),
        "gf5_z2z2": (canonical_model(5, [2, 2]), "Canonical model GF(5) x (Z/2 x Z/2)."),
        "z4_extension": (z4_extension_model(), "Nonzero group Z/4 over GF(3)* = {1, j2}; j is dimensionful with j^2 = j2 = -1.\nNo coherent unit system exists."),
        "fieldoid_union": (union, "Disjoint union of GF(2) and GF(3) x Z/2."),
        "non_squareable": (non_squareable_model(), "Fieldoid candidate in which b1 * b1 is undefined."),
    }


def write_fixtures(directory) -> list[Path]:
    directory = Path(directory)
    written = []
    for stem, (model, comment) in fixture_models().items():
        path = directory / f"{stem}.model"
        named = FiniteModel(model.labels, model.add, model.mul, model.mode, stem)
        named.save(path, comment)
        written.append(path)
    return written


if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "corpus"
    for path in write_fixtures(target):
        print(path)
