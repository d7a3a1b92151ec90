"""Splitting a fieldoid into its mutually multipliable parts."""

from __future__ import annotations

from ..errors import NotAFieldoidError
from .axioms import Structure, check_fieldoid_axioms
from .model import FiniteModel

__all__ = ["decompose_fieldoid", "multipliability_classes"]


def multipliability_classes(m: FiniteModel) -> list[list[int]]:
    s = Structure(m)
    return s.classes(s.multipliable)


def decompose_fieldoid(m: FiniteModel) -> list[FiniteModel]:
    """Components of a fieldoid, one PAF per multipliability class.

    Components are ordered by their least element index and keep the
    original labels.  Raises NotAFieldoidError if ``m`` fails the fieldoid
    axioms.
    """
    report = check_fieldoid_axioms(m)
    if not report.passed:
        raise NotAFieldoidError(f"model is not a fieldoid ({len(report)} violations, first: {report.violations[0].format()})")
    blocks = multipliability_classes(m)
    if len(blocks) == 1:
        return [m]
    base = m.name or "component"
    return [m.submodel(block, mode="paf", name=f"{base}[{k}]") for k, block in enumerate(blocks)]
