"""Coherent unit systems on finite PAFs, and the two sufficient conditions
for their existence (no dimensionful roots of dimensionless elements; no
element distinguishable from others of its dimension by having a root)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import NotAPafError
from ..report import CheckReport
from .axioms import Structure, _Collector, check_paf_axioms
from .model import FiniteModel

__all__ = [
    "CoherentSearch",
    "search_coherent_systems",
    "find_coherent_system",
    "is_coherent_selection",
    "summability_classes",
    "group_exponent",
    "check_no_dimensionful_roots",
    "check_root_indistinguishability",
]


def _require_paf(m: FiniteModel) -> None:
    report = check_paf_axioms(m)
    if not report.passed:
        raise NotAPafError(f"model is not a partially additive field ({len(report)} violations, first: {report.violations[0].format()})")


def summability_classes(m: FiniteModel) -> list[list[int]]:
    """Dimensions of ``m``, as sorted index lists, ordered by least member."""
    s = Structure(m)
    return s.classes(s.summable)


def is_coherent_selection(m: FiniteModel, selection) -> bool:
    """Whether the element indices in ``selection`` contain 1 and are closed
    under multiplication and inverses."""
    s = Structure(m)
    chosen = set(int(x) for x in selection)
    if s.one not in chosen:
        return False
    for a in chosen:
        if int(s.M[a, s.one]) != a:
            return False
        inv = np.flatnonzero(s.M[a, : s.n] == s.one)
        if not len(inv) or int(inv[0]) not in chosen:
            return False
        if any(int(s.M[a, b]) not in chosen for b in chosen):
            return False
    return True


@dataclass(frozen=True)
class CoherentSearch:
    system: tuple[int, ...] | None
    labels: tuple[str, ...] | None
    candidates_examined: int
    total_candidates: int

    @property
    def found(self) -> bool:
        return self.system is not None


def search_coherent_systems(m: FiniteModel) -> CoherentSearch:
    """Lexicographically first coherent unit system, by backtracking.

    Candidates are selections of one nonzero element per summability class,
    classes taken in order of least member and elements in index order.
    A partial selection is abandoned as soon as the product or inverse of
    chosen units lands in an already-decided class on a different element;
    every complete selection below it is counted as examined, so exhausting
    the search examines exactly the product of the class sizes.
    """
    _require_paf(m)
    s = Structure(m)
    classes = s.classes(s.summable)
    options = [[a for a in block if not s.is_zero[a]] for block in classes]
    klass = np.empty(s.n, dtype=np.int64)
    for k, block in enumerate(classes):
        klass[block] = k
    M, one = s.M, s.one
    inverse = {a: int(np.flatnonzero(M[a, : s.n] == one)[0]) for a in s.nonzero}
    total = math.prod(len(o) for o in options)
    # suffix[k] = number of complete selections below a choice at depth k
    suffix = [1] * (len(options) + 1)
    for k in range(len(options) - 1, -1, -1):
        suffix[k] = suffix[k + 1] * len(options[k])

    chosen: list[int] = []
    examined = 0

    def consistent(x: int) -> bool:
        depth = len(chosen)
        assigned = chosen + [x]
        if klass[one] <= depth and assigned[klass[one]] != one:
            return False
        for y in assigned:
            for r in (int(M[x, y]), inverse[y]):
                c = klass[r]
                if c <= depth and assigned[c] != r:
                    return False
        # products of earlier units landing in this class must be x
        for i, y in enumerate(chosen):
            for z in chosen[i:]:
                r = int(M[y, z])
                if klass[r] == depth and r != x:
                    return False
            if klass[inverse[y]] == depth and inverse[y] != x:
                return False
        return True

    def dfs(depth: int):
        nonlocal examined
        if depth == len(options):
            examined += 1
            return tuple(chosen)
        for x in options[depth]:
            if not consistent(x):
                examined += suffix[depth + 1]
                continue
            chosen.append(x)
            found = dfs(depth + 1)
            if found is not None:
                return found
            chosen.pop()
        return None

    result = dfs(0)
    labels = None if result is None else tuple(m.labels[i] for i in result)
    return CoherentSearch(result, labels, examined, total)


def find_coherent_system(m: FiniteModel) -> tuple[str, ...] | None:
    """Labels of the lexicographically first coherent unit system, or None."""
    return search_coherent_systems(m).labels


def group_exponent(m: FiniteModel) -> int:
    """Exponent (lcm of element orders) of the group of nonzero elements."""
    s = Structure(m)
    if s.one is None:
        raise NotAPafError("model has no multiplicative identity")
    exp = 1
    for a in s.nonzero:
        x, k = a, 1
        while x != s.one:
            x = int(s.M[x, a])
            k += 1
            if x == s.n or k > s.n:
                raise NotAPafError(f"{s.lab(a)} has no finite multiplicative order")
        exp = math.lcm(exp, k)
    return exp


def _condition_setup(m: FiniteModel, max_n, require_paf):
    if require_paf:
        _require_paf(m)
    s = Structure(m)
    if s.one is None:
        raise NotAPafError("model has no multiplicative identity")
    if max_n is None:
        if not require_paf:
            raise ValueError("max_n is required when the model is not a PAF")
        max_n = group_exponent(m)
    return s, int(max_n)


def _power(s: Structure, a: int, k: int) -> int:
    x = a
    for _ in range(k - 1):
        x = int(s.M[x, a])
    return x


def check_no_dimensionful_roots(m: FiniteModel, max_n: int | None = None, require_paf: bool = True) -> CheckReport:
    """Report each dimensionful ``a`` with some power ``a**n`` (n <= max_n) dimensionless.

    ``max_n`` defaults to the exponent of the nonzero multiplicative group,
    beyond which powers repeat.  Powers that fall outside a partial window
    (UNDEF) count as not dimensionless.
    """
    s, max_n = _condition_setup(m, max_n, require_paf)
    out = _Collector(["no-dimensionful-roots"])
    F1 = s.dimensionless
    for a in range(s.n):
        if F1[a]:
            continue
        x = a
        for k in range(1, max_n + 1):
            if k > 1:
                x = int(s.M[x, a])
            if x == s.n:
                break
            if F1[x]:
                out.add("no-dimensionful-roots", (a, k), (s.lab(a), s.lab(x)),
                        f"{s.lab(a)}^{k} = {s.lab(x)} is dimensionless")
                break
    return out.report()


def check_root_indistinguishability(
    m: FiniteModel,
    max_n: int | None = None,
    require_paf: bool = True,
    include_dimensionless: bool = False,
) -> CheckReport:
    """For each n <= max_n and each dimension of dimensionful elements, either
    every nonzero member has an n-th root or none does.

    Set ``include_dimensionless`` to also examine the dimensionless class.
    """
    s, max_n = _condition_setup(m, max_n, require_paf)
    out = _Collector(["root-indistinguishability"])
    classes = s.classes(s.summable)
    for ci, block in enumerate(classes):
        if s.one in block and not include_dimensionless:
            continue
        members = [a for a in block if not s.is_zero[a]]
        for k in range(1, max_n + 1):
            root_of = {}
            for c in range(s.n):
                r = _power(s, c, k)
                if r != s.n and r not in root_of:
                    root_of[r] = c
            have = [a for a in members if a in root_of]
            lack = [a for a in members if a not in root_of]
            if have and lack:
                b, b2 = have[0], lack[0]
                out.add("root-indistinguishability", (ci, k), (s.lab(b), s.lab(b2)),
                        f"n={k}: {s.lab(b)} = {s.lab(root_of[b])}^{k} has an n-th root but {s.lab(b2)} has none")
    return out.report()
