"""Exhaustive axiom and lemma checks for finite models.

Every equation is read with strong equality: both sides undefined, or both
defined and equal.  The two absorption axioms for the undefined element hold
by construction of the table semantics (:meth:`FiniteModel.extended`), so
they are never reported.

Reports list *every* violating tuple, ordered by check, then by element
indices.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from ..report import CheckReport, Violation
from .model import UNDEF, FiniteModel

__all__ = [
    "Structure",
    "check_paf_axioms",
    "check_fieldoid_axioms",
    "check_paf_lemmas",
    "check_fieldoid_lemmas",
    "is_paf",
    "is_fieldoid",
    "PAF_AXIOMS",
    "FIELDOID_AXIOMS",
]

PAF_AXIOMS = (
    "mul-total",
    "add-commutative",
    "mul-commutative",
    "add-associative",
    "mul-associative",
    "distributive",
    "zero-unique",
    "one-exists",
    "add-inverse",
    "mul-inverse",
    "non-triviality",
)

FIELDOID_AXIOMS = (
    "nonempty",
    "add-commutative",
    "mul-commutative",
    "add-associative",
    "mul-associative",
    "distributive",
    "zero-unique",
    "unity-unique",
    "add-inverse",
    "mul-inverse",
    "non-triviality",
)


class Structure:
    """Constants discovered from the tables of a model.

    ``zero[a]`` is the unique additive identity of ``a`` or ``UNDEF`` when it
    is missing or not unique; ``zeros`` is every element acting as an
    additive identity for something.  ``one`` is the least global
    multiplicative identity (or ``None``); ``unity[a]`` the unique local one
    of a nonzero ``a``.
    """

    def __init__(self, model: FiniteModel):
        model.ensure_checkable()
        self.model = model
        n = self.n = model.n
        self.A = model.extended("add")
        self.M = model.extended("mul")
        idx = np.arange(n)
        # is_add_id[a, z]: a + z == a
        is_add_id = self.A[:n, :n] == idx[:, None]
        self.zero_candidates = [np.flatnonzero(row).tolist() for row in is_add_id]
        self.zero = np.array([c[0] if len(c) == 1 else UNDEF for c in self.zero_candidates], dtype=np.int64)
        zset = sorted({z for c in self.zero_candidates for z in c})
        self.is_zero = np.zeros(n, dtype=bool)
        self.is_zero[zset] = True
        self.zeros = zset
        self.nonzero = [a for a in range(n) if not self.is_zero[a]]
        is_mul_id = self.M[:n, :n] == idx[:, None]
        self.unity_candidates = [np.flatnonzero(row).tolist() for row in is_mul_id]
        globals_ = np.flatnonzero(is_mul_id.all(axis=0)) if n else []
        self.one = int(globals_[0]) if len(globals_) else None

    @property
    def labels(self):
        return self.model.labels

    def lab(self, i) -> str:
        i = int(i)
        return "u" if i in (UNDEF, self.n) else self.model.labels[i]

    @cached_property
    def summable(self) -> np.ndarray:
        n = self.n
        return self.A[:n, :n] != n

    @cached_property
    def multipliable(self) -> np.ndarray:
        n = self.n
        return self.M[:n, :n] != n

    @cached_property
    def unity(self) -> np.ndarray:
        """Local multiplicative identity; zeros take the unity of any nonzero element they are the zero of."""
        u = np.full(self.n, UNDEF, dtype=np.int64)
        for a in self.nonzero:
            if len(self.unity_candidates[a]) == 1:
                u[a] = self.unity_candidates[a][0]
        for a in self.nonzero:
            z = self.zero[a]
            if z != UNDEF and self.is_zero[z] and u[z] == UNDEF:
                u[z] = u[a]
        return u

    @cached_property
    def dimensionless(self) -> np.ndarray:
        if self.one is None:
            return np.zeros(self.n, dtype=bool)
        return self.summable[:, self.one].copy()

    def classes(self, relation: np.ndarray) -> list[list[int]]:
        """Blocks of an equivalence relation, ordered by least member."""
        seen = np.zeros(self.n, dtype=bool)
        blocks = []
        for a in range(self.n):
            if not seen[a]:
                block = [b for b in np.flatnonzero(relation[a]).tolist() if not seen[b]]
                if a not in block:
                    block = [a] + block
                seen[block] = True
                blocks.append(sorted(block))
        return blocks


class _Collector:
    def __init__(self, order):
        self.order = list(order)
        self.found: dict[str, list[tuple[tuple[int, ...], Violation]]] = {}
        self.skipped: list[str] = []

    def add(self, axiom, key, witness, explanation=""):
        if axiom not in self.order:
            self.order.append(axiom)
        self.found.setdefault(axiom, []).append((tuple(key), Violation(axiom, tuple(witness), explanation)))

    def report(self) -> CheckReport:
        rep = CheckReport(skipped=list(self.skipped))
        for axiom in self.order:
            items = sorted(self.found.get(axiom, []), key=lambda kv: kv[0])
            rep.violations.extend(v for _, v in items)
        return rep


def _commutative(s: Structure, T: np.ndarray, op: str, axiom: str, out: _Collector):
    n = s.n
    sub = T[:n, :n]
    for a, b in np.argwhere(sub != sub.T):
        if a < b:
            out.add(axiom, (a, b), (s.lab(a), s.lab(b)),
                    f"{s.lab(a)} {op} {s.lab(b)} = {s.lab(sub[a, b])} but {s.lab(b)} {op} {s.lab(a)} = {s.lab(sub[b, a])}")


def _associative(s: Structure, T: np.ndarray, op: str, axiom: str, out: _Collector):
    n = s.n
    idx = np.arange(n)
    ab = T[:n, :n]
    lhs = T[ab[:, :, None], idx[None, None, :]]
    rhs = T[idx[:, None, None], ab[None, :, :]]
    for a, b, c in np.argwhere(lhs != rhs):
        la, lb, lc = s.lab(a), s.lab(b), s.lab(c)
        out.add(axiom, (a, b, c), (la, lb, lc),
                f"({la} {op} {lb}) {op} {lc} = {s.lab(lhs[a, b, c])} but {la} {op} ({lb} {op} {lc}) = {s.lab(rhs[a, b, c])}")


def _distributive(s: Structure, out: _Collector):
    n = s.n
    A, M = s.A, s.M
    idx = np.arange(n)
    lhs = M[idx[:, None, None], A[None, :n, :n]]
    mab = M[:n, :n]
    rhs = A[mab[:, :, None], mab[:, None, :]]
    for a, b, c in np.argwhere(lhs != rhs):
        la, lb, lc = s.lab(a), s.lab(b), s.lab(c)
        out.add("distributive", (a, b, c), (la, lb, lc),
                f"{la} * ({lb} + {lc}) = {s.lab(lhs[a, b, c])} but {la} * {lb} + {la} * {lc} = {s.lab(rhs[a, b, c])}")


def _zero_unique(s: Structure, out: _Collector):
    for a in range(s.n):
        cands = s.zero_candidates[a]
        if len(cands) != 1:
            what = "no additive identity" if not cands else "several additive identities: " + ", ".join(s.lab(z) for z in cands)
            out.add("zero-unique", (a,), (s.lab(a),), what)


def _additive_inverse(s: Structure, out: _Collector):
    n = s.n
    for a in range(n):
        z = s.zero[a]
        if z == UNDEF:
            continue
        if not np.any(s.A[a, :n] == z):
            out.add("add-inverse", (a,), (s.lab(a),), f"no x with {s.lab(a)} + x = {s.lab(z)}")


def _non_triviality(s: Structure, out: _Collector):
    for z in s.zeros:
        if not any(s.zero[b] == z for b in s.nonzero):
            out.add("non-triviality", (z,), (s.lab(z),), f"{s.lab(z)} is not the zero of any nonzero element")


def _common_checks(s: Structure, out: _Collector):
    _commutative(s, s.A, "+", "add-commutative", out)
    _commutative(s, s.M, "*", "mul-commutative", out)
    _associative(s, s.A, "+", "add-associative", out)
    _associative(s, s.M, "*", "mul-associative", out)
    _distributive(s, out)
    _zero_unique(s, out)
    _additive_inverse(s, out)
    _non_triviality(s, out)


def check_paf_axioms(m: FiniteModel) -> CheckReport:
    """Check the partially-additive-field axioms by exhaustion.

    A partial multiplication table is reported under ``mul-total`` rather
    than rejected, so that the remaining axioms are still examined.
    """
    s = Structure(m)
    n = s.n
    out = _Collector(PAF_AXIOMS)
    undefined = m.mul == UNDEF
    for a, b in np.argwhere(undefined | undefined.T):
        if a <= b:
            x, y = (a, b) if undefined[a, b] else (b, a)
            out.add("mul-total", (a, b), (s.lab(a), s.lab(b)), f"{s.lab(x)} * {s.lab(y)} is undefined")
    _common_checks(s, out)
    if s.one is None:
        out.add("one-exists", (), (), "no element e with a * e = a for all a")
        out.skipped.append("mul-inverse")
    else:
        one = s.one
        for a in s.nonzero:
            if not np.any(s.M[a, :n] == one):
                out.add("mul-inverse", (a,), (s.lab(a),), f"no x with {s.lab(a)} * x = {s.lab(one)}")
    return out.report()


def check_fieldoid_axioms(m: FiniteModel) -> CheckReport:
    """Check the fieldoid axioms: as for a PAF, with multiplication partial
    and a unique local identity ``1_a`` for every nonzero ``a``."""
    s = Structure(m)
    n = s.n
    out = _Collector(FIELDOID_AXIOMS)
    if n == 0:
        out.add("nonempty", (), (), "the element set is empty")
        return out.report()
    _common_checks(s, out)
    for a in s.nonzero:
        cands = s.unity_candidates[a]
        if len(cands) != 1:
            what = "no multiplicative identity" if not cands else "several multiplicative identities: " + ", ".join(s.lab(e) for e in cands)
            out.add("unity-unique", (a,), (s.lab(a),), what)
            continue
        e = cands[0]
        if not np.any(s.M[a, :n] == e):
            out.add("mul-inverse", (a,), (s.lab(a),), f"no x with {s.lab(a)} * x = {s.lab(e)}")
    return out.report()


def is_paf(m: FiniteModel) -> bool:
    return check_paf_axioms(m).passed


def is_fieldoid(m: FiniteModel) -> bool:
    return check_fieldoid_axioms(m).passed


def _prefixed(op: str, label: str) -> str:
    """``-a`` or ``1/a``, parenthesising labels that start with a sign."""
    return f"{op}({label})" if label[:1] in "-+" else op + label


def _equivalence_checks(s: Structure, rel: np.ndarray, name: str, out: _Collector):
    adjective = {"summability": "summable", "multipliability": "multipliable"}.get(name, name)
    for a in np.flatnonzero(~np.diag(rel)):
        out.add(f"{name}-reflexive", (a,), (s.lab(a),), f"{s.lab(a)} is not {adjective} with itself")
    for a, b in np.argwhere(rel & ~rel.T):
        out.add(f"{name}-symmetric", (a, b), (s.lab(a), s.lab(b)), f"{s.lab(a)} ~ {s.lab(b)} but not {s.lab(b)} ~ {s.lab(a)}")
    # a~b, b~c but not a~c
    viol = rel[:, :, None] & rel[None, :, :] & ~rel[:, None, :]
    for a, b, c in np.argwhere(viol):
        out.add(f"{name}-transitive", (a, b, c), (s.lab(a), s.lab(b), s.lab(c)),
                f"{s.lab(a)} ~ {s.lab(b)} and {s.lab(b)} ~ {s.lab(c)} but not {s.lab(a)} ~ {s.lab(c)}")


def check_paf_lemmas(m: FiniteModel) -> CheckReport:
    """Exhaustively evaluate the consequences of the PAF axioms.

    On a model passing :func:`check_paf_axioms` this report is always
    empty; on other models it shows which derived facts break.
    """
    s = Structure(m)
    n = s.n
    out = _Collector([])
    A, M = s.A, s.M
    zero = s.zero
    summ = s.summable

    # identical zeros: a + b defined  <=>  0_a == 0_b
    for a in range(n):
        for b in range(a, n):
            if zero[a] == UNDEF or zero[b] == UNDEF:
                continue
            same = zero[a] == zero[b]
            if bool(summ[a, b]) != bool(same):
                why = (f"0_{s.lab(a)} = 0_{s.lab(b)} = {s.lab(zero[a])} but {s.lab(a)} + {s.lab(b)} is undefined"
                       if same else f"{s.lab(a)} + {s.lab(b)} is defined but the zeros differ")
                out.add("identical-zeros", (a, b), (s.lab(a), s.lab(b)), why)
    _equivalence_checks(s, summ, "summability", out)

    for a in range(n):
        z = zero[a]
        if z == UNDEF:
            continue
        negs = np.flatnonzero(A[a, :n] == z)
        if len(negs) > 1:
            out.add("unique-negation", (a,), (s.lab(a),), "several additive inverses: " + ", ".join(s.lab(x) for x in negs))
        # the only zero summable with a is 0_a
        for y in s.zeros:
            if summ[a, y] and y != z:
                out.add("unique-zero-in-class", (a, y), (s.lab(a), s.lab(y)), f"zero {s.lab(y)} is summable with {s.lab(a)} but 0_{s.lab(a)} = {s.lab(z)}")

    if s.one is None:
        out.skipped.extend(["unique-inverse", "dimensionless-closure", "one-nonzero", "dimensionless-field",
                            "dimensionless-times-dimensionful", "nonzero-group"])
    else:
        one = s.one
        F1 = s.dimensionless
        for a in s.nonzero:
            invs = np.flatnonzero(M[a, :n] == one)
            if len(invs) > 1:
                out.add("unique-inverse", (a,), (s.lab(a),), "several inverses: " + ", ".join(s.lab(x) for x in invs))

        def in_f1(x):
            return x != n and x != UNDEF and bool(F1[x])

        dl = np.flatnonzero(F1).tolist()
        for a in dl:
            for b in dl:
                if a <= b:
                    for op, T in (("+", A), ("*", M)):
                        r = T[a, b]
                        if not in_f1(r):
                            out.add("dimensionless-closure", (a, b), (s.lab(a), op, s.lab(b)),
                                    f"{s.lab(a)} {op} {s.lab(b)} = {s.lab(r)} is not dimensionless")
            unary = [("0_", zero[a]), ("-", _inverse_in(A[a, :n], zero[a]))]
            if not s.is_zero[a]:
                unary.append(("1/", _inverse_in(M[a, :n], one)))
            for op, r in unary:
                if r is not None and not in_f1(r):
                    out.add("dimensionless-closure", (a,), (_prefixed(op, s.lab(a)),), f"{_prefixed(op, s.lab(a))} = {s.lab(r)} is not dimensionless")

        if s.is_zero[one]:
            out.add("one-nonzero", (one,), (s.lab(one),), "the multiplicative identity is a zero")

        _dimensionless_field(s, dl, out)

        for a in dl:
            for b in np.flatnonzero(~F1):
                r = M[a, b]
                if in_f1(r):
                    out.add("dimensionless-times-dimensionful", (a, b), (s.lab(a), s.lab(b)),
                            f"{s.lab(a)} * {s.lab(b)} = {s.lab(r)} is dimensionless")

        nz = s.nonzero
        if s.is_zero[one]:
            out.add("nonzero-group", (one,), (s.lab(one),), "1 is a zero")
        for a in nz:
            for b in nz:
                if a <= b:
                    r = M[a, b]
                    if r == n or s.is_zero[r]:
                        out.add("nonzero-group", (a, b), (s.lab(a), s.lab(b)), f"{s.lab(a)} * {s.lab(b)} = {s.lab(r)} is not a nonzero element")
            inv = _inverse_in(M[a, :n], one)
            if inv is None or s.is_zero[inv]:
                out.add("nonzero-group", (a,), (_prefixed("1/", s.lab(a)),), f"{s.lab(a)} has no nonzero inverse")

    # a * b is a zero  <=>  a or b is a zero
    for a in range(n):
        for b in range(a, n):
            r = M[a, b]
            if r == n:
                continue
            if bool(s.is_zero[r]) != bool(s.is_zero[a] or s.is_zero[b]):
                out.add("zero-product", (a, b), (s.lab(a), s.lab(b)), f"{s.lab(a)} * {s.lab(b)} = {s.lab(r)} with both factors nonzero")
    return out.report()


def _inverse_in(row: np.ndarray, target) -> int | None:
    if target == UNDEF or target is None:
        return None
    hits = np.flatnonzero(row == target)
    return int(hits[0]) if len(hits) else None


def _dimensionless_field(s: Structure, dl: list[int], out: _Collector):
    """The dimensionless elements, with the restricted tables, form a field."""
    n = s.n
    A, M = s.A, s.M
    name = "dimensionless-field"
    if not dl:
        out.add(name, (), (), "no dimensionless elements")
        return
    sub = np.array(dl)
    inside = np.zeros(n + 1, dtype=bool)
    inside[sub] = True
    for T, op in ((A, "+"), (M, "*")):
        part = T[np.ix_(sub, sub)]
        for i, j in np.argwhere(~inside[part]):
            if i <= j:
                a, b = sub[i], sub[j]
                out.add(name, (a, b), (s.lab(a), op, s.lab(b)), f"{s.lab(a)} {op} {s.lab(b)} leaves the dimensionless set")
    zeros = [z for z in dl if all(A[a, z] == a for a in dl)]
    ones = [e for e in dl if all(M[a, e] == a for a in dl)]
    if not zeros:
        out.add(name, (), ("0",), "no global additive identity on dimensionless elements")
    if not ones:
        out.add(name, (), ("1",), "no global multiplicative identity on dimensionless elements")
    if zeros and ones:
        z, e = zeros[0], ones[0]
        if z == e:
            out.add(name, (z,), (s.lab(z),), "additive and multiplicative identities coincide")
        for a in dl:
            if not any(A[a, b] == z for b in dl):
                out.add(name, (a,), (_prefixed("-", s.lab(a)),), f"{s.lab(a)} has no additive inverse among dimensionless elements")
            if a != z and not any(M[a, b] == e for b in dl):
                out.add(name, (a,), (_prefixed("1/", s.lab(a)),), f"{s.lab(a)} has no inverse among dimensionless elements")


def check_fieldoid_lemmas(m: FiniteModel) -> CheckReport:
    """Exhaustively evaluate the consequences of the fieldoid axioms."""
    s = Structure(m)
    n = s.n
    out = _Collector([])
    A, M = s.A, s.M
    mult = s.multipliable
    summ = s.summable
    unity = s.unity

    for a in np.flatnonzero(~np.diag(mult)):
        out.add("squareable", (a,), (s.lab(a),), f"{s.lab(a)} * {s.lab(a)} is undefined")
    for a, b in np.argwhere(summ & ~mult):
        if a <= b:
            out.add("summable-implies-multipliable", (a, b), (s.lab(a), s.lab(b)),
                    f"{s.lab(a)} + {s.lab(b)} is defined but {s.lab(a)} * {s.lab(b)} is not")
    nz = s.nonzero
    for a in nz:
        for b in nz:
            r = M[a, b]
            if a <= b and r != n and s.is_zero[r]:
                out.add("no-zero-divisors", (a, b), (s.lab(a), s.lab(b)), f"{s.lab(a)} * {s.lab(b)} = {s.lab(r)} is a zero")
    for a in nz:
        z, e = s.zero[a], unity[a]
        if z != UNDEF and e != UNDEF and M[z, e] != z:
            out.add("zero-times-unity", (a,), (s.lab(a),), f"0_{s.lab(a)} * 1_{s.lab(a)} = {s.lab(M[z, e])}")
    for a in nz:
        for b in nz:
            if a < b and s.zero[a] != UNDEF and s.zero[a] == s.zero[b] and unity[a] != unity[b]:
                out.add("identical-unities", (a, b), (s.lab(a), s.lab(b)),
                        f"0_{s.lab(a)} = 0_{s.lab(b)} but 1_{s.lab(a)} = {s.lab(unity[a])}, 1_{s.lab(b)} = {s.lab(unity[b])}")
    for zz in s.zeros:
        us = {int(unity[b]) for b in nz if s.zero[b] == zz}
        if len(us) > 1:
            out.add("zero-unity-well-defined", (zz,), (s.lab(zz),), "unities " + ", ".join(s.lab(x) for x in sorted(us)))
    for a in range(n):
        for b in range(a, n):
            if unity[a] == UNDEF or unity[b] == UNDEF:
                continue
            if bool(mult[a, b]) != bool(unity[a] == unity[b]):
                out.add("multipliable-iff-same-unity", (a, b), (s.lab(a), s.lab(b)), "")
    _equivalence_checks(s, mult, "multipliability", out)

    # closure of each multipliability class F_c^x
    for c in range(n):
        members = np.flatnonzero(mult[:, c])
        inside = np.zeros(n + 1, dtype=bool)
        inside[members] = True
        for a in members:
            for b in members:
                if a <= b:
                    r = M[a, b]
                    if not inside[r]:
                        out.add("multipliable-closure", (c, a, b), (s.lab(c), s.lab(a), "*", s.lab(b)), f"{s.lab(a)} * {s.lab(b)} = {s.lab(r)} is not multipliable with {s.lab(c)}")
                    r = A[a, b]
                    if r != n and not inside[r]:
                        out.add("multipliable-closure", (c, a, b), (s.lab(c), s.lab(a), "+", s.lab(b)), f"{s.lab(a)} + {s.lab(b)} = {s.lab(r)} is not multipliable with {s.lab(c)}")
            unary = [("0_", s.zero[a]), ("1_", unity[a]), ("-", _inverse_in(A[a, :n], s.zero[a]))]
            if not s.is_zero[a]:
                unary.append(("1/", _inverse_in(M[a, :n], unity[a])))
            for op, r in unary:
                if r is not None and r != UNDEF and not inside[r]:
                    out.add("multipliable-closure", (c, a), (s.lab(c), _prefixed(op, s.lab(a))), f"{_prefixed(op, s.lab(a))} = {s.lab(r)} is not multipliable with {s.lab(c)}")
    return out.report()
