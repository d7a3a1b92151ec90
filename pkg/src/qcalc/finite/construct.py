"""Constructors for finite models: split models, group extensions, unions."""

from __future__ import annotations

import itertools
from typing import Mapping, Sequence

import numpy as np

from ..errors import BadExtensionError
from ..scalars import PrimeField
from .model import UNDEF, FiniteModel

__all__ = [
    "canonical_model",
    "model_from_extension",
    "ExtensionData",
    "cyclic_extension",
    "cyclic_extension_model",
    "split_extension",
    "z4_extension_model",
    "partial_field_model",
    "disjoint_union",
    "truncated_free_model",
    "primitive_root",
]


def _field(field) -> PrimeField:
    return field if isinstance(field, PrimeField) else PrimeField(field)


def _group_elements(orders: Sequence[int]) -> list[tuple[int, ...]]:
    for k in orders:
        if not isinstance(k, int) or k < 1:
            raise ValueError(f"cyclic orders must be positive integers, got {k!r}")
    return list(itertools.product(*(range(k) for k in orders)))


def canonical_model(field, dims: Sequence[int] = ()) -> FiniteModel:
    """Split model GF(p) x G for G = Z/k1 x ... x Z/kr.

    Elements are pairs ``(v, d)`` listed in lexicographic order, labelled
    ``(v,d1,...,dr)``, or just ``v`` when G is trivial.  Addition is defined
    only within one ``d`` and acts on ``v``; multiplication is componentwise.
    """
    f = _field(field)
    dims = tuple(dims)
    group = _group_elements(dims)
    elements = [(v, d) for v in range(f.p) for d in group]
    index = {e: i for i, e in enumerate(elements)}

    def gmul(d, e):
        return tuple((x + y) % k for x, y, k in zip(d, e, dims))

    n = len(elements)
    add = np.full((n, n), UNDEF, dtype=np.int64)
    mul = np.empty((n, n), dtype=np.int64)
    for i, (v, d) in enumerate(elements):
        for j, (w, e) in enumerate(elements):
            if d == e:
                add[i, j] = index[(f.add(v, w), d)]
            mul[i, j] = index[(f.mul(v, w), gmul(d, e))]
    if dims:
        labels = ["(" + ",".join(map(str, (v,) + d)) + ")" for v, d in elements]
    else:
        labels = [str(v) for v, _ in elements]
    name = f"GF({f.p})" + "".join(f"xZ/{k}" for k in dims)
    return FiniteModel(tuple(labels), add, mul, "paf", name)


def primitive_root(p: int) -> int:
    """Least generator of the multiplicative group of GF(p)."""
    f = _field(p)
    if f.p == 2:
        return 1
    for g in range(1, f.p):
        if len({pow(g, k, f.p) for k in range(f.p - 1)}) == f.p - 1:
            return g
    raise AssertionError("unreachable")


class ExtensionData:
    """An abelian group E with F* embedded in it and a projection onto E/F*.

    ``table`` is E's multiplication table on indices ``0..|E|-1``;
    ``embed[v]`` is the image of the nonzero residue ``v``; ``proj[x]``
    is the class of ``x`` in the quotient group G.
    """

    def __init__(self, table, embed: Mapping[int, int], proj: Sequence[int], field, labels: Sequence[str] | None = None):
        self.field = _field(field)
        self.table = np.array(table, dtype=np.int64)
        self.embed = {int(k) % self.field.p: int(v) for k, v in dict(embed).items()}
        self.proj = [int(x) for x in proj]
        m = len(self.table)
        self.labels = list(labels) if labels is not None else [f"e{i}" for i in range(m)]
        self._validate()

    def _validate(self):
        T, p = self.table, self.field.p
        m = len(T)
        if T.shape != (m, m) or (m and (T.min() < 0 or T.max() >= m)):
            raise BadExtensionError("E must be given by a square table of element indices")
        if len(self.labels) != m:
            raise BadExtensionError("one label per element of E is required")
        idx = np.arange(m)
        if not np.array_equal(T, T.T):
            raise BadExtensionError("E is not abelian")
        if not np.array_equal(T[T[:, :, None], idx[None, None, :]], T[idx[:, None, None], T[None, :, :]]):
            raise BadExtensionError("E is not associative")
        ids = [e for e in range(m) if np.array_equal(T[e], idx)]
        if not ids:
            raise BadExtensionError("E has no identity")
        self.identity = e = ids[0]
        if any(not np.any(T[a] == e) for a in range(m)):
            raise BadExtensionError("E has an element without inverse")
        self.inverse = [int(np.flatnonzero(T[a] == e)[0]) for a in range(m)]

        if sorted(self.embed) != list(range(1, p)):
            raise BadExtensionError(f"embed must map every nonzero residue 1..{p - 1}")
        image = list(self.embed.values())
        if len(set(image)) != len(image) or any(not 0 <= x < m for x in image):
            raise BadExtensionError("embed is not injective into E")
        for x in range(1, p):
            for y in range(1, p):
                if self.embed[x * y % p] != T[self.embed[x], self.embed[y]]:
                    raise BadExtensionError(f"embed is not a homomorphism at ({x}, {y})")

        if len(self.proj) != m:
            raise BadExtensionError("proj must give a class for every element of E")
        g = max(self.proj) + 1 if self.proj else 0
        if sorted(set(self.proj)) != list(range(g)):
            raise BadExtensionError("proj must be onto 0..|G|-1")
        if m != (p - 1) * g:
            raise BadExtensionError(f"|E| = {m} but |F*| * |G| = {(p - 1) * g}")
        kernel = {a for a in range(m) if self.proj[a] == self.proj[e]}
        if kernel != set(image):
            raise BadExtensionError("kernel of proj differs from the image of embed")
        gtab = {}
        for a in range(m):
            for b in range(m):
                key = (self.proj[a], self.proj[b])
                c = self.proj[T[a, b]]
                if gtab.setdefault(key, c) != c:
                    raise BadExtensionError("proj is not a homomorphism")
        self.order = g
        self.group_table = gtab
        self.unit_class = self.proj[e]
        self.coordinate = {v: x for x, v in self.embed.items()}

    def fiber(self, g: int) -> list[int]:
        return [a for a in range(len(self.table)) if self.proj[a] == g]

    def value_in_section(self, a: int, rep: int) -> int:
        """Residue v with a = embed(v) * rep."""
        return self.coordinate[int(self.table[a, self.inverse[rep]])]

    def fiber_sum(self, a, b, rep: int):
        """Sum of two fiber elements (E index or ``None`` for the fiber's zero)
        computed in the coordinates given by representative ``rep``."""
        f = self.field
        va = 0 if a is None else self.value_in_section(a, rep)
        vb = 0 if b is None else self.value_in_section(b, rep)
        w = f.add(va, vb)
        return None if w == 0 else int(self.table[self.embed[w], rep])


def model_from_extension(ext: ExtensionData, sections: Mapping[int, int] | None = None, name: str = "") -> FiniteModel:
    """PAF whose nonzero elements are E, with one zero added per class of G.

    Each fiber is an F*-torsor; addition within it is transported from the
    field along the representative ``sections[g]`` (default: least element of
    the fiber).  The result does not depend on that choice.
    """
    sections = dict(sections or {})
    classes = [ext.unit_class] + [g for g in range(ext.order) if g != ext.unit_class]
    reps = {}
    for g in classes:
        fib = ext.fiber(g)
        rep = sections.get(g, fib[0])
        if rep not in fib:
            raise BadExtensionError(f"section representative {rep} is not in fiber {g}")
        reps[g] = rep

    # element order: per class, its zero then the fiber in E order
    elements: list[tuple[str, int]] = []
    labels = []
    for g in classes:
        fib = ext.fiber(g)
        elements.append(("zero", g))
        labels.append("0" if g == ext.unit_class else f"0_{ext.labels[fib[0]]}")
        for a in fib:
            elements.append(("e", a))
            labels.append(ext.labels[a])
    index = {e: i for i, e in enumerate(elements)}
    klass = {e: (e[1] if e[0] == "zero" else ext.proj[e[1]]) for e in elements}

    n = len(elements)
    add = np.full((n, n), UNDEF, dtype=np.int64)
    mul = np.empty((n, n), dtype=np.int64)
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            gx, gy = klass[x], klass[y]
            if x[0] == "e" and y[0] == "e":
                mul[i, j] = index[("e", int(ext.table[x[1], y[1]]))]
            else:
                mul[i, j] = index[("zero", ext.group_table[(gx, gy)])]
            if gx == gy:
                s = ext.fiber_sum(x[1] if x[0] == "e" else None, y[1] if y[0] == "e" else None, reps[gx])
                add[i, j] = index[("zero", gx)] if s is None else index[("e", s)]
    return FiniteModel(tuple(labels), add, mul, "paf", name)


def _cyclic_table(m: int) -> np.ndarray:
    i = np.arange(m)
    return (i[:, None] + i[None, :]) % m


def cyclic_extension(p: int, m: int, letter: str = "j") -> ExtensionData:
    """E = Z/((p-1)m) generated by ``j``, with F* = <j^m> and G = Z/m.

    The extension splits exactly when gcd(p-1, m) = 1.
    """
    f = _field(p)
    k = f.p - 1
    order = k * m
    g = primitive_root(f.p)
    # residue g^t  ->  j^(m t)
    embed = {pow(g, t, f.p): (m * t) % order for t in range(k)}
    proj = [a % m for a in range(order)]
    labels = ["1" if a == 0 else letter if a == 1 else f"{letter}{a}" for a in range(order)]
    return ExtensionData(_cyclic_table(order), embed, proj, f, labels)


def cyclic_extension_model(p: int, m: int, letter: str = "j", sections=None) -> FiniteModel:
    return model_from_extension(cyclic_extension(p, m, letter), sections, name=f"GF({p}) ext Z/{(p - 1) * m}")


def z4_extension_model(sections=None) -> FiniteModel:
    """Finite analogue of the reals together with the imaginary line:
    E = Z/4 = <j>, GF(3)* = {1, j2}, G = Z/2."""
    return model_from_extension(cyclic_extension(3, 2), sections, name="z4_extension")


def split_extension(p: int, dims: Sequence[int] = ()) -> ExtensionData:
    """E = F* x G with F* embedded as the first factor."""
    f = _field(p)
    k = f.p - 1
    g = primitive_root(f.p)
    dims = tuple(dims)
    group = _group_elements(dims)
    elems = [(t, d) for t in range(k) for d in group]
    index = {e: i for i, e in enumerate(elems)}
    table = [
        [index[((t + s) % k, tuple((x + y) % o for x, y, o in zip(d, e, dims)))] for (s, e) in elems]
        for (t, d) in elems
    ]
    embed = {pow(g, t, f.p): index[(t, (0,) * len(dims))] for t in range(k)}
    gindex = {d: i for i, d in enumerate(group)}
    proj = [gindex[d] for _, d in elems]
    labels = [f"g{t}" + "".join(f".{x}" for x in d) for t, d in elems]
    return ExtensionData(table, embed, proj, f, labels)


def partial_field_model() -> FiniteModel:
    """The partial field {-1, 0, 1}: 1 + 1 and -1 + -1 are undefined."""
    labels = ("-1", "0", "1")
    U = UNDEF
    add = [
        [U, 0, 1],
        [0, 1, 2],
        [1, 2, U],
    ]
    mul = [
        [2, 1, 0],
        [1, 1, 1],
        [0, 1, 2],
    ]
    return FiniteModel(labels, add, mul, "paf", "partial_field")


def disjoint_union(models: Sequence[FiniteModel], prefixes: Sequence[str] | None = None) -> FiniteModel:
    """Block-diagonal fieldoid: operations across components are undefined.

    Labels are prefixed with ``"<k>:"`` (or the given prefixes) to stay distinct.
    """
    models = list(models)
    if prefixes is None:
        prefixes = [f"{k}:" for k in range(len(models))]
    n = sum(m.n for m in models)
    add = np.full((n, n), UNDEF, dtype=np.int64)
    mul = np.full((n, n), UNDEF, dtype=np.int64)
    labels = []
    off = 0
    for m, pre in zip(models, prefixes):
        k = m.n
        block = slice(off, off + k)
        add[block, block] = np.where(m.add == UNDEF, UNDEF, m.add + off)
        mul[block, block] = np.where(m.mul == UNDEF, UNDEF, m.mul + off)
        labels.extend(pre + x for x in m.labels)
        off += k
    return FiniteModel(tuple(labels), add, mul, "fieldoid", "union(" + ", ".join(m.name for m in models) + ")")


def truncated_free_model(field, window: int) -> FiniteModel:
    """GF(p) x Z restricted to exponents -window..window.

    Products whose exponent leaves the window are UNDEF, so this is not a
    PAF; it serves as a finite window onto a free dimension group.
    """
    f = _field(field)
    ks = list(range(-window, window + 1))
    elements = [(v, k) for v in range(f.p) for k in ks]
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    add = np.full((n, n), UNDEF, dtype=np.int64)
    mul = np.full((n, n), UNDEF, dtype=np.int64)
    for i, (v, k) in enumerate(elements):
        for j, (w, l) in enumerate(elements):
            if k == l:
                add[i, j] = index[(f.add(v, w), k)]
            if abs(k + l) <= window:
                mul[i, j] = index[(f.mul(v, w), k + l)]
    labels = [f"({v},{k})" for v, k in elements]
    return FiniteModel(tuple(labels), add, mul, "unconstrained", f"GF({f.p})xZ[{-window}..{window}]")


