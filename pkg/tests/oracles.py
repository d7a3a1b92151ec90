"""Slow, literal re-implementations used as test oracles.

Each function loops over plain Python lists and follows the definitions
directly, sharing no code with the package's numpy checkers.
"""

import itertools
import math

U = None  # the undefined element


def tables(model):
    n = model.n

    def op(table):
        t = [[None if int(x) < 0 else int(x) for x in row] for row in table]

        def f(a, b):
            if a is None or b is None:
                return None
            return t[a][b]

        return f

    return list(range(n)), op(model.add), op(model.mul)


def paf_axiom_violations(model):
    """Names of the violated axioms, reading every equation strongly."""
    Q, add, mul = tables(model)
    Qu = Q + [U]
    bad = set()
    if any(mul(a, b) is None for a in Q for b in Q):
        bad.add("mul-total")
    if any(add(a, b) != add(b, a) for a in Qu for b in Qu):
        bad.add("add-commutative")
    if any(mul(a, b) != mul(b, a) for a in Qu for b in Qu):
        bad.add("mul-commutative")
    for a, b, c in itertools.product(Qu, repeat=3):
        if add(add(a, b), c) != add(a, add(b, c)):
            bad.add("add-associative")
        if mul(mul(a, b), c) != mul(a, mul(b, c)):
            bad.add("mul-associative")
        if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)):
            bad.add("distributive")
    zeros_of = {a: [z for z in Q if add(a, z) == a] for a in Q}
    zero = {a: zs[0] for a, zs in zeros_of.items() if len(zs) == 1}
    if len(zero) != len(Q):
        bad.add("zero-unique")
    Z = {z for zs in zeros_of.values() for z in zs}
    ones = [e for e in Q if all(mul(a, e) == a for a in Q)]
    if not ones:
        bad.add("one-exists")
    for a in Q:
        if a in zero and not any(add(a, x) == zero[a] for x in Q):
            bad.add("add-inverse")
    if ones:
        one = ones[0]
        if any(not any(mul(a, x) == one for x in Q) for a in Q if a not in Z):
            bad.add("mul-inverse")
    for z in Z:
        if not any(b not in Z and zero.get(b) == z for b in Q):
            bad.add("non-triviality")
    return bad


def fieldoid_axiom_violations(model):
    Q, add, mul = tables(model)
    bad = paf_axiom_violations(model) - {"mul-total", "one-exists", "mul-inverse"}
    if not Q:
        return {"nonempty"}
    zeros_of = {a: [z for z in Q if add(a, z) == a] for a in Q}
    Z = {z for zs in zeros_of.values() for z in zs}
    for a in Q:
        if a in Z:
            continue
        units = [e for e in Q if mul(a, e) == a]
        if len(units) != 1:
            bad.add("unity-unique")
        elif not any(mul(a, x) == units[0] for x in Q):
            bad.add("mul-inverse")
    return bad


def coherent_systems(model):
    """Every coherent selection, in lexicographic order, by plain enumeration."""
    Q, add, mul = tables(model)
    classes = []
    for a in Q:
        if not any(a in c for c in classes):
            classes.append(sorted(b for b in Q if add(a, b) is not None))
    Z = {z for a in Q for z in Q if add(a, z) == a}
    one = next(e for e in Q if all(mul(a, e) == a for a in Q))
    options = [[a for a in c if a not in Z] for c in classes]
    found = []
    for sel in itertools.product(*options):
        s = set(sel)
        if one not in s:
            continue
        closed = all(mul(a, b) in s for a in s for b in s)
        inverses = all(any(mul(a, b) == one for b in s) for a in s)
        if closed and inverses:
            found.append(sel)
    return found, math.prod(len(o) for o in options)


def dimensionless(model):
    Q, add, mul = tables(model)
    one = next(e for e in Q if all(mul(a, e) == a for a in Q))
    return {a for a in Q if add(a, one) is not None}


def condition_one_holds(model, max_n):
    Q, add, mul = tables(model)
    F1 = dimensionless(model)
    for a in Q:
        if a in F1:
            continue
        x = a
        for _ in range(max_n):
            if x in F1:
                return False
            x = mul(x, a)
    return True


def condition_two_holds(model, max_n, include_dimensionless=False):
    Q, add, mul = tables(model)
    F1 = dimensionless(model)
    Z = {z for a in Q for z in Q if add(a, z) == a}

    def power(c, n):
        x = c
        for _ in range(n - 1):
            x = mul(x, c)
        return x

    for n in range(1, max_n + 1):
        roots = {power(c, n) for c in Q}
        for a in Q:
            if a in F1 and not include_dimensionless:
                continue
            fiber = [b for b in Q if add(a, b) is not None and b not in Z]
            has = {b in roots for b in fiber}
            if len(has) > 1:
                return False
    return True


def isomorphic(m1, m2):
    """Brute-force search for a label bijection preserving both tables."""
    if m1.n != m2.n:
        return False
    _, add1, mul1 = tables(m1)
    _, add2, mul2 = tables(m2)
    n = m1.n

    def image(f, x):
        return None if x is None else f[x]

    for perm in itertools.permutations(range(n)):
        if all(
            image(perm, add1(a, b)) == add2(perm[a], perm[b]) and image(perm, mul1(a, b)) == mul2(perm[a], perm[b])
            for a in range(n)
            for b in range(n)
        ):
            return True
    return False
