import random

import numpy as np
import pytest

from qcalc.errors import NotAFieldoidError
from qcalc.finite import (
    UNDEF,
    canonical_model,
    check_paf_axioms,
    decompose_fieldoid,
    disjoint_union,
    multipliability_classes,
    partial_field_model,
)
from qcalc.finite.fixtures import non_squareable_model


def test_two_components():
    a, b = canonical_model(2), canonical_model(3, [2])
    parts = decompose_fieldoid(disjoint_union([a, b]))
    assert len(parts) == 2
    assert [p.n for p in parts] == [2, 6]
    assert all(check_paf_axioms(p).passed for p in parts)
    assert parts[1].relabel(b.labels) == FiniteModelish(b)


def FiniteModelish(m):
    # the decomposition restores PAF mode for each component
    from qcalc.finite import FiniteModel

    return FiniteModel(m.labels, m.add, m.mul, "paf")


def test_single_paf_is_returned_unchanged():
    m = canonical_model(5, [2])
    assert decompose_fieldoid(m) == [m]


def test_rejects_non_fieldoids():
    with pytest.raises(NotAFieldoidError):
        decompose_fieldoid(partial_field_model())
    with pytest.raises(NotAFieldoidError):
        decompose_fieldoid(non_squareable_model())


def test_cross_component_entries_undefined():
    models = [canonical_model(2), canonical_model(3), canonical_model(2, [2])]
    u = disjoint_union(models)
    classes = multipliability_classes(u)
    assert len(classes) == 3
    for i, ci in enumerate(classes):
        for cj in classes[i + 1:]:
            assert (u.add[np.ix_(ci, cj)] == UNDEF).all()
            assert (u.mul[np.ix_(ci, cj)] == UNDEF).all()


def test_components_of_a_shuffled_union():
    rng = random.Random(4)
    u = disjoint_union([canonical_model(3), canonical_model(2, [3])])
    order = list(range(u.n))
    rng.shuffle(order)
    parts = decompose_fieldoid(u.permuted(order))
    assert sorted(p.n for p in parts) == [3, 6]
    assert all(check_paf_axioms(p).passed for p in parts)
