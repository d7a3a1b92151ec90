import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from qcalc.finite import (
    PAF_AXIOMS,
    UNDEF,
    FiniteModel,
    canonical_model,
    check_fieldoid_axioms,
    check_fieldoid_lemmas,
    check_paf_axioms,
    check_paf_lemmas,
    cyclic_extension_model,
    disjoint_union,
    partial_field_model,
    z4_extension_model,
)
from qcalc.finite.fixtures import integers_mod4_model, missing_inverse_model, non_squareable_model

PAF_FAMILY = [
    canonical_model(2),
    canonical_model(3),
    canonical_model(3, [2]),
    canonical_model(2, [3]),
    canonical_model(5, [2, 2]),
    canonical_model(7, [3]),
    z4_extension_model(),
    cyclic_extension_model(5, 2),
    cyclic_extension_model(7, 3),
    cyclic_extension_model(3, 4),
]


@pytest.mark.parametrize("m", PAF_FAMILY, ids=lambda m: m.name)
def test_family_passes_axioms_and_lemmas(m):
    assert check_paf_axioms(m).passed
    assert check_paf_lemmas(m).passed
    assert check_fieldoid_axioms(m).passed
    assert check_fieldoid_lemmas(m).passed


@pytest.mark.parametrize("m", PAF_FAMILY[:6], ids=lambda m: m.name)
def test_relabelling_preserves_the_verdict(m):
    order = list(range(m.n))
    random.Random(m.n).shuffle(order)
    assert check_paf_axioms(m.permuted(order)).passed


def test_partial_field_witnesses():
    report = check_paf_axioms(partial_field_model())
    assert report.axioms() == ["add-associative", "distributive"]
    assert report.witnesses("add-associative") == [("-1", "-1", "1"), ("-1", "1", "1"), ("1", "-1", "-1"), ("1", "1", "-1")]
    (v,) = [v for v in report if v.witness == ("1", "1", "-1")]
    assert v.explanation == "(1 + 1) + -1 = u but 1 + (1 + -1) = 1"


def test_partial_field_lemmas():
    lemmas = check_paf_lemmas(partial_field_model())
    assert ("1", "0", "1") in lemmas.witnesses("summability-transitive")
    assert ("1", "-1", "1") in lemmas.witnesses("summability-transitive")
    assert lemmas.witnesses("identical-zeros") == [("-1", "-1"), ("1", "1")]


def test_deleted_inverse_entry():
    report = check_paf_axioms(missing_inverse_model())
    assert report.witnesses("mul-inverse") == [("(2,1)",)]
    assert report.witnesses("mul-total") == [("(2,1)", "(2,1)")]


def test_integers_mod_four_lack_one_inverse():
    m = integers_mod4_model()
    report = check_paf_axioms(m)
    assert [v.format() for v in report] == ["mul-inverse: (2) no x with 2 * x = 1"]
    assert check_paf_lemmas(m).witnesses("zero-product") == [("2", "2")]


def test_no_identity_skips_inverse_check():
    # GF(3) with multiplication replaced by the constant 0
    base = canonical_model(3)
    m = FiniteModel(base.labels, base.add, np.zeros((3, 3), dtype=int))
    report = check_paf_axioms(m)
    assert "one-exists" in report.axioms()
    assert "mul-inverse" in report.skipped


def test_report_order_follows_axiom_list():
    rng = random.Random(1)
    base = canonical_model(3, [2])
    for _ in range(30):
        add, mul = np.array(base.add), np.array(base.mul)
        for _ in range(3):
            t = add if rng.random() < 0.5 else mul
            t[rng.randrange(6), rng.randrange(6)] = rng.randrange(-1, 6)
        report = check_paf_axioms(FiniteModel(base.labels, add, mul))
        names = report.axioms()
        assert names == sorted(names, key=list(PAF_AXIOMS).index)


def _perturbed(base: FiniteModel, seed: int, edits: int) -> FiniteModel:
    rng = random.Random(seed)
    add, mul = np.array(base.add), np.array(base.mul)
    n = base.n
    for _ in range(edits):
        t = add if rng.random() < 0.5 else mul
        value = UNDEF if rng.random() < 0.3 else rng.randrange(n)
        a, b = rng.randrange(n), rng.randrange(n)
        t[a, b] = value
        if rng.random() < 0.7:
            t[b, a] = value  # keep it commutative most of the time
    return FiniteModel(base.labels, add, mul)


BASES = [canonical_model(2), canonical_model(3), canonical_model(2, [2]), partial_field_model(), z4_extension_model()]


@given(st.integers(0, 10**6), st.integers(0, 4), st.integers(1, 3))
def test_checker_agrees_with_literal_oracle(seed, base, edits):
    m = _perturbed(BASES[base], seed, edits)
    assert set(check_paf_axioms(m).axioms()) == oracles.paf_axiom_violations(m)


@given(st.integers(0, 10**6), st.integers(1, 3))
def test_fieldoid_checker_agrees_with_literal_oracle(seed, edits):
    union = disjoint_union([canonical_model(2), canonical_model(3)])
    m = _perturbed(union, seed, edits)
    assert set(check_fieldoid_axioms(m).axioms()) == oracles.fieldoid_axiom_violations(m)


def test_union_is_a_fieldoid_not_a_paf():
    u = disjoint_union([canonical_model(2), canonical_model(3, [2])])
    assert check_fieldoid_axioms(u).passed
    assert check_fieldoid_lemmas(u).passed
    assert "mul-total" in check_paf_axioms(u).axioms()


def test_non_squareable_element():
    m = non_squareable_model()
    axioms = check_fieldoid_axioms(m)
    assert not axioms.passed
    assert {"mul-associative", "distributive"} <= set(axioms.axioms())
    lemmas = check_fieldoid_lemmas(m)
    assert lemmas.witnesses("squareable") == [("b1",)]
    assert ("b1", "b1") in lemmas.witnesses("summable-implies-multipliable")


def test_empty_model_is_not_a_fieldoid():
    m = FiniteModel((), np.zeros((0, 0), dtype=int), np.zeros((0, 0), dtype=int))
    assert check_fieldoid_axioms(m).axioms() == ["nonempty"]
