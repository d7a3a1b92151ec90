import numpy as np
import pytest

from qcalc.cli import shipped_file
from qcalc.errors import MalformedModelError, ModelTooLargeError
from qcalc.finite import UNDEF, FiniteModel, canonical_model, load_model, partial_field_model
from qcalc.finite.fixtures import fixture_models


def test_tables_are_read_only():
    m = canonical_model(3, [2])
    with pytest.raises(ValueError):
        m.add[0, 0] = 1


def test_text_round_trip():
    m = partial_field_model()
    again = FiniteModel.from_text(m.to_text("comment"))
    assert again == m
    assert again.name == "partial_field"


def test_undefined_entries_serialise_as_u():
    text = partial_field_model().to_text()
    assert '"u"' in text
    assert FiniteModel.from_text(text).add[0, 0] == UNDEF


def test_labels_that_look_like_numbers_survive():
    text = 'elements: [-1, 0, 1]\nadd: [[u, -1, 0], [-1, 0, 1], [0, 1, u]]\nmul: [[1, 0, -1], [0, 0, 0], [-1, 0, 1]]\n'
    assert FiniteModel.from_text(text) == partial_field_model()


@pytest.mark.parametrize(
    "text",
    [
        "elements: [a, b]\nadd: [[a, b]]\nmul: [[a, b], [b, a]]",
        "elements: [a]\nadd: [[z]]\nmul: [[a]]",
        "elements: [a]\nmul: [[a]]",
        "- just a list",
        "elements: [a, a]\nadd: [[a, a], [a, a]]\nmul: [[a, a], [a, a]]",
        "elements: [u]\nadd: [[u]]\nmul: [[u]]",
        "elements: [a]\nadd: [[a]]\nmul: [[a]]\nmode: group",
        "elements: [a\n",
    ],
)
def test_malformed(text):
    with pytest.raises(MalformedModelError):
        FiniteModel.from_text(text)


def test_out_of_range_entries():
    with pytest.raises(MalformedModelError):
        FiniteModel(("a",), [[1]], [[0]])
    with pytest.raises(MalformedModelError):
        FiniteModel(("a",), [[-2]], [[0]])


def test_size_cap():
    n = 65
    t = np.zeros((n, n), dtype=int)
    m = FiniteModel(tuple(str(i) for i in range(n)), t, t)
    with pytest.raises(ModelTooLargeError):
        m.ensure_checkable()


def test_extended_table_absorbs():
    m = partial_field_model()
    ext = m.extended("add")
    assert ext.shape == (4, 4)
    assert ext[0, 0] == 3 and (ext[3] == 3).all() and (ext[:, 3] == 3).all()


def test_submodel_and_permutation():
    m = canonical_model(3, [2])
    sub = m.submodel([0, 2, 4])
    assert sub.labels == ("(0,0)", "(1,0)", "(2,0)")
    assert sub.sum(1, 1) == 2
    perm = m.permuted([5, 4, 3, 2, 1, 0])
    assert perm.labels == tuple(reversed(m.labels))
    a, b = perm.index("(2,1)"), perm.index("(1,1)")
    assert perm.label(perm.prod(a, b)) == "(2,0)"


def test_power():
    m = canonical_model(5)
    assert m.label(m.power(m.index("2"), 4)) == "1"


@pytest.mark.parametrize("stem", sorted(fixture_models()))
def test_shipped_fixtures_match_constructions(stem):
    model, _ = fixture_models()[stem]
    shipped = load_model(shipped_file(f"{stem}.model"))
    assert shipped == model
    assert shipped.name == stem
