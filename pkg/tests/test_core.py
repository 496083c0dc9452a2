"""Compositions, diagrams, genericity, threads and Kohnert labelings."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core import (
    Cell,
    Diagram,
    WeakComposition,
    key_diagram,
    kohnert_labeling,
    thread_decomposition,
    thread_weight,
    validate_matching,
)
from src.errors import InvalidComposition, NotMember
from src.space import kd_membership

from .conftest import comp, rows

small_compositions = st.lists(st.integers(min_value=0, max_value=3), min_size=1, max_size=4).map(
    lambda parts: WeakComposition(tuple(parts))
)


def test_composition_equality_ignores_trailing_zeros():
    assert comp(0, 3, 2) == comp(0, 3, 2, 0, 0)
    assert hash(comp(1, 0)) == hash(comp(1))
    assert comp(0, 3, 2) != comp(3, 0, 2)


def test_parse_and_pad():
    a = WeakComposition.parse("4,1,5,0,4")
    assert a.parts == (4, 1, 5, 0, 4)
    assert WeakComposition.parse("(0,3)", 4).parts == (0, 3, 0, 0)
    assert a.length == 5
    assert comp(1, 0, 0).length == 1


@pytest.mark.parametrize("text", ["1,-2", "a,b", "1,,2"])
def test_parse_rejects_bad_literals(text):
    with pytest.raises(InvalidComposition):
        WeakComposition.parse(text)


def test_padding_never_drops_nonzero_parts():
    with pytest.raises(InvalidComposition):
        comp(1, 2).padded(1)


def test_column_weight_and_units():
    assert comp(4, 1, 5, 0, 4).column_weight() == (4, 3, 3, 3, 1)
    assert comp(0, 3, 2).plus_unit(1).parts == (1, 3, 2)
    assert WeakComposition.unit(3).parts == (0, 0, 1)
    assert comp(4, 1, 5).transpose(1, 3).parts == (5, 1, 4)


def test_key_diagram_rows():
    d = key_diagram((0, 3, 2))
    assert d.row(2) == (1, 2, 3)
    assert d.row(3) == (1, 2)
    assert d.row_weight(3) == comp(0, 3, 2)
    assert d.is_generic


def test_kohnert_move_jumps_over_occupied_cells():
    d = key_diagram((0, 3, 2))
    moved = d.kohnert_move(3)
    assert moved == rows(r3=[1], r2=[1, 2, 3], r1=[2])
    assert d.kohnert_move(1) is None


def test_deficiency_and_genericity(rho_example):
    assert rho_example.deficiency(3, 2) == -1
    assert rho_example.deficiency(3, 1) == -1
    assert rho_example.min_deficiency(3) == (-1, 2)
    assert not rho_example.is_generic


def test_deficiency_needs_column_two():
    with pytest.raises(InvalidComposition):
        Diagram.empty().deficiency(1, 1)


def test_thread_weight(thread_example):
    decomposition = thread_decomposition(thread_example)
    assert decomposition.anchored
    assert decomposition.weight == comp(4, 1, 5, 0, 4)
    assert validate_matching(thread_example, decomposition.matching)


def test_thread_weight_of_added_column_example(added_column_example):
    assert thread_weight(added_column_example) == comp(4, 5, 2, 0, 4)
    assert added_column_example.column_weight() == comp(4, 4, 3, 3, 1)


def test_unanchored_thread():
    d = Diagram.of([(1, 1), (2, 2)])
    decomposition = thread_decomposition(d)
    assert not decomposition.anchored
    assert decomposition.unanchored() == ((Cell(2, 2),),)
    assert decomposition.weight == comp(1)


def test_validate_matching_rejects_bad_edges():
    d = key_diagram((2, 2))
    assert not validate_matching(d, [((2, 1), (1, 2)), ((2, 2), (1, 1))])
    assert not validate_matching(d, [((2, 1), (1, 1))])
    assert not validate_matching(d, "nonsense")


def test_kohnert_labeling_of_key_diagram_uses_rows():
    a = comp(2, 0, 3)
    labels, matching = kohnert_labeling(key_diagram(a), a)
    assert all(labels[x] == x.row for x in key_diagram(a))
    assert validate_matching(key_diagram(a), matching)


def test_kohnert_labeling_rejects_non_members():
    with pytest.raises(NotMember):
        kohnert_labeling(key_diagram((0, 2, 3)), (0, 3, 2))


def test_render_marks_cells():
    picture = key_diagram((1, 2)).render(mark=[(2, 2)])
    assert picture.splitlines() == [" 2 |#+", " 1 |#."]


@settings(max_examples=60, deadline=None)
@given(small_compositions)
def test_kohnert_moves_keep_column_weight_and_genericity(a):
    start = key_diagram(a)
    for successor in start.kohnert_successors():
        assert successor.column_weight() == start.column_weight()
        assert successor.is_generic
        assert kd_membership(successor, a)
        assert len(successor) == a.size


@settings(max_examples=60, deadline=None)
@given(small_compositions)
def test_thread_weight_of_key_diagram_is_its_composition(a):
    assert thread_weight(key_diagram(a)) == a
