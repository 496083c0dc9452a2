"""Rectification, bottom and top insertion, and removable cells."""

import pytest

from src.core import Cell, Diagram, key_diagram, thread_weight
from src.errors import InvalidComposition, NotGenericDiagram, NotMember
from src.insertion import (
    bottom_insert,
    bottom_remove,
    insert_strip,
    offending_position,
    rectify,
    removable_analysis,
    removable_cells,
    rho_step,
    top_insert,
    top_insert_trace,
    top_remove,
    un_rectify,
)
from src.space import enumerate_kd, enumerate_target_space, in_target_space, kd_membership

from .conftest import comp, rows

# top insertion of row 4 into the thread example
INSERTED_ROW_4 = rows(r5=[1, 2], r4=[3, 4], r3=[1, 2, 3], r2=[1, 2, 4, 5], r1=[1, 2, 3, 4])


def test_rho_moves_offending_cell_left(rho_example):
    assert offending_position(rho_example) == (3, 2)
    moved, step = rho_step(rho_example)
    assert step == ((3, 2), (2, 2))
    assert moved.is_generic
    assert moved == INSERTED_ROW_4


def test_rectification_of_an_appended_cell(thread_example):
    appended = thread_example.add((6, 4))
    assert removable_analysis(appended).lowest == (6, 4)
    trace = rectify(appended)
    assert len(trace.steps) == 4
    assert trace.steps[0] == ((6, 4), (5, 4))
    assert trace.result == INSERTED_ROW_4
    assert kd_membership(trace.result, (4, 2, 5, 0, 4))


def test_rho_step_refuses_a_blocked_move(monkeypatch, rho_example):
    import importlib

    rectify_module = importlib.import_module("src.insertion.rectify")

    # (2,3) has (1,3) on its left
    monkeypatch.setattr(rectify_module, "offending_position", lambda diagram: Cell(2, 3))
    with pytest.raises(NotGenericDiagram):
        rectify_module.rho_step(rho_example)


def test_rho_step_leaves_generic_diagrams_alone(thread_example):
    assert rho_step(thread_example) == (thread_example, None)
    assert rectify(thread_example).steps == ()


def test_top_insertion_rectifies(thread_example):
    trace = top_insert_trace(thread_example, 4)
    assert trace.steps == (
        ((6, 4), (5, 4)),
        ((5, 4), (4, 4)),
        ((4, 3), (3, 3)),
        ((3, 2), (2, 2)),
    )
    assert trace.result == INSERTED_ROW_4
    assert thread_weight(trace.result) == comp(4, 2, 5, 0, 4)


def test_top_insertion_needs_generic_diagram(rho_example):
    with pytest.raises(NotGenericDiagram):
        top_insert(rho_example, 1)
    with pytest.raises(InvalidComposition):
        top_insert(Diagram.empty(), 0)


def test_top_remove_inverts_insertion(thread_example):
    base, j = top_remove(INSERTED_ROW_4, (4, 1, 5, 0, 4))
    assert base == thread_example
    assert j == 4


def test_un_rectify_walks_back_to_the_appended_cell(thread_example):
    assert un_rectify(INSERTED_ROW_4, (2, 2), 6) == thread_example.add((6, 4))


def test_top_remove_rejects_non_members(thread_example):
    with pytest.raises(NotMember):
        top_remove(thread_example, (4, 1, 5, 0, 4))


@pytest.mark.parametrize("a", [(0, 3, 2), (2, 0, 1), (1, 2)])
def test_top_insertion_round_trip(a):
    n = len(a)
    for diagram in enumerate_kd(a).diagrams:
        for j in range(1, n + 1):
            image = top_insert(diagram, j)
            assert image.is_generic
            assert in_target_space(image, a, n)
            assert top_remove(image, a) == (diagram, j)


def test_bottom_insert_fills_leftmost_gap(thread_example):
    assert bottom_insert(key_diagram((0, 3, 2))) == key_diagram((1, 3, 2))
    assert bottom_insert(thread_example) == thread_example.add((5, 1))
    gap = rows(r2=[1], r1=[2])
    assert bottom_insert(gap) == gap.add((1, 1))


@pytest.mark.parametrize("a", [(0, 3, 2), (4, 1, 5, 0, 4)])
def test_bottom_insertion_round_trip(a):
    for diagram in enumerate_kd(a).diagrams[:40]:
        image = bottom_insert(diagram)
        assert in_target_space(image, a, 1)
        assert bottom_remove(image, a) == diagram


def test_bottom_remove_rejects_non_members():
    with pytest.raises(NotMember):
        bottom_remove(key_diagram((0, 3, 2)), (0, 3, 2))


def test_insert_strip():
    base = key_diagram((0, 3, 2))
    assert insert_strip(base, [5, 5], mode="bottom") == bottom_insert(bottom_insert(base))
    assert insert_strip(base, [3, 1]) == top_insert(top_insert(base, 3), 1)
    with pytest.raises(InvalidComposition):
        insert_strip(base, [1, 3])
    with pytest.raises(InvalidComposition):
        insert_strip(base, [1], mode="sideways")


def test_removable_cells_of_a_weak_diagram():
    weak = Diagram.of([(1, 1), (2, 2)])
    assert removable_cells(weak) == {Cell(2, 2)}
    report = removable_analysis(weak)
    assert report.is_weak
    assert report.removable_column == 2
    assert report.highest == report.lowest == (2, 2)


def test_removable_analysis_of_a_generic_diagram(thread_example):
    report = removable_analysis(thread_example)
    assert report.removable_column is None
    assert not report.is_weak or all(thread_example.remove(x).is_generic for x in report.removable_cells)


def test_removable_analysis_of_rho_example(rho_example):
    report = removable_analysis(rho_example)
    assert report.lowest == offending_position(rho_example)
    assert report.removable_column == 3
    assert Cell(3, 2) in report.removable_cells


@pytest.mark.parametrize("a,k", [((1, 0, 0), 1), ((1, 0, 0), 2), ((0, 2, 0), 2), ((2, 1, 0, 0), 3), ((1, 2, 0), 2)])
def test_top_insertion_below_the_ambient_row_count(a, k):
    members = enumerate_kd(a).diagrams
    images = {}
    for diagram in members:
        for j in range(1, k + 1):
            image = top_insert(diagram, j)
            images[image] = (diagram, j)
            assert top_remove(image, a) == (diagram, j)
    assert len(images) == len(members) * k
    assert set(images) == set(enumerate_target_space(a, k).diagrams)


def _weak_diagrams(a):
    """Every intermediate diagram met while rectifying a member of KD(a) plus one appended cell."""
    for diagram in enumerate_kd(a).diagrams:
        for j in range(1, len(a) + 1):
            current = diagram.add((diagram.max_column + 1, j))
            while not current.is_generic:
                yield current
                current, _ = rho_step(current)


@pytest.mark.parametrize("a", [(0, 3, 2), (2, 0, 1), (1, 2, 1)])
def test_removable_cells_match_the_deletion_test(a):
    for diagram in list(_weak_diagrams(a)) + list(enumerate_kd(a).diagrams):
        expected = {x for x in diagram if diagram.remove(x).is_generic}
        assert removable_cells(diagram) == expected


@pytest.mark.parametrize("a", [(0, 3, 2), (2, 0, 1), (1, 2, 1)])
def test_highest_and_lowest_removable_cells_share_a_thread_weight(a):
    for diagram in _weak_diagrams(a):
        report = removable_analysis(diagram)
        assert report.is_weak
        assert report.lowest == offending_position(diagram)
        assert report.highest == max(report.removable_cells, key=lambda x: x.row)
        assert report.lowest == min(report.removable_cells, key=lambda x: x.row)
        assert thread_weight(diagram.remove(report.highest)) == thread_weight(diagram.remove(report.lowest))
        moved, (_, target) = rho_step(diagram)
        assert removable_analysis(moved).highest in (None, target)


def test_removable_cells_of_non_weak_diagrams():
    assert removable_cells(Diagram.of([(2, 1), (2, 2)])) == frozenset()
    assert removable_cells(Diagram.empty()) == frozenset()
