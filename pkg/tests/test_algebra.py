"""Polynomials, tableaux and the key-basis expansion."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra import (
    SSYT,
    Polynomial,
    SignedKeyExpansion,
    conjugate_partition,
    diagram_of_tableau,
    enumerate_ssyt,
    insertion_cell,
    key_expand,
    rsk_insert,
    schur_polynomial,
    tableau_of_diagram,
)
from src.errors import InvalidComposition, NotGenericDiagram
from src.insertion import rectify, top_insert
from src.space import key_polynomial

from .conftest import comp

THREAD_TABLEAU = [[1, 1, 2, 3, 4], [3, 3, 4, 4], [4, 5, 5, 5], [5]]
INSERTED_TABLEAU = [[1, 1, 2, 2, 4], [3, 3, 3, 4], [4, 4, 5, 5], [5, 5]]

polynomials = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2)), st.integers(-5, 5), max_size=4
).map(lambda terms: Polynomial(2, terms))


@given(polynomials, polynomials, polynomials)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Polynomial.zero(2)


@given(polynomials)
def test_json_round_trip_keeps_terms(p):
    assert Polynomial.from_json(p.to_json(), 2) == p


def test_polynomial_formatting():
    x1, x2 = Polynomial.variable(1, 2), Polynomial.variable(2, 2)
    assert str(x1**3 * x2 - 2 * x2 + 1) == "x1^3*x2 - 2*x2 + 1"
    assert str(Polynomial.zero(3)) == "0"
    assert str(-x1) == "-x1"


def test_polynomials_compare_across_variable_counts():
    assert Polynomial.variable(1, 2) == Polynomial.variable(1, 4)
    assert Polynomial.variable(1, 2) + Polynomial.variable(3, 3) == Polynomial(3, {(1, 0, 0): 1, (0, 0, 1): 1})


def test_overflow_is_reported():
    big = Polynomial.constant(2**62, 1)
    with pytest.raises(OverflowError):
        big * 4


def test_complete_homogeneous():
    h = Polynomial.complete_homogeneous(2, 2, 3)
    assert h == Polynomial(3, {(2, 0, 0): 1, (1, 1, 0): 1, (0, 2, 0): 1})
    assert Polynomial.complete_homogeneous(0, 3) == Polynomial.one(3)


def test_schur_polynomial_of_32():
    s = schur_polynomial((3, 2), 3)
    assert sum(s.terms.values()) == 15
    assert len(enumerate_ssyt((3, 2), 3)) == 15
    for exp in [(1, 2, 2), (2, 1, 2), (2, 2, 1)]:
        assert s.coefficient(exp) == 2
    assert s.coefficient((3, 2, 0)) == 1


def test_schur_polynomial_is_key_of_reversed_partition():
    assert schur_polynomial((3, 2), 3) == key_polynomial((0, 2, 3))


def test_schur_polynomial_vanishes_on_too_few_variables():
    assert schur_polynomial((1, 1, 1), 2) == Polynomial.zero(2)


def test_partition_checks():
    assert conjugate_partition((3, 2)) == (2, 2, 1)
    with pytest.raises(InvalidComposition):
        schur_polynomial((1, 2), 3)


def test_tableau_validation():
    with pytest.raises(InvalidComposition):
        SSYT.from_rows([[1, 2], [1]])
    with pytest.raises(InvalidComposition):
        SSYT.from_rows([[1, 6]], 5)


def test_rsk_insertion():
    before = SSYT.from_rows(THREAD_TABLEAU, 5)
    after = rsk_insert(before, 2)
    assert after.to_json() == INSERTED_TABLEAU
    assert insertion_cell(before, after) == (4, 2)


def test_tableau_diagram_correspondence(thread_example):
    tableau = SSYT.from_rows(THREAD_TABLEAU, 5)
    assert diagram_of_tableau(tableau, 5) == thread_example
    assert tableau_of_diagram(thread_example, 5) == tableau


def test_tableau_of_weak_diagram_fails(rho_example):
    with pytest.raises(NotGenericDiagram):
        tableau_of_diagram(rho_example, 5)


def test_row_insertion_is_top_insertion(thread_example):
    after = SSYT.from_rows(INSERTED_TABLEAU, 5)
    assert top_insert(thread_example, 4) == diagram_of_tableau(after, 5)


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from([(2, 1), (3, 1), (2, 2), (3, 2, 1)]).flatmap(
        lambda shape: st.tuples(st.sampled_from(enumerate_ssyt(shape, 4)), st.integers(1, 4))
    )
)
def test_row_insertion_agrees_with_rectification(case):
    tableau, value = case
    inserted = rsk_insert(tableau, value)
    assert inserted.is_semistandard(4)
    assert inserted.size == tableau.size + 1
    width = tableau.shape[0]
    appended = diagram_of_tableau(tableau, 4).add((width + 1, 5 - value))
    assert rectify(appended).result == diagram_of_tableau(inserted, 4)


def test_key_expand_of_key_polynomial():
    assert key_expand(key_polynomial((0, 3, 2))) == SignedKeyExpansion({comp(0, 3, 2): 1})


def test_key_expand_of_schur_times_variable():
    product = key_polynomial((1, 0)) * Polynomial.variable(1, 2)
    assert key_expand(product) == SignedKeyExpansion.from_terms([(1, (2, 0))])
    product = key_polynomial((0, 1)) * Polynomial.variable(1, 2)
    expansion = key_expand(product)
    assert expansion.evaluate(2) == product
    assert expansion == SignedKeyExpansion.from_terms([(1, (1, 1)), (1, (2, 0))])


def test_expansion_formatting():
    expansion = SignedKeyExpansion.from_terms([(1, (2, 0)), (-2, (0, 2))])
    assert str(expansion) == "k[2,0] - 2*k[0,2]"
    assert expansion.to_json() == [{"coeff": 1, "index": [2, 0]}, {"coeff": -2, "index": [0, 2]}]
    assert not expansion.is_nonnegative()
    assert str(SignedKeyExpansion()) == "0"
