"""Tests for ordinary pipe dreams and compatible sequences."""

import pytest
from hypothesis import given, settings, strategies as st

from helpers import apply_word, brute_pipe_dreams, staircase_cells, word_of
from pipedreams import (
    CompatibleSequence,
    EmptyDiagramError,
    InvalidDiagramError,
    InvalidSequenceError,
    Permutation,
    PipeDream,
    SparsePolynomial,
    enumerate_pipe_dreams,
    schubert_polynomial,
    symmetric_group,
)

ORACLE_4 = brute_pipe_dreams(4)


def test_constructor_and_equality():
    d = PipeDream([(1, 2), (2, 1)])
    assert d == PipeDream({(2, 1), (1, 2)})
    assert hash(d) == hash(PipeDream([(2, 1), (1, 2)]))
    assert d != PipeDream([(1, 2)])
    with pytest.raises(ValueError):
        PipeDream([(1, 2, 3)])
    with pytest.raises(ValueError):
        PipeDream([(0, 1)])


def test_word_reads_rows_top_down_right_to_left():
    d = PipeDream([(1, 1), (1, 2), (2, 1)])
    assert d.word() == (2, 1, 2)
    assert d.perm() == Permutation((3, 2, 1))


def test_small_permutation_fixtures():
    assert PipeDream([(1, 1), (2, 1)]).perm() == Permutation((2, 3, 1))
    assert PipeDream([(1, 1), (1, 2)]).perm() == Permutation((3, 1, 2))
    assert PipeDream([]).perm() == Permutation.identity()


def test_non_reduced_raises():
    # crosses (1,1),(2,1) and (1,2) wire two pipes across each other twice
    bad = PipeDream([(1, 2), (2, 1)])
    assert not bad.is_reduced()
    with pytest.raises(InvalidDiagramError):
        bad.perm()


def test_weight_counts_rows():
    d = PipeDream([(1, 1), (1, 2), (2, 1)])
    assert d.weight().terms == {(2, 1): 1}


def test_pop_takes_first_grid_order_cross():
    d = PipeDream([(1, 1), (1, 2), (2, 1)])
    (a, r), rest = d.pop()
    assert (a, r) == (2, 1)
    assert rest == PipeDream([(1, 1), (2, 1)])
    with pytest.raises(EmptyDiagramError):
        PipeDream([]).pop()


def test_json_roundtrip():
    d = PipeDream([(2, 1), (1, 3)])
    data = d.to_json()
    assert data["model"] == "pd"
    assert data["crosses"] == [[1, 3], [2, 1]]
    assert PipeDream.from_json(data) == d


@pytest.mark.parametrize("pi", list(symmetric_group(4)))
def test_enumeration_matches_brute_force(pi):
    lib = {frozenset(d.crosses) for d in enumerate_pipe_dreams(pi)}
    assert lib == ORACLE_4.get(pi.word, set())


@pytest.mark.parametrize("pi", list(symmetric_group(4)))
def test_weights_sum_to_schubert(pi):
    total = sum(
        (d.weight() for d in enumerate_pipe_dreams(pi)),
        start=SparsePolynomial({}),
    )
    assert total == schubert_polynomial(pi)


@pytest.mark.parametrize("pi", list(symmetric_group(4)))
def test_compatible_sequence_roundtrip(pi):
    for d in enumerate_pipe_dreams(pi):
        seq = d.to_compatible()
        seq.validate()
        assert seq.permutation() == pi
        assert PipeDream.from_compatible(seq) == d
        assert seq.to_pipe_dream() == d


def test_compatible_sequence_validation_errors():
    with pytest.raises(InvalidSequenceError):
        CompatibleSequence((1, 2), (1,)).validate()
    with pytest.raises(InvalidSequenceError):
        CompatibleSequence((1, 1), (1, 1)).validate()  # word not reduced
    with pytest.raises(InvalidSequenceError):
        CompatibleSequence((2, 1), (2, 1)).validate()  # rows decrease
    with pytest.raises(InvalidSequenceError):
        CompatibleSequence((2,), (3,)).validate()  # r_j > a_j
    with pytest.raises(InvalidSequenceError):
        # ascent in a must force strict increase in r
        CompatibleSequence((1, 2), (1, 1)).validate()
    with pytest.raises(InvalidSequenceError):
        CompatibleSequence((0,), (0,)).validate()


def test_compatible_sequence_of_321():
    seq = CompatibleSequence((2, 1, 2), (1, 1, 2))
    seq.validate()
    assert seq.to_pipe_dream() == PipeDream([(1, 1), (1, 2), (2, 1)])


cell_subsets = st.frozensets(
    st.sampled_from(staircase_cells(5)), max_size=6
)


@settings(max_examples=120)
@given(cell_subsets)
def test_perm_agrees_with_brute_multiply(crosses):
    d = PipeDream(crosses)
    word, reduced = apply_word(word_of(crosses), 5)
    assert d.is_reduced() == reduced
    if reduced:
        assert d.perm().word == word
    else:
        with pytest.raises(InvalidDiagramError):
            d.perm()


@settings(max_examples=60)
@given(cell_subsets)
def test_pop_removes_first_cross(crosses):
    d = PipeDream(crosses)
    if not d.is_reduced():
        return
    if not crosses:
        with pytest.raises(EmptyDiagramError):
            d.pop()
        return
    (a, r), rest = d.pop()
    first = min(crosses, key=lambda rc: (rc[0], -rc[1]))
    assert (r, a - r + 1) == first
    assert rest.crosses == frozenset(crosses) - {first}
