import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import horizontal_strip_by_columns, partitions
from schurseq.errors import InvalidPartition, RowTooShort
from schurseq.partitions import (
    Partition,
    canonical_sort,
    componentwise_sum,
    is_horizontal_strip,
    partitions_of,
    prepend_row,
)


@st.composite
def parts(draw, max_weight=12):
    w = draw(st.integers(0, max_weight))
    return Partition(draw(st.sampled_from(partitions(w))))


def test_construction_strips_zeros():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1)) == (2, 1)
    assert Partition(()) == ()
    assert Partition((0,)).weight == 0


@pytest.mark.parametrize("bad", [(1, 2), (3, -1, 0), (2, 0, 1)])
def test_construction_rejects_bad_parts(bad):
    with pytest.raises(InvalidPartition):
        Partition(bad)


def test_parse_and_format_round_trip():
    assert Partition.parse("4,2,1") == (4, 2, 1)
    assert Partition.parse("(2,1)") == (2, 1)
    assert Partition.parse("-") == ()
    assert str(Partition(())) == "-"
    assert str(Partition((3, 3, 1))) == "3,3,1"
    for bad in ("1,2", "2,0", "x"):
        with pytest.raises(InvalidPartition):
            Partition.parse(bad)


def test_componentwise_sum_examples():
    assert componentwise_sum((2, 1), (1, 1)) == (3, 2)
    assert componentwise_sum((3,), (1, 1)) == (4, 1)
    assert componentwise_sum((), (5, 2)) == (5, 2)


def test_prepend_row_examples():
    assert prepend_row(4, (2, 1)) == (4, 2, 1)
    assert prepend_row(3, ()) == (3,)
    assert prepend_row(0, ()) == ()
    with pytest.raises(RowTooShort):
        prepend_row(2, (3,))


def test_horizontal_strip_examples():
    assert is_horizontal_strip((2, 1), (4, 2))
    # 3 >= 2 >= 2 >= 0 interlaces, and no column gets two new cells
    assert is_horizontal_strip((2,), (3, 2))
    assert is_horizontal_strip((1, 1), (1, 1))
    assert is_horizontal_strip((1,), (1, 1))
    assert not is_horizontal_strip((1,), (1, 1, 1))
    assert not is_horizontal_strip((2,), (1, 1))


@given(parts(), parts(), parts())
def test_sum_is_commutative_and_associative(a, b, c):
    assert componentwise_sum(a, b) == componentwise_sum(b, a)
    assert componentwise_sum(componentwise_sum(a, b), c) == componentwise_sum(a, componentwise_sum(b, c))
    assert componentwise_sum(a, ()) == a


@given(st.lists(st.integers(1, 10**6), max_size=6), st.lists(st.integers(1, 10**6), max_size=6))
def test_sum_adds_weights(xs, ys):
    a, b = Partition(sorted(xs, reverse=True)), Partition(sorted(ys, reverse=True))
    assert componentwise_sum(a, b).weight == a.weight + b.weight


@given(parts(), st.integers(0, 15))
def test_prepend_row_weight_and_length(lam, extra):
    n = (lam[0] if lam else 1) + extra
    out = prepend_row(n, lam)
    assert out.weight == n + lam.weight
    assert out.length == lam.length + 1


def test_horizontal_strip_matches_column_count():
    shapes = [p for w in range(9) for p in partitions(w)]
    for inner in shapes:
        for outer in shapes:
            if sum(inner) + sum(outer) <= 12:
                assert is_horizontal_strip(inner, outer) == horizontal_strip_by_columns(inner, outer), (inner, outer)


def test_enumeration_and_ordering():
    assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(list(partitions_of(10))) == 42
    assert canonical_sort([(1, 1), (3,), (2,), (2, 1)]) == [(2,), (1, 1), (3,), (2, 1)]
