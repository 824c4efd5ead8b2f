from itertools import product

import pytest

from measure_lattice import (
    MeasurableSet,
    MeasurableSpace,
    Partition,
    SpaceMismatch,
    TooLargeToEnumerate,
    bell_number,
    complement,
    enumerate_partitions,
    enumerate_sets,
    intersect,
    is_disjoint,
    union,
)

from conftest import space_of

X = MeasurableSpace(["a", "b", "c"])


def test_set_algebra_examples():
    ab, bc = X.set_of("ab"), X.set_of("bc")
    assert intersect(ab, bc) == X.set_of("b")
    assert complement(X.empty()) == X.whole()
    assert intersect(ab, complement(ab)) == X.empty()
    assert union(ab, bc) == X.whole()
    assert is_disjoint(X.set_of("a"), X.set_of("bc"))
    assert not is_disjoint(ab, bc)


def test_operators_match_functions():
    ab, bc = X.set_of("ab"), X.set_of("bc")
    assert ab & bc == intersect(ab, bc)
    assert ab | bc == union(ab, bc)
    assert ~ab == complement(ab)
    assert ab - bc == X.set_of("a")


def test_space_mismatch():
    other = MeasurableSpace(["a", "b"])
    with pytest.raises(SpaceMismatch):
        intersect(X.set_of("a"), other.set_of("a"))
    with pytest.raises(SpaceMismatch):
        is_disjoint(X.empty(), other.empty())


def test_space_validation():
    with pytest.raises(ValueError):
        MeasurableSpace(["a", "a"])
    with pytest.raises(ValueError):
        MeasurableSpace(["a", ""])
    with pytest.raises(ValueError):
        MeasurableSet(space_of(2), 4)


def test_enumerate_sets_examples():
    two = MeasurableSpace(["a", "b"])
    assert [s.names for s in enumerate_sets(two)] == [(), ("a",), ("b",), ("a", "b")]
    assert [s.mask for s in enumerate_sets(space_of(0))] == [0]
    assert len({s for s in enumerate_sets(X)}) == 8


def test_enumerate_sets_cap():
    with pytest.raises(TooLargeToEnumerate):
        enumerate_sets(space_of(21))
    with pytest.raises(TooLargeToEnumerate):
        enumerate_sets(space_of(5), cap=4)


def test_enumerate_partitions_examples():
    two = MeasurableSpace(["a", "b"])
    parts = [[b.names for b in p] for p in enumerate_partitions(two)]
    assert parts == [[("a", "b")], [("a",), ("b",)]]
    assert len(list(enumerate_partitions(X))) == 5
    assert [len(p) for p in enumerate_partitions(space_of(0))] == [0]


def test_enumerate_partitions_cap():
    with pytest.raises(TooLargeToEnumerate):
        enumerate_partitions(space_of(9))


@pytest.mark.parametrize("n,bell", list(enumerate([1, 1, 2, 5, 15, 52, 203])))
def test_bell_counts(n, bell):
    parts = list(enumerate_partitions(space_of(n)))
    assert len(parts) == bell == bell_number(n)
    canon = {frozenset(b.mask for b in p) for p in parts}
    assert len(canon) == bell
    for p in parts:
        assert sum(len(b) for b in p) == n
        assert all(len(b) > 0 for b in p)


@pytest.mark.parametrize("n", range(6))
def test_de_morgan_exhaustive(n):
    sp = space_of(n)
    sets = list(enumerate_sets(sp))
    for a, b in product(sets, repeat=2):
        assert ~(a | b) == ~a & ~b
        assert ~(a & b) == ~a | ~b


def test_partition_validation():
    two = MeasurableSpace(["a", "b"])
    Partition(two, (two.whole(), two.empty()))  # empty blocks are fine
    with pytest.raises(ValueError):
        Partition(two, (two.set_of("a"),))
    with pytest.raises(ValueError):
        Partition(two, (two.whole(), two.set_of("a")))


def test_set_expression_rendering():
    assert X.empty().to_expression() == "empty"
    assert X.set_of("ca").to_expression() == "a|c"
