"""Meets and joins in the lattice of measures.

The greatest lower bound of two measures is

    (mu ^ nu)(A) = inf over measurable B of  mu(A & B) + nu(A - B)

and for a family the infimum runs over measurable partitions of X with a
family member attached to each block.  On a finite atomic space the optimum
is always attained by sending each atom to whichever member is smallest
there, so the meet is the atom-wise minimum of the weights (dually the join
is the atom-wise maximum).  That reduction is what runs here; the literal
inf/sup formulas live in :mod:`measure_lattice.oracle` and the test suite
checks the two against each other.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import EmptyFamily, SpaceMismatch, TooLargeToEnumerate
from .extended_reals import ExtNonneg
from .measurable_space import (
    SET_ENUMERATION_CAP,
    MeasurableSet,
    MeasurableSpace,
    Partition,
)
from .measures import Measure, _from_payload, _payloads, add_measures, sub_measures
from .decomposition import jordan_decompose

__all__ = [
    "INDEX_PARTITION_CAP",
    "MeasureFamily",
    "PartitionAssignment",
    "meet2",
    "join2",
    "meet_family",
    "join_family",
    "index_partition_formula",
    "meet_via_jordan",
    "join_via_jordan",
]

# Max number of atom -> label functions index_partition_formula will scan.
INDEX_PARTITION_CAP = 1 << SET_ENUMERATION_CAP


class MeasureFamily:
    """A nonempty finite family of measures on one space, keyed by distinct labels.

    Built from a mapping ``{label: measure}`` or from a sequence of measures,
    in which case the labels are ``1, 2, ...`` in order.
    """

    def __init__(self, members: Mapping[Hashable, Measure] | Sequence[Measure]):
        if isinstance(members, Mapping):
            items = list(members.items())
        else:
            items = list(enumerate(members, start=1))
        if not items:
            raise EmptyFamily("a measure family needs at least one member")
        space = items[0][1].space
        for label, m in items:
            if not isinstance(m, Measure):
                raise TypeError(f"family member {label!r} is not a Measure")
            if m.space != space:
                raise SpaceMismatch(f"family member {label!r} lives on a different space")
        self._space = space
        self._labels = tuple(label for label, _ in items)
        self._members = tuple(m for _, m in items)

    @property
    def space(self) -> MeasurableSpace:
        return self._space

    @property
    def labels(self) -> tuple:
        return self._labels

    @property
    def members(self) -> tuple[Measure, ...]:
        return self._members

    def __getitem__(self, label) -> Measure:
        return self._members[self._labels.index(label)]

    def __len__(self) -> int:
        return len(self._members)

    def __iter__(self) -> Iterator[Measure]:
        return iter(self._members)

    def items(self):
        return zip(self._labels, self._members)

    def __repr__(self):
        return "MeasureFamily({" + ", ".join(f"{l!r}: {m!r}" for l, m in self.items()) + "})"


def _as_family(f) -> MeasureFamily:
    if isinstance(f, MeasureFamily):
        return f
    members = list(f) if not isinstance(f, Mapping) else f
    if not members:
        raise EmptyFamily("cannot take the meet or join of an empty family")
    return MeasureFamily(members)


class PartitionAssignment:
    """A partition of X with one family label attached to each block."""

    def __init__(self, partition: Partition, assignment: Sequence[Hashable], family: MeasureFamily | None = None):
        assignment = tuple(assignment)
        if len(assignment) != len(partition.blocks):
            raise ValueError(
                f"{len(partition.blocks)} blocks but {len(assignment)} labels assigned"
            )
        if family is not None:
            unknown = [l for l in assignment if l not in family.labels]
            if unknown:
                raise KeyError(f"labels not in the family: {unknown!r}")
        self.partition = partition
        self.assignment = assignment

    def value(self, family: MeasureFamily, a: MeasurableSet) -> ExtNonneg:
        """Sum over blocks of ``family[label](a & block)``."""
        total = ExtNonneg(0)
        for block, label in zip(self.partition.blocks, self.assignment):
            total = total + family[label](a & block)
        return total

    def __eq__(self, other):
        if not isinstance(other, PartitionAssignment):
            return NotImplemented
        return self.partition == other.partition and self.assignment == other.assignment

    def __hash__(self):
        return hash((self.partition, self.assignment))

    def __repr__(self):
        pairs = ", ".join(f"{b!r}->{l!r}" for b, l in zip(self.partition.blocks, self.assignment))
        return f"PartitionAssignment({pairs})"


def _pair(m: Measure, n: Measure) -> None:
    if m.space != n.space:
        raise SpaceMismatch(f"measures live on different spaces: {m.space!r} vs {n.space!r}")


def meet2(m: Measure, n: Measure) -> Measure:
    """Greatest lower bound of two measures."""
    _pair(m, n)
    return Measure(m.space, [min(a, b) for a, b in zip(m.weights, n.weights)])


def join2(m: Measure, n: Measure) -> Measure:
    """Least upper bound of two measures."""
    _pair(m, n)
    return Measure(m.space, [max(a, b) for a, b in zip(m.weights, n.weights)])


def meet_family(f: MeasureFamily | Iterable[Measure]) -> Measure:
    """Greatest lower bound of a finite family."""
    f = _as_family(f)
    return Measure(f.space, [min(ws) for ws in zip(*(m.weights for m in f))])


def join_family(f: MeasureFamily | Iterable[Measure]) -> Measure:
    """Least upper bound of a finite family."""
    f = _as_family(f)
    return Measure(f.space, [max(ws) for ws in zip(*(m.weights for m in f))])


def index_partition_formula(
    f: MeasureFamily | Iterable[Measure], a: MeasurableSet, cap: int | None = None
) -> ExtNonneg:
    """Infimum of ``sum over labels of f[label](A & B_label)`` over partitions
    ``{B_label}`` of X indexed by the family (blocks may be empty).

    Equivalently: over every function sending each atom to one label.  With
    finitely many labels this agrees with :func:`meet_family`; the formula
    only goes wrong for uncountable index sets, which cannot be built here.
    """
    f = _as_family(f)
    if a.space != f.space:
        raise SpaceMismatch("set and family belong to different spaces")
    n, k = f.space.n, len(f)
    cap = INDEX_PARTITION_CAP if cap is None else cap
    if k ** n > cap:
        raise TooLargeToEnumerate(f"{k}^{n} atom-to-label assignments exceed the cap of {cap}")
    tables = [_payloads(m) for m in f]
    best = min(
        sum(t[a.mask & b] for t, b in zip(tables, blocks)) for blocks in _label_functions(n, k)
    )
    return _from_payload(best)


@lru_cache(maxsize=64)
def _label_functions(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    # Every map atoms -> labels, as the k block masks {B_label} it induces.
    out = []
    for choice in product(range(k), repeat=n):
        blocks = [0] * k
        for atom, j in enumerate(choice):
            blocks[j] |= 1 << atom
        out.append(tuple(blocks))
    return tuple(out)


def meet_via_jordan(m: Measure, n: Measure) -> Measure:
    """``m - (n - m)^-``, defined when every atom weight of m is finite."""
    _pair(m, n)
    diff = sub_measures(n, m)  # raises UndefinedDifference at the first infinite atom of m
    negative = jordan_decompose(diff).negative
    # negative <= m atom-wise and both are finite, so this subtraction never
    # meets inf - inf and never goes below zero.
    return sub_measures(m, negative).to_measure()


def join_via_jordan(m: Measure, n: Measure) -> Measure:
    """``m + (n - m)^+``, defined when every atom weight of m is finite."""
    _pair(m, n)
    diff = sub_measures(n, m)
    return add_measures(m, jordan_decompose(diff).positive)
