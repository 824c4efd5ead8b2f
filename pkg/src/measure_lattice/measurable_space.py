"""Finite measurable spaces presented by their atoms.

Every finite sigma-algebra is generated by a partition of X into atoms, so a
space is just an ordered list of atom names and a measurable set is a subset
of atom indices, stored as an int bitmask (bit ``i`` set means atom ``i`` is
in the set).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import SpaceMismatch, TooLargeToEnumerate

__all__ = [
    "SET_ENUMERATION_CAP",
    "PARTITION_ENUMERATION_CAP",
    "MeasurableSpace",
    "MeasurableSet",
    "Partition",
    "intersect",
    "union",
    "complement",
    "is_disjoint",
    "enumerate_sets",
    "enumerate_partitions",
    "bell_number",
]

SET_ENUMERATION_CAP = 20
PARTITION_ENUMERATION_CAP = 8


@dataclass(frozen=True)
class MeasurableSpace:
    atom_names: tuple[str, ...]

    def __init__(self, atom_names: Iterable[str]):
        names = tuple(atom_names)
        for name in names:
            if not isinstance(name, str) or not name:
                raise ValueError(f"atom names must be nonempty strings, got {name!r}")
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise ValueError(f"duplicate atom names: {', '.join(dupes)}")
        object.__setattr__(self, "atom_names", names)

    def __len__(self) -> int:
        return len(self.atom_names)

    @property
    def n(self) -> int:
        return len(self.atom_names)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.atom_names)) - 1

    def index(self, name: str) -> int:
        try:
            return self.atom_names.index(name)
        except ValueError:
            raise KeyError(f"unknown atom {name!r}") from None

    def empty(self) -> MeasurableSet:
        return MeasurableSet(self, 0)

    def whole(self) -> MeasurableSet:
        return MeasurableSet(self, self.full_mask)

    def atom(self, name_or_index: str | int) -> MeasurableSet:
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        if not 0 <= i < self.n:
            raise IndexError(f"atom index {i} out of range for {self.n} atoms")
        return MeasurableSet(self, 1 << i)

    def set_of(self, members: Iterable[str | int]) -> MeasurableSet:
        """Build a set from atom names and/or indices."""
        mask = 0
        for m in members:
            mask |= self.atom(m).mask
        return MeasurableSet(self, mask)

    def __repr__(self):
        return f"MeasurableSpace({list(self.atom_names)!r})"


@dataclass(frozen=True)
class MeasurableSet:
    space: MeasurableSpace
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask > self.space.full_mask:
            raise ValueError(f"mask {self.mask:#x} has bits outside the {self.space.n} atoms")

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.space.n) if self.mask >> i & 1)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.space.atom_names[i] for i in self.indices)

    def is_empty(self) -> bool:
        return self.mask == 0

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __contains__(self, atom: str | int) -> bool:
        i = atom if isinstance(atom, int) else self.space.index(atom)
        return bool(self.mask >> i & 1)

    def issubset(self, other: MeasurableSet) -> bool:
        _same_space(self, other)
        return self.mask & ~other.mask == 0

    def __and__(self, other):
        return intersect(self, other)

    def __or__(self, other):
        return union(self, other)

    def __invert__(self):
        return complement(self)

    def __sub__(self, other):
        return intersect(self, complement(other))

    def __repr__(self):
        return "{" + ", ".join(self.names) + "}"

    def to_expression(self) -> str:
        """Render in the set-expression grammar (``empty`` or ``a|b|...``)."""
        return "|".join(self.names) if self.mask else "empty"


def _same_space(a: MeasurableSet, b: MeasurableSet) -> None:
    if a.space != b.space:
        raise SpaceMismatch(f"sets belong to different spaces: {a.space!r} vs {b.space!r}")


def intersect(a: MeasurableSet, b: MeasurableSet) -> MeasurableSet:
    _same_space(a, b)
    return MeasurableSet(a.space, a.mask & b.mask)


def union(a: MeasurableSet, b: MeasurableSet) -> MeasurableSet:
    _same_space(a, b)
    return MeasurableSet(a.space, a.mask | b.mask)


def complement(a: MeasurableSet) -> MeasurableSet:
    return MeasurableSet(a.space, a.space.full_mask & ~a.mask)


def is_disjoint(a: MeasurableSet, b: MeasurableSet) -> bool:
    _same_space(a, b)
    return a.mask & b.mask == 0


def check_set_cap(n: int, cap: int | None) -> None:
    cap = SET_ENUMERATION_CAP if cap is None else cap
    if n > cap:
        raise TooLargeToEnumerate(
            f"{n} atoms give 2^{n} measurable sets; the enumeration cap is {cap} atoms"
        )


def enumerate_sets(space: MeasurableSpace, cap: int | None = None) -> Iterator[MeasurableSet]:
    """Yield all 2^n measurable sets in ascending bitmask order."""
    check_set_cap(space.n, cap)
    return (MeasurableSet(space, mask) for mask in range(1 << space.n))


def submasks(mask: int) -> Iterator[int]:
    """All submasks of *mask*, ascending."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


@dataclass(frozen=True)
class Partition:
    """A finite measurable partition of X.  Empty blocks are allowed."""

    space: MeasurableSpace
    blocks: tuple[MeasurableSet, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        seen = 0
        for b in self.blocks:
            if b.space != self.space:
                raise SpaceMismatch("partition block belongs to another space")
            if b.mask & seen:
                raise ValueError(f"partition blocks overlap at {MeasurableSet(self.space, b.mask & seen)!r}")
            seen |= b.mask
        if seen != self.space.full_mask:
            missing = MeasurableSet(self.space, self.space.full_mask & ~seen)
            raise ValueError(f"partition blocks do not cover X; missing {missing!r}")

    @classmethod
    def from_labels(cls, space: MeasurableSpace, labels: Sequence[int]) -> Partition:
        """Build from a restricted growth string: ``labels[i]`` is atom i's block."""
        count = max(labels, default=-1) + 1
        masks = [0] * count
        for i, b in enumerate(labels):
            masks[b] |= 1 << i
        return cls(space, tuple(MeasurableSet(space, m) for m in masks))

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __repr__(self):
        return "[" + ", ".join(repr(b) for b in self.blocks) + "]"


def _restricted_growth_strings(n: int) -> Iterator[list[int]]:
    # Lexicographic order: a[0] = 0 and a[i] <= 1 + max(a[:i]).
    if n == 0:
        yield []
        return
    a = [0] * n
    mx = [0] * n  # mx[i] = max(a[:i+1])
    while True:
        yield list(a)
        i = n - 1
        while i > 0 and a[i] > mx[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        mx[i] = max(mx[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            mx[j] = mx[i]


def enumerate_partitions(space: MeasurableSpace, cap: int | None = None) -> Iterator[Partition]:
    """Yield every partition of the atoms into nonempty blocks, Bell(n) in total.

    Order is lexicographic in the restricted growth string, so the one-block
    partition comes first and the all-singletons partition last.
    """
    cap = PARTITION_ENUMERATION_CAP if cap is None else cap
    if space.n > cap:
        raise TooLargeToEnumerate(
            f"{space.n} atoms give Bell({space.n}) partitions; the partition cap is {cap} atoms"
        )
    return (Partition.from_labels(space, rgs) for rgs in _restricted_growth_strings(space.n))


def bell_number(n: int) -> int:
    """Bell numbers via the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]
