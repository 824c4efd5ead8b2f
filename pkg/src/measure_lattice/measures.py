"""Measures and signed measures on finite spaces, stored as atom weights.

A measure is determined by its weights on the atoms; its value on any
measurable set is the sum of the weights of the atoms in the set.  On a
finite sigma-algebra countable additivity reduces to finite additivity, and
both hold by construction here.

Set functions that are *not* known to be measures (e.g. the pointwise min of
two measures) are represented as a :class:`SetFunctionTable` and can be
tested with :func:`is_measure`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from .errors import SpaceMismatch, UndefinedDifference
from .extended_reals import (
    INF,
    ZERO,
    ExtNonneg,
    ExtSigned,
    ext_sum,
    sub_checked,
)
from .measurable_space import (
    MeasurableSet,
    MeasurableSpace,
    check_set_cap,
    enumerate_sets,
)

__all__ = [
    "Measure",
    "SignedMeasure",
    "SetFunctionTable",
    "AdditivityReport",
    "eval_measure",
    "leq",
    "leq_setwise",
    "zero_measure",
    "infinity_measure",
    "dirac",
    "add_measures",
    "scale",
    "sub_measures",
    "is_measure",
    "is_measure_pairwise",
]


def _subset_sums(weights: Sequence[ExtSigned], start: ExtSigned) -> tuple:
    # table[mask] = sum of weights of atoms in mask, built by peeling the lowest bit.
    table = [start] * (1 << len(weights))
    for mask in range(1, len(table)):
        low = mask & -mask
        table[mask] = table[mask ^ low] + weights[low.bit_length() - 1]
    return tuple(table)


def _payloads(m: _AtomWeighted) -> tuple:
    """Set values as plain numbers with ``math.inf`` standing for infinity.

    Used by the enumeration-heavy code paths.  Finite values stay exact
    ints/Fractions; a sum only becomes a float when an infinite term is
    present, and then it is exactly ``inf``.
    """
    cached = m.__dict__.get("_payloads")
    if cached is None:
        cached = tuple(math.inf if v.is_inf else v._q for v in m.set_values())
        m.__dict__["_payloads"] = cached
    return cached


def _from_payload(x) -> ExtNonneg:
    return ExtNonneg.inf() if isinstance(x, float) else ExtNonneg(x)


class _AtomWeighted:
    """Shared behaviour of measures and signed measures."""

    _value_type: type = ExtSigned
    _zero: ExtSigned = ZERO

    def __init__(self, space: MeasurableSpace, weights: Iterable):
        ws = tuple(w if isinstance(w, self._value_type) else self._value_type(w) for w in weights)
        if len(ws) != space.n:
            raise ValueError(f"expected {space.n} atom weights, got {len(ws)}")
        self._space = space
        self._weights = ws

    @classmethod
    def from_mapping(cls, space: MeasurableSpace, weights: Mapping[str, object]):
        """Build from ``{atom_name: weight}``; every atom must be present, no extras."""
        missing = [a for a in space.atom_names if a not in weights]
        if missing:
            raise ValueError(f"missing weights for atoms: {', '.join(missing)}")
        extra = sorted(set(weights) - set(space.atom_names))
        if extra:
            raise ValueError(f"weights given for unknown atoms: {', '.join(extra)}")
        return cls(space, [weights[a] for a in space.atom_names])

    @property
    def space(self) -> MeasurableSpace:
        return self._space

    @property
    def weights(self) -> tuple:
        return self._weights

    def weight(self, atom: str | int):
        i = atom if isinstance(atom, int) else self._space.index(atom)
        return self._weights[i]

    def as_mapping(self) -> dict[str, str]:
        return {a: str(w) for a, w in zip(self._space.atom_names, self._weights)}

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._space == other._space and self._weights == other._weights

    def __hash__(self):
        return hash((type(self).__name__, self._space, self._weights))

    def __repr__(self):
        body = ", ".join(f"{a}={w}" for a, w in zip(self._space.atom_names, self._weights))
        return f"{type(self).__name__}({body})"

    def __call__(self, a: MeasurableSet):
        return self.eval(a)

    def eval(self, a: MeasurableSet):
        if a.space != self._space:
            raise SpaceMismatch("set and measure belong to different spaces")
        table = self.__dict__.get("_table")
        if table is not None:
            return table[a.mask]
        return ext_sum((self._weights[i] for i in a.indices), self._zero)

    def set_values(self, cap: int | None = None) -> tuple:
        """Values on all 2^n sets, indexed by bitmask.  Cached after first use."""
        table = self.__dict__.get("_table")
        if table is None:
            check_set_cap(self._space.n, cap)
            table = _subset_sums(self._weights, self._zero)
            self.__dict__["_table"] = table
        return table


class Measure(_AtomWeighted):
    """A measure with values in [0, inf], given by its atom weights.

    >>> X = MeasurableSpace(["a", "b"])
    >>> mu = Measure(X, [1, 0])
    >>> mu(X.whole())
    ExtNonneg('1')
    """

    _value_type = ExtNonneg
    _zero = ZERO

    def table(self) -> SetFunctionTable:
        return SetFunctionTable(self._space, self.set_values())

    def is_finite(self) -> bool:
        return all(w.is_finite for w in self._weights)


class SignedMeasure(_AtomWeighted):
    """A signed measure with values in (-inf, inf]."""

    _value_type = ExtSigned
    _zero = ExtSigned(0)

    @classmethod
    def from_measure(cls, m: Measure) -> SignedMeasure:
        return cls(m.space, m.weights)

    def to_measure(self) -> Measure:
        """Reinterpret as a measure; ``ValueError`` if some atom is negative."""
        return Measure(self._space, [w.to_nonneg() for w in self._weights])


def eval_measure(m: _AtomWeighted, a: MeasurableSet):
    return m.eval(a)


def _check_same(m: _AtomWeighted, n: _AtomWeighted) -> None:
    if m.space != n.space:
        raise SpaceMismatch(f"measures live on different spaces: {m.space!r} vs {n.space!r}")


def leq(m: Measure, n: Measure) -> bool:
    """m <= n in the setwise order.

    Checked atom by atom: if every atom weight of m is at most that of n then
    every finite sum is too, and the singletons are themselves sets, so the
    two conditions coincide.  :func:`leq_setwise` is the literal definition.
    """
    _check_same(m, n)
    return all(a <= b for a, b in zip(m.weights, n.weights))


def leq_setwise(m: Measure, n: Measure, cap: int | None = None) -> bool:
    """m(A) <= n(A) for every measurable A, by enumeration."""
    _check_same(m, n)
    return all(m(a) <= n(a) for a in enumerate_sets(m.space, cap))


def zero_measure(space: MeasurableSpace) -> Measure:
    return Measure(space, [ZERO] * space.n)


def infinity_measure(space: MeasurableSpace) -> Measure:
    return Measure(space, [INF] * space.n)


def dirac(space: MeasurableSpace, atom: str | int) -> Measure:
    i = atom if isinstance(atom, int) else space.index(atom)
    return Measure(space, [1 if j == i else 0 for j in range(space.n)])


def add_measures(m: Measure, n: Measure) -> Measure:
    _check_same(m, n)
    return Measure(m.space, [a + b for a, b in zip(m.weights, n.weights)])


def scale(c, m: Measure) -> Measure:
    """Multiply by a finite nonnegative rational.  ``0 * inf`` is taken as 0."""
    c = Fraction(c)
    if c < 0:
        raise ValueError("scale factor must be nonnegative")
    if c == 0:
        return zero_measure(m.space)
    return Measure(m.space, [w if w.is_inf else ExtNonneg(w.value * c) for w in m.weights])


def sub_measures(n: _AtomWeighted, m: _AtomWeighted) -> SignedMeasure:
    """n - m atom by atom; every atom weight of m must be finite."""
    _check_same(n, m)
    out = []
    for i, (a, b) in enumerate(zip(n.weights, m.weights)):
        try:
            out.append(sub_checked(a, b))
        except UndefinedDifference as exc:
            name = n.space.atom_names[i]
            raise UndefinedDifference(f"at atom {name!r} (index {i}): {exc}", atom=i, atom_name=name) from None
    return SignedMeasure(n.space, out)


@dataclass(frozen=True)
class SetFunctionTable:
    """A raw set function: one value per measurable set, indexed by bitmask."""

    space: MeasurableSpace
    values: tuple[ExtNonneg, ...]

    def __post_init__(self):
        vals = tuple(v if isinstance(v, ExtNonneg) else ExtNonneg(v) for v in self.values)
        if len(vals) != 1 << self.space.n:
            raise ValueError(f"expected {1 << self.space.n} entries, got {len(vals)}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_function(cls, space: MeasurableSpace, f) -> SetFunctionTable:
        return cls(space, tuple(f(s) for s in enumerate_sets(space)))

    def __getitem__(self, a: MeasurableSet) -> ExtNonneg:
        if a.space != self.space:
            raise SpaceMismatch("set belongs to a different space")
        return self.values[a.mask]

    @classmethod
    def pointwise_min(cls, m: Measure, n: Measure) -> SetFunctionTable:
        _check_same(m, n)
        return cls(m.space, tuple(map(min, m.set_values(), n.set_values())))

    @classmethod
    def pointwise_max(cls, m: Measure, n: Measure) -> SetFunctionTable:
        _check_same(m, n)
        return cls(m.space, tuple(map(max, m.set_values(), n.set_values())))


@dataclass(frozen=True)
class AdditivityReport:
    """Outcome of an additivity check.

    On failure ``witness`` is the offending set, ``parts`` the table values
    whose sum should have equalled ``total = t(witness)``.  For the pairwise
    check ``parts`` holds ``t(A), t(B)`` and ``witness`` is ``A | B``, with the
    disjoint pair in ``pair``.
    """

    ok: bool
    witness: MeasurableSet | None = None
    parts: tuple[ExtNonneg, ...] = ()
    total: ExtNonneg | None = None
    pair: tuple[MeasurableSet, MeasurableSet] | None = None

    def __bool__(self):
        return self.ok

    @property
    def parts_sum(self) -> ExtNonneg:
        return ext_sum(self.parts)

    def describe(self) -> str:
        """``0 + 0 != 1`` style mismatch text, or ``ok``."""
        if self.ok:
            return "ok"
        lhs = " + ".join(str(p) for p in self.parts) if self.parts else "0"
        return f"{lhs} != {self.total}"


def is_measure(t: SetFunctionTable) -> AdditivityReport:
    """Is *t* the set function of some measure?

    On a finite atomic algebra this holds iff ``t(empty) = 0`` and every set's
    value equals the sum of its atoms' values.  Sets are scanned in bitmask
    order and the first failure is reported.
    """
    space = t.space
    if t.values[0] != ZERO:
        return AdditivityReport(False, space.empty(), (), t.values[0])
    atoms = [t.values[1 << i] for i in range(space.n)]
    for mask in range(1, 1 << space.n):
        members = [i for i in range(space.n) if mask >> i & 1]
        if len(members) == 1:
            continue
        parts = tuple(atoms[i] for i in members)
        if ext_sum(parts) != t.values[mask]:
            return AdditivityReport(False, MeasurableSet(space, mask), parts, t.values[mask])
    return AdditivityReport(True)


def is_measure_pairwise(t: SetFunctionTable) -> AdditivityReport:
    """Literal finite additivity: ``t(A | B) = t(A) + t(B)`` for all disjoint A, B.

    Quadratic in the number of sets; kept as a cross-check for :func:`is_measure`.
    """
    space = t.space
    check_set_cap(space.n, 10)
    if t.values[0] != ZERO:
        return AdditivityReport(False, space.empty(), (), t.values[0])
    size = 1 << space.n
    for a, b in product(range(size), repeat=2):
        if a & b:
            continue
        if t.values[a] + t.values[b] != t.values[a | b]:
            return AdditivityReport(
                False,
                MeasurableSet(space, a | b),
                (t.values[a], t.values[b]),
                t.values[a | b],
                (MeasurableSet(space, a), MeasurableSet(space, b)),
            )
    return AdditivityReport(True)
