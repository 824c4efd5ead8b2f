"""Brute-force evaluation of the inf/sup formulas defining meets and joins.

Nothing here uses the atom-wise min/max shortcut from :mod:`.lattice`.  The
binary oracles scan every measurable ``B``; the family oracles scan every
partition of the atoms into nonempty blocks crossed with every way of
attaching a family member to each block.  Each returns the optimum together
with a witness attaining it; ties go to the first candidate in enumeration
order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Any

from .errors import SpaceMismatch, TooLargeToEnumerate
from .extended_reals import ExtNonneg
from .measurable_space import (
    MeasurableSet,
    Partition,
    check_set_cap,
    enumerate_partitions,
)
from .measures import Measure, _from_payload, _payloads, leq
from .lattice import PartitionAssignment, _as_family

__all__ = [
    "FAMILY_MAX_ATOMS",
    "FAMILY_MAX_MEMBERS",
    "OracleResult",
    "FamilyBounds",
    "BoundCheck",
    "oracle_meet2",
    "oracle_join2",
    "oracle_family_meet",
    "oracle_family_join",
    "oracle_family_bounds",
    "oracle_is_glb",
    "oracle_is_lub",
]

FAMILY_MAX_ATOMS = 6
FAMILY_MAX_MEMBERS = 4


@dataclass(frozen=True)
class OracleResult:
    value: ExtNonneg
    witness: Any  # MeasurableSet for binary oracles, PartitionAssignment for families


@dataclass(frozen=True)
class FamilyBounds:
    meet: OracleResult
    join: OracleResult


def _nth_product(k: int, length: int, index: int) -> tuple[int, ...]:
    # Inverse of the position in itertools.product(range(k), repeat=length).
    digits = []
    for _ in range(length):
        index, d = divmod(index, k)
        digits.append(d)
    return tuple(reversed(digits))


def _binary(m: Measure, n: Measure, a: MeasurableSet, cap, pick_min: bool) -> OracleResult:
    if m.space != n.space or a.space != m.space:
        raise SpaceMismatch("oracle operands belong to different spaces")
    check_set_cap(m.space.n, cap)
    tm, tn = _payloads(m), _payloads(n)
    full = m.space.full_mask
    inside = a.mask
    best = best_b = None
    for b in range(full + 1):
        v = tm[inside & b] + tn[inside & ~b & full]
        if best is None or (v < best if pick_min else v > best):
            best, best_b = v, b
    return OracleResult(_from_payload(best), MeasurableSet(m.space, best_b))


def oracle_meet2(m: Measure, n: Measure, a: MeasurableSet, cap: int | None = None) -> OracleResult:
    """min over measurable B of ``m(A & B) + n(A - B)``."""
    return _binary(m, n, a, cap, True)


def oracle_join2(m: Measure, n: Measure, a: MeasurableSet, cap: int | None = None) -> OracleResult:
    """max over measurable B of ``m(A & B) + n(A - B)``."""
    return _binary(m, n, a, cap, False)


@lru_cache(maxsize=None)
def _partition_masks(space) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(b.mask for b in p.blocks) for p in enumerate_partitions(space, cap=space.n))


def oracle_family_bounds(
    f, a: MeasurableSet, max_atoms: int | None = None, max_members: int | None = None
) -> FamilyBounds:
    """Both the inf and the sup over partition/assignment pairs, in one scan."""
    f = _as_family(f)
    space = f.space
    if a.space != space:
        raise SpaceMismatch("set and family belong to different spaces")
    max_atoms = FAMILY_MAX_ATOMS if max_atoms is None else max_atoms
    max_members = FAMILY_MAX_MEMBERS if max_members is None else max_members
    if space.n > max_atoms:
        raise TooLargeToEnumerate(f"{space.n} atoms exceed the family-oracle cap of {max_atoms}")
    if len(f) > max_members:
        raise TooLargeToEnumerate(f"{len(f)} family members exceed the family-oracle cap of {max_members}")

    tables = [_payloads(m) for m in f]
    lo = hi = None
    lo_at = hi_at = None
    for pi, blocks in enumerate(_partition_masks(space)):
        # columns[b][j] = value of member j on (A & block b); each element of
        # the product is one label assignment, i.e. one candidate in the scan.
        columns = [[t[a.mask & b] for t in tables] for b in blocks]
        for ci, terms in enumerate(product(*columns)):
            v = sum(terms)
            if lo is None or v < lo:
                lo, lo_at = v, (pi, ci)
            if hi is None or v > hi:
                hi, hi_at = v, (pi, ci)

    def witness(at):
        pi, ci = at
        blocks = _partition_masks(space)[pi]
        choice = _nth_product(len(tables), len(blocks), ci)
        part = Partition(space, tuple(MeasurableSet(space, b) for b in blocks))
        return PartitionAssignment(part, [f.labels[j] for j in choice], f)

    return FamilyBounds(
        OracleResult(_from_payload(lo), witness(lo_at)), OracleResult(_from_payload(hi), witness(hi_at))
    )


def oracle_family_meet(f, a: MeasurableSet, max_atoms: int | None = None, max_members: int | None = None) -> OracleResult:
    """inf over partitions with attached members of ``sum_n f[label_n](A & B_n)``."""
    return oracle_family_bounds(f, a, max_atoms, max_members).meet


def oracle_family_join(f, a: MeasurableSet, max_atoms: int | None = None, max_members: int | None = None) -> OracleResult:
    """sup over partitions with attached members of ``sum_n f[label_n](A & B_n)``."""
    return oracle_family_bounds(f, a, max_atoms, max_members).join


@dataclass(frozen=True)
class BoundCheck:
    ok: bool
    counterexample: Measure | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


_GRID = 8


def _below(rng: random.Random, top: ExtNonneg) -> ExtNonneg:
    k = rng.randint(0, _GRID)
    if top.is_inf:
        return ExtNonneg.inf() if k == _GRID else ExtNonneg(k)
    return ExtNonneg(top.value * k / _GRID)


def _above(rng: random.Random, bottom: ExtNonneg) -> ExtNonneg:
    k = rng.randint(0, _GRID)
    if bottom.is_inf or k == _GRID:
        return ExtNonneg.inf()
    return ExtNonneg(bottom.value + Fraction(k, _GRID) * rng.randint(0, _GRID))


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def oracle_is_glb(candidate: Measure, f, samples: int = 1000, seed=0) -> BoundCheck:
    """Check that *candidate* is a lower bound of *f* dominating sampled lower bounds.

    Lower bounds are drawn atom by atom from a grid between zero and the
    smallest member weight at that atom (endpoints included).
    """
    f = _as_family(f)
    for label, m in f.items():
        if not leq(candidate, m):
            return BoundCheck(False, None, f"candidate is not below member {label!r}")
    rng = _rng(seed)
    floor = [min(ws) for ws in zip(*(m.weights for m in f))]
    for _ in range(samples):
        rho = Measure(f.space, [_below(rng, t) for t in floor])
        if not leq(rho, candidate):
            return BoundCheck(False, rho, "a common lower bound is not below the candidate")
    return BoundCheck(True)


def oracle_is_lub(candidate: Measure, f, samples: int = 1000, seed=0) -> BoundCheck:
    """Dual of :func:`oracle_is_glb` with upper bounds drawn above the atom-wise max."""
    f = _as_family(f)
    for label, m in f.items():
        if not leq(m, candidate):
            return BoundCheck(False, None, f"candidate is not above member {label!r}")
    rng = _rng(seed)
    ceiling = [max(ws) for ws in zip(*(m.weights for m in f))]
    for _ in range(samples):
        rho = Measure(f.space, [_above(rng, t) for t in ceiling])
        if not leq(candidate, rho):
            return BoundCheck(False, rho, "a common upper bound is not above the candidate")
    return BoundCheck(True)
