"""Hahn and Jordan decompositions of signed measures on finite spaces."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SpaceMismatch
from .extended_reals import ExtSigned, neg_part, pos_part
from .measurable_space import MeasurableSet, check_set_cap, submasks
from .measures import Measure, SignedMeasure, sub_measures

__all__ = [
    "HahnDecomposition",
    "JordanPair",
    "hahn_decompose",
    "jordan_decompose",
    "sup_over_subsets",
    "inf_over_subsets",
]


@dataclass(frozen=True)
class HahnDecomposition:
    positive_set: MeasurableSet
    negative_set: MeasurableSet

    def __post_init__(self):
        p, q = self.positive_set, self.negative_set
        if p.space != q.space or p.mask & q.mask or p.mask | q.mask != p.space.full_mask:
            raise ValueError("Hahn sets must partition X")


@dataclass(frozen=True)
class JordanPair:
    """``s = positive - negative`` with the two parts mutually singular."""

    positive: Measure
    negative: Measure

    def __post_init__(self):
        for i, (p, q) in enumerate(zip(self.positive.weights, self.negative.weights)):
            if p.is_inf or p.value != 0:
                if q.is_inf or q.value != 0:
                    raise ValueError(f"parts overlap at atom {i}; not mutually singular")

    def reconstruct(self) -> SignedMeasure:
        # negative is finite-valued, so the subtraction is always defined
        return sub_measures(self.positive, self.negative)


def hahn_decompose(s: SignedMeasure) -> HahnDecomposition:
    """Split X into atoms of weight >= 0 and atoms of weight < 0.

    Zero-weight atoms go to the positive set.
    """
    space = s.space
    pos = 0
    for i, w in enumerate(s.weights):
        if w >= ExtSigned(0):
            pos |= 1 << i
    return HahnDecomposition(MeasurableSet(space, pos), MeasurableSet(space, space.full_mask & ~pos))


def jordan_decompose(s: SignedMeasure) -> JordanPair:
    return JordanPair(
        Measure(s.space, [pos_part(w) for w in s.weights]),
        Measure(s.space, [neg_part(w) for w in s.weights]),
    )


def _subset_values(s: SignedMeasure, a: MeasurableSet, cap: int | None):
    if a.space != s.space:
        raise SpaceMismatch("set and signed measure belong to different spaces")
    check_set_cap(len(a), cap)
    return (s(MeasurableSet(s.space, e)) for e in submasks(a.mask))


def sup_over_subsets(s: SignedMeasure, a: MeasurableSet, cap: int | None = None) -> ExtSigned:
    """max of ``s(E)`` over all measurable ``E`` inside ``a`` (by enumeration)."""
    return max(_subset_values(s, a, cap))


def inf_over_subsets(s: SignedMeasure, a: MeasurableSet, cap: int | None = None) -> ExtSigned:
    """min of ``s(E)`` over all measurable ``E`` inside ``a`` (by enumeration)."""
    return min(_subset_values(s, a, cap))
