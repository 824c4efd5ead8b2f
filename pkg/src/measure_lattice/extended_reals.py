"""Exact arithmetic on [0, inf] and (-inf, inf].

Finite values are held as exact rationals.  Integral values are stored as
plain ``int`` (which compares and hashes equal to the matching ``Fraction``)
because that keeps the exhaustive oracles fast on integer grids.

There is no negative infinity: ``ExtSigned`` only ever holds a rational or
``+inf``, and any operation that would leave that range raises
:class:`~measure_lattice.errors.UndefinedDifference`.
"""

from __future__ import annotations

import functools
import re
from fractions import Fraction
from typing import Iterable, Union

from .errors import UndefinedDifference

__all__ = [
    "ExtSigned",
    "ExtNonneg",
    "ZERO",
    "ONE",
    "INF",
    "add",
    "sub_checked",
    "ext_sum",
    "pos_part",
    "neg_part",
    "parse_ext",
    "format_ext",
]

Rational = Union[int, Fraction]

_TEXT_RE = re.compile(r"-?\d+(?:/\d+)?")


def _normalize(q: Rational) -> Rational:
    if type(q) is Fraction and q.denominator == 1:
        return q.numerator
    return q


def _coerce(value) -> Rational | None:
    """Turn user input into a normalized rational payload (None = +inf)."""
    if isinstance(value, ExtSigned):
        return value._q
    if isinstance(value, bool):
        raise TypeError("booleans are not extended reals")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return _normalize(value)
    if isinstance(value, str):
        return parse_ext(value, signed=True)._q
    raise TypeError(
        f"cannot build an exact extended real from {type(value).__name__}; "
        "use int, Fraction, str or 'inf'"
    )


@functools.total_ordering
class ExtSigned:
    """A value in (-inf, inf]: an exact rational or positive infinity."""

    __slots__ = ("_q",)

    def __init__(self, value: Rational | str | ExtSigned = 0):
        self._q = _coerce(value)

    @classmethod
    def _raw(cls, q: Rational | None) -> ExtSigned:
        obj = object.__new__(cls)
        obj._q = q
        return obj

    @classmethod
    def inf(cls):
        return cls._raw(None)

    @property
    def is_inf(self) -> bool:
        return self._q is None

    @property
    def is_finite(self) -> bool:
        return self._q is not None

    @property
    def value(self) -> Fraction:
        """The finite payload as a ``Fraction``; raises for infinity."""
        if self._q is None:
            raise ValueError("infinity has no finite value")
        return Fraction(self._q)

    def __eq__(self, other):
        if isinstance(other, ExtSigned):
            return self._q == other._q
        return NotImplemented

    def __lt__(self, other):
        if not isinstance(other, ExtSigned):
            return NotImplemented
        if self._q is None:
            return False
        if other._q is None:
            return True
        return self._q < other._q

    def __hash__(self):
        return hash(("ext", self._q))

    def __add__(self, other):
        if not isinstance(other, ExtSigned):
            return NotImplemented
        # Nonneg + Nonneg stays nonneg; anything involving a signed value is signed.
        cls = ExtNonneg if (type(self) is ExtNonneg and type(other) is ExtNonneg) else ExtSigned
        a, b = self._q, other._q
        if a is None or b is None:
            return cls._raw(None)
        return cls._raw(_normalize(a + b))

    def __sub__(self, other):
        if not isinstance(other, ExtSigned):
            return NotImplemented
        return sub_checked(self, other)

    def __neg__(self):
        if self._q is None:
            raise UndefinedDifference("-inf is not representable")
        return ExtSigned._raw(-self._q)

    def __str__(self):
        return format_ext(self)

    def __repr__(self):
        return f"{type(self).__name__}({format_ext(self)!r})"

    def __reduce__(self):
        return (type(self), (format_ext(self),))

    def to_nonneg(self) -> ExtNonneg:
        """Reinterpret as a nonnegative value; raises ``ValueError`` if negative."""
        if self._q is not None and self._q < 0:
            raise ValueError(f"{self} is negative")
        return ExtNonneg._raw(self._q)


class ExtNonneg(ExtSigned):
    """A value in [0, inf].

    Being a subclass of :class:`ExtSigned` is the lossless embedding: every
    ``ExtNonneg`` can be used wherever a signed value is expected.
    """

    __slots__ = ()

    def __init__(self, value: Rational | str | ExtSigned = 0):
        q = _coerce(value)
        if q is not None and q < 0:
            raise ValueError(f"negative value {q} is not in [0, inf]")
        self._q = q


ZERO = ExtNonneg(0)
ONE = ExtNonneg(1)
INF = ExtNonneg.inf()


def add(a: ExtNonneg, b: ExtNonneg) -> ExtNonneg:
    return a + b


def sub_checked(a: ExtSigned, b: ExtSigned) -> ExtSigned:
    """``a - b``, defined exactly when ``b`` is finite.

    ``inf - inf`` is indeterminate and ``finite - inf`` would be ``-inf``; both
    raise :class:`UndefinedDifference`.
    """
    if b._q is None:
        if a._q is None:
            raise UndefinedDifference("inf - inf is undefined")
        raise UndefinedDifference(f"{a} - inf would be -inf, which is not representable")
    if a._q is None:
        return ExtSigned._raw(None)
    return ExtSigned._raw(_normalize(a._q - b._q))


def ext_sum(values: Iterable[ExtSigned], start: ExtSigned = ZERO) -> ExtSigned:
    """Sum of a finite sequence; the empty sum is zero and ``inf`` absorbs."""
    total = start
    for v in values:
        total = total + v
    return total


def pos_part(a: ExtSigned) -> ExtNonneg:
    """max(a, 0)"""
    if a._q is None:
        return INF
    return ExtNonneg._raw(a._q if a._q > 0 else 0)


def neg_part(a: ExtSigned) -> ExtNonneg:
    """-min(a, 0); always finite since -inf cannot occur."""
    if a._q is None or a._q >= 0:
        return ZERO
    return ExtNonneg._raw(-a._q)


def parse_ext(text: str, signed: bool = False) -> ExtSigned:
    """Parse ``"inf"``, ``"k"`` or ``"p/q"`` (``-`` prefix only when *signed*).

    Non-reduced fractions such as ``"2/4"`` are accepted and normalized; the
    formatter always emits lowest terms, so formatted output round-trips.
    """
    if not isinstance(text, str):
        raise TypeError(f"expected a string, got {type(text).__name__}")
    cls = ExtSigned if signed else ExtNonneg
    if text == "inf":
        return cls._raw(None)
    if not _TEXT_RE.fullmatch(text):
        raise ValueError(f"not an exact extended real: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        q = _normalize(Fraction(int(num), int(den)))
    else:
        q = int(text)
    if q < 0 and not signed:
        raise ValueError(f"negative value {text!r} is not in [0, inf]")
    return cls._raw(q)


def format_ext(a: ExtSigned) -> str:
    if a._q is None:
        return "inf"
    return str(a._q)
