"""Exact events on the unit state space and their Lebesgue measure.

Events are finite unions of half-open intervals ``[lo, hi)`` with rational
endpoints in ``[0, 1]``.  This ring is closed under intersection, union and
difference, and every measure is an exact :class:`fractions.Fraction`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to a Fraction, refusing floats.

    Floats are rejected because they silently destroy exactness; pass a
    string such as ``"0.25"`` or ``"1/4"`` instead.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, float):
        raise TypeError(f"float {value!r} is not an exact rational; pass a string or Fraction")
    if isinstance(value, (Fraction, int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rational(value: Fraction) -> str:
    """Canonical ``a/b`` text, denominator always written (``1/1``, ``0/1``)."""
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True, order=True)
class Interval:
    """Half-open interval ``[lo, hi)`` inside ``[0, 1]``."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        lo, hi = as_rational(self.lo), as_rational(self.hi)
        if not (ZERO <= lo <= hi <= ONE):
            raise ValueError(f"interval [{lo}, {hi}) not inside [0, 1] or reversed")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_empty(self) -> bool:
        return self.lo == self.hi

    def contains(self, point: RationalLike) -> bool:
        return self.lo <= as_rational(point) < self.hi

    def __str__(self) -> str:
        return f"[{format_rational(self.lo)}, {format_rational(self.hi)})"


def canonicalize(pieces: Iterable[Interval]) -> tuple[Interval, ...]:
    """Sort, drop empty pieces and merge pieces that overlap or touch."""
    ordered = sorted(p for p in pieces if not p.is_empty)
    merged: list[Interval] = []
    for piece in ordered:
        if merged and piece.lo <= merged[-1].hi:
            last = merged[-1]
            if piece.hi > last.hi:
                merged[-1] = Interval(last.lo, piece.hi)
        else:
            merged.append(piece)
    return tuple(merged)


@dataclass(frozen=True)
class Event:
    """A finite union of disjoint half-open intervals, always kept canonical.

    Pieces are sorted by left endpoint and no two pieces touch, so two events
    are equal as sets exactly when their ``pieces`` tuples are equal.
    """

    pieces: tuple[Interval, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "pieces", canonicalize(self.pieces))

    @classmethod
    def interval(cls, lo: RationalLike, hi: RationalLike) -> Event:
        return cls((Interval(as_rational(lo), as_rational(hi)),))

    @classmethod
    def from_bounds(cls, bounds: Iterable[tuple[RationalLike, RationalLike]]) -> Event:
        return cls(tuple(Interval(as_rational(lo), as_rational(hi)) for lo, hi in bounds))

    @classmethod
    def full(cls) -> Event:
        return cls.interval(0, 1)

    @classmethod
    def empty(cls) -> Event:
        return cls(())

    @property
    def measure(self) -> Fraction:
        return sum((p.length for p in self.pieces), ZERO)

    @property
    def is_empty(self) -> bool:
        return not self.pieces

    @property
    def leftmost(self) -> Fraction:
        """Left endpoint of the first piece; 1 for the empty event."""
        return self.pieces[0].lo if self.pieces else ONE

    def contains(self, point: RationalLike) -> bool:
        s = as_rational(point)
        return any(p.lo <= s < p.hi for p in self.pieces)

    def intersect(self, other: Event) -> Event:
        out: list[Interval] = []
        a, b = self.pieces, other.pieces
        i = j = 0
        while i < len(a) and j < len(b):
            lo = max(a[i].lo, b[j].lo)
            hi = min(a[i].hi, b[j].hi)
            if lo < hi:
                out.append(Interval(lo, hi))
            if a[i].hi < b[j].hi:
                i += 1
            else:
                j += 1
        return Event(tuple(out))

    def union(self, other: Event) -> Event:
        return Event(self.pieces + other.pieces)

    def complement(self) -> Event:
        out: list[Interval] = []
        cursor = ZERO
        for p in self.pieces:
            if p.lo > cursor:
                out.append(Interval(cursor, p.lo))
            cursor = p.hi
        if cursor < ONE:
            out.append(Interval(cursor, ONE))
        return Event(tuple(out))

    def difference(self, other: Event) -> Event:
        return self.intersect(other.complement())

    __and__ = intersect
    __or__ = union
    __sub__ = difference

    def __str__(self) -> str:
        return ", ".join(str(p) for p in self.pieces)


def measure(e: Event) -> Fraction:
    """Lebesgue measure of ``e``."""
    return e.measure


def intersect(a: Event, b: Event) -> Event:
    return a.intersect(b)


_PIECE = re.compile(r"\[\s*([-+0-9/.]+)\s*,\s*([-+0-9/.]+)\s*\)")


def parse_event(text: str) -> Event:
    """Parse the canonical text form, e.g. ``"[0/1, 1/4), [1/2, 3/4)"``.

    Whitespace is optional; the empty string (or ``"{}"``) is the empty event.
    """
    stripped = text.strip()
    if stripped in ("", "{}"):
        return Event.empty()
    pieces = []
    pos = 0
    for match in _PIECE.finditer(stripped):
        gap = stripped[pos:match.start()].strip()
        if gap not in ("", ","):
            raise ValueError(f"malformed event text {text!r}")
        pieces.append(Interval(Fraction(match.group(1)), Fraction(match.group(2))))
        pos = match.end()
    if not pieces or stripped[pos:].strip():
        raise ValueError(f"malformed event text {text!r}")
    return Event(tuple(pieces))


def _cell_key(e: Event) -> tuple[Fraction, ...]:
    return tuple(x for p in e.pieces for x in (p.lo, p.hi))


@dataclass(frozen=True)
class Partition:
    """Disjoint events of positive measure whose union is the whole space.

    Zero-measure cells are discarded; the rest are sorted by left endpoint.
    """

    cells: tuple[Event, ...]

    def __post_init__(self) -> None:
        cells = tuple(sorted((c for c in self.cells if not c.is_empty), key=_cell_key))
        total = sum((c.measure for c in cells), ZERO)
        covered = Event(tuple(p for c in cells for p in c.pieces))
        if total != ONE or covered != Event.full():
            # With half-open pieces, overlap always has positive measure, so
            # total == 1 and full coverage together imply disjointness.
            raise ValueError(
                f"cells do not partition [0, 1): total measure {total}, union {covered}"
            )
        object.__setattr__(self, "cells", cells)

    @classmethod
    def trivial(cls) -> Partition:
        return cls((Event.full(),))

    @classmethod
    def from_cuts(cls, cuts: Sequence[RationalLike]) -> Partition:
        """Consecutive intervals between 0, the sorted ``cuts``, and 1."""
        points = [ZERO, *sorted(as_rational(c) for c in cuts), ONE]
        return cls(tuple(Event.interval(a, b) for a, b in zip(points, points[1:])))

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def locate(self, point: RationalLike) -> int:
        """Index of the cell containing ``point`` (which must lie in [0, 1))."""
        for k, cell in enumerate(self.cells):
            if cell.contains(point):
                return k
        raise ValueError(f"point {point} outside [0, 1)")


class Refinement(NamedTuple):
    partition: Partition
    parents: tuple[tuple[int, int], ...]
    """``parents[k] = (i, j)``: cell ``k`` lies in ``p.cells[i]`` and ``q.cells[j]``."""


def common_refinement(p: Partition, q: Partition) -> Refinement:
    """All positive-measure intersections of a ``p``-cell with a ``q``-cell."""
    found: list[tuple[Event, tuple[int, int]]] = []
    for i, a in enumerate(p.cells):
        for j, b in enumerate(q.cells):
            cell = a.intersect(b)
            if not cell.is_empty:
                found.append((cell, (i, j)))
    found.sort(key=lambda item: _cell_key(item[0]))
    return Refinement(Partition(tuple(c for c, _ in found)), tuple(ij for _, ij in found))
