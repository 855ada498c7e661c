"""Simple random variables on ``[0, 1)`` with Lebesgue measure."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Callable, Iterable, NamedTuple, Sequence

from regretaudit.measure_space import (
    ONE,
    ZERO,
    Event,
    Partition,
    RationalLike,
    as_rational,
    common_refinement,
    format_rational,
    parse_event,
)


@dataclass(frozen=True)
class OutcomeSpace:
    """Closed outcome interval ``[lower, upper]``."""

    lower: Fraction = ZERO
    upper: Fraction = ONE

    def __post_init__(self) -> None:
        lower, upper = as_rational(self.lower), as_rational(self.upper)
        if not lower < upper:
            raise ValueError(f"outcome space needs lower < upper, got [{lower}, {upper}]")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def contains(self, value: Fraction) -> bool:
        return self.lower <= value <= self.upper

    def clamp(self, value: Fraction) -> Fraction:
        return min(max(value, self.lower), self.upper)

    def grid(self, points: int) -> list[Fraction]:
        """``points`` equally spaced rationals from ``lower`` to ``upper``."""
        if points < 2:
            raise ValueError("a grid needs at least 2 points")
        step = self.width / (points - 1)
        return [self.lower + k * step for k in range(points)]

    def to_dict(self) -> dict[str, str]:
        return {"lo": format_rational(self.lower), "hi": format_rational(self.upper)}

    @classmethod
    def from_dict(cls, data: dict[str, str]) -> OutcomeSpace:
        return cls(Fraction(data["lo"]), Fraction(data["hi"]))


UNIT_SPACE = OutcomeSpace()


@dataclass(frozen=True)
class SimpleRandomVariable:
    """A finite list of ``(outcome, event)`` pairs whose events partition the states.

    The stored assignments are kept exactly as given, so the same function
    can have many representations; :meth:`canonical` picks the unique one
    (one cell per distinct outcome, sorted by leftmost state).  Compare
    functions with :func:`equal_ae`, not ``==``.
    """

    assignments: tuple[tuple[Fraction, Event], ...]
    space: OutcomeSpace = UNIT_SPACE

    def __post_init__(self) -> None:
        cleaned = []
        for outcome, event in self.assignments:
            value = as_rational(outcome)
            if not self.space.contains(value):
                raise ValueError(
                    f"outcome {value} outside [{self.space.lower}, {self.space.upper}]"
                )
            if not event.is_empty:
                cleaned.append((value, event))
        Partition(tuple(e for _, e in cleaned))
        object.__setattr__(self, "assignments", tuple(cleaned))

    @classmethod
    def constant(cls, value: RationalLike, space: OutcomeSpace = UNIT_SPACE) -> SimpleRandomVariable:
        return cls(((as_rational(value), Event.full()),), space)

    @classmethod
    def from_steps(
        cls,
        outcomes: Sequence[RationalLike],
        cuts: Sequence[RationalLike] = (),
        space: OutcomeSpace = UNIT_SPACE,
    ) -> SimpleRandomVariable:
        """Step function taking ``outcomes[k]`` between consecutive cut points.

        >>> str(SimpleRandomVariable.from_steps([1, 0], ["1/2"]))
        '1/1 on [0/1, 1/2) | 0/1 on [1/2, 1/1)'
        """
        points = [ZERO, *(as_rational(c) for c in cuts), ONE]
        if len(points) != len(outcomes) + 1:
            raise ValueError("need exactly one more outcome than cut points")
        return cls(
            tuple(
                (as_rational(v), Event.interval(a, b))
                for v, a, b in zip(outcomes, points, points[1:])
            ),
            space,
        )

    @property
    def partition(self) -> Partition:
        return Partition(tuple(e for _, e in self.assignments))

    @property
    def outcomes(self) -> tuple[Fraction, ...]:
        return tuple(v for v, _ in self.assignments)

    def canonical(self) -> SimpleRandomVariable:
        return self._canonical

    @cached_property
    def _canonical(self) -> SimpleRandomVariable:
        level_sets: dict[Fraction, Event] = {}
        for value, event in self.assignments:
            level_sets[value] = level_sets[value] | event if value in level_sets else event
        cells = sorted(level_sets.items(), key=lambda item: item[1].leftmost)
        return SimpleRandomVariable(tuple(cells), self.space)

    @cached_property
    def steps(self) -> tuple[tuple[Fraction, Fraction, Fraction], ...]:
        """Maximal constant runs ``(lo, hi, outcome)`` covering ``[0, 1)`` in order."""
        raw = sorted((p.lo, p.hi, v) for v, e in self.assignments for p in e.pieces)
        merged: list[tuple[Fraction, Fraction, Fraction]] = []
        for lo, hi, v in raw:
            if merged and merged[-1][2] == v and merged[-1][1] == lo:
                merged[-1] = (merged[-1][0], hi, v)
            else:
                merged.append((lo, hi, v))
        return tuple(merged)

    def __call__(self, state: RationalLike) -> Fraction:
        s = as_rational(state)
        for value, event in self.assignments:
            if event.contains(s):
                return value
        raise ValueError(f"state {s} outside [0, 1)")

    def map_outcomes(self, f: Callable[[Fraction], Fraction]) -> SimpleRandomVariable:
        """Same events, outcomes replaced by ``f(outcome)``.

        The partition is already known to be valid, so only the new
        outcomes are checked.
        """
        assignments = tuple((as_rational(f(v)), e) for v, e in self.assignments)
        for value, _ in assignments:
            if not self.space.contains(value):
                raise ValueError(f"outcome {value} outside the outcome space")
        out = object.__new__(SimpleRandomVariable)
        object.__setattr__(out, "assignments", assignments)
        object.__setattr__(out, "space", self.space)
        return out

    def text(self) -> str:
        """Text of this exact representation (no canonicalization)."""
        return " | ".join(f"{format_rational(v)} on {e}" for v, e in self.assignments)

    def __str__(self) -> str:
        return self.canonical().text()

    def to_dict(self) -> dict[str, Any]:
        return {
            "space": self.space.to_dict(),
            "cells": [
                {"event": str(e), "outcome": format_rational(v)} for v, e in self.assignments
            ],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> SimpleRandomVariable:
        space = OutcomeSpace.from_dict(data["space"]) if "space" in data else UNIT_SPACE
        return cls(
            tuple((Fraction(c["outcome"]), parse_event(c["event"])) for c in data["cells"]),
            space,
        )


@dataclass(frozen=True)
class Distribution:
    """Atoms ``(outcome, probability)`` sorted by outcome."""

    atoms: tuple[tuple[Fraction, Fraction], ...]

    def cdf(self, t: RationalLike) -> Fraction:
        t = as_rational(t)
        return sum((p for v, p in self.atoms if v <= t), ZERO)


def distribution(x: SimpleRandomVariable) -> Distribution:
    mass: dict[Fraction, Fraction] = {}
    for value, event in x.assignments:
        mass[value] = mass.get(value, ZERO) + event.measure
    return Distribution(tuple(sorted(mass.items())))


def _check_space(x: SimpleRandomVariable, y: SimpleRandomVariable) -> None:
    if x.space != y.space:
        raise ValueError("random variables live on different outcome spaces")


def same_distribution(x: SimpleRandomVariable, y: SimpleRandomVariable) -> bool:
    # Equal atom lists is the same as equal CDFs for finitely supported laws.
    _check_space(x, y)
    return distribution(x) == distribution(y)


class Alignment(NamedTuple):
    partition: Partition
    outcomes_x: tuple[Fraction, ...]
    outcomes_y: tuple[Fraction, ...]


def align(x: SimpleRandomVariable, y: SimpleRandomVariable) -> Alignment:
    """Express ``x`` and ``y`` over their common refinement."""
    _check_space(x, y)
    refined, parents = common_refinement(x.partition, y.partition)
    xs, ys = x.outcomes, y.outcomes
    return Alignment(
        refined,
        tuple(xs[i] for i, _ in parents),
        tuple(ys[j] for _, j in parents),
    )


def equal_ae(x: SimpleRandomVariable, y: SimpleRandomVariable) -> bool:
    """Equality up to null sets.

    Runs over the joint step structure rather than calling :func:`align`;
    the runs refine the aligned cells, so the per-cell comparison is the same.
    """
    return all(a == b for _, a, b in sweep(x, y))


class Dominance(str, enum.Enum):
    STRICT = "strict"
    WEAK = "weak"
    NONE = "none"


def statewise_dominates(x: SimpleRandomVariable, y: SimpleRandomVariable) -> Dominance:
    strict = False
    for _, a, b in sweep(x, y):
        if a < b:
            return Dominance.NONE
        # every run has positive length, so one strict run suffices
        strict = strict or a > b
    return Dominance.STRICT if strict else Dominance.WEAK


def sweep(
    x: SimpleRandomVariable, y: SimpleRandomVariable
) -> Iterable[tuple[Fraction, Fraction, Fraction]]:
    """Yield ``(length, x_value, y_value)`` over the joint step structure.

    A linear merge of the two step lists; much cheaper than :func:`align`
    when only per-cell values and measures are needed.
    """
    if x.space != y.space:
        raise ValueError("random variables live on different outcome spaces")
    xs, ys = x.steps, y.steps
    i = j = 0
    lo = ZERO
    while i < len(xs) and j < len(ys):
        hi = min(xs[i][1], ys[j][1])
        yield hi - lo, xs[i][2], ys[j][2]
        lo = hi
        if xs[i][1] == hi:
            i += 1
        if ys[j][1] == hi:
            j += 1


def l1_distance(x: SimpleRandomVariable, y: SimpleRandomVariable) -> Fraction:
    """``∫ |x - y| dP``."""
    return sum((length * abs(a - b) for length, a, b in sweep(x, y)), ZERO)
