"""Regret functions and the regret lotteries they induce.

A regret function ``psi(x, y)`` scores how a decision maker feels about
having picked outcome ``x`` when the alternative would have paid ``y``.  It
must vanish on the diagonal, increase strictly in ``x`` and decrease
strictly in ``y``.

Extension contract for new regret functions: ``evaluate`` must be pure,
re-entrant, and map rational inputs to rational outputs (``Fraction`` or
``int``).  Floats are rejected at evaluation time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable

from regretaudit.measure_space import ONE, ZERO, format_rational
from regretaudit.random_variables import OutcomeSpace, SimpleRandomVariable


@dataclass(frozen=True)
class RegretFunction:
    name: str
    evaluate: Callable[[Fraction, Fraction], Fraction] = field(compare=False)
    description: str = ""

    def __call__(self, x: Fraction, y: Fraction) -> Fraction:
        value = self.evaluate(x, y)
        if type(value) is Fraction:
            return value
        if isinstance(value, bool) or not isinstance(value, (Fraction, int)):
            raise TypeError(f"regret function {self.name!r} returned non-rational {value!r}")
        return Fraction(value)


def difference_regret() -> RegretFunction:
    return RegretFunction("difference", lambda x, y: x - y, "psi(x, y) = x - y")


# Deliberately invalid variants, exposed so the validator has something to reject.
def _neg_difference() -> RegretFunction:
    return RegretFunction("neg-difference", lambda x, y: y - x, "psi(x, y) = y - x")


def _offset_difference() -> RegretFunction:
    return RegretFunction("offset-difference", lambda x, y: x - y + 1, "psi(x, y) = x - y + 1")


REGRET_FUNCTIONS: dict[str, Callable[[], RegretFunction]] = {
    "difference": difference_regret,
}
DIAGNOSTIC_REGRET_FUNCTIONS: dict[str, Callable[[], RegretFunction]] = {
    "neg-difference": _neg_difference,
    "offset-difference": _offset_difference,
}


def get_regret_function(name: str, include_diagnostic: bool = False) -> RegretFunction:
    table = dict(REGRET_FUNCTIONS)
    if include_diagnostic:
        table.update(DIAGNOSTIC_REGRET_FUNCTIONS)
    try:
        return table[name]()
    except KeyError:
        raise KeyError(f"unknown regret function {name!r}; known: {', '.join(table)}") from None


DIAGONAL = "diagonal"
INCREASING_IN_FIRST = "increasing-in-first"
DECREASING_IN_SECOND = "decreasing-in-second"


@dataclass(frozen=True)
class RegretViolation:
    category: str
    points: tuple[tuple[Fraction, Fraction], ...]
    values: tuple[Fraction, ...]

    def describe(self) -> str:
        args = ", ".join(
            f"psi({format_rational(x)}, {format_rational(y)}) = {format_rational(v)}"
            for (x, y), v in zip(self.points, self.values)
        )
        return f"{self.category}: {args}"


@dataclass(frozen=True)
class ValidationReport:
    function: str
    space: OutcomeSpace
    grid_points: int
    violations: tuple[RegretViolation, ...]
    counts: dict[str, int] = field(compare=False)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def categories(self) -> set[str]:
        return {v.category for v in self.violations}

    def to_dict(self) -> dict[str, Any]:
        return {
            "function": self.function,
            "verdict": "pass" if self.passed else "fail",
            "grid": {
                "points": self.grid_points,
                "lower": format_rational(self.space.lower),
                "upper": format_rational(self.space.upper),
            },
            "counts": self.counts,
            "violations": [
                {
                    "category": v.category,
                    "points": [[format_rational(a), format_rational(b)] for a, b in v.points],
                    "values": [format_rational(x) for x in v.values],
                }
                for v in self.violations
            ],
        }

    def to_text(self) -> str:
        head = (
            f"regret function {self.function}: {'PASS' if self.passed else 'FAIL'} "
            f"on a {self.grid_points}x{self.grid_points} uniform grid over "
            f"[{format_rational(self.space.lower)}, {format_rational(self.space.upper)}]"
        )
        lines = [head]
        for name, count in self.counts.items():
            lines.append(f"  {name}: {count} violation(s)")
        for v in self.violations:
            lines.append(f"  first witness {v.describe()}")
        if self.passed:
            lines.append("  certificate covers grid points only; continuity is not checked")
        return "\n".join(lines)


def validate_regret_function(
    f: RegretFunction, space: OutcomeSpace, grid_points: int
) -> ValidationReport:
    """Check the regret-function axioms on a uniform rational grid.

    Reports the first witness of each failing axiom and a count per axiom.
    Strictness along a slice is checked between neighbouring grid points,
    which by transitivity covers every ordered pair on the slice.
    """
    if grid_points < 3:
        raise ValueError("grid_points must be at least 3")
    grid = space.grid(grid_points)
    values = [[f(x, y) for y in grid] for x in grid]
    first: dict[str, RegretViolation] = {}
    counts = {DIAGONAL: 0, INCREASING_IN_FIRST: 0, DECREASING_IN_SECOND: 0}

    def record(category: str, points, vals) -> None:
        counts[category] += 1
        first.setdefault(category, RegretViolation(category, tuple(points), tuple(vals)))

    for i, x in enumerate(grid):
        if values[i][i] != 0:
            record(DIAGONAL, [(x, x)], [values[i][i]])
    for j, y in enumerate(grid):
        for i in range(len(grid) - 1):
            lo, hi = values[i][j], values[i + 1][j]
            if not lo < hi:
                record(INCREASING_IN_FIRST, [(grid[i], y), (grid[i + 1], y)], [lo, hi])
    for i, x in enumerate(grid):
        for j in range(len(grid) - 1):
            lo, hi = values[i][j], values[i][j + 1]
            if not lo > hi:
                record(DECREASING_IN_SECOND, [(x, grid[j]), (x, grid[j + 1])], [lo, hi])

    order = (DIAGONAL, INCREASING_IN_FIRST, DECREASING_IN_SECOND)
    return ValidationReport(
        f.name,
        space,
        grid_points,
        tuple(first[c] for c in order if c in first),
        counts,
    )


@dataclass(frozen=True)
class RegretLottery:
    """Finite lottery over regret values, entries ``(regret, probability)``.

    Construction accepts non-canonical entry lists (repeated regret values,
    any order) so functionals can be tested for invariance; use
    :meth:`canonical` for the merged, sorted form.
    """

    entries: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        entries = tuple((Fraction(r), Fraction(p)) for r, p in self.entries)
        if any(p <= 0 for _, p in entries):
            raise ValueError("lottery probabilities must be positive")
        if sum((p for _, p in entries), ZERO) != ONE:
            raise ValueError("lottery probabilities must sum to 1")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_mass(cls, mass: dict[Fraction, Fraction]) -> RegretLottery:
        """Canonical lottery from a regret -> probability map known to be valid."""
        out = object.__new__(cls)
        object.__setattr__(out, "entries", tuple(sorted(mass.items())))
        return out

    def canonical(self) -> RegretLottery:
        mass: dict[Fraction, Fraction] = {}
        for r, p in self.entries:
            mass[r] = mass.get(r, ZERO) + p
        return RegretLottery.from_mass(mass)

    def negated(self) -> RegretLottery:
        return RegretLottery(tuple((-r, p) for r, p in self.entries)).canonical()

    def __iter__(self) -> Iterable[tuple[Fraction, Fraction]]:
        return iter(self.entries)

    def __str__(self) -> str:
        body = "; ".join(f"{format_rational(r)}, {format_rational(p)}" for r, p in self.entries)
        return f"({body})"


ZERO_LOTTERY = RegretLottery(((ZERO, ONE),))


def regret_lottery(
    f: RegretFunction, x: SimpleRandomVariable, y: SimpleRandomVariable
) -> RegretLottery:
    """Canonical lottery of ``f(X(s), Y(s))`` under the uniform state measure.

    Walks the two step lists in one merge pass; each joint run is a piece
    of a common-refinement cell, so the assembled masses are those of the
    aligned cells.
    """
    if x.space is not y.space and x.space != y.space:
        raise ValueError("random variables live on different outcome spaces")
    xs, ys = x.steps, y.steps
    nx, ny = len(xs), len(ys)
    # keyed by (numerator, denominator): hashing Fractions is slow
    mass: dict[tuple[int, int], Fraction] = {}
    regrets: dict[tuple[int, int], Fraction] = {}
    i = j = 0
    lo = ZERO
    while i < nx and j < ny:
        _, xhi, a = xs[i]
        _, yhi, b = ys[j]
        hi = xhi if xhi <= yhi else yhi
        r = f(a, b)
        key = (r.numerator, r.denominator)
        if key in mass:
            mass[key] += hi - lo
        else:
            mass[key] = hi - lo
            regrets[key] = r
        lo = hi
        if xhi == hi:
            i += 1
        if yhi == hi:
            j += 1
    return RegretLottery.from_mass({regrets[k]: p for k, p in mass.items()})
