"""Independent reference computations and seeded generators for the tests.

Nothing here goes through the sweep-based fast paths of the package: the
oracles evaluate random variables pointwise and work cell by cell.
"""

from __future__ import annotations

import random
from fractions import Fraction

from regretaudit.measure_space import Event, Interval, Partition, common_refinement
from regretaudit.random_variables import SimpleRandomVariable

GRID_100 = [Fraction(k, 100) for k in range(100)]


def random_rational(rng: random.Random, max_den: int = 12) -> Fraction:
    d = rng.randint(1, max_den)
    return Fraction(rng.randint(0, d), d)


def random_event(rng: random.Random, max_pieces: int = 4, max_den: int = 12) -> Event:
    pieces = []
    for _ in range(rng.randint(0, max_pieces)):
        a, b = sorted((random_rational(rng, max_den), random_rational(rng, max_den)))
        pieces.append(Interval(a, b))
    return Event(tuple(pieces))


def random_partition(rng: random.Random, max_cuts: int = 5, max_cells: int = 4) -> Partition:
    """Random cut points, with the resulting intervals dealt into at most ``max_cells`` cells.

    Cells are generally unions of several non-adjacent intervals.
    """
    cuts = sorted({random_rational(rng) for _ in range(rng.randint(0, max_cuts))} - {0, 1})
    points = [Fraction(0), *cuts, Fraction(1)]
    intervals = [Interval(a, b) for a, b in zip(points, points[1:])]
    k = rng.randint(1, min(max_cells, len(intervals)))
    buckets: list[list[Interval]] = [[] for _ in range(k)]
    for n, piece in enumerate(intervals):
        buckets[n if n < k else rng.randrange(k)].append(piece)
    return Partition(tuple(Event(tuple(b)) for b in buckets))


def random_variable(
    rng: random.Random, grid: list[Fraction] | None = None, **kwargs
) -> SimpleRandomVariable:
    grid = grid or [Fraction(k, 4) for k in range(5)]
    cells = random_partition(rng, **kwargs).cells
    return SimpleRandomVariable(tuple((rng.choice(grid), c) for c in cells))


def split_cell(rng: random.Random, x: SimpleRandomVariable) -> SimpleRandomVariable:
    """Split one piece of one cell at a random interior rational point; same function."""
    assignments = list(x.assignments)
    c = rng.randrange(len(assignments))
    value, event = assignments[c]
    piece = rng.choice(event.pieces)
    t = Fraction(rng.randint(1, 999), 1000)
    cut = piece.lo + t * (piece.hi - piece.lo)
    left = Event((Interval(piece.lo, cut),))
    rest = event - left
    assignments[c:c + 1] = [(value, left), (value, rest)]
    return SimpleRandomVariable(tuple(assignments), x.space)


def members_on_grid(event: Event, grid=GRID_100) -> list[Fraction]:
    return [s for s in grid if any(p.lo <= s < p.hi for p in event.pieces)]


def sample_point(event: Event) -> Fraction:
    piece = event.pieces[0]
    return (piece.lo + piece.hi) / 2


def brute_force_lottery(psi, x: SimpleRandomVariable, y: SimpleRandomVariable) -> dict:
    """Assemble ``{regret: probability}`` from the common refinement directly.

    Each refined cell is sampled at one interior point, both variables are
    evaluated there pointwise, and the cell's measure is credited to the
    resulting regret.
    """
    refined, _ = common_refinement(x.partition, y.partition)
    out: dict[Fraction, Fraction] = {}
    for cell in refined.cells:
        s = sample_point(cell)
        r = psi(x(s), y(s))
        out[r] = out.get(r, Fraction(0)) + cell.measure
    return out


def expectation(x: SimpleRandomVariable) -> Fraction:
    return sum((v * e.measure for v, e in x.assignments), Fraction(0))
