"""Exhaustive axiom audits of a representation over a finite family.

Every check enumerates all pairs (or triples) of family members, records a
count of what it examined, and keeps the violating tuples as witnesses in
canonical member order.  ``holds-on-family`` is a statement about the
family only; universal claims come from the representation's analytic
certificates, which the report carries alongside.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Sequence

from regretaudit.measure_space import ZERO, as_rational, format_rational
from regretaudit.random_variables import (
    UNIT_SPACE,
    Dominance,
    OutcomeSpace,
    SimpleRandomVariable,
    distribution,
    l1_distance,
    statewise_dominates,
)
from regretaudit.regret import regret_lottery
from regretaudit.representations import PreferenceVerdict, Representation

HOLDS = "holds-on-family"
VIOLATED = "violated"

COMPLETENESS = "completeness"
TRANSITIVITY = "transitivity"
SAME_DISTRIBUTION = "same-distribution-indifference"
MONOTONICITY = "monotonicity"
CONTINUITY = "continuity-proxy"
ALL_CHECKS = (COMPLETENESS, TRANSITIVITY, SAME_DISTRIBUTION, MONOTONICITY, CONTINUITY)

_COUNTEREXAMPLE_PATTERN = {
    COMPLETENESS: VIOLATED,
    TRANSITIVITY: HOLDS,
    SAME_DISTRIBUTION: VIOLATED,
    MONOTONICITY: VIOLATED,
    CONTINUITY: HOLDS,
}
EXPECT_PROFILES: dict[str, dict[str, str]] = {
    "counterexample-1": dict(_COUNTEREXAMPLE_PATTERN),
    "counterexample-2": dict(_COUNTEREXAMPLE_PATTERN),
    "expected-utility": {name: HOLDS for name in ALL_CHECKS},
}


class ConfigError(ValueError):
    """Invalid family or audit configuration."""


DEFAULT_GRID = tuple(Fraction(k, 4) for k in range(5))


@dataclass(frozen=True)
class FamilyConfig:
    """Parameters of the seeded family generator.

    Random members are step functions with 2 to ``max_cells`` steps whose
    cut points are multiples of ``1/max_cells`` and whose outcomes are drawn
    from ``outcome_grid``.
    """

    size: int = 8
    max_cells: int = 4
    outcome_grid: tuple[Fraction, ...] = DEFAULT_GRID
    space: OutcomeSpace = UNIT_SPACE

    def __post_init__(self) -> None:
        try:
            grid = tuple(sorted({as_rational(v) for v in self.outcome_grid}))
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad outcome grid: {exc}") from None
        object.__setattr__(self, "outcome_grid", grid)

    def validate(self) -> None:
        if self.size < 2:
            raise ConfigError(f"family size must be at least 2, got {self.size}")
        if self.max_cells < 2:
            raise ConfigError(f"max_cells must be at least 2, got {self.max_cells}")
        if len(self.outcome_grid) < 2:
            raise ConfigError("outcome grid needs at least 2 distinct values")
        outside = [v for v in self.outcome_grid if not self.space.contains(v)]
        if outside:
            raise ConfigError(f"grid values outside the outcome space: {outside}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "size": self.size,
            "max_cells": self.max_cells,
            "outcome_grid": [format_rational(v) for v in self.outcome_grid],
            "space": self.space.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> FamilyConfig:
        return cls(
            size=int(data["size"]),
            max_cells=int(data["max_cells"]),
            outcome_grid=tuple(Fraction(v) for v in data["outcome_grid"]),
            space=OutcomeSpace.from_dict(data["space"]) if "space" in data else UNIT_SPACE,
        )


def _member_key(x: SimpleRandomVariable) -> tuple[str, str]:
    return str(x), x.text()


@dataclass(frozen=True)
class Family:
    """Audit universe: members sorted by canonical text, then by representation text."""

    members: tuple[SimpleRandomVariable, ...]
    seed: int | None = None
    config: FamilyConfig | None = None
    label: str = "custom"

    def __post_init__(self) -> None:
        if not self.members:
            raise ConfigError("a family needs at least one member")
        if len({m.space for m in self.members}) != 1:
            raise ConfigError("family members must share one outcome space")
        object.__setattr__(self, "members", tuple(sorted(self.members, key=_member_key)))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def to_dict(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "seed": self.seed,
            "config": self.config.to_dict() if self.config else None,
            "members": [m.to_dict() for m in self.members],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Family:
        try:
            members = tuple(SimpleRandomVariable.from_dict(m) for m in data["members"])
            config = FamilyConfig.from_dict(data["config"]) if data.get("config") else None
        except (AttributeError, KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ConfigError(f"malformed family: {exc!r}") from None
        return cls(members, data.get("seed"), config, data.get("label", "custom"))


def _uniform_vector(x: SimpleRandomVariable, cells: int) -> list[Fraction]:
    return [x(Fraction(t, cells)) for t in range(cells)]


def _from_uniform_vector(values: Sequence[Fraction], space: OutcomeSpace) -> SimpleRandomVariable:
    n = len(values)
    return SimpleRandomVariable.from_steps(
        values, [Fraction(t, n) for t in range(1, n)], space
    ).canonical()


def same_distribution_partner(
    x: SimpleRandomVariable, cells: int, rng: random.Random
) -> SimpleRandomVariable:
    """Permute ``x``'s outcomes across the ``cells`` equal-width cells of [0, 1).

    ``x`` must be constant on each cell.  A seeded shuffle is tried first; if
    it leaves the function unchanged, a rotation by one cell is used, which
    changes every non-constant vector.
    """
    values = _uniform_vector(x, cells)
    order = list(range(cells))
    rng.shuffle(order)
    permuted = [values[k] for k in order]
    if permuted == values:
        permuted = values[1:] + values[:1]
    return _from_uniform_vector(permuted, x.space)


def generate_family(seed: int, config: FamilyConfig) -> Family:
    """Seeded family: every grid constant, ``size`` distinct random members, and partners.

    Each random member gets one same-distribution partner, so the family
    always contains identically distributed pairs that are not equal.
    """
    config.validate()
    rng = random.Random(seed)
    cells = config.max_cells
    constants = [SimpleRandomVariable.constant(v, config.space) for v in config.outcome_grid]
    seen = {str(c) for c in constants}
    drawn: list[SimpleRandomVariable] = []
    attempts = 0
    while len(drawn) < config.size:
        attempts += 1
        if attempts > 200 * config.size:
            raise ConfigError(
                f"could not draw {config.size} distinct non-constant members from "
                f"max_cells={cells} and a {len(config.outcome_grid)}-value grid"
            )
        k = rng.randint(2, cells)
        cuts = sorted(rng.sample(range(1, cells), k - 1))
        outcomes = [rng.choice(config.outcome_grid) for _ in range(k)]
        x = SimpleRandomVariable.from_steps(
            outcomes, [Fraction(c, cells) for c in cuts], config.space
        ).canonical()
        if str(x) not in seen:
            seen.add(str(x))
            drawn.append(x)
    partners = []
    for x in drawn:
        partner = same_distribution_partner(x, cells, rng)
        if str(partner) not in seen:
            seen.add(str(partner))
            partners.append(partner)
    return Family(tuple(constants + drawn + partners), seed, config, "generated")


def swap_pair() -> tuple[SimpleRandomVariable, SimpleRandomVariable]:
    """``1 on [0, 1/2), 0 after`` and its mirror image: same law, nowhere equal."""
    return (
        SimpleRandomVariable.from_steps([1, 0], ["1/2"]),
        SimpleRandomVariable.from_steps([0, 1], ["1/2"]),
    )


def demo_family() -> Family:
    """Fixed eleven-member family used by the counterexample demos.

    Contains the constants 0, 1/2 and 1, the swap pair, a re-partitioned
    copy of the swap pair's first member, two further identically
    distributed pairs, and a member that strictly dominates the first
    swap member.
    """
    x, y = swap_pair()
    members = (
        SimpleRandomVariable.constant(0),
        SimpleRandomVariable.constant("1/2"),
        SimpleRandomVariable.constant(1),
        x,
        y,
        SimpleRandomVariable.from_steps([1, 1, 0], ["1/4", "1/2"]),
        SimpleRandomVariable.from_steps(["1/2", 0], ["1/4"]),
        SimpleRandomVariable.from_steps([0, "1/2"], ["3/4"]),
        SimpleRandomVariable.from_steps([0, "1/2", 1], ["1/3", "2/3"]),
        SimpleRandomVariable.from_steps([1, "1/2", 0], ["1/3", "2/3"]),
        SimpleRandomVariable.from_steps([1, "1/2"], ["1/2"]),
    )
    return Family(members, label="demo")


@dataclass(frozen=True)
class AuditOptions:
    checks: tuple[str, ...] = ALL_CHECKS
    sequence_length: int = 5
    max_witnesses: int | None = None
    continuity_targets: int | None = 8

    def validate(self) -> None:
        unknown = [c for c in self.checks if c not in ALL_CHECKS]
        if unknown:
            raise ConfigError(f"unknown checks: {unknown}")
        if self.sequence_length < 3:
            raise ConfigError("sequence_length must be at least 3")
        if self.max_witnesses is not None and self.max_witnesses < 1:
            raise ConfigError("max_witnesses must be positive")
        if self.continuity_targets is not None and self.continuity_targets < 1:
            raise ConfigError("continuity_targets must be positive")


def sample_targets(n: int, limit: int | None) -> list[int]:
    """Up to ``limit`` evenly spaced indices in ``range(n)``, always including both ends."""
    if limit is None or limit >= n:
        return list(range(n))
    if limit == 1:
        return [0]
    return sorted({round(k * (n - 1) / (limit - 1)) for k in range(limit)})


class PreferenceTable:
    """``V(Psi(m_i, m_j))`` for every ordered pair of family members, computed once."""

    def __init__(self, rep: Representation, family: Family):
        self.rep = rep
        self.family = family
        members = family.members
        psi = rep.regret_function
        self.values = [
            [rep.evaluate(regret_lottery(psi, a, b)) for b in members] for a in members
        ]
        keys = [str(m) for m in members]
        ids: dict[str, int] = {}
        self.class_id = [ids.setdefault(k, len(ids)) for k in keys]

    def __len__(self) -> int:
        return len(self.values)

    def weak(self, i: int, j: int) -> bool:
        return self.values[i][j] >= 0

    def verdict(self, i: int, j: int) -> PreferenceVerdict:
        return PreferenceVerdict.from_values(self.values[i][j], self.values[j][i])

    def equal_ae(self, i: int, j: int) -> bool:
        return self.class_id[i] == self.class_id[j]


@dataclass(frozen=True)
class Witness:
    members: tuple[int, ...]
    relations: tuple[tuple[int, int, PreferenceVerdict], ...]
    detail: str = ""

    def to_dict(self, family: Family) -> dict[str, Any]:
        out: dict[str, Any] = {
            "members": list(self.members),
            "texts": [str(family.members[i]) for i in self.members],
            "relations": [
                {"pair": [i, j], **v.to_dict()} for i, j, v in self.relations
            ],
        }
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class CheckResult:
    name: str
    verdict: str
    examined: int
    violations: int
    witnesses: tuple[Witness, ...] = ()
    antecedents: int | None = None
    notes: tuple[str, ...] = ()

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def to_dict(self, family: Family) -> dict[str, Any]:
        out: dict[str, Any] = {
            "verdict": self.verdict,
            "examined": self.examined,
            "violations": self.violations,
        }
        if self.antecedents is not None:
            out["antecedents"] = self.antecedents
        out["witnesses"] = [w.to_dict(family) for w in self.witnesses]
        out["notes"] = list(self.notes)
        return out


def _result(
    name: str,
    examined: int,
    witnesses: list[Witness],
    options: AuditOptions,
    antecedents: int | None = None,
    notes: Iterable[str] = (),
) -> CheckResult:
    kept = witnesses if options.max_witnesses is None else witnesses[: options.max_witnesses]
    return CheckResult(
        name,
        VIOLATED if witnesses else HOLDS,
        examined,
        len(witnesses),
        tuple(kept),
        antecedents,
        tuple(notes),
    )


def _table(rep: Representation, fam: Family, table: PreferenceTable | None) -> PreferenceTable:
    return table if table is not None else PreferenceTable(rep, fam)


def check_completeness(
    rep: Representation,
    fam: Family,
    table: PreferenceTable | None = None,
    options: AuditOptions = AuditOptions(),
) -> CheckResult:
    """Violated by every unordered pair of distinct positions that is incomparable."""
    t = _table(rep, fam, table)
    n = len(t)
    witnesses = []
    for i in range(n):
        for j in range(i + 1, n):
            v = t.verdict(i, j)
            if v.incomparable:
                witnesses.append(Witness((i, j), ((i, j, v),)))
    notes = []
    irreflexive = sum(1 for i in range(n) if not t.weak(i, i))
    if irreflexive:
        notes.append(f"reflexivity also fails: {irreflexive} of {n} members are not related to themselves")
    return _result(COMPLETENESS, n * (n - 1) // 2, witnesses, options, notes=notes)


def check_transitivity(
    rep: Representation,
    fam: Family,
    table: PreferenceTable | None = None,
    options: AuditOptions = AuditOptions(),
) -> CheckResult:
    """All ``n**3`` ordered triples; ``X >= Y`` and ``Y >= Z`` without ``X >= Z`` is a violation."""
    t = _table(rep, fam, table)
    n = len(t)
    antecedents = 0
    equality_chains = 0
    witnesses = []
    for i in range(n):
        for j in range(n):
            if not t.weak(i, j):
                continue
            for k in range(n):
                if not t.weak(j, k):
                    continue
                antecedents += 1
                if t.equal_ae(i, j) and t.equal_ae(j, k):
                    equality_chains += 1
                if not t.weak(i, k):
                    witnesses.append(
                        Witness(
                            (i, j, k),
                            ((i, j, t.verdict(i, j)), (j, k, t.verdict(j, k)), (i, k, t.verdict(i, k))),
                        )
                    )
    notes = []
    if antecedents == 0:
        notes.append(
            f"vacuous: none of the {n ** 3} ordered triples has X >= Y and Y >= Z, "
            "so no triple can violate transitivity"
        )
    elif equality_chains == antecedents:
        notes.append(
            f"forced equality: all {antecedents} antecedent triples are chains of "
            "almost-everywhere equal members"
        )
    return _result(TRANSITIVITY, n ** 3, witnesses, options, antecedents, notes)


def check_same_distribution_indifference(
    rep: Representation,
    fam: Family,
    table: PreferenceTable | None = None,
    options: AuditOptions = AuditOptions(),
) -> CheckResult:
    """Every identically distributed pair must be indifferent."""
    t = _table(rep, fam, table)
    n = len(t)
    laws = [distribution(m) for m in fam.members]
    examined = 0
    witnesses = []
    for i in range(n):
        for j in range(i + 1, n):
            if laws[i] != laws[j]:
                continue
            examined += 1
            v = t.verdict(i, j)
            if not v.indifferent:
                detail = "" if t.equal_ae(i, j) else "identically distributed, not equal a.e."
                witnesses.append(Witness((i, j), ((i, j, v),), detail))
    notes = [f"{examined} identically distributed pairs among {n * (n - 1) // 2} pairs"]
    if examined == 0:
        notes.append("vacuous: the family has no identically distributed pair")
    return _result(SAME_DISTRIBUTION, examined, witnesses, options, notes=notes)


def check_monotonicity(
    rep: Representation,
    fam: Family,
    table: PreferenceTable | None = None,
    options: AuditOptions = AuditOptions(),
) -> CheckResult:
    """Statewise strict dominance must yield strict preference."""
    t = _table(rep, fam, table)
    members = fam.members
    examined = 0
    witnesses = []
    for i, x in enumerate(members):
        for j, y in enumerate(members):
            if i == j or statewise_dominates(x, y) is not Dominance.STRICT:
                continue
            examined += 1
            v = t.verdict(i, j)
            if not v.strict:
                witnesses.append(Witness((i, j), ((i, j, v),), "first member strictly dominates"))
    notes = [f"{examined} strictly dominating ordered pairs (statewise reading of monotonicity)"]
    return _result(MONOTONICITY, examined, witnesses, options, notes=notes)


@dataclass(frozen=True)
class ContourSets:
    member: int
    upper: tuple[int, ...]
    lower: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {"member": self.member, "upper": list(self.upper), "lower": list(self.lower)}


def contour_sets(
    rep: Representation, fam: Family, y: int, table: PreferenceTable | None = None
) -> ContourSets:
    """Upper ``{X : X >= y}`` and lower ``{X : y >= X}`` contour sets within the family."""
    t = _table(rep, fam, table)
    n = len(t)
    return ContourSets(
        y,
        tuple(i for i in range(n) if t.weak(i, y)),
        tuple(i for i in range(n) if t.weak(y, i)),
    )


def perturbation_directions(x: SimpleRandomVariable) -> list[tuple[str, tuple[int, ...], int]]:
    """``(label, cells, sign)``: shift every cell, or one cell, up or down."""
    canon = x.canonical()
    everything = tuple(range(len(canon.assignments)))
    directions = [("all cells", everything, +1), ("all cells", everything, -1)]
    if len(everything) > 1:
        for c in everything:
            directions.append((f"cell {c}", (c,), +1))
            directions.append((f"cell {c}", (c,), -1))
    return directions


def perturb(
    x: SimpleRandomVariable, cells: tuple[int, ...], sign: int, k: int
) -> SimpleRandomVariable:
    """Shift outcomes of the chosen canonical cells by ``sign * width / 2**k``, clamped.

    The L1 distance to ``x`` is at most ``width / 2**k``.
    """
    canon = x.canonical()
    space = canon.space
    shift = sign * space.width / 2 ** k
    chosen = {canon.assignments[c][0] for c in cells}
    # canonical cells carry distinct outcomes, so outcome identifies the cell
    return canon.map_outcomes(lambda v: space.clamp(v + shift) if v in chosen else v)


def check_continuity_proxy(
    rep: Representation,
    fam: Family,
    sequence_length: int = 5,
    table: PreferenceTable | None = None,
    options: AuditOptions = AuditOptions(),
) -> CheckResult:
    """Sequential-closedness proxy for the contour sets under the L1 metric.

    For every sampled target ``y`` (see ``options.continuity_targets``) and
    every member ``x`` (the limit), dyadic
    perturbations ``x_k -> x`` with ``k = 1..sequence_length`` are built.  If
    every ``x_k >= y`` then ``x >= y`` must hold (upper contour), and if
    every ``y >= x_k`` then ``y >= x`` must hold (lower contour).  Only
    sequences whose limit lies outside the contour set can break closedness,
    so only those are examined.  This is a sampled test, never a proof of
    continuity.
    """
    if sequence_length < 3:
        raise ConfigError("sequence_length must be at least 3")
    t = _table(rep, fam, table)
    psi = rep.regret_function
    members = fam.members
    n = len(members)
    targets = sample_targets(n, options.continuity_targets)
    examined = 0
    antecedents = 0
    witnesses = []
    for xi, x in enumerate(members):
        outside_upper = [yi for yi in targets if not t.weak(xi, yi)]
        outside_lower = [yi for yi in targets if not t.weak(yi, xi)]
        if not outside_upper and not outside_lower:
            continue
        canon = x.canonical()
        for label, cells, sign in perturbation_directions(x):
            # nearest term first, since it is the likeliest to fall outside;
            # terms are built on first use and shared across targets
            terms: dict[int, SimpleRandomVariable] = {}

            def term(k: int) -> SimpleRandomVariable:
                if k not in terms:
                    terms[k] = perturb(canon, cells, sign, k)
                return terms[k]

            order = range(sequence_length, 0, -1)
            for side, outside in (("upper", outside_upper), ("lower", outside_lower)):
                for yi in outside:
                    y = members[yi]
                    examined += 1
                    if side == "upper":
                        inside = all(
                            rep.evaluate(regret_lottery(psi, term(k), y)) >= 0 for k in order
                        )
                    else:
                        inside = all(
                            rep.evaluate(regret_lottery(psi, y, term(k))) >= 0 for k in order
                        )
                    if not inside:
                        continue
                    antecedents += 1
                    gap = l1_distance(term(sequence_length), x)
                    witnesses.append(
                        Witness(
                            (xi, yi),
                            ((xi, yi, t.verdict(xi, yi)),),
                            f"{side} contour of member {yi} not closed: {label} "
                            f"{'+' if sign > 0 else '-'} shifts stay related down to L1 "
                            f"distance {format_rational(gap)} but the limit is not",
                        )
                    )
    notes = [
        "PROXY: sampled dyadic L1 perturbation sequences, not a proof of continuity",
        f"targets: {len(targets)} of {n} members"
        + (" (evenly spaced sample)" if len(targets) < n else " (all)"),
        f"sequence length {sequence_length}; {examined} sequences converge to a limit outside "
        f"a contour set, {antecedents} of them stay inside it",
    ]
    if examined == 0:
        notes.append("vacuous: every limit lies in every contour set")
    elif antecedents == 0:
        notes.append("no perturbation sequence approaches a contour set from inside")
    return _result(CONTINUITY, examined, witnesses, options, antecedents, notes)


@dataclass(frozen=True)
class AuditReport:
    representation: str
    regret_function: str
    family: Family
    checks: dict[str, CheckResult]
    contours: tuple[ContourSets, ...]
    annotations: tuple[str, ...] = field(default=())

    def pattern(self) -> dict[str, str]:
        return {name: result.verdict for name, result in self.checks.items()}

    def matches(self, profile: dict[str, str]) -> bool:
        return all(profile.get(name, verdict) == verdict for name, verdict in self.pattern().items())

    def to_dict(self) -> dict[str, Any]:
        fam = self.family
        return {
            "representation": self.representation,
            "regret_function": self.regret_function,
            "family": {
                "label": fam.label,
                "seed": fam.seed,
                "config": fam.config.to_dict() if fam.config else None,
                "size": len(fam),
            },
            "members": [
                {"index": i, "canonical": str(m), "cells": m.text()}
                for i, m in enumerate(fam.members)
            ],
            "checks": {name: r.to_dict(fam) for name, r in self.checks.items()},
            "contour_sets": [c.to_dict() for c in self.contours],
            "annotations": list(self.annotations),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self, witness_limit: int = 3) -> str:
        fam = self.family
        lines = [
            f"representation: {self.representation} (psi = {self.regret_function})",
            f"family: {fam.label}, {len(fam)} members"
            + (f", seed {fam.seed}" if fam.seed is not None else ""),
        ]
        for i, m in enumerate(fam.members):
            lines.append(f"  [{i}] {m.text()}")
        lines.append("checks:")
        for name, r in self.checks.items():
            extra = f", {r.antecedents} antecedents" if r.antecedents is not None else ""
            lines.append(
                f"  {name}: {r.verdict} ({r.violations} violations of {r.examined} examined{extra})"
            )
            for note in r.notes:
                lines.append(f"    note: {note}")
            for w in r.witnesses[:witness_limit]:
                rels = "; ".join(
                    f"[{i}] vs [{j}]: {v.relation} "
                    f"(V fwd {format_rational(v.value_forward)}, V bwd {format_rational(v.value_backward)})"
                    for i, j, v in w.relations
                )
                lines.append(f"    witness {list(w.members)}: {rels}" + (f" -- {w.detail}" if w.detail else ""))
            if r.violations > witness_limit and r.witnesses:
                lines.append(f"    ... {r.violations - min(witness_limit, len(r.witnesses))} more")
        lines.append("contour sets (upper / lower):")
        for c in self.contours:
            lines.append(f"  [{c.member}] upper {list(c.upper)} lower {list(c.lower)}")
        if self.annotations:
            lines.append("annotations:")
            lines.extend(f"  - {a}" for a in self.annotations)
        return "\n".join(lines) + "\n"


def _contour_annotations(table: PreferenceTable, contours: Sequence[ContourSets]) -> list[str]:
    n = len(table)
    if all(not c.upper and not c.lower for c in contours):
        return ["every upper and lower contour set in the family is empty"]
    classes = [
        tuple(i for i in range(n) if table.equal_ae(i, c.member)) for c in contours
    ]
    if all(c.upper == cls and c.lower == cls for c, cls in zip(contours, classes)):
        return [
            "every upper and lower contour set equals the almost-everywhere equality "
            "class of its own member; a singleton claim {X : X >= Y} = {X} is read as "
            "the class of Y"
        ]
    return []


def run_audit(
    rep: Representation, fam: Family, options: AuditOptions = AuditOptions()
) -> AuditReport:
    options.validate()
    table = PreferenceTable(rep, fam)
    checks: dict[str, CheckResult] = {}
    for name in ALL_CHECKS:
        if name not in options.checks:
            continue
        if name == COMPLETENESS:
            checks[name] = check_completeness(rep, fam, table, options)
        elif name == TRANSITIVITY:
            checks[name] = check_transitivity(rep, fam, table, options)
        elif name == SAME_DISTRIBUTION:
            checks[name] = check_same_distribution_indifference(rep, fam, table, options)
        elif name == MONOTONICITY:
            checks[name] = check_monotonicity(rep, fam, table, options)
        else:
            checks[name] = check_continuity_proxy(rep, fam, options.sequence_length, table, options)
    contours = tuple(contour_sets(rep, fam, y, table) for y in range(len(fam)))
    annotations = list(rep.certificates)
    annotations.extend(_contour_annotations(table, contours))
    annotations.append(
        "holds-on-family certifies the listed members only; it extends to all simple "
        "random variables only where a certificate above says so"
    )
    return AuditReport(
        rep.name, rep.regret_function.name, fam, checks, contours, tuple(annotations)
    )
