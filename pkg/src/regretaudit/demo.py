"""Machine-checked transcripts of the two counterexample representations."""

from __future__ import annotations

from dataclasses import dataclass

from regretaudit.audit import (
    COMPLETENESS,
    CONTINUITY,
    EXPECT_PROFILES,
    SAME_DISTRIBUTION,
    TRANSITIVITY,
    AuditReport,
    demo_family,
    run_audit,
)
from regretaudit.random_variables import equal_ae, same_distribution
from regretaudit.representations import Representation, constant_negative, neg_abs_sum

DEMO_REPRESENTATIONS = {1: constant_negative, 2: neg_abs_sum}


@dataclass(frozen=True)
class Claim:
    text: str
    ok: bool


def _pairs(n: int):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def counterexample_claims(report: AuditReport, which: int) -> list[Claim]:
    """The statements each counterexample makes, evaluated against ``report``."""
    members = report.family.members
    n = len(members)
    pairs = _pairs(n)
    checks = report.checks
    profile = EXPECT_PROFILES[f"counterexample-{which}"]
    claims = [Claim(f"verdict pattern matches counterexample-{which}", report.matches(profile))]
    same_law = [(i, j) for i, j in pairs if same_distribution(members[i], members[j])]
    claims.append(Claim("family contains an identically distributed pair that is not equal",
                        any(not equal_ae(members[i], members[j]) for i, j in same_law)))

    if which == 1:
        claims += [
            Claim(
                "transitivity holds vacuously: 0 antecedent triples",
                checks[TRANSITIVITY].holds and checks[TRANSITIVITY].antecedents == 0,
            ),
            Claim(
                f"completeness fails on all {len(pairs)} pairs",
                checks[COMPLETENESS].violations == len(pairs),
            ),
            Claim(
                f"every one of the {len(same_law)} identically distributed pairs is unrelated",
                checks[SAME_DISTRIBUTION].violations == len(same_law),
            ),
            Claim(
                "every upper and lower contour set is empty",
                all(not c.upper and not c.lower for c in report.contours),
            ),
            Claim(
                "continuity proxy holds with no sequence inside any contour set",
                checks[CONTINUITY].holds and checks[CONTINUITY].antecedents == 0,
            ),
        ]
    else:
        classes = [
            tuple(i for i in range(n) if equal_ae(members[i], members[y])) for y in range(n)
        ]
        unequal_pairs = [(i, j) for i, j in pairs if not equal_ae(members[i], members[j])]
        unequal_same_law = [(i, j) for i, j in same_law if not equal_ae(members[i], members[j])]
        flagged = {w.members for w in checks[SAME_DISTRIBUTION].witnesses}
        claims += [
            Claim(
                "transitivity holds; every antecedent triple is an almost-everywhere equality chain",
                checks[TRANSITIVITY].holds
                and any("forced equality" in note for note in checks[TRANSITIVITY].notes),
            ),
            Claim(
                f"completeness fails exactly on the {len(unequal_pairs)} pairs that are not equal a.e.",
                checks[COMPLETENESS].violations == len(unequal_pairs),
            ),
            Claim(
                f"all {len(unequal_same_law)} identically distributed, unequal pairs are unrelated",
                checks[SAME_DISTRIBUTION].violations == len(unequal_same_law)
                and set(unequal_same_law) <= flagged,
            ),
            Claim(
                "each contour set is the almost-everywhere equality class of its member",
                all(c.upper == classes[c.member] == c.lower for c in report.contours),
            ),
            Claim("continuity proxy holds", checks[CONTINUITY].holds),
        ]
    return claims


def run_demo(which: int) -> tuple[AuditReport, list[Claim]]:
    rep: Representation = DEMO_REPRESENTATIONS[which]()
    report = run_audit(rep, demo_family())
    return report, counterexample_claims(report, which)
