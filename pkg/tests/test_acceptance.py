"""Acceptance suite: one test per criterion, all arithmetic exact.

Run ``pytest tests/test_acceptance.py -s`` to see the per-criterion detail
lines; the PASS/FAIL summary is printed at the end of every run.
"""

import os
import random
import subprocess
import sys
import time
from fractions import Fraction as F
from math import comb

import pytest

from oracles import (
    brute_force_lottery,
    random_event,
    random_partition,
    random_variable,
    split_cell,
)
from oracles import expectation as oracle_expectation
from regretaudit.audit import (
    ALL_CHECKS,
    COMPLETENESS,
    CONTINUITY,
    HOLDS,
    SAME_DISTRIBUTION,
    TRANSITIVITY,
    VIOLATED,
    FamilyConfig,
    PreferenceTable,
    demo_family,
    generate_family,
    run_audit,
    swap_pair,
)
from regretaudit.measure_space import common_refinement, measure
from regretaudit.random_variables import (
    SimpleRandomVariable,
    UNIT_SPACE,
    distribution,
    equal_ae,
)
from regretaudit.regret import (
    DECREASING_IN_SECOND,
    DIAGONAL,
    INCREASING_IN_FIRST,
    difference_regret,
    get_regret_function,
    regret_lottery,
    validate_regret_function,
)
from regretaudit.representations import (
    constant_negative,
    expected_regret,
    neg_abs_sum,
    prefer,
)

THREE = (constant_negative, neg_abs_sum, expected_regret)


def say(number, text):
    print(f"  [criterion {number}] {text}")


def _same_law_pairs(members):
    laws = [distribution(m) for m in members]
    n = len(members)
    return [(i, j) for i in range(n) for j in range(i + 1, n) if laws[i] == laws[j]]


def _demo_family_ok(fam):
    texts = {str(m) for m in fam}
    x, y = swap_pair()
    return len(fam) >= 10 and all(
        str(m) in texts
        for m in (x, y, SimpleRandomVariable.constant(0), SimpleRandomVariable.constant(1))
    )


@pytest.mark.criterion(1, "counterexample 1 reproduction (constant-negative)")
def test_criterion_1_constant_negative():
    fam = demo_family()
    assert _demo_family_ok(fam)
    start = time.perf_counter()
    report = run_audit(constant_negative(), fam)
    elapsed = time.perf_counter() - start
    n = len(fam)
    c = report.checks

    t = c[TRANSITIVITY]
    assert t.verdict == HOLDS and t.antecedents == 0
    assert any(note.startswith("vacuous") for note in t.notes)

    assert c[COMPLETENESS].verdict == VIOLATED
    assert c[COMPLETENESS].examined == c[COMPLETENESS].violations == comb(n, 2)
    assert {w.members for w in c[COMPLETENESS].witnesses} == {
        (i, j) for i in range(n) for j in range(i + 1, n)
    }

    same_law = _same_law_pairs(fam.members)
    assert same_law
    sd = c[SAME_DISTRIBUTION]
    assert sd.verdict == VIOLATED
    assert {w.members for w in sd.witnesses} == set(same_law)

    assert all(not k.upper and not k.lower for k in report.contours)
    assert any("is empty" in a for a in report.annotations)

    cont = c[CONTINUITY]
    assert cont.verdict == HOLDS and cont.antecedents == 0

    say(1, f"{n} members, {comb(n, 2)} incomparable pairs, {len(same_law)} same-law pairs, "
           f"audit {elapsed:.3f}s")
    assert elapsed < 1.0


@pytest.mark.criterion(2, "counterexample 2 reproduction (neg-abs-sum)")
def test_criterion_2_neg_abs_sum():
    fam = demo_family()
    assert _demo_family_ok(fam)
    start = time.perf_counter()
    report = run_audit(neg_abs_sum(), fam)
    elapsed = time.perf_counter() - start
    members = fam.members
    n = len(fam)
    rep = neg_abs_sum()

    for i in range(n):
        for j in range(n):
            assert prefer(rep, members[i], members[j]).forward == equal_ae(members[i], members[j])

    c = report.checks
    assert c[TRANSITIVITY].verdict == HOLDS and c[TRANSITIVITY].antecedents > 0

    unequal = {
        (i, j) for i in range(n) for j in range(i + 1, n) if not equal_ae(members[i], members[j])
    }
    assert c[COMPLETENESS].verdict == VIOLATED
    assert {w.members for w in c[COMPLETENESS].witnesses} == unequal

    flagged = {w.members: w for w in c[SAME_DISTRIBUTION].witnesses}
    same_law_unequal = [p for p in _same_law_pairs(members) if p in unequal]
    assert same_law_unequal
    for pair in same_law_unequal:
        (_, _, verdict), = flagged[pair].relations
        assert not verdict.forward and not verdict.backward

    for k in report.contours:
        cls = tuple(i for i in range(n) if equal_ae(members[i], members[k.member]))
        assert k.upper == k.lower == cls

    say(2, f"{len(unequal)} non-equal pairs incomparable, {len(same_law_unequal)} same-law "
           f"unequal pairs flagged, audit {elapsed:.3f}s")
    assert elapsed < 1.0


@pytest.mark.criterion(3, "positive control (expected-regret, 20 seeded families)")
def test_criterion_3_positive_control():
    config = FamilyConfig(
        size=12, max_cells=6, outcome_grid=(F(0), F(1, 4), F(1, 2), F(3, 4), F(1))
    )
    rep = expected_regret()
    pairs = 0
    start = time.perf_counter()
    for seed in range(20):
        fam = generate_family(seed, config)
        report = run_audit(rep, fam)
        assert report.pattern() == {name: HOLDS for name in ALL_CHECKS}, seed
        table = PreferenceTable(rep, fam)
        means = [oracle_expectation(m) for m in fam.members]
        for i in range(len(fam)):
            for j in range(len(fam)):
                assert table.weak(i, j) == (means[i] >= means[j])
                pairs += 1
    elapsed = time.perf_counter() - start
    say(3, f"20 families, {pairs} ordered pairs match the expectation order, {elapsed:.2f}s")
    assert elapsed < 10.0


@pytest.mark.criterion(4, "regret-lottery oracle equivalence (100 pairs)")
def test_criterion_4_lottery_oracle():
    psi = difference_regret()
    rng = random.Random(2024)
    for _ in range(100):
        x, y = random_variable(rng), random_variable(rng)
        expected = tuple(sorted(brute_force_lottery(psi, x, y).items()))
        assert regret_lottery(psi, x, y).canonical().entries == expected
    say(4, "100 seeded pairs equal the brute-force common-refinement oracle")


@pytest.mark.criterion(5, "distribution invariance under cell splitting (100 variables)")
def test_criterion_5_split_invariance():
    rng = random.Random(99)
    partners = [random_variable(rng) for _ in range(6)]
    partners += list(swap_pair())
    reps = [f() for f in THREE]
    comparisons = 0
    for _ in range(100):
        x = random_variable(rng)
        y = split_cell(rng, x)
        assert len(y.assignments) == len(x.assignments) + 1
        assert distribution(y) == distribution(x)
        assert equal_ae(x, y)
        for z in partners:
            assert equal_ae(y, z) == equal_ae(x, z)
            for rep in reps:
                assert prefer(rep, y, z) == prefer(rep, x, z)
                assert prefer(rep, z, y) == prefer(rep, z, x)
                comparisons += 2
    say(5, f"100 splits, {comparisons} verdicts unchanged")


@pytest.mark.criterion(6, "regret-function validator")
def test_criterion_6_validator():
    ok = validate_regret_function(difference_regret(), UNIT_SPACE, 101)
    assert ok.passed
    flipped = validate_regret_function(get_regret_function("neg-difference", True), UNIT_SPACE, 101)
    assert not flipped.passed
    assert flipped.categories == {INCREASING_IN_FIRST, DECREASING_IN_SECOND}
    offset = validate_regret_function(get_regret_function("offset-difference", True), UNIT_SPACE, 101)
    assert not offset.passed and offset.categories == {DIAGONAL}
    say(6, "difference passes; sign flip fails both monotonicity axes; offset fails the diagonal")


def _cli(args, cwd, hashseed):
    env = dict(os.environ, PYTHONHASHSEED=hashseed)
    return subprocess.run(
        [sys.executable, "-m", "regretaudit", *args],
        capture_output=True, env=env, cwd=cwd, check=False,
    )


@pytest.mark.criterion(7, "CLI determinism for every command")
def test_criterion_7_determinism(tmp_path):
    invocations = [
        ["demo", "1"],
        ["demo", "2", "--format", "json"],
        ["audit", "--rep", "expected-regret", "--seed", "7", "--size", "12", "--format", "json"],
        ["audit", "--rep", "neg-abs-sum", "--seed", "4"],
        ["gen-family", "--seed", "1", "--size", "4"],
        ["gen-family", "--seed", "1", "--size", "4", "-o", "family.json"],
        ["audit", "--rep", "constant-negative", "--family", "family.json", "--format", "json"],
        ["validate-psi", "difference"],
        ["validate-psi", "neg-difference", "--format", "json"],
    ]
    runs = []
    for seed, folder in (("1", "a"), ("4242", "b")):
        cwd = tmp_path / folder
        cwd.mkdir()
        outputs = []
        for args in invocations:
            done = _cli(args, cwd, seed)
            outputs.append((done.returncode, done.stdout))
        runs.append((outputs, (cwd / "family.json").read_bytes()))
    assert runs[0] == runs[1]
    say(7, f"{len(invocations)} invocations byte-identical across two runs")


@pytest.mark.criterion(8, "measure algebra (1000 event pairs, 1000 partition pairs)")
def test_criterion_8_measure_algebra():
    rng = random.Random(8)
    for _ in range(1000):
        a, b = random_event(rng), random_event(rng)
        assert measure(a) + measure(b) == measure(a | b) + measure(a & b)
    for _ in range(1000):
        p, q = random_partition(rng), random_partition(rng)
        refined, parents = common_refinement(p, q)
        assert sum(c.measure for c in refined.cells) == 1
        for i, cell in enumerate(p.cells):
            assert sum(r.measure for r, (pi, _) in zip(refined.cells, parents) if pi == i) == cell.measure
        for j, cell in enumerate(q.cells):
            assert sum(r.measure for r, (_, qj) in zip(refined.cells, parents) if qj == j) == cell.measure
        assert len(refined) <= len(p) * len(q)
    say(8, "inclusion-exclusion, conservation and cell-count bound hold exactly")
