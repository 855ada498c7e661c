"""Command line front end.

Exit codes: 0 success or expected verdicts, 1 verdict mismatch or failed
validation, 2 usage or configuration error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from regretaudit.audit import (
    ALL_CHECKS,
    EXPECT_PROFILES,
    AuditOptions,
    ConfigError,
    Family,
    FamilyConfig,
    generate_family,
    run_audit,
)
from regretaudit.demo import run_demo
from regretaudit.random_variables import UNIT_SPACE
from regretaudit.regret import (
    DIAGNOSTIC_REGRET_FUNCTIONS,
    REGRET_FUNCTIONS,
    get_regret_function,
    validate_regret_function,
)
from regretaudit.representations import REPRESENTATIONS, get_representation

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_CONFIG = 2
EXIT_IO = 3


def _grid(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(v.strip()) for v in text.split(",") if v.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad outcome grid {text!r}") from None


def _checks(text: str) -> tuple[str, ...]:
    names = tuple(c.strip() for c in text.split(",") if c.strip())
    unknown = [c for c in names if c not in ALL_CHECKS]
    if unknown or not names:
        raise argparse.ArgumentTypeError(
            f"unknown checks {unknown}; choose from {', '.join(ALL_CHECKS)}"
        )
    return names


def _add_family_args(p: argparse.ArgumentParser) -> None:
    defaults = FamilyConfig()
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size", type=int, default=defaults.size, help="number of random members")
    p.add_argument("--max-cells", type=int, default=defaults.max_cells)
    p.add_argument(
        "--grid",
        type=_grid,
        default=defaults.outcome_grid,
        help="comma-separated outcome grid, e.g. 0,1/4,1/2,3/4,1",
    )


def _config(args: argparse.Namespace) -> FamilyConfig:
    return FamilyConfig(
        size=args.size, max_cells=args.max_cells, outcome_grid=args.grid, space=UNIT_SPACE
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regretaudit",
        description="Audit regret-based preference representations against the classical axioms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("demo", help="reproduce a counterexample on the fixed demo family")
    p.add_argument("counterexample", type=int, choices=(1, 2))
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("audit", help="audit a representation on a family")
    p.add_argument("--rep", required=True, choices=sorted(REPRESENTATIONS))
    p.add_argument("--family", help="family JSON file (overrides the generator flags)")
    _add_family_args(p)
    p.add_argument("--checks", type=_checks, default=ALL_CHECKS)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--expect", choices=sorted(EXPECT_PROFILES))
    p.add_argument("--sequence-length", type=int, default=AuditOptions().sequence_length)
    p.add_argument(
        "--continuity-targets",
        type=int,
        default=AuditOptions().continuity_targets,
        help="targets sampled by the continuity proxy (0 = all members)",
    )

    p = sub.add_parser("gen-family", help="write a seeded family as JSON")
    _add_family_args(p)
    p.add_argument("-o", "--output", help="output path (default: stdout)")

    p = sub.add_parser("validate-psi", help="check a regret function on a grid")
    p.add_argument(
        "name", choices=sorted({*REGRET_FUNCTIONS, *DIAGNOSTIC_REGRET_FUNCTIONS})
    )
    p.add_argument("--grid-points", type=int, default=101)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_demo(args: argparse.Namespace) -> int:
    report, claims = run_demo(args.counterexample)
    ok = all(c.ok for c in claims)
    if args.format == "json":
        data = report.to_dict()
        data["claims"] = [{"claim": c.text, "ok": c.ok} for c in claims]
        _emit(json.dumps(data, indent=2))
    else:
        lines = [f"counterexample {args.counterexample}: {report.representation}"]
        lines += [f"  [{'ok' if c.ok else 'FAILED'}] {c.text}" for c in claims]
        _emit("\n".join(lines) + "\n\n" + report.to_text())
    if not ok:
        print("demo verdicts deviate from the expected counterexample", file=sys.stderr)
    return EXIT_OK if ok else EXIT_MISMATCH


def _load_family(path: str) -> Family:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"family file is not JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError("family file must hold a JSON object")
    return Family.from_dict(data)


def cmd_audit(args: argparse.Namespace) -> int:
    targets = None if args.continuity_targets == 0 else args.continuity_targets
    options = AuditOptions(args.checks, args.sequence_length, None, targets)
    options.validate()
    fam = _load_family(args.family) if args.family else generate_family(args.seed, _config(args))
    report = run_audit(get_representation(args.rep), fam, options)
    _emit(report.to_json() if args.format == "json" else report.to_text())
    if args.expect and not report.matches(EXPECT_PROFILES[args.expect]):
        print(f"verdict pattern does not match profile {args.expect}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_gen_family(args: argparse.Namespace) -> int:
    text = generate_family(args.seed, _config(args)).to_json()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        _emit(text)
    return EXIT_OK


def cmd_validate_psi(args: argparse.Namespace) -> int:
    if args.grid_points < 3:
        raise ConfigError("--grid-points must be at least 3")
    f = get_regret_function(args.name, include_diagnostic=True)
    report = validate_regret_function(f, UNIT_SPACE, args.grid_points)
    _emit(json.dumps(report.to_dict(), indent=2) if args.format == "json" else report.to_text())
    return EXIT_OK if report.passed else EXIT_MISMATCH


COMMANDS = {
    "demo": cmd_demo,
    "audit": cmd_audit,
    "gen-family": cmd_gen_family,
    "validate-psi": cmd_validate_psi,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
