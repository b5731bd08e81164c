"""``g2calc`` command-line driver.

    g2calc <subcommand> [--json] [--ordered] [--seed N]

Exit status: 0 when every selected check passes, 1 on a failed check,
2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .checks import SUBCOMMANDS, VerificationReport, run_checks
from .sampling import DEFAULT_SEED

CHOICES = list(SUBCOMMANDS) + ["all"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="g2calc",
        description="Exact verification of the closed G2-structure φ = Re Ω + ω∧dt on T*X×R.",
    )
    parser.add_argument("subcommand", choices=CHOICES, help="check group to run")
    parser.add_argument("--json", action="store_true", help="emit one JSON object per check")
    parser.add_argument("--ordered", action="store_true", help="emit reports in registration order")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized instances")
    return parser


def format_report(rep: VerificationReport, as_json: bool) -> str:
    if as_json:
        return json.dumps(rep.to_json(), ensure_ascii=False, sort_keys=True)
    line = f"{'PASS' if rep.passed else 'FAIL'}  {rep.check:<24} {rep.detail}  ({rep.duration_ms} ms)"
    if not rep.passed:
        line += f"\n      witness: {rep.witness}"
    return line


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed < 0 or args.seed >= 2**64:
        parser.error("--seed must be an unsigned 64-bit integer")
    # checks run sequentially, so output is always in registration order
    reports = run_checks(args.subcommand, seed=args.seed)
    for rep in reports:
        print(format_report(rep, args.json), flush=True)
    if not args.json:
        failed = sum(not r.passed for r in reports)
        print(f"{len(reports) - failed}/{len(reports)} checks passed")
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
