"""Command line front end for the scenario runner.

Usage:
    cremeq run <name-or-path> [--json OUT] [--md OUT] [--bound N]
    cremeq list
    cremeq check-all

`run` prints the markdown report to stdout and exits 0 exactly when every
expected value matched.  `check-all` runs the built-in scenarios and prints a
one-line verdict each.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .scenarios import (
    BUILTIN_SCENARIOS,
    ScenarioConfigError,
    builtin_scenario,
    list_scenarios,
    load_scenario,
    run_scenario,
)


def _resolve(target: str):
    if target in BUILTIN_SCENARIOS:
        return builtin_scenario(target)
    if Path(target).exists():
        return load_scenario(target)
    raise ScenarioConfigError(
        f"{target!r} is neither a built-in scenario nor an existing file "
        f"(built-ins: {', '.join(BUILTIN_SCENARIOS)})"
    )


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="cremeq",
        description="exact lattice bookkeeping for plane-equivalence questions "
        "about projected surfaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one scenario by name or config path")
    p_run.add_argument("target", help="built-in scenario name or path to a JSON config")
    p_run.add_argument("--json", dest="json_out", metavar="PATH",
                       help="also write the JSON report here")
    p_run.add_argument("--md", dest="md_out", metavar="PATH",
                       help="also write the markdown report here")
    p_run.add_argument("--bound", type=int, default=None,
                       help="override the witness search bound for the "
                       "restriction system")

    sub.add_parser("list", help="list built-in scenarios")
    sub.add_parser("check-all", help="run every built-in scenario")

    args = parser.parse_args(argv)

    if args.command == "list":
        for name in list_scenarios():
            sc = builtin_scenario(name)
            desc = sc.config.get("description", "")
            print(f"{name:15s} {desc}")
        return 0

    if args.command == "check-all":
        all_pass = True
        for name in list_scenarios():
            report = run_scenario(builtin_scenario(name))
            print(f"{name}: {report.overall}")
            all_pass = all_pass and report.overall == "PASS"
        return 0 if all_pass else 1

    try:
        scenario = _resolve(args.target)
    except ScenarioConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = run_scenario(scenario, bound=args.bound)
    print(report.to_markdown())
    if args.json_out:
        Path(args.json_out).write_text(report.to_json())
    if args.md_out:
        Path(args.md_out).write_text(report.to_markdown())
    return 0 if report.overall == "PASS" else 1


if __name__ == "__main__":
    raise SystemExit(main())
