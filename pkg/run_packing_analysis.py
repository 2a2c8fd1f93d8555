#!/usr/bin/env python3
"""
Count and minimize proper list-colouring packings of small graphs from the command line.

Examples
--------
python run_packing_analysis.py count --family path --n 3 --q 3 --k 3
python run_packing_analysis.py minimize --graph g.edges --q 3 --k 2 --budget 100000 --seed 7
python run_packing_analysis.py probe --family complete --n 2 --k 2 --qmax 3 --emit csv
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from utils.graphs import FAMILIES, GRAPH_FORMATS
from utils.packing import DEFAULT_PATTERN_BUDGET, METHODS, ConfigError, InvariantViolation
from utils.packing_pipeline import (
    CSV_COMMANDS,
    EXIT_INVARIANT,
    EXIT_USAGE,
    RunConfig,
    execute,
    write_report,
)


class _ConfigParser(argparse.ArgumentParser):
    """Raise :class:`ConfigError` instead of printing usage and exiting."""

    def error(self, message: str) -> None:
        raise ConfigError("usage", f"{self.prog}: {message}")


def _add_qk(parser: argparse.ArgumentParser, with_q: bool = True) -> None:
    if with_q:
        parser.add_argument("--q", type=int, default=None, help="List size (colours per vertex).")
    parser.add_argument("--k", type=int, default=None, help="Packing size.")


def _build_parser() -> argparse.ArgumentParser:
    common = _ConfigParser(add_help=False)
    source = common.add_argument_group("graph source")
    source.add_argument("--graph", default=None, help="Graph file (see --format).")
    source.add_argument(
        "--format",
        dest="graph_format",
        default="edges",
        help=f"Graph file format: {', '.join(GRAPH_FORMATS)} (default: edges).",
    )
    source.add_argument("--family", default=None, help=f"Named family: {', '.join(FAMILIES)}.")
    source.add_argument("--n", type=int, default=None, help="Vertex count for --family.")
    source.add_argument("--a", type=int, default=None, help="First part size for complete_bipartite.")
    source.add_argument("--b", type=int, default=None, help="Second part size for complete_bipartite.")
    source.add_argument("--p", type=float, default=0.5, help="Edge probability for random_graph (default: 0.5).")

    run = common.add_argument_group("run")
    run.add_argument("--seed", type=int, default=None, help="Seed for random families and sampling.")
    run.add_argument(
        "--pattern-budget",
        type=int,
        default=DEFAULT_PATTERN_BUDGET,
        help=f"Largest pattern space swept exactly (default: {DEFAULT_PATTERN_BUDGET}).",
    )
    run.add_argument("--workers", type=int, default=1, help="Worker processes for pattern sweeps (default: 1).")
    run.add_argument(
        "--method",
        choices=list(METHODS),
        default="auto",
        help="Chromatic polynomial engine (default: auto).",
    )
    run.add_argument("--out", default=None, help="Write the report here instead of stdout.")
    run.add_argument("--emit", default="json", help="Report format: json or csv (csv for probe and scan).")
    run.add_argument("--timings", action="store_true", help="Record wall-clock timings in the report.")
    run.add_argument("--quiet", action="store_true", help="Suppress STEP lines and progress bars.")

    parser = _ConfigParser(
        prog="run_packing_analysis.py",
        description="Exact counting and minimization of proper list-colouring packings.",
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")

    count = commands.add_parser("count", parents=[common], help="Classical or given-assignment packing count.")
    _add_qk(count)
    count.add_argument("--assignment", default=None, help="JSON list assignment; counts L-packings.")

    minimize = commands.add_parser("minimize", parents=[common], help="Minimum packing count over q-assignments.")
    _add_qk(minimize)
    minimize.add_argument(
        "--budget",
        type=int,
        default=None,
        help="Number of random assignments to sample; omit for the exact pattern sweep.",
    )

    number = commands.add_parser("packing-number", parents=[common], help="List packing number up to a cap.")
    number.add_argument("--qmax", dest="q_max", type=int, default=None, help="Largest q tried.")
    number.add_argument("--check", action="store_true", help="Also tabulate positivity for every q <= qmax.")

    probe = commands.add_parser("probe", parents=[common], help="Gap table between classical and list counts.")
    _add_qk(probe, with_q=False)
    probe.add_argument("--qmax", dest="q_max", type=int, default=None, help="Largest q probed.")

    bounds = commands.add_parser("bounds", parents=[common], help="Closed-form lower bounds and thresholds.")
    _add_qk(bounds)
    bounds.add_argument("--assignment", default=None, help="JSON list assignment measured by --check.")
    bounds.add_argument("--check", action="store_true", help="Measure the count and compare with the bounds.")
    bounds.add_argument(
        "--assume-planar",
        action="store_true",
        help="Caller asserts the graph is planar; adds the girth-8 bound when the girth allows it.",
    )

    scan = commands.add_parser("scan", parents=[common], help="Counts and minima over a family size range.")
    _add_qk(scan)
    scan.add_argument("--n-max", dest="n_max", type=int, default=None, help="Last size of the range (first is --n).")
    return parser


def _require(config: RunConfig, *names: str) -> None:
    for name in names:
        if getattr(config, name) is None:
            flag = "--" + {"q_max": "qmax", "n_max": "n-max"}.get(name, name)
            raise ConfigError("missing-flag", f"{config.command} requires {flag}")


def _check_readable(path: str, what: str) -> None:
    resolved = Path(path).expanduser()
    if not resolved.is_file() or not os.access(resolved, os.R_OK):
        raise ConfigError("unreadable-file", f"Cannot read {what} file: {path}")


def _validate(config: RunConfig) -> None:
    if config.command is None:
        raise ConfigError("missing-flag", "A command is required")

    if config.graph is not None and config.family is not None:
        raise ConfigError("bad-graph-source", "Give exactly one graph source: --graph or --family, not both")
    if config.graph is None and config.family is None:
        raise ConfigError("missing-flag", "A graph source is required: --graph FILE or --family NAME")
    if config.graph is not None:
        if config.command == "scan":
            raise ConfigError("bad-graph-source", "scan iterates a family; use --family instead of --graph")
        if config.graph_format not in GRAPH_FORMATS:
            raise ConfigError("bad-graph-source", f"Unknown graph format '{config.graph_format}'")
        _check_readable(config.graph, "graph")
    else:
        if config.family not in FAMILIES:
            raise ConfigError("bad-graph-source", f"Unknown family '{config.family}'. Choose from: {', '.join(FAMILIES)}")
        if config.family == "complete_bipartite":
            if config.command == "scan":
                raise ConfigError("bad-graph-source", "scan needs a family sized by --n")
            _require(config, "a", "b")
        else:
            _require(config, "n")
        if config.family in ("random_tree", "random_graph"):
            _require(config, "seed")

    if config.command in ("count", "minimize", "bounds", "scan"):
        _require(config, "q", "k")
    if config.command == "probe":
        _require(config, "k", "q_max")
    if config.command == "packing-number":
        _require(config, "q_max")
    if config.command == "scan":
        _require(config, "n_max")
        if config.n_max < config.n:
            raise ConfigError("usage", f"--n-max {config.n_max} is below --n {config.n}")
    if config.command == "minimize" and config.budget is not None:
        _require(config, "seed")
        if config.budget < 0:
            raise ConfigError("usage", f"--budget must be >= 0, got {config.budget}")

    for name in ("q", "k", "q_max"):
        value = getattr(config, name)
        if value is not None and value < 1:
            raise ConfigError("usage", f"--{name.replace('_', '')} must be >= 1, got {value}")
    if config.q is not None and config.k is not None and config.k > config.q:
        raise ConfigError("k-exceeds-q", f"Packing size --k {config.k} exceeds list size --q {config.q}")
    if config.workers < 1:
        raise ConfigError("usage", f"--workers must be >= 1, got {config.workers}")
    if config.pattern_budget < 1:
        raise ConfigError("usage", f"--pattern-budget must be >= 1, got {config.pattern_budget}")

    if config.emit not in ("json", "csv"):
        raise ConfigError("bad-emit", f"Unknown output format '{config.emit}'. Use json or csv.")
    if config.emit == "csv" and config.command not in CSV_COMMANDS:
        raise ConfigError("bad-emit", f"{config.command} emits json only; csv is available for probe and scan")

    if config.assignment is not None:
        _check_readable(config.assignment, "assignment")


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    """Parse and validate ``argv``; every rejection is a :class:`ConfigError`."""
    args = _build_parser().parse_args(argv)
    fields = vars(args)
    config = RunConfig(**{name: value for name, value in fields.items() if value is not None or name == "command"})
    _validate(config)
    return config


def main(argv: Optional[List[str]] = None) -> int:
    try:
        config = parse_config(argv)
        status, document = execute(config)
    except ConfigError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"INVARIANT FAILURE: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    write_report(document, emit=config.emit, out=config.out)
    if status and not config.quiet:
        print("STEP: Pattern budget exhausted; report is partial", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
