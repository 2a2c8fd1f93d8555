"""Packing analysis pipeline helpers: command execution and report output."""

from __future__ import annotations

import json
import sys
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Tuple

import pandas as pd

from .graphs import ACYCLIC, Graph, generate_named, girth, read_graph
from .packing import (
    DEFAULT_PATTERN_BUDGET,
    BoundReport,
    ConfigError,
    InvariantViolation,
    ListAssignment,
    PatternBudgetExceeded,
    __version__,
    check_bound_against_count,
    classical_packing_count,
    constant_assignment,
    count_packings_direct,
    count_packings_via_product,
    dz_threshold,
    equality_probe,
    girth8_bound,
    list_coloring_lower_bound,
    list_packing_function_exact,
    list_packing_function_sampled,
    list_packing_number,
    packing_lower_bound,
    positivity_table,
    read_assignment,
    tree_packing_value,
)
from .packing.bounds import trivial_report
from .packing.extremal import GAP_COLUMNS


COMMANDS = ("count", "minimize", "packing-number", "probe", "bounds", "scan")
CSV_COMMANDS = ("probe", "scan")
SCAN_COLUMNS = (
    "n",
    "m",
    "classical_count",
    "min_count",
    "gap",
    "exhaustive",
    "bound_applicable",
    "bound_ceiling",
    "bound_passed",
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_TRUNCATED = 3
EXIT_INVARIANT = 4


@dataclass
class RunConfig:
    command: str
    graph: Optional[str] = None
    graph_format: str = "edges"
    family: Optional[str] = None
    n: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None
    p: float = 0.5
    q: Optional[int] = None
    k: Optional[int] = None
    assignment: Optional[str] = None
    seed: Optional[int] = None
    budget: Optional[int] = None
    pattern_budget: int = DEFAULT_PATTERN_BUDGET
    q_max: Optional[int] = None
    n_max: Optional[int] = None
    workers: int = 1
    method: str = "auto"
    out: Optional[str] = None
    emit: str = "json"
    check: bool = False
    assume_planar: bool = False
    timings: bool = False
    quiet: bool = False


class _Report:
    def __init__(self, config: RunConfig):
        self.config = config
        self.checks: List[Dict[str, Any]] = []
        self.timings: Dict[str, float] = {}
        self.truncated = False

    def step(self, message: str) -> None:
        if not self.config.quiet:
            print(f"STEP: {message}", file=sys.stderr)

    def warn(self, message: str) -> None:
        if not self.config.quiet:
            print(f"  Warning: {message}", file=sys.stderr)

    @contextmanager
    def timed(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        yield
        if self.config.timings:
            self.timings[name] = round(time.perf_counter() - start, 6)

    def record(self, name: str, passed: bool, detail: Optional[str] = None, fatal: bool = True) -> None:
        entry: Dict[str, Any] = {"name": name, "passed": passed}
        if detail:
            entry["detail"] = detail
        self.checks.append(entry)
        if not passed:
            if fatal:
                raise InvariantViolation(f"Check '{name}' failed: {detail or 'no detail'}")
            self.warn(f"{name}: {detail}")

    def document(self, result: Dict[str, Any]) -> Dict[str, Any]:
        return {
            "version": __version__,
            "config": asdict(self.config),
            "result": result,
            "truncated": self.truncated,
            "invariant_checks": self.checks,
            "timings": self.timings,
        }


def resolve_graph(config: RunConfig, n: Optional[int] = None) -> Graph:
    if config.graph is not None:
        try:
            return read_graph(Path(config.graph).expanduser(), fmt=config.graph_format)
        except OSError as exc:
            raise ConfigError("unreadable-file", f"Cannot read graph file {config.graph}: {exc}") from exc
        except ValueError as exc:
            raise ConfigError("bad-graph-source", f"Invalid graph file {config.graph}: {exc}") from exc
    try:
        return generate_named(
            config.family,
            n=config.n if n is None else n,
            a=config.a,
            b=config.b,
            seed=config.seed,
            p=config.p,
        )
    except ValueError as exc:
        raise ConfigError("bad-graph-source", str(exc)) from exc


def resolve_assignment(config: RunConfig, G: Graph) -> Optional[ListAssignment]:
    if config.assignment is None:
        return None
    try:
        L = read_assignment(Path(config.assignment).expanduser(), G)
    except OSError as exc:
        raise ConfigError("unreadable-file", f"Cannot read assignment file {config.assignment}: {exc}") from exc
    if L.q != config.q:
        raise ConfigError("usage", f"Assignment lists have size {L.q} but --q is {config.q}")
    return L


def _graph_json(G: Graph) -> Dict[str, Any]:
    g = girth(G)
    return {"n": G.n, "m": G.m, "girth": "acyclic" if g is ACYCLIC else g}


def _check_bound(report: _Report, name: str, bound: BoundReport, measured: int) -> Optional[BoundReport]:
    report.record(f"{name}_tight", bound.is_tight())
    if not bound.applicable:
        return None
    if measured <= 0:
        report.warn(f"{name}: measured count is 0, comparison skipped")
        return None
    checked = check_bound_against_count(bound, measured)
    report.record(name, bool(checked.passed), detail=f"measured {measured}, ceiling {bound.ceiling}")
    return checked


def _run_count(config: RunConfig, report: _Report) -> Dict[str, Any]:
    G = resolve_graph(config)
    L = resolve_assignment(config, G)
    q, k = config.q, config.k
    result: Dict[str, Any] = {"graph": _graph_json(G), "q": q, "k": k}

    if L is None:
        report.step(f"Counting classical packings (q={q}, k={k})")
        with report.timed("classical"):
            value = classical_packing_count(G, q, k, method=config.method)
        report.step("Cross-checking with the direct packing count")
        with report.timed("direct"):
            direct = count_packings_direct(G, constant_assignment(G, q), k)
        report.record("classical_matches_direct", value == direct, detail=f"classical {value}, direct {direct}")
        result["mode"] = "classical"
    else:
        report.step(f"Counting L-packings (q={q}, k={k})")
        with report.timed("direct"):
            value = count_packings_direct(G, L, k)
        report.step("Cross-checking with the product graph count")
        with report.timed("product"):
            product = count_packings_via_product(G, L, k)
        report.record("direct_matches_product", value == product, detail=f"direct {value}, product {product}")
        result["mode"] = "assignment"

    if G.is_tree() and L is None:
        expected = tree_packing_value(G.n, q) if k == q else None
        if expected is not None:
            report.record("tree_formula", value == expected, detail=f"count {value}, (!q)^(n-1) {expected}")
    _check_bound(report, "packing_lower_bound", packing_lower_bound(G.n, G.m, q, k), value)
    result["value"] = str(value)
    return result


def _run_minimize(config: RunConfig, report: _Report) -> Dict[str, Any]:
    G = resolve_graph(config)
    q, k = config.q, config.k
    progress = not config.quiet
    result: Dict[str, Any] = {"graph": _graph_json(G)}

    try:
        if config.budget is None:
            report.step(f"Sweeping all assignment patterns (q={q}, k={k})")
            with report.timed("minimize"):
                minimum = list_packing_function_exact(
                    G, q, k, config.pattern_budget, workers=config.workers, progress=progress
                )
            result["mode"] = "exact"
        else:
            report.step(f"Sampling {config.budget} assignments (q={q}, k={k}, seed={config.seed})")
            with report.timed("minimize"):
                minimum = list_packing_function_sampled(
                    G, q, k, config.budget, config.seed, workers=config.workers, progress=progress
                )
            result["mode"] = "sampled"
    except PatternBudgetExceeded as exc:
        report.warn(str(exc))
        report.truncated = True
        result.update({"mode": "exact", "error": str(exc)})
        if exc.total is not None:
            result.update({"total_patterns": exc.total, "budget": exc.budget})
        return result

    report.step("Computing the classical count for comparison")
    with report.timed("classical"):
        classical = classical_packing_count(G, q, k, method=config.method)
    report.record("dominance", minimum.value <= classical, detail=f"minimum {minimum.value}, classical {classical}")
    if minimum.exhaustive and q >= max(dz_threshold(G.n, G.m, k), k):
        report.record("equality_above_threshold", minimum.value == classical)
    result.update(minimum.to_json())
    result["classical_count"] = str(classical)
    return result


def _run_packing_number(config: RunConfig, report: _Report) -> Dict[str, Any]:
    G = resolve_graph(config)
    progress = not config.quiet
    result: Dict[str, Any] = {"graph": _graph_json(G)}

    report.step(f"Searching for the list packing number (q <= {config.q_max})")
    try:
        with report.timed("packing_number"):
            found = list_packing_number(G, config.q_max, config.pattern_budget, config.workers, progress)
        result.update(found.to_json())
        if config.check:
            report.step("Tabulating positivity up to q_max")
            with report.timed("positivity"):
                table = positivity_table(G, config.q_max, config.pattern_budget, config.workers, progress)
            result["positivity"] = table.to_json()
            report.record(
                "monotone_positivity",
                not table.findings,
                detail=f"positive then zero at q={list(table.findings)}" if table.findings else None,
                fatal=False,
            )
    except PatternBudgetExceeded as exc:
        report.warn(str(exc))
        report.truncated = True
        result["error"] = str(exc)
        if exc.partial is not None:
            result["partial"] = exc.partial.to_json()
    return result


def _run_probe(config: RunConfig, report: _Report) -> Dict[str, Any]:
    G = resolve_graph(config)
    report.step(f"Probing list/classical equality (k={config.k}, q <= {config.q_max})")
    with report.timed("probe"):
        probe = equality_probe(
            G,
            config.k,
            config.q_max,
            config.pattern_budget,
            workers=config.workers,
            progress=not config.quiet,
            method=config.method,
        )
    report.truncated = probe.truncated
    if probe.threshold_consistent is not None:
        report.record("threshold_consistency", probe.threshold_consistent)
    return {"graph": _graph_json(G), **probe.to_json()}


def _run_bounds(config: RunConfig, report: _Report) -> Dict[str, Any]:
    G = resolve_graph(config)
    L = resolve_assignment(config, G)
    q, k = config.q, config.k
    bound = packing_lower_bound(G.n, G.m, q, k)
    result: Dict[str, Any] = {
        "graph": _graph_json(G),
        "q": q,
        "k": k,
        "dz_threshold": dz_threshold(G.n, G.m, k),
        "packing_lower_bound": bound.to_json(),
        "list_coloring_lower_bound": list_coloring_lower_bound(G.n, G.m, q).to_json(),
    }
    report.record("packing_lower_bound_tight", bound.is_tight())
    if G.is_tree():
        result["tree_value"] = str(tree_packing_value(G.n, q))

    girth_report: Optional[BoundReport] = None
    if config.assume_planar:
        g = girth(G)
        if g is ACYCLIC or g >= 8:
            girth_report = girth8_bound(G.n)
        else:
            report.warn(f"girth-8 bound needs girth >= 8, graph has girth {g}")
            girth_report = trivial_report()
        result["girth8_bound"] = girth_report.to_json()

    if config.check:
        report.step(f"Measuring the packing count (q={q}, k={k})")
        with report.timed("measure"):
            if L is None:
                measured = classical_packing_count(G, q, k, method=config.method)
            else:
                measured = count_packings_direct(G, L, k)
        result["measured"] = str(measured)
        checked = _check_bound(report, "packing_lower_bound", bound, measured)
        if checked is not None:
            result["packing_lower_bound"] = checked.to_json()
        if girth_report is not None and (q, k) == (3, 2):
            checked = _check_bound(report, "girth8_bound", girth_report, measured)
            if checked is not None:
                result["girth8_bound"] = checked.to_json()
    return result


def _run_scan(config: RunConfig, report: _Report) -> Dict[str, Any]:
    q, k = config.q, config.k
    rows: List[Dict[str, Any]] = []
    for n in range(config.n, config.n_max + 1):
        G = resolve_graph(config, n=n)
        report.step(f"Scanning {config.family} n={n} (m={G.m})")
        with report.timed(f"n={n}"):
            classical = classical_packing_count(G, q, k, method=config.method)
            try:
                minimum = list_packing_function_exact(
                    G, q, k, config.pattern_budget, workers=config.workers, progress=not config.quiet
                )
            except PatternBudgetExceeded as exc:
                report.warn(f"scan stopped at n={n}: {exc}")
                report.truncated = True
                break
        report.record(f"dominance_n={n}", minimum.value <= classical)
        bound = packing_lower_bound(G.n, G.m, q, k)
        passed = None
        if bound.applicable and minimum.value > 0:
            passed = check_bound_against_count(bound, minimum.value).passed
            report.record(f"packing_lower_bound_n={n}", bool(passed))
        rows.append(
            {
                "n": n,
                "m": G.m,
                "classical_count": str(classical),
                "min_count": str(minimum.value),
                "gap": str(classical - minimum.value),
                "exhaustive": minimum.exhaustive,
                "bound_applicable": bound.applicable,
                "bound_ceiling": str(bound.ceiling),
                "bound_passed": passed,
            }
        )
    return {"family": config.family, "q": q, "k": k, "rows": rows}


_RUNNERS = {
    "count": _run_count,
    "minimize": _run_minimize,
    "packing-number": _run_packing_number,
    "probe": _run_probe,
    "bounds": _run_bounds,
    "scan": _run_scan,
}


def execute(config: RunConfig) -> Tuple[int, Dict[str, Any]]:
    """
    Run one command and assemble its report.

    Returns the exit status (0, or 3 when a pattern budget truncated the run)
    and the report document. Invariant failures propagate as
    :class:`InvariantViolation`.
    """
    if config.command not in _RUNNERS:
        raise ConfigError("usage", f"Unknown command '{config.command}'. Choose from: {', '.join(COMMANDS)}")
    report = _Report(config)
    result = _RUNNERS[config.command](config, report)
    document = report.document(result)
    return (EXIT_TRUNCATED if report.truncated else EXIT_OK), document


def report_frame(document: Dict[str, Any]) -> pd.DataFrame:
    """Row table of a ``probe`` or ``scan`` report."""
    command = document["config"]["command"]
    if command == "probe":
        columns = GAP_COLUMNS
    elif command == "scan":
        columns = SCAN_COLUMNS
    else:
        raise ConfigError("bad-emit", f"Command '{command}' has no tabular output; use --emit json")
    return pd.DataFrame.from_records(document["result"]["rows"], columns=list(columns))


def render_report(document: Dict[str, Any], emit: str = "json") -> str:
    if emit == "json":
        return json.dumps(document, indent=2) + "\n"
    if emit == "csv":
        return report_frame(document).to_csv(index=False, lineterminator="\n")
    raise ConfigError("bad-emit", f"Unsupported output format '{emit}'. Use json or csv.")


def write_report(document: Dict[str, Any], emit: str = "json", out: Optional[str] = None) -> None:
    text = render_report(document, emit)
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out).expanduser()
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
