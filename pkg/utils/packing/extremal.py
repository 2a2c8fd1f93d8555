"""
Minimizing packing counts over list assignments.

Exact minimization sweeps every intersection pattern of q-assignments and
evaluates the packing count of one realization per pattern. The sampled
variant draws seeded random assignments instead and always includes the
constant pattern, so its value never exceeds the classical count.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from ..graphs import Graph
from .assignments import (
    DEFAULT_PATTERN_BUDGET,
    PatternAssignment,
    canonical_pattern,
    constant_assignment,
    count_patterns,
    enumerate_patterns,
    random_assignment,
    realize_pattern,
)
from .bounds import dz_threshold
from .counting import _check_k, classical_packing_count, count_packings_direct
from .errors import InvariantViolation, PatternBudgetExceeded


# Above this size the sampler never tries to count the full pattern space.
SAMPLER_SWEEP_MAX_VERTICES = 6
# Counting the pattern space may visit up to (2**n - 1) * (q + 1)**n states; the
# sampler only counts when that is within this multiple of its budget.
SAMPLER_COUNT_WORK_FACTOR = 64
GAP_COLUMNS = ("q", "classical_count", "min_count", "gap", "exhaustive")


@dataclass(frozen=True)
class MinimizationResult:
    q: int
    k: int
    value: int
    witness: PatternAssignment
    exhaustive: bool
    evaluated: int

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "k": self.k,
            "value": str(self.value),
            "witness": self.witness.to_json(),
            "exhaustive": self.exhaustive,
            "evaluated": self.evaluated,
        }


@dataclass(frozen=True)
class PackingNumberResult:
    """``value`` is None when no q up to ``q_max`` works (the cap was hit)."""
    value: Optional[int]
    q_max: int
    minima: Tuple[Tuple[int, int], ...]

    @property
    def capped(self) -> bool:
        return self.value is None

    def to_json(self) -> dict:
        return {
            "value": None if self.value is None else str(self.value),
            "capped": self.capped,
            "q_max": self.q_max,
            "minima": [{"q": q, "value": str(v)} for q, v in self.minima],
        }


@dataclass(frozen=True)
class PositivityTable:
    rows: Tuple[Tuple[int, int], ...]
    findings: Tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {
            "rows": [{"q": q, "value": str(v)} for q, v in self.rows],
            "monotone_positivity_failures": list(self.findings),
        }


@dataclass(frozen=True)
class GapRow:
    q: int
    classical_count: int
    min_count: int
    exhaustive: bool

    @property
    def gap(self) -> int:
        return self.classical_count - self.min_count


@dataclass(frozen=True)
class EqualityProbeResult:
    k: int
    q_max: int
    threshold: int
    rows: Tuple[GapRow, ...] = field(default_factory=tuple)
    least_q: Optional[int] = None
    truncated: bool = False
    threshold_consistent: Optional[bool] = None

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "q_max": self.q_max,
            "least_q": self.least_q,
            "truncated": self.truncated,
            "dz_threshold": self.threshold,
            "threshold_consistent": self.threshold_consistent,
            "rows": [
                {
                    "q": row.q,
                    "classical_count": str(row.classical_count),
                    "min_count": str(row.min_count),
                    "gap": str(row.gap),
                    "exhaustive": row.exhaustive,
                }
                for row in self.rows
            ],
        }


def _pbar(it: Iterable, total: Optional[int], desc: Optional[str], verbose: bool) -> Iterable:
    if verbose:
        bf = "{l_bar}{bar}| {n_fmt}/{total_fmt} ({elapsed}<{remaining})"
        return tqdm(it, total=total, ncols=80, desc=desc, leave=False, bar_format=bf, file=sys.stderr)
    return it


def _evaluate(task: Tuple[Graph, PatternAssignment, int]) -> Tuple[PatternAssignment, int]:
    G, P, k = task
    return P, count_packings_direct(G, realize_pattern(P, G), k)


def _sweep(
    G: Graph,
    k: int,
    patterns: Iterable[PatternAssignment],
    total: Optional[int],
    workers: int = 1,
    progress: bool = False,
    desc: Optional[str] = None,
) -> Tuple[int, PatternAssignment, int]:
    """
    Minimum packing count over ``patterns`` in their given order.

    Results come back in submission order even with a pool, so the first
    pattern reaching the minimum is the witness.
    """
    tasks = ((G, P, k) for P in patterns)

    def _reduce(results: Iterator[Tuple[PatternAssignment, int]]) -> Tuple[int, PatternAssignment, int]:
        best_value: Optional[int] = None
        best: Optional[PatternAssignment] = None
        evaluated = 0
        for P, value in _pbar(results, total, desc, progress):
            evaluated += 1
            if best_value is None or value < best_value:
                best_value, best = value, P
        if best is None:
            raise InvariantViolation("Pattern sweep evaluated no patterns")
        return best_value, best, evaluated

    if workers > 1:
        with Pool(workers) as pool:
            return _reduce(pool.imap(_evaluate, tasks, chunksize=32))
    return _reduce(map(_evaluate, tasks))


def list_packing_function_exact(
    G: Graph,
    q: int,
    k: int,
    budget: int = DEFAULT_PATTERN_BUDGET,
    workers: int = 1,
    progress: bool = False,
) -> MinimizationResult:
    """
    Minimum number of proper L-packings of size ``k`` over all q-assignments.

    Raises
    ------
    PatternBudgetExceeded
        If the pattern space is larger than ``budget``.
    """
    _check_k(k, q)
    try:
        patterns = enumerate_patterns(G, q, budget)
    except PatternBudgetExceeded as exc:
        raise PatternBudgetExceeded(
            total=exc.total,
            budget=exc.budget,
            message=f"Exact minimization at q={q}, k={k}: {exc}",
        ) from exc
    value, witness, evaluated = _sweep(
        G, k, patterns, count_patterns(G, q), workers, progress, desc=f"patterns q={q} k={k}"
    )
    return MinimizationResult(q=q, k=k, value=value, witness=witness, exhaustive=True, evaluated=evaluated)


def _sweep_is_affordable(n: int, q: int, budget: int) -> bool:
    """Whether counting the pattern space costs at most a fixed multiple of ``budget``."""
    if n > SAMPLER_SWEEP_MAX_VERTICES:
        return False
    states = (2 ** n - 1) * (q + 1) ** n
    return states <= SAMPLER_COUNT_WORK_FACTOR * max(budget, 1)


def list_packing_function_sampled(
    G: Graph,
    q: int,
    k: int,
    budget: int,
    seed: int,
    workers: int = 1,
    progress: bool = False,
) -> MinimizationResult:
    """
    Upper estimate of the list packing function from ``budget`` seeded random
    q-assignments plus the constant one.

    When ``budget`` covers the whole pattern space, and counting that space is
    cheap next to the budget, the space is swept instead and the result is
    exact. Samples are deduplicated on their sparse pattern and evaluated in
    the order of :meth:`PatternAssignment.sort_key`.
    """
    _check_k(k, q)
    if budget < 0:
        raise ValueError(f"Sample budget must be >= 0, got {budget}")

    if _sweep_is_affordable(G.n, q, budget):
        total = count_patterns(G, q)
        if total <= budget:
            value, witness, evaluated = _sweep(
                G, k, enumerate_patterns(G, q, budget), total, workers, progress, desc=f"patterns q={q} k={k}"
            )
            return MinimizationResult(q=q, k=k, value=value, witness=witness, exhaustive=True, evaluated=evaluated)

    rng = np.random.default_rng(seed)
    seen: Dict[Tuple, PatternAssignment] = {}
    constant = canonical_pattern(constant_assignment(G, q))
    seen[constant.multiplicity] = constant
    for _ in _pbar(range(budget), budget, f"sampling q={q}", progress):
        P = canonical_pattern(random_assignment(G, q, rng))
        seen.setdefault(P.multiplicity, P)

    ordered = sorted(seen.values(), key=PatternAssignment.sort_key)
    value, witness, evaluated = _sweep(G, k, ordered, len(ordered), workers, progress, desc=f"samples q={q} k={k}")
    return MinimizationResult(q=q, k=k, value=value, witness=witness, exhaustive=False, evaluated=evaluated)


def list_packing_number(
    G: Graph,
    q_max: int,
    budget: int = DEFAULT_PATTERN_BUDGET,
    workers: int = 1,
    progress: bool = False,
) -> PackingNumberResult:
    """Least ``q <= q_max`` such that every q-assignment admits a proper packing of size q."""
    if q_max < 1:
        raise ValueError(f"q_max must be >= 1, got q_max={q_max}")
    minima: List[Tuple[int, int]] = []
    for q in range(1, q_max + 1):
        try:
            result = list_packing_function_exact(G, q, q, budget, workers, progress)
        except PatternBudgetExceeded as exc:
            raise PatternBudgetExceeded(
                total=exc.total,
                budget=exc.budget,
                partial=PackingNumberResult(value=None, q_max=q - 1, minima=tuple(minima)),
                message=f"Pattern budget exhausted at q={q}; checked q in 1..{q - 1} without success. {exc}",
            ) from exc
        minima.append((q, result.value))
        if result.value > 0:
            return PackingNumberResult(value=q, q_max=q_max, minima=tuple(minima))
    return PackingNumberResult(value=None, q_max=q_max, minima=tuple(minima))


def positivity_table(
    G: Graph,
    q_max: int,
    budget: int = DEFAULT_PATTERN_BUDGET,
    workers: int = 1,
    progress: bool = False,
) -> PositivityTable:
    """
    Exact minimum packing count with ``k = q`` for every ``q = 1..q_max``.

    Any ``q`` with a positive value followed by zero at ``q + 1`` is recorded in
    ``findings`` and printed as a warning.
    """
    if q_max < 1:
        raise ValueError(f"q_max must be >= 1, got q_max={q_max}")
    rows: List[Tuple[int, int]] = []
    for q in range(1, q_max + 1):
        try:
            rows.append((q, list_packing_function_exact(G, q, q, budget, workers, progress).value))
        except PatternBudgetExceeded as exc:
            raise PatternBudgetExceeded(total=exc.total, budget=exc.budget, partial=PositivityTable(rows=tuple(rows)), message=str(exc)) from exc

    findings = tuple(q for (q, a), (_, b) in zip(rows, rows[1:]) if a > 0 and b == 0)
    for q in findings:
        print(f"  Warning: packing count is positive at q={q} but zero at q={q + 1}", file=sys.stderr)
    return PositivityTable(rows=tuple(rows), findings=findings)


def _tail_start(rows: Tuple[GapRow, ...]) -> Optional[int]:
    least = None
    for row in reversed(rows):
        if row.gap != 0:
            break
        least = row.q
    return least


def equality_probe(
    G: Graph,
    k: int,
    q_max: int,
    budget: int = DEFAULT_PATTERN_BUDGET,
    workers: int = 1,
    progress: bool = False,
    method: str = "auto",
) -> EqualityProbeResult:
    """
    Gap between the classical and the list packing function for ``q = k..q_max``.

    ``least_q`` is the start of the run of zero gaps that reaches ``q_max``. A
    pattern budget hit stops the sweep and marks the result as truncated.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got k={k}")
    threshold = dz_threshold(G.n, G.m, k)
    rows: List[GapRow] = []
    truncated = False
    for q in range(k, q_max + 1):
        classical = classical_packing_count(G, q, k, method=method)
        try:
            minimum = list_packing_function_exact(G, q, k, budget, workers, progress)
        except PatternBudgetExceeded as exc:
            print(f"  Warning: probe truncated at q={q}: {exc}", file=sys.stderr)
            truncated = True
            break
        row = GapRow(q=q, classical_count=classical, min_count=minimum.value, exhaustive=minimum.exhaustive)
        if row.gap < 0:
            raise InvariantViolation(
                f"List minimum {row.min_count} exceeds the classical count {classical} at q={q}, k={k}"
            )
        rows.append(row)

    if truncated:
        return EqualityProbeResult(k=k, q_max=q_max, threshold=threshold, rows=tuple(rows), truncated=True)

    least_q = _tail_start(tuple(rows))
    consistent: Optional[bool] = None
    if threshold <= q_max and rows:
        consistent = least_q is not None and least_q <= max(threshold, k)
        if not consistent:
            raise InvariantViolation(
                f"Equality tail starts at {least_q}, above the guaranteed threshold {max(threshold, k)} (k={k})"
            )
    return EqualityProbeResult(
        k=k,
        q_max=q_max,
        threshold=threshold,
        rows=tuple(rows),
        least_q=least_q,
        threshold_consistent=consistent,
    )
