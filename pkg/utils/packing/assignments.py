"""
List assignments and their intersection patterns.

A q-assignment gives every vertex a set of q colours. The number of proper
L-packings only depends on which vertices share which colours, so an
assignment is summarized, up to colour relabeling, by its pattern: for every
non-empty vertex subset S, the number m_S of colours whose membership set is
exactly S. Patterns satisfy ``sum(m_S for S containing v) == q`` for every v,
and the finite set of solutions of those equations is the search space of the
list packing minimizers.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from ..graphs import Graph
from .errors import PatternBudgetExceeded


Subset = Tuple[int, ...]

DEFAULT_PATTERN_BUDGET = 10 ** 7
# 2**8 - 1 subsets keeps the enumeration recursion shallow.
MAX_PATTERN_VERTICES = 8


@dataclass(frozen=True)
class ListAssignment:
    """Per-vertex colour lists; vertex ``v`` gets ``lists[v]``."""
    lists: Tuple[frozenset, ...]

    def __post_init__(self) -> None:
        if not self.lists:
            raise ValueError("A list assignment needs at least one vertex")
        sizes = {len(colors) for colors in self.lists}
        if len(sizes) != 1:
            raise ValueError(f"Lists must all have the same size, got sizes {sorted(sizes)}")
        if 0 in sizes:
            raise ValueError("Lists must be non-empty")
        for colors in self.lists:
            if any((not isinstance(c, (int, np.integer))) or c < 0 for c in colors):
                raise ValueError(f"Colours must be non-negative integers, got {sorted(colors)!r}")

    @property
    def n(self) -> int:
        return len(self.lists)

    @property
    def q(self) -> int:
        return len(self.lists[0])

    def __getitem__(self, v: int) -> frozenset:
        return self.lists[v]

    def covers(self, G: Graph) -> bool:
        return self.n == G.n

    def colors(self) -> List[int]:
        return sorted(set().union(*self.lists))

    @classmethod
    def from_lists(cls, lists: Sequence[Sequence[int]]) -> "ListAssignment":
        frozen = []
        for v, colors in enumerate(lists):
            bad = [c for c in colors if isinstance(c, bool) or not isinstance(c, (int, np.integer))]
            if bad:
                raise ValueError(f"List of vertex {v} has non-integer colours: {bad!r}")
            as_set = frozenset(int(c) for c in colors)
            if len(as_set) != len(colors):
                raise ValueError(f"List of vertex {v} repeats a colour: {list(colors)!r}")
            frozen.append(as_set)
        return cls(tuple(frozen))


@dataclass(frozen=True)
class PatternAssignment:
    """
    Colour-membership multiplicities of a q-assignment on ``n`` vertices.

    ``multiplicity`` lists the non-zero ``(subset, m_S)`` entries in subset order
    (by size, then lexicographically).
    """
    n: int
    q: int
    multiplicity: Tuple[Tuple[Subset, int], ...]

    def as_dict(self) -> Dict[Subset, int]:
        return dict(self.multiplicity)

    def vector(self) -> Tuple[int, ...]:
        counts = self.as_dict()
        return tuple(counts.get(S, 0) for S in subset_order(self.n))

    def sort_key(self) -> Tuple[Tuple[Tuple[int, Subset], int], ...]:
        """
        Key ordering patterns like their :meth:`vector`, built from the sparse
        entries only. A non-zero entry at an earlier subset makes the vector
        larger, so subsets sort in reverse and equal subsets by count.
        """
        return tuple(((-len(S), tuple(-v for v in S)), count) for S, count in self.multiplicity)

    def vertex_sums(self) -> List[int]:
        sums = [0] * self.n
        for S, count in self.multiplicity:
            for v in S:
                sums[v] += count
        return sums

    def is_constant(self) -> bool:
        return self.multiplicity == ((tuple(range(self.n)), self.q),)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "multiplicity": [{"subset": list(S), "count": count} for S, count in self.multiplicity],
        }


def _subset_key(S: Subset) -> Tuple[int, Subset]:
    return (len(S), S)


@lru_cache(maxsize=None)
def subset_order(n: int) -> Tuple[Subset, ...]:
    """Non-empty subsets of ``range(n)`` ordered by size, then lexicographically."""
    return tuple(S for size in range(1, n + 1) for S in combinations(range(n), size))


def _make_pattern(n: int, q: int, counts: Mapping[Subset, int]) -> PatternAssignment:
    entries = tuple(sorted(((S, c) for S, c in counts.items() if c > 0), key=lambda e: _subset_key(e[0])))
    return PatternAssignment(n=n, q=q, multiplicity=entries)


def constant_assignment(G: Graph, q: int) -> ListAssignment:
    if q < 1:
        raise ValueError(f"q must be >= 1, got q={q}")
    colors = frozenset(range(q))
    return ListAssignment(tuple(colors for _ in range(G.n)))


def lift_assignment(L: ListAssignment, k: int) -> ListAssignment:
    """``L^(k)`` on ``G □ K_k``: row-major vertex ``v*k + (i-1)`` gets ``L(v)``."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got k={k}")
    if k > L.q:
        raise ValueError(f"Packing size k={k} exceeds list size q={L.q}")
    return ListAssignment(tuple(colors for colors in L.lists for _ in range(k)))


def canonical_pattern(L: ListAssignment) -> PatternAssignment:
    members: Dict[int, List[int]] = {}
    for v, colors in enumerate(L.lists):
        for c in colors:
            members.setdefault(c, []).append(v)
    counts = Counter(tuple(vs) for vs in members.values())
    return _make_pattern(L.n, L.q, counts)


def realize_pattern(P: PatternAssignment, G: Graph) -> ListAssignment:
    """Concrete assignment with fresh colours ``0, 1, 2, ...`` allocated in subset order."""
    if P.n != G.n:
        raise ValueError(f"Pattern is for {P.n} vertices but the graph has {G.n}")
    sums = P.vertex_sums()
    bad = [v for v, s in enumerate(sums) if s != P.q]
    if bad:
        raise ValueError(f"Pattern vertex sums must equal q={P.q}; vertices {bad} have sums {[sums[v] for v in bad]}")

    lists: List[List[int]] = [[] for _ in range(G.n)]
    color = 0
    for S, count in P.multiplicity:
        for _ in range(count):
            for v in S:
                lists[v].append(color)
            color += 1
    return ListAssignment.from_lists(lists)


def normalize_colors(L: ListAssignment) -> ListAssignment:
    """Relabel colours to ``0, 1, 2, ...`` by first occurrence (vertex order, then colour order)."""
    relabel: Dict[int, int] = {}
    for colors in L.lists:
        for c in sorted(colors):
            if c not in relabel:
                relabel[c] = len(relabel)
    return ListAssignment(tuple(frozenset(relabel[c] for c in colors) for colors in L.lists))


def random_assignment(
    G: Graph,
    q: int,
    rng: np.random.Generator,
    universe: Optional[int] = None,
) -> ListAssignment:
    """Each list is a uniform q-subset of a universe of ``n*q`` colours (or ``universe``)."""
    size = G.n * q if universe is None else universe
    if size < q:
        raise ValueError(f"Colour universe of size {size} cannot hold lists of size {q}")
    lists = [sorted(int(c) for c in rng.choice(size, size=q, replace=False)) for _ in range(G.n)]
    return ListAssignment.from_lists(lists)


class _PatternSpace:
    """Memoized completion counts over the fixed subset order."""

    def __init__(self, n: int, q: int):
        if n > MAX_PATTERN_VERTICES:
            raise PatternBudgetExceeded(
                total=None,
                budget=None,
                message=(
                    f"Pattern enumeration supports at most {MAX_PATTERN_VERTICES} vertices, got n={n}. "
                    "Use the sampled minimizer."
                ),
            )
        self.n = n
        self.q = q
        self.subsets = subset_order(n)
        self.completions = lru_cache(maxsize=None)(self._completions)

    def _completions(self, j: int, remaining: Tuple[int, ...]) -> int:
        if j == len(self.subsets):
            return 0 if any(remaining) else 1
        S = self.subsets[j]
        cap = min(remaining[v] for v in S)
        total = 0
        for count in range(cap + 1):
            total += self.completions(j + 1, self._take(remaining, S, count))
        return total

    @staticmethod
    def _take(remaining: Tuple[int, ...], S: Subset, count: int) -> Tuple[int, ...]:
        if count == 0:
            return remaining
        updated = list(remaining)
        for v in S:
            updated[v] -= count
        return tuple(updated)

    def total(self) -> int:
        return self.completions(0, (self.q,) * self.n)

    def walk(self) -> Iterator[PatternAssignment]:
        chosen: Dict[Subset, int] = {}

        def _dfs(j: int, remaining: Tuple[int, ...]) -> Iterator[PatternAssignment]:
            if j == len(self.subsets):
                yield _make_pattern(self.n, self.q, chosen)
                return
            S = self.subsets[j]
            cap = min(remaining[v] for v in S)
            for count in range(cap + 1):
                nxt = self._take(remaining, S, count)
                if self.completions(j + 1, nxt) == 0:
                    continue
                chosen[S] = count
                yield from _dfs(j + 1, nxt)
            chosen.pop(S, None)

        yield from _dfs(0, (self.q,) * self.n)


@lru_cache(maxsize=None)
def _pattern_space(n: int, q: int) -> _PatternSpace:
    return _PatternSpace(n, q)


def count_patterns(G: Graph, q: int) -> int:
    """Size of the pattern space of q-assignments on G; it only depends on n and q."""
    if q < 1:
        raise ValueError(f"q must be >= 1, got q={q}")
    return _pattern_space(G.n, q).total()


def enumerate_patterns(
    G: Graph,
    q: int,
    budget: int = DEFAULT_PATTERN_BUDGET,
) -> Iterator[PatternAssignment]:
    """
    Yield every pattern of q-assignments on ``G`` exactly once, in lexicographic
    order of the multiplicity vector over :func:`subset_order`.

    The size of the space is counted before the first pattern is produced; a
    space larger than ``budget`` raises :class:`PatternBudgetExceeded`.
    """
    if q < 1:
        raise ValueError(f"q must be >= 1, got q={q}")
    space = _pattern_space(G.n, q)
    total = space.total()
    if total > budget:
        raise PatternBudgetExceeded(total=total, budget=budget)
    return space.walk()


def read_assignment(path: Union[str, Path], G: Optional[Graph] = None) -> ListAssignment:
    """Read a JSON document mapping decimal vertex ids to colour arrays."""
    payload = json.loads(Path(path).read_text())
    return assignment_from_json(payload, G)


def assignment_from_json(payload: Mapping[str, Sequence[int]], G: Optional[Graph] = None) -> ListAssignment:
    if not isinstance(payload, Mapping):
        raise ValueError("Assignment JSON must be an object mapping vertex ids to colour arrays")
    n = G.n if G is not None else len(payload)
    keys = sorted(int(key) for key in payload)
    if keys != list(range(n)):
        raise ValueError(f"Assignment must list exactly the vertices 0..{n - 1}, got {keys}")
    lists = [payload[str(v)] for v in range(n)]
    for v, colors in enumerate(lists):
        if not isinstance(colors, list):
            raise ValueError(f"Colours of vertex {v} must be a JSON array, got {colors!r}")
    return ListAssignment.from_lists(lists)


def assignment_to_json(L: ListAssignment) -> Dict[str, List[int]]:
    return {str(v): sorted(colors) for v, colors in enumerate(L.lists)}
