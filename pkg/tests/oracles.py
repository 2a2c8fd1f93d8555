"""Brute-force reference counts by direct enumeration. Only usable on tiny inputs."""

from __future__ import annotations

from itertools import combinations, permutations, product
from math import factorial
from typing import List, Sequence, Tuple

from utils.graphs import Graph


def proper_colorings(G: Graph, lists: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    return [
        c
        for c in product(*[sorted(colors) for colors in lists])
        if all(c[u] != c[v] for u, v in G.edges)
    ]


def brute_list_colorings(G: Graph, lists: Sequence[Sequence[int]]) -> int:
    return len(proper_colorings(G, lists))


def brute_chromatic(G: Graph, q: int) -> int:
    if q == 0:
        return 0
    return brute_list_colorings(G, [range(q)] * G.n)


def brute_packings(G: Graph, lists: Sequence[Sequence[int]], k: int) -> int:
    """Sets of ``k`` proper colourings that differ at every vertex."""
    colorings = proper_colorings(G, lists)
    total = 0
    for family in combinations(colorings, k):
        if all(len({f[v] for f in family}) == k for v in range(G.n)):
            total += 1
    return total


def brute_ordered_packings(G: Graph, lists: Sequence[Sequence[int]], k: int) -> int:
    return brute_packings(G, lists, k) * factorial(k)


def brute_derangements(q: int) -> int:
    return sum(1 for p in permutations(range(q)) if all(p[i] != i for i in range(q)))


def brute_fpf(A: Sequence[int], B: Sequence[int]) -> int:
    domain = sorted(A)
    return sum(
        1
        for image in permutations(sorted(B))
        if all(a != b for a, b in zip(domain, image))
    )


def brute_latin(n: int, k: int, q: int) -> int:
    total = 0
    for cells in product(range(q), repeat=n * k):
        rows = [cells[i * k:(i + 1) * k] for i in range(n)]
        if any(len(set(row)) < k for row in rows):
            continue
        if any(len({rows[i][j] for i in range(n)}) < n for j in range(k)):
            continue
        total += 1
    return total
