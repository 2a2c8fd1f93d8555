"""
Exact canonical labeling for small graphs.

Vertices are first split by degree and the ordered partition is refined until
equitable (every vertex in a cell sees the same number of neighbours in every
cell). Remaining ties are broken by individualizing each vertex of the first
non-singleton cell in turn (one vertex per class of twins) and refining
again. Every leaf of that search is a discrete ordering; the canonical form
is the lexicographically smallest packed upper-triangle adjacency string over
all leaves. That minimum does not depend on the input labeling, so
isomorphic graphs get identical keys.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np


CanonicalKey = Tuple[int, bytes]


def adjacency_matrix(n: int, edges: Iterable[Tuple[int, int]]) -> np.ndarray:
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        adj[u, v] = True
        adj[v, u] = True
    return adj


def _refine(adj: np.ndarray, cells: List[List[int]]) -> List[List[int]]:
    """Refine an ordered partition to the coarsest equitable one."""
    n = adj.shape[0]
    while True:
        membership = np.zeros((n, len(cells)), dtype=np.int64)
        for idx, cell in enumerate(cells):
            membership[cell, idx] = 1
        counts = adj.astype(np.int64) @ membership

        refined: List[List[int]] = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: dict[tuple, List[int]] = {}
            for v in cell:
                groups.setdefault(tuple(counts[v]), []).append(v)
            for signature in sorted(groups):
                refined.append(groups[signature])
        if len(refined) == len(cells):
            return refined
        cells = refined


def _leaf_code(adj: np.ndarray, order: Sequence[int], triu: Tuple[np.ndarray, np.ndarray]) -> bytes:
    permuted = adj[np.ix_(order, order)]
    return np.packbits(permuted[triu]).tobytes()


def canonical_form(n: int, edges: Iterable[Tuple[int, int]]) -> CanonicalKey:
    """Isomorphism-invariant key ``(n, packed adjacency)``."""
    adj = adjacency_matrix(n, edges)
    if n <= 1:
        return (n, b"")
    triu = np.triu_indices(n, k=1)
    degrees = adj.sum(axis=1)
    by_degree: dict[int, List[int]] = {}
    for v in range(n):
        by_degree.setdefault(int(degrees[v]), []).append(v)
    start = [by_degree[d] for d in sorted(by_degree)]

    nbrs = [frozenset(int(w) for w in np.flatnonzero(adj[v])) for v in range(n)]

    def twins(u: int, v: int) -> bool:
        return nbrs[u] == nbrs[v] or nbrs[u] | {u} == nbrs[v] | {v}

    best: Optional[bytes] = None
    stack = [_refine(adj, start)]
    while stack:
        cells = stack.pop()
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            code = _leaf_code(adj, [cell[0] for cell in cells], triu)
            if best is None or code < best:
                best = code
            continue
        cell = cells[target]
        # swapping two twins is an automorphism fixing every cell
        branched: List[int] = []
        for v in cell:
            if any(twins(v, w) for w in branched):
                continue
            branched.append(v)
            rest = [w for w in cell if w != v]
            branch = cells[:target] + [[v], rest] + cells[target + 1:]
            stack.append(_refine(adj, branch))
    return (n, best)
