"""Vertex orders that keep the active frontier of a sweep small."""

from __future__ import annotations

from typing import List

from ..graphs import Graph


def sweep_order(G: Graph) -> List[int]:
    """
    Greedy maximum-cardinality order.

    The next vertex is the one with the most already-placed neighbours; ties go
    to fewer unplaced neighbours, then the smaller id. A fresh component starts
    at a minimum-degree vertex.
    """
    placed = [False] * G.n
    seen_count = [0] * G.n
    order: List[int] = []
    for _ in range(G.n):
        best = min(
            (v for v in range(G.n) if not placed[v]),
            key=lambda v: (-seen_count[v], G.degree(v) - seen_count[v], v),
        )
        placed[best] = True
        order.append(best)
        for w in G.adjacency[best]:
            seen_count[w] += 1
    return order
