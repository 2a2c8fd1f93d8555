"""
Finite simple graphs on dense integer vertices.

Graphs are immutable values: vertices are ``0..n-1`` and edges are stored as
sorted ``(u, v)`` pairs with ``u < v``, themselves kept in sorted order, so two
graphs with the same edge set compare and hash equal regardless of how they
were built.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np


Edge = Tuple[int, int]


class Acyclic(Enum):
    """Girth of a graph without cycles."""
    ACYCLIC = "acyclic"

    def __repr__(self) -> str:
        return "ACYCLIC"


ACYCLIC = Acyclic.ACYCLIC

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "star",
    "random_tree",
    "random_graph",
)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertex set ``range(n)``."""
    n: int
    edges: Tuple[Edge, ...] = field(default=())

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> Tuple[frozenset, ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_tree(self) -> bool:
        return self.m == self.n - 1 and self.is_connected()

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges)
        return G

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def build_graph(n: int, edge_list: Iterable[Sequence[int]], strict: bool = True) -> Graph:
    """
    Build a simple graph from an edge list.

    Parameters
    ----------
    n : int
        Vertex count; vertices are ``0..n-1``.
    edge_list : iterable of pairs
        Edges as ``(u, v)`` pairs in any orientation.
    strict : bool
        Reject repeated edges (``(0, 1)`` and ``(1, 0)`` count as the same edge).
        With ``strict=False`` repeats are dropped silently.

    Returns
    -------
    Graph
    """
    if n < 1:
        raise ValueError(f"Graph needs at least one vertex, got n={n}")

    seen: set[Edge] = set()
    for pair in edge_list:
        if len(pair) != 2:
            raise ValueError(f"Edge must be a vertex pair, got {tuple(pair)!r}")
        u, v = int(pair[0]), int(pair[1])
        if u == v:
            raise ValueError(f"Loop at vertex {u} is not allowed in a simple graph")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        edge = _normalize_edge(u, v)
        if edge in seen:
            if strict:
                raise ValueError(f"Duplicate edge ({u}, {v})")
            continue
        seen.add(edge)
    return Graph(n=n, edges=tuple(sorted(seen)))


def from_networkx(G: nx.Graph) -> Graph:
    """Convert a networkx graph, relabeling nodes to ``0..n-1`` in sorted order."""
    if G.is_directed() or G.is_multigraph():
        raise ValueError("Only simple undirected graphs are supported")
    H = nx.convert_node_labels_to_integers(G, ordering="sorted")
    return build_graph(H.number_of_nodes(), H.edges())


def generate_named(
    family: str,
    n: Optional[int] = None,
    a: Optional[int] = None,
    b: Optional[int] = None,
    seed: Optional[int] = None,
    p: float = 0.5,
) -> Graph:
    """
    Generate a graph from a named family.

    ``complete_bipartite`` uses part sizes ``a`` and ``b``; every other family
    uses ``n``. ``star`` on ``n`` vertices has centre 0 and ``n - 1`` leaves.
    ``random_tree`` decodes a uniformly random Prüfer sequence, so it is uniform
    over labeled trees. ``random_tree`` and ``random_graph`` require ``seed``.
    """
    if family not in FAMILIES:
        raise ValueError(f"Unknown graph family '{family}'. Choose from: {', '.join(FAMILIES)}")

    if family == "complete_bipartite":
        if a is None or b is None:
            raise ValueError("complete_bipartite requires part sizes a and b")
        if a < 1 or b < 1:
            raise ValueError(f"complete_bipartite parts must be non-empty, got a={a}, b={b}")
        return from_networkx(nx.complete_bipartite_graph(a, b))

    if n is None or n < 1:
        raise ValueError(f"Family '{family}' requires n >= 1, got n={n}")

    if family == "path":
        return from_networkx(nx.path_graph(n))
    if family == "cycle":
        if n < 3:
            raise ValueError(f"cycle requires n >= 3, got n={n}")
        return from_networkx(nx.cycle_graph(n))
    if family == "complete":
        return from_networkx(nx.complete_graph(n))
    if family == "star":
        return from_networkx(nx.star_graph(n - 1))

    if seed is None:
        raise ValueError(f"Family '{family}' is random and requires a seed")
    if family == "random_tree":
        if n == 1:
            return Graph(n=1)
        rng = np.random.default_rng(seed)
        prufer = [int(x) for x in rng.integers(0, n, size=n - 2)]
        return from_networkx(nx.from_prufer_sequence(prufer))
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Edge probability must be in [0, 1], got p={p}")
    return from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def product_vertex(v: int, layer: int, k: int) -> int:
    """Row-major index of ``(v, w_layer)`` in ``G □ K_k``; layers are ``1..k``."""
    if not 1 <= layer <= k:
        raise ValueError(f"Layer must be in 1..{k}, got {layer}")
    return v * k + (layer - 1)


def product_coordinates(index: int, k: int) -> Tuple[int, int]:
    """Inverse of :func:`product_vertex`: ``(base vertex, layer)``."""
    return index // k, index % k + 1


def cartesian_with_complete(G: Graph, k: int) -> Graph:
    """
    Cartesian product ``G □ K_k`` with row-major vertex indexing.

    ``(v, w_i)`` is adjacent to ``(v', w_j)`` iff ``v == v'`` and ``i != j``, or
    ``i == j`` and ``vv'`` is an edge of ``G``. The product has ``n*k`` vertices
    and ``n*k*(k-1)/2 + m*k`` edges.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got k={k}")
    edges: list[Edge] = []
    for v in range(G.n):
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                edges.append((product_vertex(v, i, k), product_vertex(v, j, k)))
    for u, v in G.edges:
        for i in range(1, k + 1):
            edges.append((product_vertex(u, i, k), product_vertex(v, i, k)))
    return Graph(n=G.n * k, edges=tuple(sorted(edges)))


def girth(G: Graph) -> Union[int, Acyclic]:
    """Length of a shortest cycle, or ``ACYCLIC`` when the graph has none."""
    best: Optional[int] = None
    for source in range(G.n):
        dist = {source: 0}
        parent = {source: -1}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
        if best == 3:
            break
    return ACYCLIC if best is None else best
