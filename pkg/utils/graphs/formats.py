"""
Graph input/output: plain edge lists and graph6.

Edge-list text: first line ``"n m"``, then ``m`` lines ``"u v"`` with 0-based
vertex ids, whitespace separated. Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

import networkx as nx

from .core import Graph, build_graph, from_networkx


GRAPH6_MAX_VERTICES = 62
GRAPH_FORMATS = ("edges", "graph6")


def parse_edge_list(text: str) -> Graph:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ValueError("Edge list is empty: expected a header line 'n m'")

    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"Edge list header must be 'n m', got {lines[0]!r}")
    n, m = int(header[0]), int(header[1])

    body = lines[1:]
    if len(body) != m:
        raise ValueError(f"Edge list header declares m={m} edges but {len(body)} edge lines follow")

    pairs = []
    for line in body:
        tokens = line.split()
        if len(tokens) != 2:
            raise ValueError(f"Edge line must be 'u v', got {line!r}")
        pairs.append((int(tokens[0]), int(tokens[1])))
    return build_graph(n, pairs)


def read_edge_list(path: Union[str, Path]) -> Graph:
    return parse_edge_list(Path(path).read_text())


def format_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 string (optionally with the ``>>graph6<<`` header)."""
    data = line.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    if not data:
        raise ValueError("Empty graph6 string")
    n = ord(data[0]) - 63
    if not 0 <= n <= GRAPH6_MAX_VERTICES:
        raise ValueError(
            f"graph6 reader supports up to {GRAPH6_MAX_VERTICES} vertices (single-byte size field)"
        )
    G = nx.from_graph6_bytes(data.encode("ascii"))
    return from_networkx(G)


def read_graph6(path: Union[str, Path]) -> Graph:
    """Read the first graph of a graph6 file."""
    for line in Path(path).read_text().splitlines():
        if line.strip():
            return parse_graph6(line)
    raise ValueError(f"No graph6 record found in {path}")


def read_graph(path: Union[str, Path], fmt: str = "edges") -> Graph:
    if fmt == "edges":
        return read_edge_list(path)
    if fmt == "graph6":
        return read_graph6(path)
    raise ValueError(f"Unsupported graph format '{fmt}'. Choose from: {', '.join(GRAPH_FORMATS)}")
