"""
Chromatic polynomials with exact integer coefficients.

Two engines are available:

- ``deletion-contraction``: P(G) = P(G - e) - P(G / e), memoized on canonical
  forms of the subproblems, with edgeless and complete graphs as base cases
  and disconnected graphs split into components.
- ``transfer``: sweep the vertices in a low-frontier order, keeping for every
  equality pattern of colours on the still-active vertices the polynomial
  number of ways to reach it. A vertex either reuses the colour of an active
  class it is not adjacent to, or takes one of the ``q - d`` colours unused by
  the ``d`` active classes.

``auto`` picks deletion-contraction for graphs with few edges and the transfer
sweep otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from ..graphs import Graph, canonical_form
from ..graphs.canonical import CanonicalKey
from .ordering import sweep_order


DELETION_CONTRACTION_MAX_EDGES = 20
METHODS = ("auto", "deletion-contraction", "transfer")

Coefficients = Tuple[int, ...]

# canonical key -> coefficients. Values never change once stored, so
# concurrent writers can only store the same value twice.
_DC_MEMO: Dict[CanonicalKey, Coefficients] = {}


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial; ``coefficients[i]`` multiplies ``q**i``."""
    coefficients: Coefficients

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, q: int) -> int:
        value = 0
        for c in reversed(self.coefficients):
            value = value * q + c
        return value

    def alternates_in_sign(self) -> bool:
        """Coefficients of ``q**i`` have sign ``(-1)**(degree - i)`` or vanish."""
        d = self.degree
        return all(c == 0 or (c > 0) == ((d - i) % 2 == 0) for i, c in enumerate(self.coefficients))

    def to_json(self) -> List[str]:
        return [str(c) for c in self.coefficients]

    @classmethod
    def from_json(cls, payload: Sequence[str]) -> "Polynomial":
        return cls(tuple(int(c) for c in payload))


def _poly_add(a: Sequence[int], b: Sequence[int]) -> List[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def _poly_sub(a: Sequence[int], b: Sequence[int]) -> List[int]:
    return _poly_add(a, [-c for c in b])


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _times_q_minus(a: Sequence[int], d: int) -> List[int]:
    """Multiply by ``(q - d)``."""
    out = [0] * (len(a) + 1)
    for i, c in enumerate(a):
        out[i + 1] += c
        out[i] -= d * c
    return out


def _falling_factorial(n: int) -> List[int]:
    poly = [1]
    for j in range(n):
        poly = _times_q_minus(poly, j)
    return poly


def _trim(poly: Sequence[int], length: int) -> Coefficients:
    out = list(poly[:length]) + [0] * max(0, length - len(poly))
    return tuple(out)


# --- deletion-contraction -------------------------------------------------

def _components(n: int, edges: Sequence[Tuple[int, int]]) -> List[List[int]]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: Dict[int, List[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def _induced(vertices: Sequence[int], edges: Sequence[Tuple[int, int]]) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
    index = {v: i for i, v in enumerate(vertices)}
    sub = sorted((index[u], index[v]) for u, v in edges if u in index and v in index)
    return len(vertices), tuple(sub)


def _select_edge(n: int, edges: Sequence[Tuple[int, int]]) -> Tuple[int, int]:
    """Edge with the largest endpoint degree sum; ties go to the smallest edge."""
    degree = [0] * n
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    return min(edges, key=lambda e: (-(degree[e[0]] + degree[e[1]]), e))


def _contract(n: int, edges: Sequence[Tuple[int, int]], u: int, v: int) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
    """Merge ``v`` into ``u`` (``u < v``) and shift higher ids down by one."""

    def relabel(x: int) -> int:
        if x == v:
            x = u
        return x - 1 if x > v else x

    merged = set()
    for a, b in edges:
        if (a, b) == (u, v):
            continue
        a2, b2 = relabel(a), relabel(b)
        if a2 != b2:
            merged.add((a2, b2) if a2 < b2 else (b2, a2))
    return n - 1, tuple(sorted(merged))


def _deletion_contraction(n: int, edges: Tuple[Tuple[int, int], ...]) -> Coefficients:
    m = len(edges)
    if m == 0:
        return tuple([0] * n + [1])
    if m == n * (n - 1) // 2:
        return tuple(_falling_factorial(n))

    parts = _components(n, edges)
    if len(parts) > 1:
        poly: List[int] = [1]
        for part in parts:
            poly = _poly_mul(poly, _deletion_contraction(*_induced(part, edges)))
        return _trim(poly, n + 1)

    # only connected graphs are memoized
    key = canonical_form(n, edges)
    cached = _DC_MEMO.get(key)
    if cached is not None:
        return cached

    u, v = _select_edge(n, edges)
    deleted = tuple(e for e in edges if e != (u, v))
    minus = _deletion_contraction(n, deleted)
    contracted = _deletion_contraction(*_contract(n, edges, u, v))
    result = _trim(_poly_sub(minus, contracted), n + 1)

    _DC_MEMO[key] = result
    return result


# --- frontier transfer ----------------------------------------------------

def _relabel_classes(labels: Sequence[int]) -> Tuple[int, ...]:
    seen: Dict[int, int] = {}
    return tuple(seen.setdefault(x, len(seen)) for x in labels)


def _transfer(G: Graph) -> Coefficients:
    order = sweep_order(G)
    position = {v: t for t, v in enumerate(order)}
    last_needed = [max([position[v]] + [position[w] for w in G.adjacency[v]]) for v in range(G.n)]

    active: List[int] = []
    states: Dict[Tuple[int, ...], List[int]] = {(): [1]}
    for t, v in enumerate(order):
        nbr_slots = [i for i, w in enumerate(active) if w in G.adjacency[v]]
        nxt: Dict[Tuple[int, ...], List[int]] = {}
        for labels, poly in states.items():
            d = len(set(labels))
            blocked = {labels[i] for i in nbr_slots}
            for c in range(d):
                if c not in blocked:
                    key = labels + (c,)
                    nxt[key] = _poly_add(nxt.get(key, []), poly)
            key = labels + (d,)
            nxt[key] = _poly_add(nxt.get(key, []), _times_q_minus(poly, d))

        extended = active + [v]
        keep = [i for i, w in enumerate(extended) if last_needed[w] > t]
        active = [extended[i] for i in keep]
        states = {}
        for labels, poly in nxt.items():
            reduced = _relabel_classes([labels[i] for i in keep])
            states[reduced] = _poly_add(states.get(reduced, []), poly)

    return _trim(states.get((), [0]), G.n + 1)


def chromatic_polynomial(G: Graph, method: str = "auto") -> Polynomial:
    if method not in METHODS:
        raise ValueError(f"Unknown chromatic polynomial method '{method}'. Choose from: {', '.join(METHODS)}")
    if method == "auto":
        method = "deletion-contraction" if G.m <= DELETION_CONTRACTION_MAX_EDGES else "transfer"
    if method == "deletion-contraction":
        return Polynomial(_deletion_contraction(G.n, G.edges))
    return Polynomial(_transfer(G))


def clear_memo() -> None:
    _DC_MEMO.clear()


def memo_size() -> int:
    return len(_DC_MEMO)
