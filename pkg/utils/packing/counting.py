"""
Exact counters for colourings and packings.

Packings are counted as ordered k-tuples of colourings (the members of a
packing differ at every vertex, so they are pairwise distinct) and converted
to sets by dividing by k!. The division is always exact; a remainder raises
:class:`InvariantViolation`.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import permutations
from math import comb, factorial
from typing import AbstractSet, Callable, Dict, Hashable, List, Sequence, Tuple

from ..graphs import Graph, cartesian_with_complete, generate_named
from .assignments import ListAssignment, constant_assignment, lift_assignment
from .chromatic import chromatic_polynomial
from .errors import InvariantViolation
from .ordering import sweep_order


def derangements(q: int) -> int:
    """``!q`` via ``!q = (q-1)(!(q-1) + !(q-2))`` with ``!0 = 1`` and ``!1 = 0``."""
    if q < 0:
        raise ValueError(f"q must be >= 0, got q={q}")
    if q == 0:
        return 1
    prev, cur = 1, 0
    for j in range(2, q + 1):
        prev, cur = cur, (j - 1) * (cur + prev)
    return cur


def count_fpf_bijections(A: AbstractSet[int], B: AbstractSet[int]) -> int:
    """Bijections ``A -> B`` without a fixed point, by inclusion-exclusion over ``A ∩ B``."""
    if len(A) != len(B):
        raise ValueError(f"Sets must have the same size, got |A|={len(A)} and |B|={len(B)}")
    q = len(A)
    s = len(set(A) & set(B))
    return sum((-1) ** j * comb(s, j) * factorial(q - j) for j in range(s + 1))


def divide_by_factorial(total: int, k: int, context: str) -> int:
    divisor = factorial(k)
    quotient, remainder = divmod(total, divisor)
    if remainder:
        raise InvariantViolation(
            f"{context}: ordered count {total} is not divisible by {k}! = {divisor}"
        )
    return quotient


def _frontier_count(
    G: Graph,
    options: Sequence[Sequence[Hashable]],
    compatible: Callable[[Hashable, Hashable], bool],
) -> int:
    """
    Count maps ``v -> options[v]`` with ``compatible`` on every edge.

    Backtracking over :func:`sweep_order`, memoized on the choices made at the
    vertices that still have unplaced neighbours.
    """
    order = sweep_order(G)
    position = {v: t for t, v in enumerate(order)}
    last_needed = [max([position[v]] + [position[w] for w in G.adjacency[v]]) for v in range(G.n)]

    active: List[int] = []
    states: Dict[Tuple[Hashable, ...], int] = {(): 1}
    for t, v in enumerate(order):
        nbr_slots = [i for i, w in enumerate(active) if w in G.adjacency[v]]
        nxt: Dict[Tuple[Hashable, ...], int] = defaultdict(int)
        for state, ways in states.items():
            for choice in options[v]:
                if all(compatible(choice, state[i]) for i in nbr_slots):
                    nxt[state + (choice,)] += ways

        extended = active + [v]
        keep = [i for i, w in enumerate(extended) if last_needed[w] > t]
        active = [extended[i] for i in keep]
        states = defaultdict(int)
        for state, ways in nxt.items():
            states[tuple(state[i] for i in keep)] += ways
        if not states:
            return 0
    return sum(states.values())


def _check_cover(G: Graph, L: ListAssignment) -> None:
    if L.n != G.n:
        raise ValueError(f"Assignment covers {L.n} vertices but the graph has {G.n}")


def _check_k(k: int, q: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got k={k}")
    if k > q:
        raise ValueError(f"Packing size k={k} exceeds list size q={q}")


def count_list_colorings(G: Graph, L: ListAssignment) -> int:
    """Number of proper L-colourings of ``G``."""
    _check_cover(G, L)
    options = [sorted(L[v]) for v in range(G.n)]
    return _frontier_count(G, options, lambda a, b: a != b)


def count_ordered_packings(G: Graph, L: ListAssignment, k: int) -> int:
    """Ordered k-tuples of proper L-colourings that differ at every vertex."""
    _check_cover(G, L)
    _check_k(k, L.q)
    options = [list(permutations(sorted(L[v]), k)) for v in range(G.n)]
    return _frontier_count(G, options, lambda a, b: all(x != y for x, y in zip(a, b)))


def count_packings_direct(G: Graph, L: ListAssignment, k: int) -> int:
    """Number of proper L-packings of size ``k``, counted on ``G`` itself."""
    return divide_by_factorial(count_ordered_packings(G, L, k), k, "direct packing count")


def count_packings_via_product(G: Graph, L: ListAssignment, k: int) -> int:
    """Number of proper L-packings of size ``k`` as ``P(G □ K_k, L^(k)) / k!``."""
    _check_cover(G, L)
    _check_k(k, L.q)
    H = cartesian_with_complete(G, k)
    return divide_by_factorial(count_list_colorings(H, lift_assignment(L, k)), k, "product packing count")


def has_proper_packing(G: Graph, L: ListAssignment, k: int) -> bool:
    """A proper L-packing of size ``k`` exists iff ``G □ K_k`` has a proper ``L^(k)``-colouring."""
    _check_cover(G, L)
    _check_k(k, L.q)
    return count_list_colorings(cartesian_with_complete(G, k), lift_assignment(L, k)) > 0


def classical_packing_count(G: Graph, q: int, k: int, method: str = "auto") -> int:
    """``P*(G, q, k) = P(G □ K_k, q) / k!``."""
    if q < 1:
        raise ValueError(f"q must be >= 1, got q={q}")
    _check_k(k, q)
    poly = chromatic_polynomial(cartesian_with_complete(G, k), method=method)
    return divide_by_factorial(poly(q), k, "classical packing count")


def latin_array_count(n: int, k: int, q: int) -> int:
    """``n x k`` arrays over ``[q]`` with distinct entries in every row and column."""
    if n < 1 or k < 1:
        raise ValueError(f"Array dimensions must be positive, got {n} x {k}")
    _check_k(k, q)
    rook = cartesian_with_complete(generate_named("complete", n=n), k)
    return count_list_colorings(rook, constant_assignment(rook, q))


def complete_graph_packing_count(n: int, q: int, k: int) -> int:
    """``P*(K_n, q, k)``: zero when ``q < n``, otherwise ``L(n, k, q) / k!``."""
    _check_k(k, q)
    if q < n:
        return 0
    return divide_by_factorial(latin_array_count(n, k, q), k, "Latin array count")
