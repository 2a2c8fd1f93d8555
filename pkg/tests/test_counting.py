from __future__ import annotations

from math import comb

import numpy as np
import pytest

from tests.oracles import brute_derangements, brute_fpf, brute_latin, brute_list_colorings, brute_ordered_packings, brute_packings
from utils.graphs import Graph, generate_named
from utils.packing import (
    InvariantViolation,
    ListAssignment,
    chromatic_polynomial,
    classical_packing_count,
    complete_graph_packing_count,
    constant_assignment,
    count_fpf_bijections,
    count_list_colorings,
    count_ordered_packings,
    count_packings_direct,
    count_packings_via_product,
    derangements,
    has_proper_packing,
    latin_array_count,
    random_assignment,
)
from utils.packing.counting import divide_by_factorial

K1 = generate_named("complete", n=1)
K2 = generate_named("complete", n=2)
P3 = generate_named("path", n=3)


def test_derangements() -> None:
    assert [derangements(q) for q in range(8)] == [1, 0, 1, 2, 9, 44, 265, 1854]
    assert all(derangements(q) == brute_derangements(q) for q in range(7))
    with pytest.raises(ValueError):
        derangements(-1)


def test_fpf_bijections() -> None:
    assert count_fpf_bijections({1, 2, 3}, {1, 2, 3}) == 2
    assert count_fpf_bijections({1, 2, 3}, {4, 5, 6}) == 6
    assert count_fpf_bijections({1, 2, 3}, {3, 4, 5}) == brute_fpf([1, 2, 3], [3, 4, 5])
    assert count_fpf_bijections(set(), set()) == 1
    with pytest.raises(ValueError):
        count_fpf_bijections({1, 2}, {1})


def test_list_colorings_match_brute_force() -> None:
    rng = np.random.default_rng(8)
    for seed in range(6):
        G = generate_named("random_graph", n=5, seed=seed, p=0.5)
        L = random_assignment(G, 3, rng, universe=5)
        lists = [sorted(L[v]) for v in range(G.n)]
        assert count_list_colorings(G, L) == brute_list_colorings(G, lists)


def test_packings_match_brute_force() -> None:
    L = ListAssignment.from_lists([[0, 1, 2], [1, 2, 3], [0, 2, 3]])
    lists = [sorted(L[v]) for v in range(3)]
    for k in (1, 2, 3):
        expected = brute_packings(P3, lists, k)
        assert count_packings_direct(P3, L, k) == expected
        assert count_packings_via_product(P3, L, k) == expected
        assert count_ordered_packings(P3, L, k) == brute_ordered_packings(P3, lists, k)


def test_single_vertex_packings_are_subsets() -> None:
    for q in range(1, 6):
        for k in range(1, q + 1):
            assert count_packings_direct(K1, constant_assignment(K1, q), k) == comb(q, k)


def test_classical_counts() -> None:
    assert classical_packing_count(K2, 3, 2) == 9
    assert classical_packing_count(K2, 2, 2) == 1
    assert classical_packing_count(P3, 3, 3) == 4
    assert classical_packing_count(generate_named("complete", n=3), 2, 1) == 0
    for method in ("deletion-contraction", "transfer"):
        assert classical_packing_count(P3, 3, 2, method=method) == count_packings_direct(P3, constant_assignment(P3, 3), 2)


def test_rejections() -> None:
    L = constant_assignment(P3, 2)
    with pytest.raises(ValueError):
        count_packings_direct(P3, L, 3)
    with pytest.raises(ValueError):
        count_packings_direct(P3, L, 0)
    with pytest.raises(ValueError):
        count_list_colorings(K2, L)
    with pytest.raises(ValueError):
        classical_packing_count(K2, 2, 3)
    with pytest.raises(ValueError):
        classical_packing_count(K2, 0, 1)


def test_divide_by_factorial() -> None:
    assert divide_by_factorial(12, 3, "test") == 2
    with pytest.raises(InvariantViolation):
        divide_by_factorial(7, 2, "test")


def test_has_proper_packing() -> None:
    assert has_proper_packing(K2, constant_assignment(K2, 2), 2)
    assert not has_proper_packing(generate_named("complete", n=3), constant_assignment(generate_named("complete", n=3), 2), 1)
    # K2 with lists {0,1} and {1,2}: f = (0,1) and g = (1,2) works
    assert has_proper_packing(K2, ListAssignment.from_lists([[0, 1], [1, 2]]), 2)


def test_edgeless_graph_counts() -> None:
    G = Graph(n=3)
    L = constant_assignment(G, 3)
    # every vertex independently picks an ordered pair of distinct colours
    assert count_ordered_packings(G, L, 2) == 6 ** 3
    assert count_packings_direct(G, L, 2) == 6 ** 3 // 2


def test_latin_arrays() -> None:
    assert latin_array_count(2, 2, 2) == 2 == brute_latin(2, 2, 2)
    assert latin_array_count(2, 3, 3) == brute_latin(2, 3, 3)
    assert latin_array_count(1, 3, 4) == 24
    with pytest.raises(ValueError):
        latin_array_count(2, 3, 2)


def test_complete_graph_packing_count() -> None:
    assert complete_graph_packing_count(3, 2, 1) == 0
    assert complete_graph_packing_count(2, 2, 2) == 1
    assert complete_graph_packing_count(3, 3, 3) == latin_array_count(3, 3, 3) // 6
    assert complete_graph_packing_count(3, 3, 3) == classical_packing_count(generate_named("complete", n=3), 3, 3)


def test_single_colouring_packings_are_colourings() -> None:
    for seed in range(12):
        n = 1 + seed % 5
        G = generate_named("random_graph", n=n, seed=seed, p=0.6)
        P = chromatic_polynomial(G)
        for q in range(1, 6):
            assert classical_packing_count(G, q, 1) == P(q)
