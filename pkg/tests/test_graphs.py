from __future__ import annotations

import networkx as nx
import numpy as np
import pytest

from utils.graphs import (
    ACYCLIC,
    Graph,
    build_graph,
    cartesian_with_complete,
    from_networkx,
    generate_named,
    girth,
    product_coordinates,
    product_vertex,
)


def test_build_graph_normalizes_and_sorts_edges() -> None:
    G = build_graph(3, [(2, 1), (1, 0)])
    assert G.edges == ((0, 1), (1, 2))
    assert G == build_graph(3, [(0, 1), (2, 1)])
    assert G.m == 2
    assert G.degree(1) == 2
    assert G.has_edge(2, 1)


@pytest.mark.parametrize(
    "n, edges",
    [
        (3, [(1, 1)]),
        (3, [(0, 3)]),
        (3, [(-1, 0)]),
        (3, [(0, 1), (1, 0)]),
        (0, []),
    ],
)
def test_build_graph_rejects(n, edges) -> None:
    with pytest.raises(ValueError):
        build_graph(n, edges)


def test_build_graph_non_strict_drops_repeats() -> None:
    G = build_graph(2, [(0, 1), (1, 0)], strict=False)
    assert G.edges == ((0, 1),)


def test_named_families() -> None:
    assert generate_named("path", n=3).edges == ((0, 1), (1, 2))
    assert generate_named("cycle", n=4).edges == ((0, 1), (0, 3), (1, 2), (2, 3))
    assert generate_named("complete", n=4).m == 6
    assert generate_named("complete", n=4).is_complete()

    star = generate_named("star", n=5)
    assert star.n == 5 and star.m == 4
    assert star.degree(0) == 4

    kab = generate_named("complete_bipartite", a=2, b=3)
    assert (kab.n, kab.m) == (5, 6)


@pytest.mark.parametrize(
    "family, kwargs",
    [
        ("cycle", {"n": 2}),
        ("path", {"n": 0}),
        ("complete_bipartite", {"a": 0, "b": 2}),
        ("complete_bipartite", {"n": 3}),
        ("random_tree", {"n": 4}),
        ("random_graph", {"n": 4}),
        ("wheel", {"n": 5}),
    ],
)
def test_named_family_rejects(family, kwargs) -> None:
    with pytest.raises(ValueError):
        generate_named(family, **kwargs)


def test_random_tree_is_seeded_tree() -> None:
    for n in range(1, 9):
        T = generate_named("random_tree", n=n, seed=11)
        assert T.n == n
        assert T.is_tree()
        assert T == generate_named("random_tree", n=n, seed=11)


def test_random_graph_is_seeded() -> None:
    G = generate_named("random_graph", n=6, seed=3, p=0.4)
    assert G == generate_named("random_graph", n=6, seed=3, p=0.4)
    assert generate_named("random_graph", n=5, seed=0, p=0.0).m == 0
    assert generate_named("random_graph", n=5, seed=0, p=1.0).is_complete()


def test_product_vertex_indexing() -> None:
    k = 3
    seen = set()
    for v in range(4):
        for layer in range(1, k + 1):
            index = product_vertex(v, layer, k)
            assert product_coordinates(index, k) == (v, layer)
            seen.add(index)
    assert seen == set(range(12))
    with pytest.raises(ValueError):
        product_vertex(0, 0, k)


def test_cartesian_with_complete() -> None:
    K2 = generate_named("complete", n=2)
    square = cartesian_with_complete(K2, 2)
    assert nx.is_isomorphic(square.to_networkx(), nx.cycle_graph(4))

    P3 = generate_named("path", n=3)
    H = cartesian_with_complete(P3, 3)
    assert H.n == 9
    assert H.m == 3 * 3 * 2 // 2 + 2 * 3
    # (v, layer i) ~ (v, layer j) and (u, i) ~ (v, i) for uv in E
    assert H.has_edge(product_vertex(1, 1, 3), product_vertex(1, 3, 3))
    assert H.has_edge(product_vertex(0, 2, 3), product_vertex(1, 2, 3))
    assert not H.has_edge(product_vertex(0, 1, 3), product_vertex(1, 2, 3))

    assert cartesian_with_complete(P3, 1) == P3


def test_girth() -> None:
    assert girth(generate_named("path", n=5)) is ACYCLIC
    assert girth(Graph(n=1)) is ACYCLIC
    assert girth(generate_named("complete", n=4)) == 3
    assert girth(generate_named("cycle", n=5)) == 5
    assert girth(generate_named("cycle", n=8)) == 8
    assert girth(generate_named("complete_bipartite", a=2, b=3)) == 4
    assert girth(cartesian_with_complete(generate_named("complete", n=2), 2)) == 4


def test_girth_matches_networkx() -> None:
    for seed in range(10):
        G = generate_named("random_graph", n=7, seed=seed, p=0.35)
        cycles = nx.minimum_cycle_basis(G.to_networkx())
        expected = min((len(c) for c in cycles), default=None)
        got = girth(G)
        assert (got is ACYCLIC) if expected is None else got == expected


def test_networkx_conversion() -> None:
    H = nx.Graph()
    H.add_edges_from([("b", "c"), ("a", "b")])
    G = from_networkx(H)
    assert G.edges == ((0, 1), (1, 2))
    assert nx.is_isomorphic(G.to_networkx(), H)
    assert G.is_connected() and G.is_tree()
    assert not build_graph(3, [(0, 1)]).is_connected()


@pytest.mark.parametrize("n", range(3, 13))
def test_cycle_girth(n) -> None:
    assert girth(generate_named("cycle", n=n)) == n


def test_random_tree_draws_from_numpy_generator() -> None:
    prufer = [int(x) for x in np.random.default_rng(5).integers(0, 7, size=5)]
    expected = from_networkx(nx.from_prufer_sequence(prufer))
    assert generate_named("random_tree", n=7, seed=5) == expected
    assert generate_named("random_tree", n=2, seed=5) == build_graph(2, [(0, 1)])
