from __future__ import annotations

import pytest

from tests.oracles import brute_chromatic
from utils.graphs import Graph, build_graph, cartesian_with_complete, generate_named
from utils.packing import Polynomial, chromatic_polynomial
from utils.packing.chromatic import clear_memo, memo_size

ENGINES = ("deletion-contraction", "transfer")

SMALL_GRAPHS = [
    Graph(n=1),
    Graph(n=3),
    generate_named("path", n=4),
    generate_named("cycle", n=5),
    generate_named("complete", n=4),
    generate_named("star", n=5),
    generate_named("complete_bipartite", a=2, b=3),
    build_graph(5, [(0, 1), (1, 2), (3, 4)]),
    cartesian_with_complete(generate_named("complete", n=2), 2),
]


def test_known_polynomials() -> None:
    assert chromatic_polynomial(generate_named("complete", n=3)).coefficients == (0, 2, -3, 1)
    assert chromatic_polynomial(Graph(n=3)).coefficients == (0, 0, 0, 1)
    # q (q - 1)^3 for any tree on four vertices
    assert chromatic_polynomial(generate_named("star", n=4)).coefficients == (0, -1, 3, -3, 1)
    assert chromatic_polynomial(generate_named("cycle", n=4))(3) == 18


@pytest.mark.parametrize("method", ENGINES)
@pytest.mark.parametrize("G", SMALL_GRAPHS, ids=repr)
def test_engines_match_brute_force(G, method) -> None:
    poly = chromatic_polynomial(G, method=method)
    assert poly.degree == G.n
    assert poly.coefficients[-1] == 1
    if G.n >= 1:
        assert poly.coefficients[G.n - 1] == -G.m
    assert poly.alternates_in_sign()
    for q in range(5):
        assert poly(q) == brute_chromatic(G, q)


def test_engines_agree_on_product_graphs() -> None:
    for G, k in ((generate_named("path", n=2), 3), (generate_named("path", n=3), 3), (generate_named("cycle", n=4), 2)):
        H = cartesian_with_complete(G, k)
        assert chromatic_polynomial(H, method="deletion-contraction") == chromatic_polynomial(H, method="transfer")


def test_auto_uses_transfer_for_many_edges() -> None:
    H = cartesian_with_complete(generate_named("path", n=7), 4)
    assert H.m > 20
    poly = chromatic_polynomial(H)
    assert poly.degree == 28
    # 4 colours: every K4 layer is a permutation, neighbouring layers differ everywhere
    assert poly(4) == 24 * 9 ** 6


def test_memo_is_filled_by_deletion_contraction() -> None:
    clear_memo()
    assert memo_size() == 0
    chromatic_polynomial(generate_named("cycle", n=6), method="deletion-contraction")
    assert memo_size() > 0
    clear_memo()
    assert memo_size() == 0


def test_polynomial_helpers() -> None:
    poly = Polynomial((0, 2, -3, 1))
    assert poly.to_json() == ["0", "2", "-3", "1"]
    assert Polynomial.from_json(poly.to_json()) == poly
    assert not Polynomial((1, 1)).alternates_in_sign()
    with pytest.raises(ValueError):
        chromatic_polynomial(Graph(n=2), method="fast")
