import random

import pytest

from walkgi import (
    Graph,
    SrgParams,
    build_graph,
    degree_sequence,
    local_complement,
    srg_parameters,
)
from fixture_graphs import (
    complete,
    cycle,
    empty_graph,
    path,
    petersen,
    rook,
    shrikhande,
    star,
)
from oracles import naive_srg, random_graph


def test_build_graph_basic():
    G = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert G.n == 4
    assert G.edge_count() == 3
    assert G.has_edge(0, 1) and G.has_edge(1, 0)
    assert not G.has_edge(0, 2)
    assert sorted(G.edges()) == [(0, 1), (1, 2), (2, 3)]


def test_build_graph_symmetrizes_and_dedups():
    G = build_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert G.edge_count() == 1


def test_build_graph_rejects_loops_and_range():
    with pytest.raises(ValueError):
        build_graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        build_graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        build_graph(3, [(-1, 0)])


def test_graph_vertex_count_bounds():
    with pytest.raises(ValueError):
        Graph(())
    with pytest.raises(ValueError):
        build_graph(0, [])
    with pytest.raises(ValueError):
        build_graph(4097, [])
    assert build_graph(4096, []).n == 4096


def test_graph_rejects_asymmetric_rows():
    # row 0 claims edge to 1, row 1 disagrees
    with pytest.raises(ValueError):
        Graph((0b010, 0b000, 0b000))


def test_graph_rejects_diagonal_bits():
    with pytest.raises(ValueError):
        Graph((0b001,))


def test_graph_rejects_out_of_range_bits():
    with pytest.raises(ValueError):
        Graph((0b100, 0b000))


def test_neighbors_and_degree():
    G = star(3)
    assert sorted(G.neighbors(0)) == [1, 2, 3]
    assert list(G.neighbors(1)) == [0]
    assert G.degree(0) == 3
    assert G.degree(2) == 1


def test_degree_sequence_sorted():
    assert degree_sequence(star(3)) == (1, 1, 1, 3)
    assert degree_sequence(cycle(5)) == (2, 2, 2, 2, 2)
    assert degree_sequence(empty_graph(3)) == (0, 0, 0)


def test_edges_iteration_matches_has_edge():
    rng = random.Random(11)
    for _ in range(20):
        G = random_graph(rng, rng.randint(1, 12))
        listed = set(G.edges())
        for u in range(G.n):
            for v in range(u + 1, G.n):
                assert ((u, v) in listed) == G.has_edge(u, v)


def test_srg_params_identity():
    assert SrgParams(10, 3, 0, 1).identity_holds()
    assert SrgParams(16, 6, 2, 2).identity_holds()
    assert not SrgParams(10, 3, 0, 2).identity_holds()


def test_srg_parameters_known_graphs():
    assert srg_parameters(petersen()) == SrgParams(10, 3, 0, 1)
    assert srg_parameters(cycle(5)) == SrgParams(5, 2, 0, 1)
    assert srg_parameters(cycle(4)) == SrgParams(4, 2, 0, 2)
    assert srg_parameters(rook(4)) == SrgParams(16, 6, 2, 2)
    assert srg_parameters(shrikhande()) == SrgParams(16, 6, 2, 2)


def test_srg_parameters_non_srg():
    assert srg_parameters(path(4)) is None  # not regular
    assert srg_parameters(cycle(6)) is None  # beta not constant
    assert srg_parameters(star(3)) is None
    # complete and edgeless are regular but degenerate, not SRGs here
    assert srg_parameters(complete(4)) is None
    assert srg_parameters(empty_graph(4)) is None
    assert srg_parameters(empty_graph(1)) is None


def test_srg_parameters_against_naive_counting():
    rng = random.Random(23)
    cases = [petersen(), cycle(5), cycle(6), rook(4), complete(5), empty_graph(5)]
    cases += [random_graph(rng, rng.randint(2, 10)) for _ in range(40)]
    for G in cases:
        params = srg_parameters(G)
        got = None if params is None else (params.n, params.d, params.alpha, params.beta)
        assert got == naive_srg(G)


def test_local_complement_triangle():
    # complementing among N(0) = {1,2} removes the edge 1-2
    G = complete(3)
    L = local_complement(G, 0)
    assert sorted(L.edges()) == [(0, 1), (0, 2)]


def test_local_complement_leaves_non_neighbours_alone():
    G = build_graph(5, [(0, 1), (0, 2), (3, 4), (1, 2)])
    L = local_complement(G, 0)
    assert L.has_edge(3, 4)
    assert not L.has_edge(1, 2)
    assert L.has_edge(0, 1) and L.has_edge(0, 2)


def test_local_complement_fixed_points():
    G = path(4)
    # degree <= 1 vertices have no neighbour pairs to flip
    assert local_complement(G, 0) == G
    L = local_complement(empty_graph(3), 1)
    assert L == empty_graph(3)


def test_local_complement_involution_random():
    rng = random.Random(37)
    for _ in range(200):
        G = random_graph(rng, rng.randint(1, 12))
        u = rng.randrange(G.n)
        assert local_complement(local_complement(G, u), u) == G


def test_local_complement_vertex_range():
    G = path(3)
    with pytest.raises(ValueError):
        local_complement(G, 3)
    with pytest.raises(ValueError):
        local_complement(G, -1)
