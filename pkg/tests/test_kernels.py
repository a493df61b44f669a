"""Both kernel backends against brute force and against each other."""
from __future__ import annotations

import itertools

import pytest
from hypothesis import given

from bicayley import kernels
from bicayley.graph import complete_graph, cycle_graph, path_graph, random_graph
from conftest import small_graphs
from oracles import brute_chromatic_number, brute_clique_number, naive_girth, to_nx

import networkx as nx


def test_backend_selected():
    assert kernels.BACKEND in kernels.backends()
    assert "python" in kernels.backends()


def _nbrs(g):
    return [list(r) for r in g.neighbors]


@given(g=small_graphs(max_n=10))
def test_bfs_matches_networkx(backend, g):
    h = to_nx(g)
    for s in range(g.n):
        row = backend.bfs_row(_nbrs(g), s)
        ref = nx.single_source_shortest_path_length(h, s)
        assert row == [ref.get(v, -1) for v in range(g.n)]


@given(g=small_graphs(max_n=10))
def test_girth_matches_cycle_enumeration(backend, g):
    ref = naive_girth(g.n, list(g.edges()))
    assert backend.girth(_nbrs(g)) == (ref or 0)


@given(g=small_graphs(max_n=11))
def test_max_clique_matches_brute_force(backend, g):
    clique, exhaustive, _ = backend.max_clique(_nbrs(g))
    assert exhaustive
    assert len(clique) == brute_clique_number(g.n, list(g.edges()))
    assert all(g.has_edge(u, v) for u, v in itertools.combinations(clique, 2))


def test_max_clique_lower_bound_returns_nothing_when_not_beaten(backend):
    g = complete_graph(4)
    clique, exhaustive, _ = backend.max_clique(_nbrs(g), lower=4)
    assert clique == [] and exhaustive


def test_max_clique_node_limit_is_honoured(backend):
    # the limit is polled every CHECK_EVERY nodes
    g = random_graph(200, 0.6, 1)
    _, exhaustive, nodes = backend.max_clique(_nbrs(g), node_limit=50)
    assert not exhaustive and nodes <= 50 + 1024


@given(g=small_graphs(max_n=8))
def test_k_color_decides_like_brute_force(backend, g):
    chi = brute_chromatic_number(g.n, list(g.edges()))
    for k in range(max(chi - 1, 1), chi + 2):
        status, colors, _ = backend.k_color(_nbrs(g), k, [])
        if g.n == 0:
            assert status == 1
            continue
        assert status == (1 if k >= chi else 0)
        if status == 1:
            assert all(colors[u] != colors[v] for u, v in g.edges())
            assert max(colors) < k


def test_k_color_respects_precolouring(backend):
    g = cycle_graph(5)
    status, colors, _ = backend.k_color(_nbrs(g), 3, [0, 1])
    assert status == 1 and colors[0] == 0 and colors[1] == 1
    assert backend.k_color(_nbrs(g), 2, [0, 1])[0] == 0


def test_backends_agree_node_for_node():
    impls = kernels.backends()
    if len(impls) < 2:
        pytest.skip("compiled backend not built")
    for seed in range(6):
        g = random_graph(40, 0.4, seed)
        a = impls["python"].max_clique(_nbrs(g))
        b = impls["cython"].max_clique(_nbrs(g))
        assert a == b
        ka = impls["python"].k_color(_nbrs(g), 5, [])
        kb = impls["cython"].k_color(_nbrs(g), 5, [])
        assert ka == kb
        assert impls["python"].all_pairs(_nbrs(g)) == impls["cython"].all_pairs(_nbrs(g))
        assert impls["python"].girth(_nbrs(g)) == impls["cython"].girth(_nbrs(g))


def test_small_fixed_graphs(backend):
    assert backend.girth(_nbrs(path_graph(6))) == 0
    assert backend.girth(_nbrs(cycle_graph(7))) == 7
    assert backend.girth(_nbrs(complete_graph(4))) == 3
