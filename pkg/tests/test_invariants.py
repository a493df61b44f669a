from __future__ import annotations

import math

import networkx as nx
import pytest
from hypothesis import given

from bicayley.graph import (BiCayleySpec, LabeledGraph, bicayley_graph, cartesian_product, complete_graph,
                            complete_multipartite, cycle_graph, empty_graph, path_graph, random_graph)
from bicayley.groups import make_cyclic, make_symmetric
from bicayley.invariants import (Budget, Certificate, SolveOutcome, all_pairs_distances,
                                 chromatic_number_exact, clique_number_exact, component_diameters,
                                 connected_components, degree_profile, diameter, dsatur_coloring,
                                 girth, independence_number_exact, is_eulerian, k_colorability,
                                 maximal_cliques, shortest_path, validate_certificate,
                                 vertex_set_certificate)
from conftest import small_graphs
from oracles import (brute_chromatic_number, brute_clique_number, brute_independence_number,
                     naive_girth, to_nx)


def test_components_examples(ctx23):
    comps = connected_components(ctx23.gamma0)
    assert len(comps) == 6 and all(len(c) == 6 for c in comps)
    assert len(connected_components(ctx23.graph)) == 1
    assert connected_components(empty_graph(4)) == [[0], [1], [2], [3]]


def test_distances_examples(ctx23):
    d = all_pairs_distances(ctx23.graph)
    assert all(d[x][36 + x] == 1 for x in range(36))
    k3 = all_pairs_distances(complete_graph(3))
    assert all(k3[i][j] == (i != j) for i in range(3) for j in range(3))
    assert all_pairs_distances(empty_graph(2))[0][1] == math.inf


def test_component_distances_are_hamming_in_crt_steps(ctx23):
    # inside a side-0 component, distance counts how many CRT parts differ
    d = all_pairs_distances(ctx23.gamma0)
    for x in range(36):
        for y in range(36):
            if d[x][y] == math.inf:
                continue
            xp, xq = ctx23.split(x)
            yp, yq = ctx23.split(y)
            assert d[x][y] == (xp != yp) + (xq != yq)


def test_diameters(ctx23):
    assert diameter(ctx23.gamma1) == 4
    assert set(component_diameters(ctx23.gamma0)) == {2}
    assert diameter(ctx23.gamma0) == math.inf
    # full graph: independent check with networkx
    assert diameter(ctx23.graph) == nx.diameter(to_nx(ctx23.graph))


@given(small_graphs(max_n=10, min_n=1))
def test_diameter_matches_networkx(g):
    h = to_nx(g)
    expect = nx.diameter(h) if nx.is_connected(h) else math.inf
    assert diameter(g) == expect


def test_girth_examples(ctx23):
    assert girth(ctx23.graph) == 3
    assert girth(cycle_graph(5)) == 5
    assert girth(path_graph(5)) == math.inf


@given(small_graphs(max_n=12))
def test_girth_matches_cycle_enumeration(g):
    ref = naive_girth(g.n, list(g.edges()))
    assert girth(g) == (math.inf if ref is None else ref)


def test_degree_profile_examples(ctx23):
    assert str(degree_profile(ctx23.graph)) == "biregular(4,9)"
    sym = bicayley_graph(BiCayleySpec.from_sets(make_symmetric(3), {3, 4}, {1, 5}, {0}))
    assert str(degree_profile(sym)) == "regular(3)"
    assert str(degree_profile(complete_graph(4))) == "regular(3)"


def test_eulerian_examples(ctx23):
    assert not is_eulerian(ctx23.graph)
    z6 = bicayley_graph(BiCayleySpec.from_sets(make_cyclic(6), {3}, {2, 4}, {0}))
    assert set(z6.degrees()) == {2, 3} and not is_eulerian(z6)
    assert is_eulerian(cycle_graph(6))
    two_cycles = LabeledGraph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    res = is_eulerian(two_cycles)
    assert not res and "components" in res.reason


def test_clique_examples(ctx23, ctx25):
    out = clique_number_exact(ctx23.graph)
    assert out.value == 3 and out.exhaustive
    assert validate_certificate(ctx23.graph, out.certificate)
    assert clique_number_exact(ctx25.graph).value == 5
    assert clique_number_exact(complete_multipartite([3, 3])).value == 2


def test_independence_examples(ctx23):
    for g, expect in ((ctx23.graph, 20), (ctx23.gamma0, 12), (ctx23.gamma1, 12)):
        out = independence_number_exact(g)
        assert out.exhaustive and out.value == expect
        assert validate_certificate(g, out.certificate)


def test_chromatic_examples(ctx23):
    out = chromatic_number_exact(ctx23.graph)
    assert out.exhaustive and out.value == 4
    assert out.infeasibility_proven and out.refuted_k == 3
    assert validate_certificate(ctx23.graph, out.certificate)
    assert chromatic_number_exact(ctx23.gamma0).value == 3
    assert chromatic_number_exact(ctx23.gamma1).value == 3
    assert chromatic_number_exact(empty_graph(3)).value == 1
    assert chromatic_number_exact(empty_graph(0)).value == 0


def test_k_colorability(ctx23):
    status, cert, _ = k_colorability(ctx23.graph, 3)
    assert status is False and cert is None
    status, cert, _ = k_colorability(ctx23.graph, 4)
    assert status is True and validate_certificate(ctx23.graph, cert)
    assert k_colorability(complete_graph(4), 3)[0] is False


@given(small_graphs(max_n=9))
def test_exact_solvers_match_brute_force(g):
    edges = list(g.edges())
    om, al, ch = clique_number_exact(g), independence_number_exact(g), chromatic_number_exact(g)
    assert om.exhaustive and al.exhaustive and ch.exhaustive
    assert om.value == brute_clique_number(g.n, edges)
    assert al.value == brute_independence_number(g.n, edges)
    assert ch.value == brute_chromatic_number(g.n, edges)
    for out in (om, al, ch):
        assert validate_certificate(g, out.certificate)


@given(small_graphs(max_n=12))
def test_alpha_equals_omega_of_complement(g):
    assert independence_number_exact(g).value == clique_number_exact(g.complement()).value


@given(small_graphs(max_n=12))
def test_chi_between_omega_and_greedy_bound(g):
    ch = chromatic_number_exact(g)
    om = clique_number_exact(g)
    top = max(g.degrees(), default=-1) + 1
    assert om.value <= ch.value <= max(top, 0)
    greedy = dsatur_coloring(g)
    assert validate_certificate(g, Certificate("coloring", greedy))


def test_budget_exhaustion_is_flagged():
    g = random_graph(200, 0.6, 9)
    out = clique_number_exact(g, Budget(nodes=20, seconds=5))
    assert not out.exhaustive and out.value >= 1
    assert validate_certificate(g, out.certificate)
    ch = chromatic_number_exact(g, Budget(nodes=20, seconds=5))
    assert not ch.exhaustive and ch.value is None and ch.lower <= ch.upper


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("BICAY_BUDGET_SECONDS", "7.5")
    assert Budget.default().seconds == 7.5
    monkeypatch.delenv("BICAY_BUDGET_SECONDS")
    assert Budget.default() == Budget(10_000_000, 60.0)


def test_solvers_are_deterministic(ctx23):
    a = independence_number_exact(ctx23.graph).certificate
    b = independence_number_exact(ctx23.graph).certificate
    assert a == b
    assert chromatic_number_exact(ctx23.graph).certificate == chromatic_number_exact(ctx23.graph).certificate


def test_diameter_of_product_is_sum():
    a, b = cycle_graph(5), path_graph(4)
    assert diameter(cartesian_product(a, b)) == diameter(a) + diameter(b)


def test_coset_colours_each_once(ctx32):
    # any proper 3-colouring of side 0 at (3,2) gives each order-3 coset all colours
    out = chromatic_number_exact(ctx32.gamma0)
    colors = out.certificate.payload
    for start in range(12):
        coset = [(start + 12 * j) % 36 for j in range(3)]
        assert sorted(colors[x] for x in coset) == [0, 1, 2]


def test_validate_certificate_examples(ctx23):
    bad = validate_certificate(empty_graph(2), vertex_set_certificate("clique", [0, 1]))
    assert not bad and bad.violations == [(0, 1)]
    coset = vertex_set_certificate("clique", [0, 12, 24])
    assert validate_certificate(ctx23.gamma0, coset)
    short = Certificate("coloring", (0, 0))
    assert not validate_certificate(complete_graph(3), short)
    path = Certificate("geodesic", tuple(shortest_path(cycle_graph(6), 0, 3)))
    assert validate_certificate(cycle_graph(6), path)
    with pytest.raises(ValueError):
        Certificate("matching", ())


def test_maximal_cliques_match_networkx():
    for seed in range(5):
        g = random_graph(18, 0.4, seed)
        ours = sorted(maximal_cliques(g))
        ref = sorted(tuple(sorted(c)) for c in nx.find_cliques(to_nx(g)))
        assert ours == ref


def test_solve_outcome_json():
    out = SolveOutcome(3, vertex_set_certificate("clique", [2, 0, 1]), True, 5, 0.001)
    js = out.to_json()
    assert js["value"] == 3 and js["certificate"]["payload"] == [0, 1, 2]
    assert Certificate.from_json(js["certificate"]) == out.certificate
