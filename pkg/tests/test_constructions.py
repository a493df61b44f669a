from __future__ import annotations

import itertools

import pytest

from bicayley.constructions import (P2Q2Context, c0_color, c_set, canonical_cliques, clique_r, clique_t,
                                    col_color, component_index, coset_clique, diagonal_transversal,
                                    full_coloring, gamma0_coloring, gamma0_independent_max,
                                    gamma1_coloring, gamma1_independent_max, joint_independent_max)
from bicayley.errors import InvalidParameter
from bicayley.graph import are_isomorphic, cartesian_product, complete_graph
from bicayley.invariants import (Certificate, chromatic_number_exact, clique_number_exact,
                                 connected_components, independence_number_exact, validate_certificate)

GRID = [(2, 3), (3, 2), (2, 5), (5, 2), (3, 5), (5, 3), (2, 7)]


def _colors(cert):
    return len(set(cert.payload))


def test_context_subgroups():
    ctx = P2Q2Context(2, 3)
    assert (ctx.n, ctx.k, ctx.m) == (36, 3, 2)
    assert [len(h) for h in (ctx.K_p, ctx.K_q, ctx.H_p, ctx.H_q)] == [2, 3, 4, 9]
    with pytest.raises(InvalidParameter):
        P2Q2Context(3, 3)
    with pytest.raises(InvalidParameter):
        P2Q2Context(4, 3)


@pytest.mark.parametrize("pq", GRID)
def test_every_certificate_validates(pq):
    ctx = P2Q2Context(*pq)
    k, m, p, q = ctx.k, ctx.m, ctx.p, ctx.q
    for cert, graph in ((gamma0_coloring(ctx), ctx.gamma0), (gamma1_coloring(ctx), ctx.gamma1),
                        (full_coloring(ctx), ctx.graph)):
        assert validate_certificate(graph, cert)
    assert _colors(gamma0_coloring(ctx)) == k
    assert _colors(gamma1_coloring(ctx)) == k
    assert _colors(full_coloring(ctx)) == k + 1
    cl = canonical_cliques(ctx)
    assert validate_certificate(ctx.gamma0, cl["cliqueT"]) and len(cl["cliqueT"].payload) == k
    assert validate_certificate(ctx.gamma1, cl["cliqueR"]) and len(cl["cliqueR"].payload) == k
    assert validate_certificate(ctx.gamma0, cl["cosetClique"]) and len(cl["cosetClique"].payload) == k
    g1 = gamma1_independent_max(ctx)
    assert validate_certificate(ctx.gamma1, g1) and len(g1.payload) == p * q * m
    g0 = gamma0_independent_max(ctx)
    assert validate_certificate(ctx.gamma0, g0) and len(g0.payload) == p * q * m
    joint = joint_independent_max(ctx)
    assert validate_certificate(ctx.graph, joint) and len(joint.payload) == 2 * p * q * m - m * m


def test_c0_examples():
    ctx = P2Q2Context(2, 3)
    # block width k*m^2 = 12 for (2,3)
    assert [c0_color(ctx, x) for x in (0, 11, 12, 23, 24, 35)] == [0, 0, 1, 1, 2, 2]
    ctx32 = P2Q2Context(3, 2)
    assert [c0_color(ctx32, x) for x in (0, 11, 12, 24)] == [0, 0, 1, 2]


def test_c0_with_width_18_is_not_proper_on_2_3():
    # width q*p^2 = 12 works; the width 18 read of the swapped formula does not
    ctx = P2Q2Context(2, 3)
    wide = Certificate("coloring", tuple((x // 18) % 3 for x in range(36)))
    assert not validate_certificate(ctx.gamma0, wide)


def test_col_examples():
    ctx = P2Q2Context(2, 3)
    x = ctx.merge(1, 2)
    assert col_color(ctx, x) == 0


def test_col_without_residues_is_not_proper_on_2_3():
    # (g_p + g_q) mod k on raw CRT parts breaks; reducing each part mod its prime fixes it
    ctx = P2Q2Context(2, 3)
    raw = Certificate("coloring", tuple(sum(ctx.split(x)) % ctx.k for x in range(36)))
    assert not validate_certificate(ctx.gamma1, raw)
    assert validate_certificate(ctx.gamma1, gamma1_coloring(ctx))


def test_full_coloring_resolves_matching_conflicts():
    ctx = P2Q2Context(2, 3)
    cols = full_coloring(ctx).payload
    for x in range(ctx.n):
        if c0_color(ctx, x) == col_color(ctx, x):
            assert cols[x] == ctx.k
        else:
            assert cols[x] == c0_color(ctx, x)
        assert cols[ctx.n + x] == col_color(ctx, x)


def test_clique_examples():
    ctx = P2Q2Context(2, 3)
    assert coset_clique(ctx, 0).payload == (0, 12, 24)
    t = clique_t(ctx).payload
    assert all(ctx.group.element_orders[(a - b) % 36] == 3 for a, b in itertools.combinations(t, 2))
    r = clique_r(ctx).payload
    assert all(ctx.group.element_orders[(a - b) % 36] == 9 for a, b in itertools.combinations(r, 2))
    assert sorted(ctx.split(v)[1] % 3 for v in r) == [0, 1, 2]


def test_c_sets():
    ctx = P2Q2Context(2, 3)
    assert len(c_set(ctx, 0, 0).vertices) == 6
    assert validate_certificate(ctx.gamma1, Certificate("independentSet", c_set(ctx, 0, 0).vertices))
    comps = {tuple(sorted(c)) for c in connected_components(ctx.gamma0)}
    for i in range(2):
        for j in range(3):
            cs = c_set(ctx, i, j)
            assert cs.vertices in comps
            assert {component_index(ctx, v) for v in cs.vertices} == {(i, j)}
    with pytest.raises(InvalidParameter):
        c_set(ctx, 2, 0)
    with pytest.raises(InvalidParameter):
        c_set(ctx, 0, -1)


def test_c_set_pairs_nonadjacent_iff_both_indices_differ():
    ctx = P2Q2Context(2, 3)
    g1 = ctx.gamma1
    blocks = {(i, j): c_set(ctx, i, j).vertices for i in range(2) for j in range(3)}
    for (a, ba), (b, bb) in itertools.combinations(blocks.items(), 2):
        joined = any(g1.has_edge(u, v) for u in ba for v in bb)
        assert joined == (a[0] == b[0] or a[1] == b[1])


def test_components_are_k2_box_k3():
    ctx = P2Q2Context(2, 3)
    target = cartesian_product(complete_graph(2), complete_graph(3))
    for i in range(2):
        for j in range(3):
            verts = c_set(ctx, i, j).vertices
            assert are_isomorphic(ctx.gamma0.induced(verts), target) is not None
            tr = diagonal_transversal(ctx, i, j)
            assert len(tr) == 2 and set(tr) <= set(verts)


@pytest.mark.parametrize("pq", [(2, 3), (3, 2)])
def test_constructions_match_solver_optima(pq):
    ctx = P2Q2Context(*pq)
    assert _colors(gamma0_coloring(ctx)) == chromatic_number_exact(ctx.gamma0).value
    assert _colors(gamma1_coloring(ctx)) == chromatic_number_exact(ctx.gamma1).value
    assert _colors(full_coloring(ctx)) == chromatic_number_exact(ctx.graph).value
    assert len(clique_t(ctx).payload) == clique_number_exact(ctx.gamma0).value
    assert len(clique_r(ctx).payload) == clique_number_exact(ctx.gamma1).value
    assert len(gamma1_independent_max(ctx).payload) == independence_number_exact(ctx.gamma1).value
    assert len(gamma0_independent_max(ctx).payload) == independence_number_exact(ctx.gamma0).value
    assert len(joint_independent_max(ctx).payload) == independence_number_exact(ctx.graph).value
