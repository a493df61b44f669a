"""Verifier behaviour. Claims the mathematics contradicts are asserted as
``fail``, with the values computed by independent oracles."""
from __future__ import annotations

import json
import random

import networkx as nx
import pytest

from bicayley.constructions import P2Q2Context
from bicayley.errors import InvalidParameter
from bicayley.graph import BiCayleySpec, bicayley_graph
from bicayley.groups import involutions, make_cyclic, make_symmetric, parse_group, preset_connection_sets
from bicayley.invariants import Budget, connected_components
from bicayley.verifier import (DIAGNOSTIC, FAIL, INCONCLUSIVE, PASS, STATUSES, ClaimResult,
                               VerificationReport, distance_diagnostics, is_involution_separating,
                               random_connection_set, verify_general, verify_general_trials,
                               verify_involution, verify_involution_trials, verify_p2q2)
from oracles import to_nx


@pytest.fixture(scope="module")
def report23():
    return verify_p2q2(2, 3)


def _status(report, claim_id):
    found = report.by_id(claim_id)
    assert found, claim_id
    return found[0].status


def test_summary_is_consistent(report23):
    s = report23.summary
    assert s["total"] == len(report23.claims)
    assert sum(s[k] for k in STATUSES) == s["total"]
    assert report23.ok == (s["fail"] == 0)


def test_status_is_validated():
    with pytest.raises(ValueError):
        ClaimResult("x", {}, 1, 1, "maybe")


def test_stable_json_is_deterministic():
    a = json.dumps(verify_p2q2(2, 3).to_json(stable=True), sort_keys=True)
    b = json.dumps(verify_p2q2(2, 3).to_json(stable=True), sort_keys=True)
    assert a == b
    full = verify_p2q2(2, 3).to_json()
    assert "timestamp" in full and "elapsedMs" in full["claims"][0]


PASSING_23 = ["vertexCount", "edgeCount", "degrees", "sideDegrees", "gamma1Connected", "connected",
              "eulerian", "trianglesOneSide", "girth", "omega", "omegaGamma0", "omegaGamma1",
              "chiGamma0", "chiGamma1", "chi", "notMaxColorable", "gamma0Components",
              "gamma0ComponentIso", "cSetsAreComponents", "gamma1Iso", "componentDiameter",
              "gamma1Diameter", "alphaGamma0", "alphaGamma1", "alpha", "gamma0CosetColors"]


@pytest.mark.parametrize("claim", PASSING_23)
def test_p2q2_claims_that_hold(report23, claim):
    assert _status(report23, f"p2q2.{claim}") == PASS


def test_p2q2_constructions_all_pass(report23):
    cons = [c for c in report23.claims if c.claim_id.startswith("p2q2.construction.")]
    assert len(cons) == 10
    assert all(c.status == PASS for c in cons)


def test_diameter_claim_fails_with_true_value_4(report23):
    c = report23.by_id("p2q2.diameter")[0]
    assert c.status == FAIL and c.expected == 5 and c.computed == 4
    assert nx.diameter(to_nx(P2Q2Context(2, 3).graph)) == 4


def test_diameter_witness_path_has_length_4():
    # x=(0,0), y=(1,3) in Z4 x Z9: side 0 step, cross, side 1 step, cross back
    ctx = P2Q2Context(2, 3)
    h = to_nx(ctx.graph)
    x, y = ctx.merge(0, 0), ctx.merge(1, 3)
    mid = ctx.merge(0, 3)
    path = [x, mid, ctx.n + mid, ctx.n + y, y]
    assert all(h.has_edge(a, b) for a, b in zip(path, path[1:]))
    assert nx.shortest_path_length(h, x, y) == 4


def test_gamma1_max_sets_need_not_be_unions_of_c_sets(report23):
    assert _status(report23, "p2q2.gamma1MaxStructure") == FAIL


def test_tiny_budget_never_passes_np_hard_claims():
    rep = verify_p2q2(2, 3, Budget(nodes=1, seconds=0.0001))
    alpha = rep.by_id("p2q2.alpha")[0]
    assert alpha.status == INCONCLUSIVE and alpha.computed == ">= 20"
    for c in rep.claims:
        if c.status == PASS and c.claim_id in ("p2q2.chi", "p2q2.omega", "p2q2.alpha"):
            assert "exhaustive" in c.notes


def test_distance_diagnostics():
    rep = distance_diagnostics(2, 3)
    assert _status(rep, "dist.gamma1ProductLaw") == PASS
    assert _status(rep, "dist.gamma1Table") == DIAGNOSTIC
    mx = rep.by_id("dist.maxDistance")[0]
    assert mx.status == FAIL and mx.computed == 4


def test_general_sym3_matching_instance_passes():
    g = make_symmetric(3)
    rep = verify_general(g, {3, 4}, {1, 5})
    assert rep.ok, rep.failures()


def test_general_full_set_on_z4():
    g = make_cyclic(4)
    rep = verify_general(g, {1, 2, 3}, {1, 2, 3})
    assert rep.ok and _status(rep, "general.regularity") == PASS


def test_general_connectivity_counterexamples():
    v4 = parse_group("product:cyclic:2xcyclic:2")
    rep = verify_general(v4, {3}, {2})
    assert _status(rep, "general.connectivity") == FAIL
    assert _status(rep, "general.connectivityJoint") == PASS
    d8 = parse_group("dihedral:8")
    rep = verify_general(d8, {1, 3}, {7})
    assert _status(rep, "general.connectivity") == FAIL
    assert _status(rep, "general.connectivityJoint") == PASS


def test_joint_generation_predicts_connectivity_on_random_sets():
    rng = random.Random(11)
    for desc in ("sym:3", "dihedral:8", "product:cyclic:2xcyclic:2"):
        g = parse_group(desc)
        for _ in range(15):
            s1, s2 = random_connection_set(g, rng), random_connection_set(g, rng)
            gam = bicayley_graph(BiCayleySpec.from_sets(g, s1, s2, {g.identity}))
            rep = verify_general(g, s1, s2)
            assert rep.by_id("general.connectivityJoint")[0].computed == nx.is_connected(to_nx(gam))
            assert _status(rep, "general.connectivityJoint") == PASS


def test_general_trials_are_seeded():
    g = make_cyclic(12)
    a = verify_general_trials(g, trials=5, seed=3).to_json(stable=True)
    b = verify_general_trials(g, trials=5, seed=3).to_json(stable=True)
    assert a == b
    assert len({json.dumps(c["params"]["s1"]) for c in a["claims"]}) > 1


def test_z36_preset_with_involutions_is_one_component():
    z = make_cyclic(36)
    s1, s2, _ = preset_connection_sets(2, 3)
    rep = verify_involution(z, s1.elements, s2.elements)
    comp = rep.by_id("inv.components")[0]
    assert comp.status == PASS and len(comp.computed) == 1


def test_klein_group_set_is_not_separating():
    v4 = parse_group("product:cyclic:2xcyclic:2")
    assert not is_involution_separating(v4, {3})
    assert is_involution_separating(make_symmetric(3), {3, 4})


def test_involution_needs_involutions():
    with pytest.raises(InvalidParameter):
        verify_involution(make_cyclic(5), {1, 4}, {2, 3})


def test_sym3_component_claim_fails():
    g = make_symmetric(3)
    rep = verify_involution(g, {3, 4}, {3, 4})
    comp = rep.by_id("inv.components")[0]
    assert comp.status == FAIL
    gam = bicayley_graph(BiCayleySpec.from_sets(g, {3, 4}, {3, 4}, involutions(g)))
    assert len(comp.computed) == len(connected_components(gam)) == 2
    assert nx.number_connected_components(to_nx(gam)) == 2
    assert len(comp.expected) == 1


def test_sym3_cross_connectivity_uses_even_products():
    g = make_symmetric(3)
    rep = verify_involution(g, {3, 4}, {1, 5})
    assert _status(rep, "inv.crossConnected") == FAIL
    assert _status(rep, "inv.crossConnectedEven") == PASS


def test_involution_counts_hold():
    for desc in ("sym:3", "sym:4", "dihedral:8"):
        rep = verify_involution_trials(parse_group(desc), trials=4, seed=1)
        for cid in ("inv.crossRegular", "inv.edgeCount", "inv.degrees", "inv.regularity",
                    "inv.crossConnectedEven", "inv.separatingCrossCheck"):
            assert all(c.status == PASS for c in rep.by_id(cid)), cid


def test_report_extend():
    rep = VerificationReport({"x": 1})
    rep.extend(distance_diagnostics(2, 3))
    assert rep.summary["total"] == 4
