"""Claim registry: instantiate each structural result at concrete parameters,
compute both sides and collect the outcome in a :class:`VerificationReport`.

A claim about an NP-hard invariant only passes when the solver finished;
a budget-limited run gives ``inconclusive``.
"""
from __future__ import annotations

import datetime as _dt
import itertools
import math
import random
import time
from collections import Counter, defaultdict
from dataclasses import dataclass, field

from bicayley import __version__
from bicayley.constructions import (P2Q2Context, c0_color, c_set, canonical_cliques, component_index,
                                    full_coloring, gamma0_coloring, gamma0_independent_max,
                                    gamma1_coloring, gamma1_independent_max, joint_independent_max)
from bicayley.errors import BudgetExceeded, InvalidParameter
from bicayley.graph import (BiCayleySpec, are_isomorphic, bicayley_graph,
                            cartesian_product, complete_graph, complete_multipartite,
                            cross_edge_subgraph, side_subgraph)
from bicayley.groups import (ConnectionSet, FiniteGroup, involutions, left_cosets, right_cosets,
                             subgroup_closure)
from bicayley.invariants import (Budget, SolveOutcome, all_pairs_distances, chromatic_number_exact,
                                 clique_number_exact, component_diameters, connected_components,
                                 degree_profile, diameter, girth, independence_number_exact,
                                 is_connected, is_eulerian, maximal_cliques, shortest_path,
                                 validate_certificate, vertex_set_certificate)

PASS, FAIL, INCONCLUSIVE, DIAGNOSTIC = "pass", "fail", "inconclusive", "diagnostic"
STATUSES = (PASS, FAIL, INCONCLUSIVE, DIAGNOSTIC)

CLIQUE_ENUM_CAP = 128


def _jsonable(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(v) for v in items]
    return x


@dataclass
class ClaimResult:
    claim_id: str
    params: dict
    expected: object
    computed: object
    status: str
    notes: str = ""
    elapsed: float = 0.0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def to_json(self, stable: bool = False) -> dict:
        out = {
            "claimId": self.claim_id,
            "params": _jsonable(self.params),
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
            "status": self.status,
            "notes": self.notes,
        }
        if not stable:
            out["elapsedMs"] = round(self.elapsed * 1000, 3)
        return out


@dataclass
class VerificationReport:
    params: dict
    claims: list = field(default_factory=list)
    tool_version: str = __version__
    timestamp: str = field(default_factory=lambda: _dt.datetime.now(_dt.timezone.utc).isoformat())

    @property
    def summary(self) -> dict:
        counts = Counter(c.status for c in self.claims)
        return {"total": len(self.claims), **{s: counts.get(s, 0) for s in STATUSES}}

    @property
    def ok(self) -> bool:
        return not any(c.status == FAIL for c in self.claims)

    def by_id(self, claim_id: str) -> list[ClaimResult]:
        return [c for c in self.claims if c.claim_id == claim_id]

    def failures(self) -> list[ClaimResult]:
        return [c for c in self.claims if c.status == FAIL]

    def extend(self, other: "VerificationReport") -> None:
        self.claims.extend(other.claims)

    def to_json(self, stable: bool = False) -> dict:
        """Report as a dict; ``stable`` drops the timestamp and timings so
        repeated runs compare byte for byte."""
        out = {"toolVersion": self.tool_version, "params": _jsonable(self.params),
               "claims": [c.to_json(stable) for c in self.claims], "summary": self.summary}
        if not stable:
            out["timestamp"] = self.timestamp
        return out


class _Recorder:
    def __init__(self, report: VerificationReport, params: dict | None = None):
        self.report = report
        self.params = params or {}

    def add(self, claim_id, expected, computed, status=None, notes="", elapsed=0.0, params=None):
        if status is None:
            status = PASS if expected == computed else FAIL
        p = dict(self.params)
        p.update(params or {})
        self.report.claims.append(ClaimResult(claim_id, p, expected, computed, status, notes, elapsed))

    def exact(self, claim_id, expected, outcome: SolveOutcome, what="value"):
        if outcome.exhaustive:
            self.add(claim_id, expected, outcome.value, elapsed=outcome.elapsed,
                     notes=f"exhaustive, {outcome.nodes} nodes")
        else:
            lo = outcome.lower if outcome.lower is not None else outcome.certificate.size
            hi = outcome.upper
            bound = f"[{lo}, {hi}]" if hi is not None else f">= {lo}"
            self.add(claim_id, expected, bound, INCONCLUSIVE, elapsed=outcome.elapsed,
                     notes=f"budget exhausted after {outcome.nodes} nodes; {what} bounds {bound}")


def _timed(fn, *args, **kw):
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t0


def _budget(budget):
    return budget if budget is not None else Budget.default()


# --- Z_{p^2 q^2} suite -------------------------------------------------------

def _iso_claim(rec, claim_id, a, b, expected_text):
    try:
        witness, dt = _timed(are_isomorphic, a, b)
    except BudgetExceeded as exc:
        rec.add(claim_id, expected_text, "undecided", INCONCLUSIVE, str(exc))
        return
    rec.add(claim_id, expected_text, expected_text if witness else "not isomorphic",
            elapsed=dt, notes="witness mapping re-checked on all vertex pairs" if witness else "")


def _construction_claim(rec, claim_id, graph, cert, expected_size, optimum: SolveOutcome | None):
    v = validate_certificate(graph, cert)
    size = cert.size
    notes = []
    status = PASS if v.ok and size == expected_size else FAIL
    if not v.ok:
        notes.append(f"invalid: {len(v.violations)} violating pairs {v.violations[:5]} {v.notes}")
    if optimum is not None:
        if optimum.exhaustive:
            notes.append(f"solver optimum {optimum.value}")
            if optimum.value != size:
                status = FAIL
        else:
            notes.append("solver optimum not proven within budget")
    rec.add(claim_id, expected_size, size if v.ok else f"invalid ({size})", status, "; ".join(notes))


def verify_p2q2(p: int, q: int, budget: Budget | None = None) -> VerificationReport:
    """Every structural claim about BiCay(Z_{p^2q^2}; orders {p,q}, orders {p^2,q^2}, {0})."""
    budget = _budget(budget)
    ctx = P2Q2Context(p, q)
    n, k, m = ctx.n, ctx.k, ctx.m
    report = VerificationReport({"p": p, "q": q, "budgetNodes": budget.nodes,
                                 "budgetSeconds": budget.seconds})
    rec = _Recorder(report)
    gam, g0, g1 = ctx.graph, ctx.gamma0, ctx.gamma1

    rec.add("p2q2.vertexCount", 2 * n, gam.n)
    rec.add("p2q2.edgeCount", n * (p * p + q * q) // 2, gam.edge_count)
    d0, d1 = p + q - 1, p * (p - 1) + q * (q - 1) + 1
    prof = degree_profile(gam)
    rec.add("p2q2.degrees", f"biregular({min(d0, d1)},{max(d0, d1)})", str(prof))
    side_ok = all(gam.degree(v) == d0 for v in range(n)) and all(gam.degree(n + v) == d1 for v in range(n))
    rec.add("p2q2.sideDegrees", {"side0": d0, "side1": d1},
            {"side0": sorted({gam.degree(v) for v in range(n)}),
             "side1": sorted({gam.degree(n + v) for v in range(n)})}, PASS if side_ok else FAIL)
    rec.add("p2q2.gamma1Connected", True, is_connected(g1))
    rec.add("p2q2.connected", True, is_connected(gam))
    eul = is_eulerian(gam)
    rec.add("p2q2.eulerian", False, eul.value, notes=eul.reason)

    sets = [set(r) for r in gam.neighbors]
    mixed = sum(len(sets[u] & sets[v]) for u, v in gam.edges() if (u < n) != (v < n))
    rec.add("p2q2.trianglesOneSide", 0, mixed, notes="triangles through a cross edge")
    rec.add("p2q2.girth", 3, girth(gam))

    omega = clique_number_exact(gam, budget)
    rec.exact("p2q2.omega", k, omega)
    omega0 = clique_number_exact(g0, budget)
    rec.exact("p2q2.omegaGamma0", k, omega0)
    omega1 = clique_number_exact(g1, budget)
    rec.exact("p2q2.omegaGamma1", k, omega1)
    chi0 = chromatic_number_exact(g0, budget)
    rec.exact("p2q2.chiGamma0", k, chi0)
    chi1 = chromatic_number_exact(g1, budget)
    rec.exact("p2q2.chiGamma1", k, chi1)
    chi = chromatic_number_exact(gam, budget)
    rec.exact("p2q2.chi", k + 1, chi)
    if chi.refuted_k == k:
        rec.add("p2q2.notMaxColorable", f"no proper {k}-colouring", f"no proper {k}-colouring",
                notes=f"refuted exhaustively, {chi.nodes} nodes in total")
    elif chi.exhaustive and chi.value is not None and chi.value <= k:
        rec.add("p2q2.notMaxColorable", f"no proper {k}-colouring", f"{chi.value}-colouring found")
    else:
        rec.add("p2q2.notMaxColorable", f"no proper {k}-colouring", "undecided", INCONCLUSIVE,
                f"budget exhausted; chromatic number in [{chi.lower}, {chi.upper}]")

    comps = connected_components(g0)
    rec.add("p2q2.gamma0Components", p * q, len(comps))
    target = cartesian_product(complete_graph(p), complete_graph(q))
    iso_fail, iso_undecided = [], 0
    for comp in comps:
        try:
            if are_isomorphic(g0.induced(comp), target) is None:
                iso_fail.append(comp[0])
        except BudgetExceeded:
            iso_undecided += 1
    status = FAIL if iso_fail else (INCONCLUSIVE if iso_undecided else PASS)
    rec.add("p2q2.gamma0ComponentIso", f"all {p * q} components ~ K{p} [] K{q}",
            f"{len(comps) - len(iso_fail) - iso_undecided} of {len(comps)} isomorphic", status,
            f"non-isomorphic components at {iso_fail}" if iso_fail else "")
    comp_sets = sorted(tuple(c) for c in comps)
    cset_sets = sorted(c_set(ctx, i, j).vertices for i in range(p) for j in range(q))
    rec.add("p2q2.cSetsAreComponents", True, comp_sets == cset_sets)
    _iso_claim(rec, "p2q2.gamma1Iso", g1,
               cartesian_product(complete_multipartite([p] * p), complete_multipartite([q] * q)),
               f"K({p}x{p}) [] K({q}x{q})")

    cd = component_diameters(g0)
    rec.add("p2q2.componentDiameter", [2], sorted(set(cd)))
    rec.add("p2q2.gamma1Diameter", 4, diameter(g1))
    dist = all_pairs_distances(gam)
    diam = diameter(gam)
    far = next(((u, v) for u in range(gam.n) for v in range(u + 1, gam.n) if dist[u][v] == diam), None)
    witness = f"; farthest pair {far} at distance {diam}" if far else ""
    if far:
        path = shortest_path(gam, *far)
        witness += f" via {[gam.labels[v] for v in path]}"
    rec.add("p2q2.diameter", 5, diam,
            notes=f"{sum(r.count(5) for r in dist) // 2} vertex pairs at distance 5{witness}")

    alpha0 = independence_number_exact(g0, budget)
    rec.exact("p2q2.alphaGamma0", p * q * m, alpha0)
    alpha1 = independence_number_exact(g1, budget)
    rec.exact("p2q2.alphaGamma1", p * q * m, alpha1)
    alpha = independence_number_exact(gam, budget)
    rec.exact("p2q2.alpha", 2 * p * q * m - m * m, alpha)

    if alpha1.exhaustive:
        blocks = defaultdict(list)
        for x in alpha1.certificate.payload:
            blocks[component_index(ctx, x)].append(x)
        full = all(len(v) == p * q for v in blocks.values())
        rows = [i for i, _ in blocks]
        cols = [j for _, j in blocks]
        ok = full and len(blocks) == m and len(set(rows)) == m and len(set(cols)) == m
        rec.add("p2q2.gamma1MaxStructure", f"union of {m} full C-sets, distinct rows and columns",
                sorted(blocks), PASS if ok else FAIL, "checked on the solver's optimum")
    else:
        rec.add("p2q2.gamma1MaxStructure", "union of C-sets", "no proven optimum", INCONCLUSIVE)

    c0 = [c0_color(ctx, x) for x in range(n)]
    sub = ctx.K_p if k == p else ctx.K_q
    bad = [b for b in right_cosets(ctx.group, sub) if sorted(c0[x] for x in b) != list(range(k))]
    rec.add("p2q2.gamma0CosetColors", 0, len(bad),
            notes=f"cosets of the order-{k} subgroup missing a colour under the {k}-colouring")

    cliques = canonical_cliques(ctx)
    _construction_claim(rec, "p2q2.construction.gamma0Coloring", g0, gamma0_coloring(ctx), k, chi0)
    _construction_claim(rec, "p2q2.construction.gamma1Coloring", g1, gamma1_coloring(ctx), k, chi1)
    _construction_claim(rec, "p2q2.construction.fullColoring", gam, full_coloring(ctx), k + 1, chi)
    _construction_claim(rec, "p2q2.construction.cliqueT", g0, cliques["cliqueT"], k, omega0)
    _construction_claim(rec, "p2q2.construction.cliqueR", g1, cliques["cliqueR"], k, omega1)
    _construction_claim(rec, "p2q2.construction.cosetClique", g0, cliques["cosetClique"], k, omega0)
    bad_c = [(i, j) for i in range(p) for j in range(q)
             if not validate_certificate(
                 g1, _iset(c_set(ctx, i, j).vertices)).ok or len(c_set(ctx, i, j).vertices) != p * q]
    rec.add("p2q2.construction.cSets", 0, len(bad_c), notes=f"C-sets not independent of size pq: {bad_c}")
    _construction_claim(rec, "p2q2.construction.gamma0IndependentMax", g0,
                        gamma0_independent_max(ctx), p * q * m, alpha0)
    _construction_claim(rec, "p2q2.construction.gamma1IndependentMax", g1,
                        gamma1_independent_max(ctx), p * q * m, alpha1)
    _construction_claim(rec, "p2q2.construction.jointIndependentMax", gam,
                        joint_independent_max(ctx), 2 * p * q * m - m * m, alpha)
    return report


def _iset(vertices):
    return vertex_set_certificate("independentSet", vertices)


# --- arbitrary groups, S3 = {e} ------------------------------------------------

def _as_set(g, s, role):
    cs = s if isinstance(s, ConnectionSet) else ConnectionSet(frozenset(s), role)
    cs.validate(g)
    return cs


def verify_general(g: FiniteGroup, s1, s2, budget: Budget | None = None,
                   params: dict | None = None) -> VerificationReport:
    budget = _budget(budget)
    s1, s2 = _as_set(g, s1, "S1"), _as_set(g, s2, "S2")
    base = {"group": g.description, "s1": sorted(s1.elements), "s2": sorted(s2.elements)}
    base.update(params or {})
    report = VerificationReport(base)
    rec = _Recorder(report)
    _general_claims(rec, g, s1, s2, budget)
    return report


def _general_claims(rec, g, s1, s2, budget, params=None):
    n = g.order
    gam = bicayley_graph(BiCayleySpec(g, s1, s2, ConnectionSet(frozenset({g.identity}), "S3")))
    g0, g1 = side_subgraph(gam, 0), side_subgraph(gam, 1)
    a, b = len(s1), len(s2)
    rec.add("general.vertexCount", 2 * n, gam.n, params=params)
    rec.add("general.edgeCount", n * (a + b + 2) // 2, gam.edge_count, params=params)
    degs = ({gam.degree(v) for v in range(n)}, {gam.degree(n + v) for v in range(n)})
    rec.add("general.degrees", {"side0": [a + 1], "side1": [b + 1]},
            {"side0": sorted(degs[0]), "side1": sorted(degs[1])}, params=params)
    cls = degree_profile(gam).classification
    rec.add("general.regularity", "regular" if a == b else "biregular", cls, params=params)

    conn = is_connected(gam)
    c0, c1 = is_connected(g0), is_connected(g1)
    gen = len(subgroup_closure(g, s1.elements)) == n or len(subgroup_closure(g, s2.elements)) == n
    agree = conn == (c0 or c1) == gen
    rec.add("general.connectivity", "connected <=> a side connected <=> a set generates",
            {"connected": conn, "sideConnected": c0 or c1, "generates": gen},
            PASS if agree else FAIL, params=params)
    joint = len(subgroup_closure(g, s1.elements | s2.elements)) == n
    rec.add("general.connectivityJoint", joint, conn,
            notes="connected iff the union of both sets generates the group", params=params)

    eul = is_eulerian(gam)
    both_odd = a % 2 == 1 and b % 2 == 1
    if conn:
        rec.add("general.eulerian", both_odd, eul.value, notes=eul.reason, params=params)
    else:
        note = eul.reason
        if both_odd:
            note += "; both sets odd but the graph is disconnected, so not Eulerian"
        rec.add("general.eulerian", "not applicable (disconnected)", eul.value,
                PASS if not eul.value else FAIL, note, params=params)

    om, om0, om1 = (clique_number_exact(x, budget) for x in (gam, g0, g1))
    if om.exhaustive and om0.exhaustive and om1.exhaustive:
        rec.add("general.omega", max(om0.value, om1.value, 2), om.value,
                notes=f"omega0={om0.value}, omega1={om1.value}", params=params)
    else:
        rec.add("general.omega", "max(omega0, omega1, 2)", "undecided", INCONCLUSIVE, params=params)

    ch, ch0, ch1 = (chromatic_number_exact(x, budget) for x in (gam, g0, g1))
    if ch.exhaustive and ch0.exhaustive and ch1.exhaustive:
        top = max(ch0.value, ch1.value)
        ok = top <= ch.value <= top + 1
        rec.add("general.chiBounds", f"[{top}, {top + 1}]", ch.value, PASS if ok else FAIL,
                f"chi0={ch0.value}, chi1={ch1.value}", params=params)
    else:
        rec.add("general.chiBounds", "max(chi0, chi1) <= chi <= 1 + max", "undecided", INCONCLUSIVE,
                params=params)


def random_connection_set(g: FiniteGroup, rng: random.Random) -> frozenset[int]:
    """Symmetrise a uniform sample of non-identity elements; never empty."""
    pool = [x for x in g.elements() if x != g.identity]
    size = rng.randint(1, len(pool))
    picked = set(rng.sample(pool, size))
    return frozenset(picked | {g.inverse(x) for x in picked})


def verify_general_trials(g: FiniteGroup, trials: int = 50, seed: int = 0,
                          budget: Budget | None = None) -> VerificationReport:
    """Seeded random (S1, S2) pairs, all claims of :func:`verify_general` per trial."""
    budget = _budget(budget)
    rng = random.Random(seed)
    report = VerificationReport({"group": g.description, "trials": trials, "seed": seed})
    rec = _Recorder(report)
    for t in range(trials):
        s1 = ConnectionSet(random_connection_set(g, rng), "S1")
        s2 = ConnectionSet(random_connection_set(g, rng), "S2")
        _general_claims(rec, g, s1, s2, budget,
                        {"trial": t, "s1": sorted(s1.elements), "s2": sorted(s2.elements)})
    return report


# --- S3 = all involutions ----------------------------------------------------

def elementary_abelian_2_subgroups(g: FiniteGroup) -> list[frozenset[int]]:
    """Subgroups {e,a} and {e,a,b,ab} for involutions a, b that commute."""
    inv = sorted(involutions(g))
    out = {frozenset({g.identity, a}) for a in inv}
    for a, b in itertools.combinations(inv, 2):
        if g.multiply(a, b) == g.multiply(b, a):
            out.add(frozenset({g.identity, a, b, g.multiply(a, b)}))
    return sorted(out, key=sorted)


def is_involution_separating(g: FiniteGroup, s) -> bool:
    s = set(s)
    return all(not (s & (h - {g.identity})) for h in elementary_abelian_2_subgroups(g))


def _mixed_clique_check(g, gam, s_sep):
    """Check the two-per-side bound on every maximal clique meeting its hypothesis.

    Returns (cliques, hypothesis_hits, violations)."""
    n = g.order
    hits, bad, total = 0, [], 0
    for clique in maximal_cliques(gam):
        total += 1
        side0 = [v for v in clique if v < n]
        side1 = [v - n for v in clique if v >= n]
        if not side0 or not side1:
            continue
        # side-0 count, pivot (1,h): a_i = g_i h^-1
        for many, pivots, flip in ((side0, side1, False), (side1, side0, True)):
            if len(many) < 2:
                continue
            for h in pivots:
                if flip:
                    invs = [g.multiply(h, g.inverse(x)) for x in many]
                else:
                    invs = [g.multiply(x, g.inverse(h)) for x in many]
                commuting = any(g.multiply(a, b) == g.multiply(b, a)
                                for a, b in itertools.combinations(invs, 2))
                if commuting and s_sep:
                    hits += 1
                    if len(many) > 2:
                        bad.append(clique)
                    break
    return total, hits, bad


def verify_involution(g: FiniteGroup, s1, s2, budget: Budget | None = None) -> VerificationReport:
    budget = _budget(budget)
    inv = involutions(g)
    if not inv:
        raise InvalidParameter(f"{g.description} has no involutions (odd order)")
    s1, s2 = _as_set(g, s1, "S1"), _as_set(g, s2, "S2")
    n = g.order
    report = VerificationReport({"group": g.description, "s1": sorted(s1.elements),
                                 "s2": sorted(s2.elements), "involutions": sorted(inv)})
    rec = _Recorder(report)
    gam = bicayley_graph(BiCayleySpec(g, s1, s2, ConnectionSet(inv, "S3")))
    ce = cross_edge_subgraph(gam)
    a, b, i = len(s1), len(s2), len(inv)

    rec.add("inv.crossRegular", [i], sorted(set(ce.degrees())))
    rec.add("inv.edgeCount", n * (a + b + 2 * i) // 2, gam.edge_count)
    rec.add("inv.degrees", {"side0": [a + i], "side1": [b + i]},
            {"side0": sorted({gam.degree(v) for v in range(n)}),
             "side1": sorted({gam.degree(n + v) for v in range(n)})})
    rec.add("inv.regularity", "regular" if a == b else "biregular", degree_profile(gam).classification)

    ce_conn = is_connected(ce)
    gen_inv = len(subgroup_closure(g, inv)) == n
    even = {g.multiply(x, y) for x in inv for y in inv}
    gen_even = len(subgroup_closure(g, even)) == n
    rec.add("inv.crossConnected", gen_inv, ce_conn,
            notes="as stated: connected iff the involutions generate the group")
    rec.add("inv.crossConnectedEven", gen_even, ce_conn,
            notes="connected iff products of two involutions generate the group "
                  "(cross edges alternate sides, so walks back to side 0 use even words)")

    hsub = subgroup_closure(g, set(s1.elements) | set(s2.elements) | set(inv))
    comps = sorted(tuple(sorted(c)) for c in connected_components(gam))
    rcos = right_cosets(g, hsub)
    predicted = sorted(tuple(sorted(list(c) + [n + x for x in c])) for c in rcos)
    lcos = right_cosets(g, hsub) == left_cosets(g, hsub)
    rec.add("inv.components", predicted, comps,
            notes="exact partition equality with {0,1} x coset blocks; "
                  f"left and right cosets {'coincide' if lcos else 'differ, right cosets used'}")
    proj = sorted(tuple(sorted({v % n for v in c})) for c in comps)
    rec.add("inv.componentProjection", sorted(rcos), proj,
            notes="each component's projection onto the group is one coset")

    sep1, sep2 = is_involution_separating(g, s1.elements), is_involution_separating(g, s2.elements)
    alt1, alt2 = not (s1.elements & inv), not (s2.elements & inv)
    rec.add("inv.separatingCrossCheck", {"s1": alt1, "s2": alt2}, {"s1": sep1, "s2": sep2},
            notes="definition via elementary abelian 2-subgroups vs. no involution in the set")
    rec.add("inv.separating", "reported", {"s1": sep1, "s2": sep2}, DIAGNOSTIC)

    note = "the unnamed set in the hypothesis is read as the side's own connection set"
    if gam.n > CLIQUE_ENUM_CAP:
        rec.add("inv.mixedClique", "at most 2 per side", "skipped", INCONCLUSIVE,
                f"maximal-clique enumeration limited to {CLIQUE_ENUM_CAP} vertices; {note}")
    elif sep1 and sep2:
        total, hits, bad = _mixed_clique_check(g, gam, True)
        rec.add("inv.mixedClique", 0, len(bad),
                notes=f"{total} maximal cliques, {hits} meet the commuting hypothesis; {note}")
    else:
        rec.add("inv.mixedClique", "not applicable", "sets not involution-separating", DIAGNOSTIC, note)

    om, om0, om1 = clique_number_exact(gam, budget), clique_number_exact(side_subgraph(gam, 0), budget), \
        clique_number_exact(side_subgraph(gam, 1), budget)
    bound = max(om0.value, om1.value, 4)
    rec.add("inv.omegaBound", f"<= {bound}", om.value, DIAGNOSTIC,
            f"omega0={om0.value}, omega1={om1.value}, cross-edge clique number "
            f"{clique_number_exact(ce, budget).value}; bound {'holds' if om.value <= bound else 'violated'}")
    return report


# --- distance tables ---------------------------------------------------------

def distance_diagnostics(p: int, q: int) -> VerificationReport:
    ctx = P2Q2Context(p, q)
    n = ctx.n
    report = VerificationReport({"p": p, "q": q})
    rec = _Recorder(report)
    d1 = all_pairs_distances(ctx.gamma1)
    split = [ctx.split(x) for x in range(n)]

    def part_dist(a, b, r):
        return 0 if a == b else (2 if (a - b) % r == 0 else 1)

    def pattern(a, b, r):
        return "equal" if a == b else ("sameClass" if (a - b) % r == 0 else "otherClass")

    table = defaultdict(Counter)
    law_bad = 0
    for x in range(n):
        xp, xq = split[x]
        for y in range(n):
            yp, yq = split[y]
            table[f"p:{pattern(xp, yp, p)},q:{pattern(xq, yq, q)}"][d1[x][y]] += 1
            if d1[x][y] != part_dist(xp, yp, p) + part_dist(xq, yq, q):
                law_bad += 1
    rec.add("dist.gamma1ProductLaw", 0, law_bad, notes=f"violating ordered pairs out of {n * n}")
    rec.add("dist.gamma1Table", "tabulated", {k: dict(sorted(v.items())) for k, v in sorted(table.items())},
            DIAGNOSTIC)

    dg = all_pairs_distances(ctx.graph)
    comp = [component_index(ctx, x) for x in range(n)]
    cross = Counter()
    for x in range(n):
        for y in range(x + 1, n):
            if comp[x] != comp[y]:
                cross["5" if dg[x][y] == 5 else "<=4"] += 1
    rec.add("dist.gamma0CrossComponent", "tabulated", dict(sorted(cross.items())), DIAGNOSTIC,
            "side-0 pairs in different side-0 components, distances in the full graph")
    top = max(max(r) for r in dg)
    rec.add("dist.maxDistance", 5, top)
    return report


def random_separating_set(g: FiniteGroup, rng: random.Random) -> frozenset[int] | None:
    """Random inverse-closed set avoiding every involution, or None if the
    group has no element of order above 2."""
    inv = involutions(g)
    pool = [x for x in g.elements() if x != g.identity and x not in inv]
    if not pool:
        return None
    picked = set(rng.sample(pool, rng.randint(1, len(pool))))
    return frozenset(picked | {g.inverse(x) for x in picked})


def verify_involution_trials(g: FiniteGroup, trials: int = 50, seed: int = 0,
                             budget: Budget | None = None) -> VerificationReport:
    """Seeded (S1, S2) draws; odd-numbered trials draw involution-free sets so
    the mixed-clique bound is exercised."""
    rng = random.Random(seed)
    report = VerificationReport({"group": g.description, "trials": trials, "seed": seed})
    for t in range(trials):
        sets = None
        if t % 2:
            a, b = random_separating_set(g, rng), random_separating_set(g, rng)
            if a is not None and b is not None:
                sets = (a, b)
        if sets is None:
            sets = (random_connection_set(g, rng), random_connection_set(g, rng))
        sub = verify_involution(g, sets[0], sets[1], budget)
        for c in sub.claims:
            c.params = {"trial": t, **sub.params}
        report.extend(sub)
    return report
