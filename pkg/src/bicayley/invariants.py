"""Exact graph invariants with certificates.

BFS metrics are cheap and always exact. Clique, independence and chromatic
numbers are solved by branch and bound under a :class:`Budget`; every
:class:`SolveOutcome` says whether the search finished (``exhaustive``).
"""
from __future__ import annotations

import math
import os
import time
from collections import Counter
from dataclasses import dataclass, field

from bicayley import kernels
from bicayley.graph import LabeledGraph

INF = math.inf

CERTIFICATE_KINDS = ("coloring", "clique", "independentSet", "geodesic")


@dataclass(frozen=True)
class Budget:
    nodes: int = 10_000_000
    seconds: float = 60.0

    @classmethod
    def default(cls) -> "Budget":
        """Default budget; ``BICAY_BUDGET_SECONDS`` overrides the time limit."""
        env = os.environ.get("BICAY_BUDGET_SECONDS")
        return cls(seconds=float(env)) if env else cls()


class _Meter:
    """Shared node/time allowance for one solver call and its sub-searches."""

    def __init__(self, budget: Budget | None):
        budget = budget or Budget.default()
        self.node_limit = budget.nodes
        self.deadline = time.perf_counter() + budget.seconds
        self.nodes = 0

    def args(self):
        left_nodes = max(self.node_limit - self.nodes, 1)
        left_time = max(self.deadline - time.perf_counter(), 1e-3)
        return left_nodes, left_time

    def spent(self) -> bool:
        return self.nodes >= self.node_limit or time.perf_counter() >= self.deadline


@dataclass(frozen=True)
class Certificate:
    kind: str
    payload: tuple

    def __post_init__(self):
        if self.kind not in CERTIFICATE_KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")
        object.__setattr__(self, "payload", tuple(self.payload))

    def __len__(self):
        return len(self.payload)

    @property
    def size(self) -> int:
        if self.kind == "coloring":
            return len({c for c in self.payload if c is not None and c >= 0})
        return len(self.payload)

    def to_json(self) -> dict:
        return {"kind": self.kind, "payload": list(self.payload)}

    @classmethod
    def from_json(cls, data) -> "Certificate":
        return cls(data["kind"], tuple(data["payload"]))


def coloring_certificate(colors) -> Certificate:
    return Certificate("coloring", tuple(colors))


def vertex_set_certificate(kind: str, vertices) -> Certificate:
    return Certificate(kind, tuple(sorted(vertices)))


@dataclass
class SolveOutcome:
    value: int | None
    certificate: Certificate
    exhaustive: bool
    nodes: int = 0
    elapsed: float = 0.0
    lower: int | None = None
    upper: int | None = None
    infeasibility_proven: bool = False
    refuted_k: int | None = None

    def to_json(self) -> dict:
        out = {
            "value": self.value,
            "exhaustive": self.exhaustive,
            "nodes": self.nodes,
            "elapsedMs": round(self.elapsed * 1000, 3),
            "certificate": self.certificate.to_json(),
        }
        if self.lower is not None:
            out["lower"] = self.lower
            out["upper"] = self.upper
        if self.refuted_k is not None:
            out["refutedK"] = self.refuted_k
            out["infeasibilityProven"] = self.infeasibility_proven
        return out


@dataclass
class Validation:
    ok: bool
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class DegreeProfile:
    multiset: dict
    classification: str
    degrees: tuple

    def __str__(self):
        if self.classification == "irregular" or not self.degrees:
            return self.classification
        return f"{self.classification}({','.join(map(str, self.degrees))})"


@dataclass(frozen=True)
class EulerianResult:
    value: bool
    reason: str

    def __bool__(self):
        return self.value


# --- BFS metrics -----------------------------------------------------------

def connected_components(g: LabeledGraph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
                    comp.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: LabeledGraph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def all_pairs_distances(g: LabeledGraph) -> list[list[float]]:
    """BFS distance matrix; unreachable pairs are ``math.inf``."""
    rows = kernels.all_pairs(g.neighbors)
    return [[INF if d < 0 else d for d in row] for row in rows]


def distances_from(g: LabeledGraph, source: int) -> list[float]:
    return [INF if d < 0 else d for d in kernels.bfs_row(g.neighbors, source)]


def diameter(g: LabeledGraph):
    """Largest distance, or ``math.inf`` if the graph is disconnected."""
    if g.n == 0:
        return 0
    best = 0
    for row in kernels.all_pairs(g.neighbors):
        m = min(row)
        if m < 0:
            return INF
        best = max(best, max(row))
    return best


def component_diameters(g: LabeledGraph) -> list[int]:
    return [diameter(g.induced(c)) for c in connected_components(g)]


def girth(g: LabeledGraph):
    """Shortest cycle length; ``math.inf`` for forests."""
    value = kernels.girth(g.neighbors)
    return INF if value == 0 else value


def shortest_path(g: LabeledGraph, u: int, v: int) -> list[int] | None:
    parent = {u: None}
    frontier = [u]
    while frontier and v not in parent:
        nxt = []
        for x in frontier:
            for w in g.neighbors[x]:
                if w not in parent:
                    parent[w] = x
                    nxt.append(w)
        frontier = nxt
    if v not in parent:
        return None
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


def degree_profile(g: LabeledGraph) -> DegreeProfile:
    ms = dict(sorted(Counter(g.degrees()).items()))
    keys = tuple(ms)
    if not keys:
        kind = "empty"
    elif len(keys) == 1:
        kind = "regular"
    elif len(keys) == 2:
        kind = "biregular"
    else:
        kind = "irregular"
    return DegreeProfile(ms, kind, keys)


def is_eulerian(g: LabeledGraph) -> EulerianResult:
    """Connected (isolated vertices ignored), at least one edge, all degrees even."""
    odd = [v for v in range(g.n) if g.degree(v) % 2]
    if g.edge_count == 0:
        return EulerianResult(False, "no edges")
    nontrivial = [c for c in connected_components(g) if len(c) > 1]
    if len(nontrivial) > 1:
        return EulerianResult(False, f"edges span {len(nontrivial)} components")
    if odd:
        return EulerianResult(False, f"{len(odd)} vertices of odd degree (first: {odd[0]})")
    return EulerianResult(True, "connected and every degree even")


# --- exact solvers ---------------------------------------------------------

def _degree_order(nbrs):
    return sorted(range(len(nbrs)), key=lambda v: (-len(nbrs[v]), v))


def _relabel(nbrs, order):
    pos = {v: i for i, v in enumerate(order)}
    return [[pos[w] for w in nbrs[v]] for v in order]


def _greedy_clique(nbrs, order):
    clique = []
    cand = None
    for v in order:
        if cand is None or v in cand:
            clique.append(v)
            cand = set(nbrs[v]) if cand is None else cand & set(nbrs[v])
    return clique


def _max_clique_on(nbrs, meter: _Meter):
    """Maximum clique of a raw neighbour-list graph; returns (clique, exhaustive)."""
    if not nbrs:
        return [], True
    order = _degree_order(nbrs)
    greedy = _greedy_clique(nbrs, order)
    node_left, time_left = meter.args()
    found, exhaustive, nodes = kernels.max_clique(
        _relabel(nbrs, order), len(greedy), node_left, time_left)
    meter.nodes += nodes
    clique = sorted(order[i] for i in found) if found else sorted(greedy)
    return clique, exhaustive


def clique_number_exact(g: LabeledGraph, budget: Budget | None = None) -> SolveOutcome:
    t0 = time.perf_counter()
    meter = _Meter(budget)
    clique, exhaustive = _max_clique_on([list(r) for r in g.neighbors], meter)
    return SolveOutcome(len(clique), vertex_set_certificate("clique", clique), exhaustive,
                        meter.nodes, time.perf_counter() - t0)


def independence_number_exact(g: LabeledGraph, budget: Budget | None = None) -> SolveOutcome:
    """Maximum independent set, solved per component as a clique in the complement."""
    t0 = time.perf_counter()
    meter = _Meter(budget)
    chosen = []
    exhaustive = True
    for comp in connected_components(g):
        if len(comp) == 1:
            chosen.append(comp[0])
            continue
        co = []
        for v in comp:
            adj = set(g.neighbors[v])
            co.append([i for i, w in enumerate(comp) if w != v and w not in adj])
        clique, done = _max_clique_on(co, meter)
        exhaustive &= done
        chosen.extend(comp[i] for i in clique)
    return SolveOutcome(len(chosen), vertex_set_certificate("independentSet", chosen), exhaustive,
                        meter.nodes, time.perf_counter() - t0)


def dsatur_coloring(g: LabeledGraph) -> list[int]:
    """Greedy saturation-degree colouring; ties go to higher degree, then lower index."""
    n = g.n
    color = [-1] * n
    seen = [set() for _ in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if color[u] < 0),
                key=lambda u: (len(seen[u]), g.degree(u), -u))
        c = 0
        while c in seen[v]:
            c += 1
        color[v] = c
        for w in g.neighbors[v]:
            seen[w].add(c)
    return color


def chromatic_number_exact(g: LabeledGraph, budget: Budget | None = None) -> SolveOutcome:
    """Exact chromatic number: clique lower bound, DSATUR upper bound, then
    k-colourability searches for decreasing k until one is refuted."""
    t0 = time.perf_counter()
    if g.n == 0:
        return SolveOutcome(0, coloring_certificate(()), True, 0, 0.0, 0, 0)
    meter = _Meter(budget)
    nbrs = [list(r) for r in g.neighbors]
    clique, _ = _max_clique_on(nbrs, meter)
    lower = len(clique)
    best = dsatur_coloring(g)
    upper = max(best) + 1
    refuted = None
    while upper > lower:
        k = upper - 1
        node_left, time_left = meter.args()
        status, colors, nodes = kernels.k_color(nbrs, k, clique, node_left, time_left)
        meter.nodes += nodes
        if status == 1:
            best = colors
            upper = max(colors) + 1
        elif status == 0:
            refuted = k
            break
        else:
            break
    exhaustive = upper == lower or refuted == upper - 1
    return SolveOutcome(
        upper if exhaustive else None, coloring_certificate(best), exhaustive,
        meter.nodes, time.perf_counter() - t0, lower, upper,
        infeasibility_proven=refuted is not None, refuted_k=refuted)


def k_colorability(g: LabeledGraph, k: int, budget: Budget | None = None):
    """Decide whether ``g`` has a proper k-colouring.

    Returns ``(status, certificate_or_None, nodes)`` with status True, False
    (exhaustively refuted) or None (budget exhausted).
    """
    meter = _Meter(budget)
    nbrs = [list(r) for r in g.neighbors]
    clique, _ = _max_clique_on(nbrs, meter)
    if len(clique) > k:
        return False, None, meter.nodes
    node_left, time_left = meter.args()
    status, colors, nodes = kernels.k_color(nbrs, k, clique, node_left, time_left)
    meter.nodes += nodes
    if status == 1:
        return True, coloring_certificate(colors), meter.nodes
    return (False if status == 0 else None), None, meter.nodes


def maximal_cliques(g: LabeledGraph):
    """All maximal cliques (Bron-Kerbosch with pivoting), each a sorted tuple."""
    bits = g.bits

    def expand(R, P, X):
        if not P and not X:
            yield tuple(sorted(R))
            return
        pool = P | X
        pivot, best = -1, -1
        while pool:
            low = pool & -pool
            u = low.bit_length() - 1
            pool ^= low
            c = (P & bits[u]).bit_count()
            if c > best:
                pivot, best = u, c
        cand = P & ~bits[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            yield from expand(R + [v], P & bits[v], X & bits[v])
            P &= ~low
            X |= low

    if g.n:
        yield from expand([], (1 << g.n) - 1, 0)


# --- certificate validation ------------------------------------------------

def validate_certificate(g: LabeledGraph, c: Certificate) -> Validation:
    """Re-check a certificate's defining property, listing every violating pair."""
    n = g.n
    payload = c.payload
    if c.kind == "coloring":
        if len(payload) != n:
            return Validation(False, [], [f"colouring has {len(payload)} entries for {n} vertices"])
        missing = [v for v, col in enumerate(payload) if col is None or col < 0]
        bad = [(u, v) for u, v in g.edges() if payload[u] == payload[v] and payload[u] is not None]
        notes = [f"uncoloured vertices: {missing}"] if missing else []
        return Validation(not bad and not missing, bad, notes)
    out_of_range = [v for v in payload if not 0 <= v < n]
    if out_of_range:
        return Validation(False, [], [f"vertices out of range: {out_of_range}"])
    if c.kind == "geodesic":
        bad = [(payload[i], payload[i + 1]) for i in range(len(payload) - 1)
               if not g.has_edge(payload[i], payload[i + 1])]
        notes = []
        if payload and not bad:
            d = distances_from(g, payload[0])[payload[-1]]
            if d != len(payload) - 1:
                notes.append(f"path length {len(payload) - 1} exceeds distance {d}")
        return Validation(not bad and not notes, bad, notes)
    verts = list(payload)
    notes = [] if len(set(verts)) == len(verts) else ["repeated vertices"]
    want_edge = c.kind == "clique"
    bad = [(u, v) for i, u in enumerate(verts) for v in verts[i + 1:]
           if u != v and g.has_edge(u, v) != want_edge]
    return Validation(not bad and not notes, bad, notes)
