"""Labelled simple graphs and their constructors.

Vertices are ``0..n-1`` and each carries a label ``(side, element)`` where
``side`` is 0, 1 or None. Bi-Cayley graphs put ``(side, x)`` at index
``side*|G| + x``.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

from bicayley.errors import BudgetExceeded, InvalidConnectionSet, InvalidParameter
from bicayley.groups import ConnectionSet, FiniteGroup

ISO_CAP = 512


class LabeledGraph:
    """Immutable simple undirected graph with per-vertex labels."""

    def __init__(self, neighbors, labels=None, meta: str = "", group_descriptor: str | None = None):
        n = len(neighbors)
        rows = []
        for v, row in enumerate(neighbors):
            row = tuple(sorted(set(row)))
            if v in row:
                raise InvalidParameter(f"self-loop at vertex {v}")
            if row and not (0 <= row[0] and row[-1] < n):
                raise InvalidParameter(f"neighbour of {v} out of range")
            rows.append(row)
        self.neighbors: tuple[tuple[int, ...], ...] = tuple(rows)
        for v, row in enumerate(self.neighbors):
            for w in row:
                if v not in self._nbr_sets[w]:
                    raise InvalidParameter(f"adjacency not symmetric at ({v}, {w})")
        if labels is None:
            labels = [(None, v) for v in range(n)]
        labels = tuple((None if s is None else int(s), int(x)) for s, x in labels)
        if len(labels) != n:
            raise InvalidParameter("one label per vertex required")
        if len(set(labels)) != n:
            raise InvalidParameter("vertex labels must be distinct")
        self.labels: tuple[tuple[int | None, int], ...] = labels
        self.meta = meta
        self.group_descriptor = group_descriptor

    @classmethod
    def from_edges(cls, n: int, edges, labels=None, meta: str = "", group_descriptor=None):
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise InvalidParameter(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(nbrs, labels, meta, group_descriptor)

    @cached_property
    def _nbr_sets(self):
        return tuple(frozenset(r) for r in self.neighbors)

    @cached_property
    def bits(self) -> tuple[int, ...]:
        out = []
        for row in self.neighbors:
            b = 0
            for w in row:
                b |= 1 << w
            out.append(b)
        return tuple(out)

    @property
    def n(self) -> int:
        return len(self.neighbors)

    vertex_count = n

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def degrees(self) -> list[int]:
        return [len(r) for r in self.neighbors]

    def edges(self):
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.neighbors):
            for v in row:
                if v > u:
                    yield u, v

    @cached_property
    def edge_count(self) -> int:
        return sum(len(r) for r in self.neighbors) // 2

    def index_of(self, side, element) -> int:
        return self._label_index[(side, element)]

    @cached_property
    def _label_index(self):
        return {lab: i for i, lab in enumerate(self.labels)}

    def is_bipartitioned(self) -> bool:
        return self.n > 0 and all(s in (0, 1) for s, _ in self.labels)

    def side_vertices(self, side: int) -> list[int]:
        return [v for v, (s, _) in enumerate(self.labels) if s == side]

    def induced(self, vertices, meta: str | None = None) -> "LabeledGraph":
        vertices = list(vertices)
        pos = {v: i for i, v in enumerate(vertices)}
        nbrs = [[pos[w] for w in self.neighbors[v] if w in pos] for v in vertices]
        labels = [self.labels[v] for v in vertices]
        return LabeledGraph(nbrs, labels, self.meta if meta is None else meta, self.group_descriptor)

    def complement(self) -> "LabeledGraph":
        n = self.n
        nbrs = [[w for w in range(n) if w != v and w not in self._nbr_sets[v]] for v in range(n)]
        return LabeledGraph(nbrs, self.labels, f"complement({self.meta})", self.group_descriptor)

    def same_structure(self, other: "LabeledGraph") -> bool:
        return self.labels == other.labels and self.neighbors == other.neighbors

    def __eq__(self, other):
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self.same_structure(other) and self.meta == other.meta \
            and self.group_descriptor == other.group_descriptor

    __hash__ = None

    def __repr__(self):
        return f"<LabeledGraph n={self.n} m={self.edge_count} {self.meta!r}>"


def cayley_graph(g: FiniteGroup, s: ConnectionSet | set | frozenset) -> LabeledGraph:
    """Cay(G, S): x ~ y iff x*y^-1 in S."""
    if not isinstance(s, ConnectionSet):
        s = ConnectionSet(frozenset(s), "S1")
    if s.role == "S3":
        s = ConnectionSet(s.elements, "S1")
    s.validate(g)
    nbrs = [set() for _ in range(g.order)]
    for y in g.elements():
        for t in s.elements:
            x = g.multiply(t, y)
            nbrs[x].add(y)
            nbrs[y].add(x)
    return LabeledGraph(nbrs, None, f"Cay({g.description}; {sorted(s.elements)})", g.description)


@dataclass(frozen=True)
class BiCayleySpec:
    group: FiniteGroup
    s1: ConnectionSet
    s2: ConnectionSet
    s3: ConnectionSet

    def __post_init__(self):
        for cs, role in ((self.s1, "S1"), (self.s2, "S2"), (self.s3, "S3")):
            if not isinstance(cs, ConnectionSet):
                object.__setattr__(self, role.lower(), ConnectionSet(frozenset(cs), role))
        for cs in (self.s1, self.s2, self.s3):
            if not cs.elements:
                raise InvalidConnectionSet(f"{cs.role} must be nonempty")
            cs.validate(self.group)

    @classmethod
    def from_sets(cls, group, s1, s2, s3):
        return cls(group, ConnectionSet(frozenset(s1), "S1"), ConnectionSet(frozenset(s2), "S2"),
                   ConnectionSet(frozenset(s3), "S3"))


def bicayley_graph(spec: BiCayleySpec) -> LabeledGraph:
    """BiCay(G; S1, S2, S3) on {0,1} x G.

    (0,x)~(0,y) iff xy^-1 in S1, (1,x)~(1,y) iff xy^-1 in S2, and
    (0,x)~(1,y) iff xy^-1 in S3 with x taken from side 0.
    """
    g = spec.group
    n = g.order
    nbrs = [set() for _ in range(2 * n)]
    for y in g.elements():
        for t in spec.s1.elements:
            x = g.multiply(t, y)
            nbrs[x].add(y)
            nbrs[y].add(x)
        for t in spec.s2.elements:
            x = g.multiply(t, y)
            nbrs[n + x].add(n + y)
            nbrs[n + y].add(n + x)
        for t in spec.s3.elements:
            x = g.multiply(t, y)
            nbrs[x].add(n + y)
            nbrs[n + y].add(x)
    labels = [(0, x) for x in range(n)] + [(1, x) for x in range(n)]
    meta = (f"BiCay({g.description}; S1={sorted(spec.s1.elements)}, "
            f"S2={sorted(spec.s2.elements)}, S3={sorted(spec.s3.elements)})")
    return LabeledGraph(nbrs, labels, meta, g.description)


def side_subgraph(g: LabeledGraph, side: int) -> LabeledGraph:
    if side not in (0, 1):
        raise InvalidParameter(f"side must be 0 or 1, got {side!r}")
    if not g.is_bipartitioned():
        raise InvalidParameter("graph is not bi-partitioned into sides 0 and 1")
    verts = sorted(g.side_vertices(side), key=lambda v: g.labels[v][1])
    return g.induced(verts, meta=f"side{side}({g.meta})")


def cross_edge_subgraph(g: LabeledGraph) -> LabeledGraph:
    if not g.is_bipartitioned():
        raise InvalidParameter("graph is not bi-partitioned into sides 0 and 1")
    side = [s for s, _ in g.labels]
    nbrs = [[w for w in row if side[w] != side[v]] for v, row in enumerate(g.neighbors)]
    return LabeledGraph(nbrs, g.labels, f"cross({g.meta})", g.group_descriptor)


def empty_graph(n: int) -> LabeledGraph:
    return LabeledGraph([()] * n, None, f"empty({n})")


def complete_graph(n: int) -> LabeledGraph:
    return LabeledGraph([[w for w in range(n) if w != v] for v in range(n)], None, f"K{n}")


def cycle_graph(n: int) -> LabeledGraph:
    if n < 3:
        raise InvalidParameter("a cycle needs at least 3 vertices")
    return LabeledGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], meta=f"C{n}")


def path_graph(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)], meta=f"P{n}")


def complete_multipartite(part_sizes) -> LabeledGraph:
    part_sizes = list(part_sizes)
    if not part_sizes or any(s < 1 for s in part_sizes):
        raise InvalidParameter("need at least one part, all sizes positive")
    part = [i for i, s in enumerate(part_sizes) for _ in range(s)]
    n = len(part)
    nbrs = [[w for w in range(n) if part[w] != part[v]] for v in range(n)]
    return LabeledGraph(nbrs, None, "K_{" + ",".join(map(str, part_sizes)) + "}")


def cartesian_product(a: LabeledGraph, b: LabeledGraph) -> LabeledGraph:
    """Vertex ``(u, v)`` has index ``u*|b| + v``."""
    nb = b.n
    nbrs = []
    for u in range(a.n):
        for v in range(nb):
            row = [u * nb + w for w in b.neighbors[v]]
            row += [x * nb + v for x in a.neighbors[u]]
            nbrs.append(row)
    return LabeledGraph(nbrs, None, f"({a.meta}) [] ({b.meta})")


def random_graph(n: int, p: float, seed: int) -> LabeledGraph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return LabeledGraph.from_edges(n, edges, meta=f"gnp({n},{p},seed={seed})")


@dataclass(frozen=True)
class IsoWitness:
    """``mapping[v]`` is the image in the second graph of vertex ``v``."""
    mapping: tuple[int, ...]
    nodes: int = field(default=0, compare=False)


def check_isomorphism(a: LabeledGraph, b: LabeledGraph, mapping) -> bool:
    """Independent all-pairs check that ``mapping`` is an isomorphism a -> b."""
    n = a.n
    if b.n != n or len(mapping) != n or sorted(mapping) != list(range(n)):
        return False
    for u in range(n):
        fu = mapping[u]
        for v in range(u + 1, n):
            if a.has_edge(u, v) != b.has_edge(fu, mapping[v]):
                return False
    return True


def _refine(nbrs, colors):
    """Colour refinement to the coarsest equitable partition above ``colors``."""
    ncls = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in nbrs[v]))) for v in range(len(nbrs))]
        ids = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ids[s] for s in sigs]
        if len(ids) == ncls:
            return new
        colors, ncls = new, len(ids)


def are_isomorphic(a: LabeledGraph, b: LabeledGraph, cap: int = ISO_CAP,
                   node_limit: int = 1_000_000) -> IsoWitness | None:
    """Isomorphism by joint colour refinement plus individualisation search.

    Both graphs are refined as one disjoint union so colour classes are
    comparable; a class split unevenly between the two sides prunes the
    branch. Returns a verified witness, or None once the search has ruled
    every branch out.
    """
    if a.n > cap or b.n > cap:
        raise BudgetExceeded(f"isomorphism test limited to {cap} vertices")
    if a.n != b.n or a.edge_count != b.edge_count:
        return None
    if sorted(a.degrees()) != sorted(b.degrees()):
        return None
    n = a.n
    if n == 0:
        return IsoWitness(())
    nbrs = [list(r) for r in a.neighbors] + [[w + n for w in r] for r in b.neighbors]
    nodes = 0

    def balanced(colors):
        return Counter(colors[:n]) == Counter(colors[n:])

    def search(colors):
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise BudgetExceeded(f"isomorphism search exceeded {node_limit} nodes")
        if not balanced(colors):
            return None
        sizes = Counter(colors[:n])
        cells = [c for c, k in sizes.items() if k > 1]
        if not cells:
            where = {colors[n + w]: w for w in range(n)}
            mapping = tuple(where[colors[v]] for v in range(n))
            return mapping if check_isomorphism(a, b, mapping) else None
        target = min(cells, key=lambda c: (sizes[c], c))
        v = min(x for x in range(n) if colors[x] == target)
        fresh = max(colors) + 1
        for w in range(n, 2 * n):
            if colors[w] != target:
                continue
            trial = list(colors)
            trial[v] = fresh
            trial[w] = fresh
            found = search(_refine(nbrs, trial))
            if found is not None:
                return found
        return None

    mapping = search(_refine(nbrs, [0] * (2 * n)))
    return None if mapping is None else IsoWitness(mapping, nodes)
