"""Explicit colourings, cliques and independent sets for the order-defined
Bi-Cayley graph over Z_{p^2 q^2}.

Vertex conventions follow :func:`bicayley.graph.bicayley_graph`: in the
side graphs vertex ``x`` is the group element ``x``; in the full graph
``(side, x)`` is vertex ``side*n + x``. Elements are read in CRT
coordinates ``(x mod p^2, x mod q^2)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from bicayley.errors import InvalidParameter
from bicayley.graph import BiCayleySpec, LabeledGraph, bicayley_graph, side_subgraph
from bicayley.groups import (CrtCoordinates, CyclicGroup, Subgroup, crt_merge, crt_split,
                             make_cyclic, preset_connection_sets, subgroup_closure)
from bicayley.invariants import Certificate, coloring_certificate, vertex_set_certificate


@dataclass(frozen=True)
class P2Q2Context:
    p: int
    q: int

    def __post_init__(self):
        preset_connection_sets(self.p, self.q)  # validates the primes

    @property
    def n(self) -> int:
        return self.p ** 2 * self.q ** 2

    @property
    def k(self) -> int:
        return max(self.p, self.q)

    @property
    def m(self) -> int:
        return min(self.p, self.q)

    @cached_property
    def group(self) -> CyclicGroup:
        return make_cyclic(self.n)

    def _subgroup(self, order) -> Subgroup:
        return subgroup_closure(self.group, [self.n // order])

    @cached_property
    def K_p(self) -> Subgroup:
        return self._subgroup(self.p)

    @cached_property
    def K_q(self) -> Subgroup:
        return self._subgroup(self.q)

    @cached_property
    def H_p(self) -> Subgroup:
        return self._subgroup(self.p ** 2)

    @cached_property
    def H_q(self) -> Subgroup:
        return self._subgroup(self.q ** 2)

    @cached_property
    def spec(self) -> BiCayleySpec:
        s1, s2, s3 = preset_connection_sets(self.p, self.q)
        return BiCayleySpec(self.group, s1, s2, s3)

    @cached_property
    def graph(self) -> LabeledGraph:
        return bicayley_graph(self.spec)

    @cached_property
    def gamma0(self) -> LabeledGraph:
        return side_subgraph(self.graph, 0)

    @cached_property
    def gamma1(self) -> LabeledGraph:
        return side_subgraph(self.graph, 1)

    def split(self, x: int) -> tuple[int, int]:
        c = crt_split(self.p, self.q, x)
        return c.p_part, c.q_part

    def merge(self, p_part: int, q_part: int) -> int:
        return crt_merge(CrtCoordinates(self.p, self.q, p_part % self.p ** 2, q_part % self.q ** 2))


def component_index(ctx: P2Q2Context, x: int) -> tuple[int, int]:
    """Index ``(i, j)`` of the side-0 component containing element ``x``."""
    gp, gq = ctx.split(x)
    return gp % ctx.p, gq % ctx.q


def zeta(ctx: P2Q2Context, base: tuple[int, int], a: int, b: int) -> int:
    """Element at K_p [] K_q coordinates ``(a, b)`` in the component of ``base``."""
    gp, gq = base
    return ctx.merge(gp + a * ctx.p, gq + b * ctx.q)


def c0_color(ctx: P2Q2Context, x: int) -> int:
    """floor(x / (k m^2)) mod k, with k the larger and m the smaller prime."""
    return (x // (ctx.k * ctx.m ** 2)) % ctx.k


def col_color(ctx: P2Q2Context, x: int) -> int:
    """((x_p mod p) + (x_q mod q)) mod k on CRT coordinates."""
    gp, gq = ctx.split(x)
    return (gp % ctx.p + gq % ctx.q) % ctx.k


def gamma0_coloring(ctx: P2Q2Context) -> Certificate:
    return coloring_certificate(c0_color(ctx, x) for x in range(ctx.n))


def gamma1_coloring(ctx: P2Q2Context) -> Certificate:
    return coloring_certificate(col_color(ctx, x) for x in range(ctx.n))


def full_coloring(ctx: P2Q2Context) -> Certificate:
    """Side 1 keeps ``col``; side 0 keeps ``c0`` except where it clashes with
    its matching partner, which gets the extra colour ``k``."""
    side0 = []
    for x in range(ctx.n):
        c = c0_color(ctx, x)
        side0.append(ctx.k if c == col_color(ctx, x) else c)
    side1 = [col_color(ctx, x) for x in range(ctx.n)]
    return coloring_certificate(side0 + side1)


def clique_t(ctx: P2Q2Context, r: int = 0, alpha: int = 0) -> Certificate:
    """Clique of Gamma_0 inside one slice: the larger prime's coordinate runs
    through ``r, r+l, ..., r+(l-1)l`` (mod l^2) with the other coordinate ``alpha``."""
    el = ctx.k
    if el == ctx.p:
        verts = [ctx.merge(r + j * el, alpha) for j in range(el)]
    else:
        verts = [ctx.merge(alpha, r + j * el) for j in range(el)]
    return vertex_set_certificate("clique", verts)


def clique_r(ctx: P2Q2Context, alpha: int = 0) -> Certificate:
    """Clique of Gamma_1: the larger prime's coordinate takes 0..l-1."""
    el = ctx.k
    if el == ctx.p:
        verts = [ctx.merge(i, alpha) for i in range(el)]
    else:
        verts = [ctx.merge(alpha, j) for j in range(el)]
    return vertex_set_certificate("clique", verts)


def coset_clique(ctx: P2Q2Context, g: int) -> Certificate:
    """The coset g + K_l of the larger prime l; a clique of Gamma_0."""
    sub = ctx.K_p if ctx.k == ctx.p else ctx.K_q
    return vertex_set_certificate("clique", ((g + s) % ctx.n for s in sub.members))


def canonical_cliques(ctx: P2Q2Context) -> dict:
    return {"cliqueT": clique_t(ctx), "cliqueR": clique_r(ctx), "cosetClique": coset_clique(ctx, 0)}


@dataclass(frozen=True)
class CSet:
    i: int
    j: int
    vertices: tuple[int, ...]


def c_set(ctx: P2Q2Context, i: int, j: int) -> CSet:
    """Elements whose p-part is i mod p and q-part is j mod q."""
    if not (0 <= i < ctx.p and 0 <= j < ctx.q):
        raise InvalidParameter(f"C({i},{j}) needs 0 <= i < {ctx.p} and 0 <= j < {ctx.q}")
    verts = sorted(ctx.merge(i + ctx.p * a, j + ctx.q * b)
                   for a in range(ctx.p) for b in range(ctx.q))
    return CSet(i, j, tuple(verts))


def gamma1_independent_max(ctx: P2Q2Context) -> Certificate:
    verts = [v for i in range(ctx.m) for v in c_set(ctx, i, i).vertices]
    return vertex_set_certificate("independentSet", verts)


def diagonal_transversal(ctx: P2Q2Context, i: int, j: int) -> list[int]:
    """``min(p, q)`` pairwise non-adjacent vertices of the component (i, j)."""
    return [zeta(ctx, (i, j), a, a) for a in range(ctx.m)]


def gamma0_independent_max(ctx: P2Q2Context) -> Certificate:
    verts = [v for i in range(ctx.p) for j in range(ctx.q) for v in diagonal_transversal(ctx, i, j)]
    return vertex_set_certificate("independentSet", verts)


def joint_independent_max(ctx: P2Q2Context) -> Certificate:
    """Independent set of the whole graph of size 2pq*m - m^2.

    Side 1 takes the full blocks C(i,i), i < m. Side 0 takes a diagonal
    transversal in every other component, so no matching edge is used.
    """
    n = ctx.n
    side1 = [n + v for v in gamma1_independent_max(ctx).payload]
    side0 = [v for i in range(ctx.p) for j in range(ctx.q)
             if not (i == j and i < ctx.m)
             for v in diagonal_transversal(ctx, i, j)]
    return vertex_set_certificate("independentSet", side0 + side1)
