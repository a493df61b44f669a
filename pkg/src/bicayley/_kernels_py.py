"""Pure-Python search kernels.

Same signatures as the compiled ``_ckernels`` module; ``bicayley.kernels``
picks one at import time. Vertex sets are Python ints used as bitsets.
Inputs are plain neighbour lists with vertices numbered ``0..n-1``.
"""
from __future__ import annotations

import time
from collections import deque

BACKEND = "python"

# Budget is checked every CHECK_EVERY search nodes.
CHECK_EVERY = 1024


def bfs_row(nbrs, source):
    """Distances from ``source``; -1 marks unreachable vertices."""
    dist = [-1] * len(nbrs)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in nbrs[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def all_pairs(nbrs):
    return [bfs_row(nbrs, s) for s in range(len(nbrs))]


def girth(nbrs):
    """Shortest cycle length, or 0 when the graph is a forest."""
    n = len(nbrs)
    best = 0
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            # no cycle through root can beat best from here on
            if best and 2 * dist[u] + 1 >= best:
                break
            for w in nbrs[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cyc = dist[u] + dist[w] + 1
                    if not best or cyc < best:
                        best = cyc
        if best == 3:
            break
    return best


def _bits(nbrs):
    out = []
    for row in nbrs:
        b = 0
        for w in row:
            b |= 1 << w
        out.append(b)
    return out


def max_clique(nbrs, lower=0, node_limit=0, time_limit=0.0):
    """Branch-and-bound maximum clique with greedy colouring bounds.

    Vertices are expected to be pre-ordered by the caller (the search
    colours in index order). Returns ``(clique, exhaustive, nodes)``; the
    search only reports cliques strictly larger than ``lower``, so an empty
    clique with ``lower > 0`` means no improvement exists.
    """
    n = len(nbrs)
    adj = _bits(nbrs)
    best = [lower, []]
    nodes = 0
    deadline = time.perf_counter() + time_limit if time_limit > 0 else 0.0
    stopped = False
    clique = []

    def expand(P):
        nonlocal nodes, stopped
        nodes += 1
        if nodes % CHECK_EVERY == 0:
            if (node_limit and nodes >= node_limit) or (deadline and time.perf_counter() >= deadline):
                stopped = True
        if stopped:
            return
        size = len(clique)
        kmin = best[0] - size + 1
        if kmin < 1:
            kmin = 1
        order = []
        colors = []
        U = P
        k = 0
        while U:
            k += 1
            Q = U
            while Q:
                low = Q & -Q
                v = low.bit_length() - 1
                U ^= low
                Q &= ~adj[v]
                Q &= ~low
                if k >= kmin:
                    order.append(v)
                    colors.append(k)
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= best[0] or stopped:
                return
            v = order[i]
            clique.append(v)
            newP = P & adj[v]
            if newP:
                expand(newP)
            elif size + 1 > best[0]:
                best[0] = size + 1
                best[1] = list(clique)
            clique.pop()
            P &= ~(1 << v)

    if n:
        expand((1 << n) - 1)
    return best[1], not stopped, nodes


def k_color(nbrs, k, precolored, node_limit=0, time_limit=0.0):
    """Decide k-colourability by saturation-ordered backtracking.

    ``precolored`` is a clique whose i-th vertex is fixed to colour i; this
    breaks colour symmetry. Fresh colours are only opened in increasing
    order. Returns ``(status, colouring, nodes)`` with status 1 colourable,
    0 proven not colourable, -1 budget exhausted.
    """
    n = len(nbrs)
    if len(precolored) > k:
        return 0, [], 0
    full = (1 << k) - 1
    dom = [full] * n
    color = [-1] * n
    degree = [len(r) for r in nbrs]
    for c, v in enumerate(precolored):
        if not dom[v] >> c & 1:
            return 0, [], 0
        color[v] = c
        for w in nbrs[v]:
            dom[w] &= ~(1 << c)
    for v in range(n):
        if color[v] < 0 and dom[v] == 0:
            return 0, [], 0
    remaining = n - len(precolored)
    if remaining == 0:
        return 1, color, 0

    def pick():
        best_v, best_key = -1, None
        for v in range(n):
            if color[v] < 0:
                key = (dom[v].bit_count(), -degree[v])
                if best_key is None or key < best_key:
                    best_v, best_key = v, key
                    if key[0] == 1:
                        break
        return best_v

    deadline = time.perf_counter() + time_limit if time_limit > 0 else 0.0
    nodes = 0
    trail = []
    used = len(precolored)
    # frame: [vertex, untried colours, colour in place or -1, trail mark, used before]
    v = pick()
    stack = [[v, dom[v] & ((1 << min(used + 1, k)) - 1), -1, 0, used]]
    while stack:
        frame = stack[-1]
        v, allowed, c, mark, used_before = frame
        if c >= 0:
            low = 1 << c
            while len(trail) > mark:
                dom[trail.pop()] |= low
            color[v] = -1
            remaining += 1
            frame[2] = -1
        if not allowed:
            stack.pop()
            continue
        nodes += 1
        if nodes % CHECK_EVERY == 0:
            if (node_limit and nodes >= node_limit) or (deadline and time.perf_counter() >= deadline):
                return -1, [], nodes
        low = allowed & -allowed
        c = low.bit_length() - 1
        frame[1] = allowed ^ low
        frame[2] = c
        frame[3] = len(trail)
        color[v] = c
        remaining -= 1
        ok = True
        for w in nbrs[v]:
            if color[w] < 0 and dom[w] & low:
                dom[w] ^= low
                trail.append(w)
                if not dom[w]:
                    ok = False
                    break
        if not ok:
            continue
        if remaining == 0:
            return 1, list(color), nodes
        used = used_before + 1 if c == used_before else used_before
        u = pick()
        stack.append([u, dom[u] & ((1 << min(used + 1, k)) - 1), -1, 0, used])
    return 0, [], nodes
