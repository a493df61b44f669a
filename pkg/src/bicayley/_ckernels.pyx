# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled search kernels; mirrors ``_kernels_py`` call for call.

Adjacency is held as packed 64-bit bitsets (``n`` rows of ``W`` words).
"""
from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy, memset
from time import perf_counter

BACKEND = "cython"

cdef enum:
    CHECK_EVERY = 1024

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef int _csr(object nbrs, int **offsets, int **targets) except -1:
    cdef int n = len(nbrs)
    cdef int total = 0
    cdef int i, j
    for row in nbrs:
        total += len(row)
    offsets[0] = <int *> malloc((n + 1) * sizeof(int))
    targets[0] = <int *> malloc((total + 1) * sizeof(int))
    if offsets[0] == NULL or targets[0] == NULL:
        raise MemoryError()
    j = 0
    for i in range(n):
        offsets[0][i] = j
        for w in nbrs[i]:
            targets[0][j] = w
            j += 1
    offsets[0][n] = j
    return 0


cdef void _bfs(int n, int *off, int *tgt, int source, int *dist, int *queue) nogil:
    cdef int head = 0, tail = 0, u, w, e
    for u in range(n):
        dist[u] = -1
    dist[source] = 0
    queue[tail] = source
    tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        for e in range(off[u], off[u + 1]):
            w = tgt[e]
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue[tail] = w
                tail += 1


def bfs_row(nbrs, int source):
    cdef int n = len(nbrs)
    cdef int *off = NULL
    cdef int *tgt = NULL
    cdef int *dist = <int *> malloc((n + 1) * sizeof(int))
    cdef int *queue = <int *> malloc((n + 1) * sizeof(int))
    try:
        _csr(nbrs, &off, &tgt)
        _bfs(n, off, tgt, source, dist, queue)
        return [dist[i] for i in range(n)]
    finally:
        free(off); free(tgt); free(dist); free(queue)


def all_pairs(nbrs):
    cdef int n = len(nbrs)
    cdef int *off = NULL
    cdef int *tgt = NULL
    cdef int *dist = <int *> malloc((n + 1) * sizeof(int))
    cdef int *queue = <int *> malloc((n + 1) * sizeof(int))
    cdef int s
    out = []
    try:
        _csr(nbrs, &off, &tgt)
        for s in range(n):
            _bfs(n, off, tgt, s, dist, queue)
            out.append([dist[i] for i in range(n)])
        return out
    finally:
        free(off); free(tgt); free(dist); free(queue)


def girth(nbrs):
    """Shortest cycle length, or 0 when the graph is a forest."""
    cdef int n = len(nbrs)
    cdef int *off = NULL
    cdef int *tgt = NULL
    cdef int *dist = <int *> malloc((n + 1) * sizeof(int))
    cdef int *parent = <int *> malloc((n + 1) * sizeof(int))
    cdef int *queue = <int *> malloc((n + 1) * sizeof(int))
    cdef int best = 0, root, head, tail, u, w, e, cyc
    try:
        _csr(nbrs, &off, &tgt)
        with nogil:
            for root in range(n):
                for u in range(n):
                    dist[u] = -1
                dist[root] = 0
                parent[root] = -1
                head = 0
                tail = 1
                queue[0] = root
                while head < tail:
                    u = queue[head]
                    head += 1
                    if best and 2 * dist[u] + 1 >= best:
                        break
                    for e in range(off[u], off[u + 1]):
                        w = tgt[e]
                        if dist[w] < 0:
                            dist[w] = dist[u] + 1
                            parent[w] = u
                            queue[tail] = w
                            tail += 1
                        elif w != parent[u]:
                            cyc = dist[u] + dist[w] + 1
                            if not best or cyc < best:
                                best = cyc
                if best == 3:
                    break
        return best
    finally:
        free(off); free(tgt); free(dist); free(parent); free(queue)


cdef struct CliqueState:
    int n
    int W
    uint64_t *adj
    int best
    int *best_clique
    int *clique
    int size
    long long nodes
    long long node_limit
    double deadline
    int stopped


cdef int _check_budget(CliqueState *st) except -1:
    if st.node_limit and st.nodes >= st.node_limit:
        st.stopped = 1
    elif st.deadline > 0 and perf_counter() >= st.deadline:
        st.stopped = 1
    return 0


cdef int _expand(CliqueState *st, uint64_t *P) except -1:
    cdef int W = st.W
    cdef int i, w, v, k, kmin, cnt, m
    cdef uint64_t x
    cdef uint64_t *adjv
    st.nodes += 1
    if st.nodes % CHECK_EVERY == 0:
        _check_budget(st)
    if st.stopped:
        return 0
    cnt = 0
    for w in range(W):
        cnt += __builtin_popcountll(P[w])
    # one block: U, Q, newP (3W words) then order and colour arrays
    cdef uint64_t *buf = <uint64_t *> malloc((3 * W) * sizeof(uint64_t) + 2 * (cnt + 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef uint64_t *U = buf
    cdef uint64_t *Q = buf + W
    cdef uint64_t *newP = buf + 2 * W
    cdef int *order = <int *> (buf + 3 * W)
    cdef int *colors = order + (cnt + 1)
    cdef int any_left, nonempty
    try:
        kmin = st.best - st.size + 1
        if kmin < 1:
            kmin = 1
        memcpy(U, P, W * sizeof(uint64_t))
        m = 0
        k = 0
        any_left = cnt > 0
        while any_left:
            k += 1
            memcpy(Q, U, W * sizeof(uint64_t))
            w = 0
            while w < W:
                if Q[w] == 0:
                    w += 1
                    continue
                v = w * 64 + __builtin_ctzll(Q[w])
                x = (<uint64_t> 1) << (v & 63)
                U[w] &= ~x
                Q[w] &= ~x
                adjv = st.adj + v * W
                for i in range(w, W):
                    Q[i] &= ~adjv[i]
                if k >= kmin:
                    order[m] = v
                    colors[m] = k
                    m += 1
            any_left = 0
            for w in range(W):
                if U[w]:
                    any_left = 1
                    break
        for i in range(m - 1, -1, -1):
            if st.size + colors[i] <= st.best or st.stopped:
                return 0
            v = order[i]
            st.clique[st.size] = v
            st.size += 1
            adjv = st.adj + v * W
            nonempty = 0
            for w in range(W):
                newP[w] = P[w] & adjv[w]
                if newP[w]:
                    nonempty = 1
            if nonempty:
                _expand(st, newP)
            elif st.size > st.best:
                st.best = st.size
                memcpy(st.best_clique, st.clique, st.size * sizeof(int))
            st.size -= 1
            P[v >> 6] &= ~((<uint64_t> 1) << (v & 63))
        return 0
    finally:
        free(buf)


def max_clique(nbrs, int lower=0, long long node_limit=0, double time_limit=0.0):
    """Branch-and-bound maximum clique; see ``_kernels_py.max_clique``."""
    cdef int n = len(nbrs)
    cdef int W = (n + 63) // 64 if n else 1
    cdef CliqueState st
    cdef uint64_t *P
    cdef int i, best_size
    st.n = n
    st.W = W
    st.adj = <uint64_t *> calloc(<size_t> n * W + 1, sizeof(uint64_t))
    st.best_clique = <int *> malloc((n + 1) * sizeof(int))
    st.clique = <int *> malloc((n + 1) * sizeof(int))
    P = <uint64_t *> calloc(W, sizeof(uint64_t))
    if st.adj == NULL or st.best_clique == NULL or st.clique == NULL or P == NULL:
        free(st.adj); free(st.best_clique); free(st.clique); free(P)
        raise MemoryError()
    try:
        for i in range(n):
            for w in nbrs[i]:
                st.adj[i * W + (w >> 6)] |= (<uint64_t> 1) << (w & 63)
            P[i >> 6] |= (<uint64_t> 1) << (i & 63)
        st.best = lower
        st.size = 0
        st.nodes = 0
        st.node_limit = node_limit
        st.deadline = perf_counter() + time_limit if time_limit > 0 else 0.0
        st.stopped = 0
        best_size = lower
        if n:
            _expand(&st, P)
        clique = [st.best_clique[i] for i in range(st.best)] if st.best > best_size else []
        return clique, not st.stopped, st.nodes
    finally:
        free(st.adj); free(st.best_clique); free(st.clique); free(P)


cdef int _pick(int n, int *color, uint64_t *dom, int *degree) nogil:
    cdef int v, best_v = -1, pc, best_pc = 65, best_deg = -1
    for v in range(n):
        if color[v] >= 0:
            continue
        pc = __builtin_popcountll(dom[v])
        if pc < best_pc or (pc == best_pc and degree[v] > best_deg):
            best_v = v
            best_pc = pc
            best_deg = degree[v]
            if pc == 1:
                break
    return best_v


def k_color(nbrs, int k, precolored, long long node_limit=0, double time_limit=0.0):
    """k-colourability by saturation-ordered backtracking; see ``_kernels_py.k_color``."""
    cdef int n = len(nbrs)
    if k > 64:
        from bicayley import _kernels_py
        return _kernels_py.k_color(nbrs, k, precolored, node_limit, time_limit)
    if len(precolored) > k:
        return 0, [], 0
    cdef int *off = NULL
    cdef int *tgt = NULL
    _csr(nbrs, &off, &tgt)
    cdef uint64_t full = (~(<uint64_t> 0)) if k == 64 else (((<uint64_t> 1) << k) - 1)
    cdef uint64_t *dom = <uint64_t *> malloc((n + 1) * sizeof(uint64_t))
    cdef int *color = <int *> malloc((n + 1) * sizeof(int))
    cdef int *degree = <int *> malloc((n + 1) * sizeof(int))
    # frames: vertex, colour in place, trail mark, used-before; plus untried colours
    cdef int *fv = <int *> malloc((n + 1) * sizeof(int))
    cdef int *fc = <int *> malloc((n + 1) * sizeof(int))
    cdef int *fmark = <int *> malloc((n + 1) * sizeof(int))
    cdef int *fused = <int *> malloc((n + 1) * sizeof(int))
    cdef uint64_t *fallowed = <uint64_t *> malloc((n + 1) * sizeof(uint64_t))
    cdef int *trail = <int *> malloc((off[n] + 1) * sizeof(int))
    cdef int v, u, c, e, w, top, ntrail = 0, remaining, used, ok, status = 0
    cdef long long nodes = 0
    cdef uint64_t low, allowed
    cdef double deadline = perf_counter() + time_limit if time_limit > 0 else 0.0
    try:
        for v in range(n):
            dom[v] = full
            color[v] = -1
            degree[v] = off[v + 1] - off[v]
        for c, pv in enumerate(precolored):
            v = pv
            if not (dom[v] >> c) & 1:
                return 0, [], 0
            color[v] = c
            for e in range(off[v], off[v + 1]):
                dom[tgt[e]] &= ~((<uint64_t> 1) << c)
        for v in range(n):
            if color[v] < 0 and dom[v] == 0:
                return 0, [], 0
        remaining = n - len(precolored)
        if remaining == 0:
            return 1, [color[i] for i in range(n)], 0
        used = len(precolored)
        top = 0
        v = _pick(n, color, dom, degree)
        fv[0] = v
        fc[0] = -1
        fmark[0] = 0
        fused[0] = used
        fallowed[0] = dom[v] & (full if used + 1 >= k else (((<uint64_t> 1) << (used + 1)) - 1))
        while top >= 0:
            v = fv[top]
            c = fc[top]
            if c >= 0:
                low = (<uint64_t> 1) << c
                while ntrail > fmark[top]:
                    ntrail -= 1
                    dom[trail[ntrail]] |= low
                color[v] = -1
                remaining += 1
                fc[top] = -1
            allowed = fallowed[top]
            if not allowed:
                top -= 1
                continue
            nodes += 1
            if nodes % CHECK_EVERY == 0:
                if (node_limit and nodes >= node_limit) or (deadline > 0 and perf_counter() >= deadline):
                    status = -1
                    break
            c = __builtin_ctzll(allowed)
            low = (<uint64_t> 1) << c
            fallowed[top] = allowed & ~low
            fc[top] = c
            fmark[top] = ntrail
            color[v] = c
            remaining -= 1
            ok = 1
            for e in range(off[v], off[v + 1]):
                w = tgt[e]
                if color[w] < 0 and (dom[w] & low):
                    dom[w] &= ~low
                    trail[ntrail] = w
                    ntrail += 1
                    if not dom[w]:
                        ok = 0
                        break
            if not ok:
                continue
            if remaining == 0:
                status = 1
                break
            used = fused[top] + 1 if c == fused[top] else fused[top]
            u = _pick(n, color, dom, degree)
            top += 1
            fv[top] = u
            fc[top] = -1
            fmark[top] = ntrail
            fused[top] = used
            fallowed[top] = dom[u] & (full if used + 1 >= k else (((<uint64_t> 1) << (used + 1)) - 1))
        if status == 1:
            return 1, [color[i] for i in range(n)], nodes
        return status, [], nodes
    finally:
        free(off); free(tgt); free(dom); free(color); free(degree)
        free(fv); free(fc); free(fmark); free(fused); free(fallowed); free(trail)
