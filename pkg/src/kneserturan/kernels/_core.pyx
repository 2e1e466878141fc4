# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled search kernels on 64-bit word bitsets.

Same contracts and identical tie-breaking rules as _pure.py; the dispatcher
in __init__.py only routes instances with n <= 64 (and k <= 64) here, so a
single machine word always suffices. Any semantic change must land in both
backends, and the parity tests compare them witness-for-witness.
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define KT_POPCNT(x) __builtin_popcountll(x)
    #define KT_CTZ(x) __builtin_ctzll(x)
    #define KT_TOPBIT(x) (63 - __builtin_clzll(x))
    #else
    static int KT_POPCNT(unsigned long long x){int c=0;while(x){x&=x-1;++c;}return c;}
    static int KT_CTZ(unsigned long long x){int c=0;while(!(x&1ULL)){x>>=1;++c;}return c;}
    static int KT_TOPBIT(unsigned long long x){int c=-1;while(x){x>>=1;++c;}return c;}
    #endif
    """
    int KT_POPCNT(unsigned long long x)
    int KT_CTZ(unsigned long long x)
    int KT_TOPBIT(unsigned long long x)

ctypedef unsigned long long u64


cdef inline u64 _low_bits(int b):
    # all-ones below bit b, safe at b >= 64 where a plain shift would be UB
    if b >= 64:
        return <u64>0xFFFFFFFFFFFFFFFF
    if b <= 0:
        return 0
    return ((<u64>1) << b) - 1


# --- maximum independent set ---

cdef struct MisCtx:
    int n
    int m
    u64 *edges
    int best_size
    u64 best_mask


cdef void _mis_rec(MisCtx *ctx, u64 chosen, u64 cand):
    cdef u64 joint = chosen | cand
    cdef int total = KT_POPCNT(joint)
    if total <= ctx.best_size:
        return
    cdef int found = 0
    cdef u64 pick = 0
    cdef int pick_t = ctx.n + 1
    cdef int i, t
    cdef u64 e, rest, bit, forced
    for i in range(ctx.m):
        e = ctx.edges[i]
        if e & ~joint:
            continue
        t = KT_POPCNT(e & ~chosen)
        if t == 0:
            return
        if t < pick_t:
            pick = e
            pick_t = t
            found = 1
            if t == 1:
                break
    if not found:
        ctx.best_size = total
        ctx.best_mask = joint
        return
    forced = 0
    rest = pick & ~chosen
    while rest:
        bit = rest & (0 - rest)
        _mis_rec(ctx, chosen | forced, cand & ~(forced | bit))
        forced |= bit
        rest ^= bit


def max_independent_set(int n, edge_masks):
    """Largest vertex set containing no edge entirely; returns (size, mask)."""
    cdef u64 full = _low_bits(n)
    uniq = sorted(set(int(e) for e in edge_masks))
    if any(e == 0 for e in uniq):
        raise ValueError("empty edge mask")
    edges = [e for e in uniq if not any(f != e and (f & ~e) == 0 for f in uniq)]
    if not edges or n == 0:
        return n, full

    cdef MisCtx ctx
    ctx.n = n
    ctx.m = len(edges)
    ctx.edges = <u64 *>malloc(ctx.m * sizeof(u64))
    if ctx.edges == NULL:
        raise MemoryError()
    cdef int i
    for i in range(ctx.m):
        ctx.edges[i] = <u64>edges[i]
    ctx.best_size = 0
    ctx.best_mask = 0
    try:
        _mis_rec(&ctx, 0, <u64>full)
    finally:
        free(ctx.edges)
    return ctx.best_size, int(ctx.best_mask)


# --- graph coloring decision ---

cdef struct GcCtx:
    int n
    int k
    u64 kmask
    u64 *adj
    int *color
    u64 *forbid
    int uncolored
    int max_used


cdef int _gc_select(GcCtx *ctx, u64 cap_mask):
    cdef int best_v = -1
    cdef int best_cnt = 1 << 30
    cdef int v, cnt
    for v in range(ctx.n):
        if ctx.color[v] >= 0:
            continue
        cnt = KT_POPCNT(cap_mask & ~ctx.forbid[v])
        if cnt < best_cnt:
            best_v = v
            best_cnt = cnt
            if cnt == 0:
                break
    return best_v


cdef int _gc_rec(GcCtx *ctx):
    if ctx.uncolored == 0:
        return 1
    cdef u64 cap_mask = ctx.kmask & _low_bits(ctx.max_used + 2)
    cdef int v = _gc_select(ctx, cap_mask)
    cdef u64 usable = cap_mask & ~ctx.forbid[v]
    if usable == 0:
        return 0
    cdef int old_max = ctx.max_used
    cdef int touched[64]
    cdef int n_touched, c, u
    cdef u64 rest = usable, bit, nbrs
    while rest:
        c = KT_CTZ(rest)
        rest &= rest - 1
        bit = (<u64>1) << c
        ctx.color[v] = c
        ctx.uncolored -= 1
        if c > ctx.max_used:
            ctx.max_used = c
        n_touched = 0
        nbrs = ctx.adj[v]
        while nbrs:
            u = KT_CTZ(nbrs)
            nbrs &= nbrs - 1
            if ctx.color[u] < 0 and not (ctx.forbid[u] & bit):
                ctx.forbid[u] |= bit
                touched[n_touched] = u
                n_touched += 1
        if _gc_rec(ctx):
            return 1
        for u in range(n_touched):
            ctx.forbid[touched[u]] &= ~bit
        ctx.uncolored += 1
        ctx.color[v] = -1
        ctx.max_used = old_max
    return 0


def graph_color_decision(int n, adj, int k, clique=()):
    """Proper k-coloring of a simple graph as a tuple, or None."""
    if n == 0:
        return ()
    if k <= 0 or len(clique) > k:
        return None

    cdef GcCtx ctx
    ctx.n = n
    ctx.k = k
    ctx.kmask = _low_bits(k)
    ctx.adj = <u64 *>malloc(n * sizeof(u64))
    ctx.color = <int *>malloc(n * sizeof(int))
    ctx.forbid = <u64 *>malloc(n * sizeof(u64))
    if ctx.adj == NULL or ctx.color == NULL or ctx.forbid == NULL:
        free(ctx.adj); free(ctx.color); free(ctx.forbid)
        raise MemoryError()
    cdef int i, c, v, u
    cdef u64 nbrs
    for i in range(n):
        ctx.adj[i] = <u64>adj[i]
        ctx.color[i] = -1
        ctx.forbid[i] = 0
    ctx.uncolored = n
    ctx.max_used = -1
    for c, py_v in enumerate(clique):
        v = py_v
        ctx.color[v] = c
        ctx.uncolored -= 1
        ctx.max_used = c
        nbrs = ctx.adj[v]
        while nbrs:
            u = KT_CTZ(nbrs)
            nbrs &= nbrs - 1
            ctx.forbid[u] |= (<u64>1) << c
    try:
        if _gc_rec(&ctx):
            return tuple(ctx.color[i] for i in range(n))
        return None
    finally:
        free(ctx.adj)
        free(ctx.color)
        free(ctx.forbid)


# --- hypergraph coloring decision ---

cdef struct HcCtx:
    int n
    int m
    u64 kmask
    u64 *edges
    int *inc_start   # CSR offsets, length n + 1
    int *inc_idx
    int *color
    u64 *forbid
    int *rem
    u64 *present
    u64 uncolored_mask
    int uncolored
    int max_used
    # per-depth trail arena, stride = max incidence degree
    int stride
    int *et_edge
    int *et_rem
    u64 *et_pres
    int *ft_u
    u64 *ft_bits


cdef int _hc_select(HcCtx *ctx, u64 cap_mask):
    cdef int best_v = -1
    cdef int best_cnt = 1 << 30
    cdef int v, cnt
    for v in range(ctx.n):
        if ctx.color[v] >= 0:
            continue
        cnt = KT_POPCNT(cap_mask & ~ctx.forbid[v])
        if cnt < best_cnt:
            best_v = v
            best_cnt = cnt
            if cnt == 0:
                break
    return best_v


cdef int _hc_rec(HcCtx *ctx, int depth):
    if ctx.uncolored == 0:
        return 1
    cdef u64 cap_mask = ctx.kmask & _low_bits(ctx.max_used + 2)
    cdef int v = _hc_select(ctx, cap_mask)
    cdef u64 usable = cap_mask & ~ctx.forbid[v]
    if usable == 0:
        return 0
    cdef int old_max = ctx.max_used
    cdef u64 vbit = (<u64>1) << v
    cdef int base = depth * ctx.stride
    cdef int n_et, n_ft, c, i, j, u, ok
    cdef u64 rest = usable, cbit, last
    while rest:
        c = KT_CTZ(rest)
        rest &= rest - 1
        cbit = (<u64>1) << c
        ctx.color[v] = c
        ctx.uncolored -= 1
        ctx.uncolored_mask &= ~vbit
        if c > ctx.max_used:
            ctx.max_used = c
        n_et = 0
        n_ft = 0
        ok = 1
        for j in range(ctx.inc_start[v], ctx.inc_start[v + 1]):
            i = ctx.inc_idx[j]
            ctx.et_edge[base + n_et] = i
            ctx.et_rem[base + n_et] = ctx.rem[i]
            ctx.et_pres[base + n_et] = ctx.present[i]
            n_et += 1
            ctx.rem[i] -= 1
            ctx.present[i] |= cbit
            if ctx.rem[i] == 0:
                if KT_POPCNT(ctx.present[i]) == 1:
                    ok = 0
                    break
            elif ctx.rem[i] == 1 and KT_POPCNT(ctx.present[i]) == 1:
                last = ctx.edges[i] & ctx.uncolored_mask
                u = KT_TOPBIT(last)
                if not (ctx.forbid[u] & ctx.present[i]):
                    ctx.forbid[u] |= ctx.present[i]
                    ctx.ft_u[base + n_ft] = u
                    ctx.ft_bits[base + n_ft] = ctx.present[i]
                    n_ft += 1
        if ok and _hc_rec(ctx, depth + 1):
            return 1
        for j in range(n_ft):
            ctx.forbid[ctx.ft_u[base + j]] &= ~ctx.ft_bits[base + j]
        for j in range(n_et - 1, -1, -1):
            i = ctx.et_edge[base + j]
            ctx.rem[i] = ctx.et_rem[base + j]
            ctx.present[i] = ctx.et_pres[base + j]
        ctx.uncolored += 1
        ctx.uncolored_mask |= vbit
        ctx.color[v] = -1
        ctx.max_used = old_max
    return 0


def hypergraph_color_decision(int n, edge_masks, int k):
    """k-coloring with no monochromatic edge as a tuple, or None."""
    if n == 0:
        return ()
    if k <= 0:
        return None
    py_edges = [int(e) for e in edge_masks]
    cdef int m = len(py_edges)

    cdef HcCtx ctx
    ctx.n = n
    ctx.m = m
    ctx.kmask = _low_bits(k)
    ctx.edges = <u64 *>malloc(m * sizeof(u64)) if m else NULL
    ctx.inc_start = <int *>malloc((n + 1) * sizeof(int))
    ctx.color = <int *>malloc(n * sizeof(int))
    ctx.forbid = <u64 *>malloc(n * sizeof(u64))
    ctx.rem = <int *>malloc(m * sizeof(int)) if m else NULL
    ctx.present = <u64 *>malloc(m * sizeof(u64)) if m else NULL

    cdef int i, v, total, deg_max
    cdef u64 e, bits
    deg = [0] * n
    for e_py in py_edges:
        e = <u64>e_py
        bits = e
        while bits:
            v = KT_CTZ(bits)
            bits &= bits - 1
            deg[v] += 1
    total = 0
    deg_max = 0
    for v in range(n):
        if deg[v] > deg_max:
            deg_max = deg[v]
    ctx.stride = deg_max if deg_max > 0 else 1
    ctx.inc_idx = <int *>malloc((sum(deg) if m else 1) * sizeof(int))
    ctx.et_edge = <int *>malloc(n * ctx.stride * sizeof(int))
    ctx.et_rem = <int *>malloc(n * ctx.stride * sizeof(int))
    ctx.et_pres = <u64 *>malloc(n * ctx.stride * sizeof(u64))
    ctx.ft_u = <int *>malloc(n * ctx.stride * sizeof(int))
    ctx.ft_bits = <u64 *>malloc(n * ctx.stride * sizeof(u64))

    allocs = [
        <size_t>ctx.inc_start, <size_t>ctx.color, <size_t>ctx.forbid,
        <size_t>ctx.inc_idx, <size_t>ctx.et_edge, <size_t>ctx.et_rem,
        <size_t>ctx.et_pres, <size_t>ctx.ft_u, <size_t>ctx.ft_bits,
    ]
    if m:
        allocs += [<size_t>ctx.edges, <size_t>ctx.rem, <size_t>ctx.present]
    if any(a == 0 for a in allocs):
        _hc_free(&ctx)
        raise MemoryError()

    fill = [0] * n
    for v in range(n):
        ctx.inc_start[v] = 0
    for i in range(m):
        ctx.edges[i] = <u64>py_edges[i]
        ctx.rem[i] = KT_POPCNT(ctx.edges[i])
        ctx.present[i] = 0
    # CSR incidence in edge-index order per vertex
    starts = [0] * (n + 1)
    for v in range(n):
        starts[v + 1] = starts[v] + deg[v]
    for v in range(n + 1):
        ctx.inc_start[v] = starts[v]
    for i in range(m):
        bits = ctx.edges[i]
        while bits:
            v = KT_CTZ(bits)
            bits &= bits - 1
            ctx.inc_idx[starts[v] + fill[v]] = i
            fill[v] += 1
    for v in range(n):
        ctx.color[v] = -1
        ctx.forbid[v] = 0
    ctx.uncolored_mask = _low_bits(n)
    ctx.uncolored = n
    ctx.max_used = -1
    try:
        if _hc_rec(&ctx, 0):
            return tuple(ctx.color[i] for i in range(n))
        return None
    finally:
        _hc_free(&ctx)


cdef void _hc_free(HcCtx *ctx):
    free(ctx.edges)
    free(ctx.inc_start)
    free(ctx.inc_idx)
    free(ctx.color)
    free(ctx.forbid)
    free(ctx.rem)
    free(ctx.present)
    free(ctx.et_edge)
    free(ctx.et_rem)
    free(ctx.et_pres)
    free(ctx.ft_u)
    free(ctx.ft_bits)
