"""Pure-Python search kernels.

Same contracts and identical tie-breaking rules as the compiled backend in
_core.pyx, so the two return bit-identical results; this module is the import
fallback and the reference the benchmark compares against. Masks are Python
ints, one bit per vertex, so there is no width limit here.
"""

from __future__ import annotations


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def max_independent_set(n: int, edge_masks) -> tuple[int, int]:
    """Largest vertex set containing no edge entirely; returns (size, mask).

    Branch and bound on the standard hitting-set dichotomy: pick an edge still
    realizable inside chosen|candidates and branch on which of its free
    vertices gets excluded (earlier ones committed to the chosen side).
    """
    full = (1 << n) - 1
    uniq = sorted(set(int(e) for e in edge_masks))
    if any(e == 0 for e in uniq):
        raise ValueError("empty edge mask")
    # only inclusion-minimal edges constrain independence
    edges = [e for e in uniq if not any(f != e and (f & ~e) == 0 for f in uniq)]
    if not edges or n == 0:
        return n, full

    best_size = 0
    best_mask = 0

    def rec(chosen: int, cand: int):
        nonlocal best_size, best_mask
        union = chosen | cand
        total = union.bit_count()
        if total <= best_size:
            return
        pick = -1
        pick_t = n + 1
        for e in edges:
            if e & ~union:
                continue
            t = (e & ~chosen).bit_count()
            if t == 0:
                return  # an edge is fully inside the committed part
            if t < pick_t:
                pick, pick_t = e, t
                if t == 1:
                    break
        if pick == -1:
            best_size = total
            best_mask = union
            return
        forced = 0
        for v in _bits(pick & ~chosen):
            bit = 1 << v
            rec(chosen | forced, cand & ~(forced | bit))
            forced |= bit

    rec(0, full)
    return best_size, best_mask


def graph_color_decision(n: int, adj, k: int, clique=()) -> tuple[int, ...] | None:
    """Proper k-coloring of a simple graph, or None if none exists.

    ``clique`` vertices are pre-colored 0,1,2,... to break color symmetry; the
    caller guarantees they are pairwise adjacent. Further symmetry breaking:
    a vertex may open at most one brand-new color (max used so far plus one).
    Vertex selection: fewest usable colors, ties to the lowest id.
    """
    if n == 0:
        return ()
    if k <= 0 or len(clique) > k:
        return None
    kmask = (1 << k) - 1
    color = [-1] * n
    forbid = [0] * n
    uncolored = n
    max_used = -1
    for c, v in enumerate(clique):
        color[v] = c
        uncolored -= 1
        max_used = c
        for u in _bits(adj[v]):
            forbid[u] |= 1 << c

    def select(cap_mask: int) -> int:
        best_v, best_cnt = -1, 1 << 30
        for v in range(n):
            if color[v] >= 0:
                continue
            cnt = (cap_mask & ~forbid[v]).bit_count()
            if cnt < best_cnt:
                best_v, best_cnt = v, cnt
                if cnt == 0:
                    break
        return best_v

    def rec() -> bool:
        nonlocal uncolored, max_used
        if uncolored == 0:
            return True
        cap_mask = kmask & ((1 << (max_used + 2)) - 1)
        v = select(cap_mask)
        usable = cap_mask & ~forbid[v]
        if usable == 0:
            return False
        old_max = max_used
        for c in _bits(usable):
            bit = 1 << c
            color[v] = c
            uncolored -= 1
            if c > max_used:
                max_used = c
            touched = []
            for u in _bits(adj[v]):
                if color[u] < 0 and not forbid[u] & bit:
                    forbid[u] |= bit
                    touched.append(u)
            if rec():
                return True
            for u in touched:
                forbid[u] &= ~bit
            uncolored += 1
            color[v] = -1
            max_used = old_max
        return False

    return tuple(color) if rec() else None


def hypergraph_color_decision(n: int, edge_masks, k: int) -> tuple[int, ...] | None:
    """k-coloring with no monochromatic edge, or None.

    Unit propagation: an edge with one uncolored vertex left and all colored
    members sharing color c bans c on that last vertex. Selection and
    symmetry breaking mirror graph_color_decision.
    """
    if n == 0:
        return ()
    if k <= 0:
        return None
    edges = [int(e) for e in edge_masks]
    m = len(edges)
    incident = [[] for _ in range(n)]
    for i, e in enumerate(edges):
        for v in _bits(e):
            incident[v].append(i)
    kmask = (1 << k) - 1
    color = [-1] * n
    forbid = [0] * n
    rem = [e.bit_count() for e in edges]
    present = [0] * m
    uncolored_mask = (1 << n) - 1
    uncolored = n
    max_used = -1

    def select(cap_mask: int) -> int:
        best_v, best_cnt = -1, 1 << 30
        for v in range(n):
            if color[v] >= 0:
                continue
            cnt = (cap_mask & ~forbid[v]).bit_count()
            if cnt < best_cnt:
                best_v, best_cnt = v, cnt
                if cnt == 0:
                    break
        return best_v

    def rec() -> bool:
        nonlocal uncolored, uncolored_mask, max_used
        if uncolored == 0:
            return True
        cap_mask = kmask & ((1 << (max_used + 2)) - 1)
        v = select(cap_mask)
        usable = cap_mask & ~forbid[v]
        if usable == 0:
            return False
        old_max = max_used
        vbit = 1 << v
        for c in _bits(usable):
            cbit = 1 << c
            color[v] = c
            uncolored -= 1
            uncolored_mask &= ~vbit
            if c > max_used:
                max_used = c
            etrail = []
            ftrail = []
            ok = True
            for i in incident[v]:
                etrail.append((i, rem[i], present[i]))
                rem[i] -= 1
                present[i] |= cbit
                if rem[i] == 0:
                    if present[i].bit_count() == 1:
                        ok = False
                        break
                elif rem[i] == 1 and present[i].bit_count() == 1:
                    last = edges[i] & uncolored_mask
                    u = last.bit_length() - 1
                    if not forbid[u] & present[i]:
                        forbid[u] |= present[i]
                        ftrail.append((u, present[i]))
            if ok and rec():
                return True
            for u, bit in ftrail:
                forbid[u] &= ~bit
            for i, r, p in reversed(etrail):
                rem[i] = r
                present[i] = p
            uncolored += 1
            uncolored_mask |= vbit
            color[v] = -1
            max_used = old_max
        return False

    return tuple(color) if rec() else None
