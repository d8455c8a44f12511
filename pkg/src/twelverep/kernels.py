"""Backtracking kernels: good-labeling enumeration and representant search.

Everything below ``# kernels`` is written in the numba-compatible subset and
compiled by :func:`twelverep._accel.njit`.  Graphs arrive as int64 arrays of
neighbourhood bitmasks, so at most 62 vertices are supported.

Both searches are resumable: their full state lives in caller-owned arrays,
so a Python generator can pull one result at a time out of compiled code.
"""
from __future__ import annotations

from itertools import combinations

import numpy as np

from ._accel import njit

MAX_VERTICES = 62
MAX_WORD_VERTICES = 31

# kernels ----------------------------------------------------------------------


@njit
def _new_label_closes_pattern(adj_lab, newmask, k):
    """True if label ``k`` (the largest so far) completes an I3, J4 or Q4.

    ``adj_lab[p]`` is the neighbourhood of label p among labels < k and
    ``newmask`` the neighbourhood of label k, all as bitmasks over labels.
    """
    one = np.int64(1)
    lowk = (one << k) - one
    for b in range(k):
        if not (newmask >> b) & one:
            continue
        below_b = (one << b) - one
        # I3: a - b - k with a < b and a, k non-adjacent
        if adj_lab[b] & below_b & ~newmask:
            return True
        # J4: edges (a, c), (b, k); a < b < c < k; no other edges
        above_b = lowk & ~((one << (b + 1)) - one)
        amask = below_b & ~newmask & ~adj_lab[b]
        for a in range(b):
            if (amask >> a) & one:
                if adj_lab[a] & above_b & ~newmask & ~adj_lab[b]:
                    return True
    # Q4: edges (a, k), (b, c); a < b < c < k; no other edges
    for a in range(k):
        if not (newmask >> a) & one:
            continue
        above_a = lowk & ~((one << (a + 1)) - one)
        s = above_a & ~newmask & ~adj_lab[a]
        for b in range(a + 1, k):
            if (s >> b) & one:
                above_b = ~((one << (b + 1)) - one)
                if adj_lab[b] & s & above_b:
                    return True
    return False


@njit
def good_labeling_check(adj):
    """Check the identity labeling (vertex i has label i + 1) for I3/J4/Q4."""
    n = adj.shape[0]
    one = np.int64(1)
    adj_lab = np.zeros(n, dtype=np.int64)
    for k in range(n):
        newmask = adj[k] & ((one << k) - one)
        if _new_label_closes_pattern(adj_lab, newmask, k):
            return False
        adj_lab[k] = newmask
        for p in range(k):
            if (newmask >> p) & one:
                adj_lab[p] |= one << k
    return True


@njit
def _cut_ok(v, assigned, cut_ptr, cut_other):
    # placing v while another side of one of its cutsets is partly labeled
    # would put a label of that side above a label of v's side
    for j in range(cut_ptr[v], cut_ptr[v + 1]):
        m = cut_other[j]
        if (assigned & m) != 0 and (m & ~assigned) != 0:
            return False
    return True


@njit
def good_labeling_next(adj, cut_ptr, cut_other, use_cut, order, cand, adj_lab, state, budget):
    """Advance to the next good labeling.

    ``order[p]`` is the vertex carrying label p + 1.  ``state`` holds
    [depth, assigned mask, node count, phase, root].  Returns 1 when ``order``
    holds a new complete good labeling, 0 when the subtree rooted at
    ``state[4]`` is exhausted, -1 when the node budget ran out.
    """
    one = np.int64(1)
    n = adj.shape[0]
    d = state[0]
    assigned = state[1]
    nodes = state[2]
    if state[3] == 2:
        return 0
    if state[3] == 0:
        root = state[4]
        order[0] = root
        adj_lab[0] = 0
        assigned = one << root
        d = 1
        nodes += 1
        if n == 1:
            state[0] = d
            state[1] = assigned
            state[2] = nodes
            state[3] = 1
            return 1
        cand[1] = 0
    else:
        if n == 1:
            state[3] = 2
            return 0
        d = n - 1
        u = order[d]
        for p in range(d):
            adj_lab[p] &= ~(one << d)
        assigned &= ~(one << u)
    while True:
        placed = False
        v = cand[d]
        while v < n:
            if not (assigned >> v) & one:
                nodes += 1
                if budget >= 0 and nodes > budget:
                    state[0] = d
                    state[1] = assigned
                    state[2] = nodes
                    state[3] = 2
                    return -1
                newmask = np.int64(0)
                for p in range(d):
                    if (adj[v] >> order[p]) & one:
                        newmask |= one << p
                ok = not _new_label_closes_pattern(adj_lab, newmask, d)
                if ok and use_cut:
                    ok = _cut_ok(v, assigned, cut_ptr, cut_other)
                if ok:
                    order[d] = v
                    adj_lab[d] = newmask
                    for p in range(d):
                        if (newmask >> p) & one:
                            adj_lab[p] |= one << d
                    assigned |= one << v
                    cand[d] = v + 1
                    d += 1
                    if d == n:
                        state[0] = d
                        state[1] = assigned
                        state[2] = nodes
                        state[3] = 1
                        return 1
                    cand[d] = 0
                    placed = True
                    break
            v += 1
        if not placed:
            d -= 1
            if d < 1:
                state[0] = d
                state[1] = assigned
                state[2] = nodes
                state[3] = 2
                return 0
            u = order[d]
            for p in range(d):
                adj_lab[p] &= ~(one << d)
            assigned &= ~(one << u)


@njit
def word_search(adj, max_mult, budget, out, stats):
    """Search for a word 12-representing the labeled graph ``adj``.

    Vertex i is the letter i + 1.  A word is built left to right as a
    sequence of events: a letter's first occurrence, its last occurrence, or
    a single occurrence that is both.  Only first and last occurrences decide
    adjacency, so at most two copies per letter are ever needed.  Writing the
    first copy of x requires every larger neighbour of x to be finished and
    every larger non-neighbour unfinished; writing the last copy of y
    requires every smaller non-neighbour of y to be started and every smaller
    neighbour unstarted.  Failed (started, finished) states are memoised.

    Returns the word length written into ``out``, 0 if no word with at most
    ``max_mult`` copies per letter exists, -1 if the node budget ran out.
    ``stats[0]`` receives the node count.
    """
    one = np.int64(1)
    n = adj.shape[0]
    if n == 0:
        stats[0] = 0
        return 0
    full = (one << n) - one
    low = np.zeros(n, dtype=np.int64)
    high = np.zeros(n, dtype=np.int64)
    for x in range(n):
        low[x] = (one << x) - one
        high[x] = full & ~((one << (x + 1)) - one)
    depth_cap = 2 * n + 1
    next_move = np.zeros(depth_cap, dtype=np.int64)
    moves = np.zeros(depth_cap, dtype=np.int64)
    saved_o = np.zeros(depth_cap, dtype=np.int64)
    saved_c = np.zeros(depth_cap, dtype=np.int64)
    failed = dict()
    failed[np.int64(-1)] = np.int8(1)
    started = np.int64(0)
    finished = np.int64(0)
    t = 0
    nodes = 0
    n_moves = 3 * n
    while True:
        if finished == full:
            stats[0] = nodes
            for i in range(t):
                out[i] = moves[i] // 3 + 1
            return t
        m = next_move[t]
        advanced = False
        while m < n_moves:
            x = m // 3
            kind = m % 3
            m += 1
            if kind != 0 and max_mult < 2:
                continue
            bit = one << x
            if kind == 2:
                if not (started & bit) or (finished & bit):
                    continue
                if (started & low[x]) != (~adj[x] & low[x]):
                    continue
                ns = started
                nf = finished | bit
            else:
                if started & bit:
                    continue
                if (finished & high[x]) != (adj[x] & high[x]):
                    continue
                if kind == 0:
                    if (started & low[x]) != (~adj[x] & low[x]):
                        continue
                    nf = finished | bit
                else:
                    nf = finished
                ns = started | bit
            key = (ns << n) | nf
            if key in failed:
                continue
            nodes += 1
            if budget >= 0 and nodes > budget:
                stats[0] = nodes
                return -1
            next_move[t] = m
            moves[t] = x * 3 + kind
            saved_o[t] = started
            saved_c[t] = finished
            t += 1
            started = ns
            finished = nf
            next_move[t] = 0
            advanced = True
            break
        if not advanced:
            failed[(started << n) | finished] = np.int8(1)
            if t == 0:
                stats[0] = nodes
                return 0
            t -= 1
            started = saved_o[t]
            finished = saved_c[t]


# python-side drivers -----------------------------------------------------------


def cutset_tables(shape, max_size: int = 2):
    """CSR tables of "other side" component masks for every vertex.

    For each cutset of size <= max_size and each pair of components of size
    >= 2, vertex v in one component lists the other component's mask.
    """
    from .graphs import components, is_cutset

    n = shape.n
    per_vertex = [[] for _ in range(n)]
    for k in range(1, max_size + 1):
        for u in combinations(shape.vertices, k):
            comps = components(shape, u)
            if len(comps) < 2:
                continue
            big = [c for c in comps if len(c) >= 2]
            masks = [sum(1 << (v - 1) for v in c) for c in big]
            for i, c in enumerate(big):
                others = [masks[j] for j in range(len(big)) if j != i]
                for v in c:
                    per_vertex[v - 1].extend(others)
    ptr = np.zeros(n + 1, dtype=np.int64)
    flat = []
    for v in range(n):
        ms = sorted(set(per_vertex[v]))
        flat.extend(ms)
        ptr[v + 1] = ptr[v] + len(ms)
    return ptr, np.array(flat, dtype=np.int64)


class GoodLabelingSearch:
    """Python handle on :func:`good_labeling_next`."""

    def __init__(self, shape, *, cutset_prune: bool = False, budget: int = -1):
        if shape.n > MAX_VERTICES:
            raise ValueError(f"at most {MAX_VERTICES} vertices supported")
        self.shape = shape
        self.adj = shape.masks()
        if cutset_prune:
            self.cut_ptr, self.cut_other = cutset_tables(shape)
        else:
            self.cut_ptr = np.zeros(shape.n + 1, dtype=np.int64)
            self.cut_other = np.zeros(0, dtype=np.int64)
        self.use_cut = bool(cutset_prune)
        self.budget = int(budget)
        self.nodes = 0
        self.exhausted = False

    def orders(self, root: int):
        """Yield vertex orders (1-based vertices) whose label-1 vertex is ``root``."""
        n = self.shape.n
        if n == 0:
            yield ()
            return
        order = np.zeros(n, dtype=np.int64)
        cand = np.zeros(n + 1, dtype=np.int64)
        adj_lab = np.zeros(n, dtype=np.int64)
        state = np.zeros(5, dtype=np.int64)
        state[4] = root - 1
        remaining = -1
        while True:
            if self.budget >= 0:
                remaining = self.budget - self.nodes
            before = state[2]
            r = good_labeling_next(self.adj, self.cut_ptr, self.cut_other, self.use_cut,
                                   order, cand, adj_lab, state,
                                   remaining + before if remaining >= 0 else -1)
            self.nodes += int(state[2] - before)
            if r == 1:
                yield tuple(int(v) + 1 for v in order)
            elif r == 0:
                return
            else:
                self.exhausted = True
                return


def search_word(graph, max_mult: int = 2, budget: int = -1):
    """Run :func:`word_search`; returns (status, word tuple or None, nodes)."""
    n = graph.n
    if n > MAX_WORD_VERTICES:
        raise ValueError(f"word search supports at most {MAX_WORD_VERTICES} vertices")
    if n == 0:
        return "found", (), 0
    out = np.zeros(2 * n + 1, dtype=np.int64)
    stats = np.zeros(1, dtype=np.int64)
    r = word_search(graph.masks(), int(max_mult), int(budget), out, stats)
    nodes = int(stats[0])
    if r > 0:
        return "found", tuple(int(x) for x in out[:r]), nodes
    if r == 0:
        return "none", None, nodes
    return "budget", None, nodes
