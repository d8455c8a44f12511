"""Independent reference implementations used only by the tests.

None of this imports the search code of the package.  Graphs are given as
``(n, set of (u, v) pairs)`` with vertices 1..n.
"""
from __future__ import annotations

from itertools import permutations, product


def norm_edges(edges):
    return {(min(a, b), max(a, b)) for a, b in edges}


def word_graph(w):
    """Edge set defined by a word: x < y adjacent iff every y precedes every x."""
    letters = sorted(set(w))
    out = set()
    for i, x in enumerate(letters):
        for y in letters[i + 1:]:
            last_y = max(k for k, c in enumerate(w) if c == y)
            first_x = min(k for k, c in enumerate(w) if c == x)
            if last_y < first_x:
                out.add((x, y))
    return out


def brute_force_words(n, max_mult=2):
    """Every word over 1..n using each letter 1..max_mult times (tiny n only)."""
    for mults in product(range(1, max_mult + 1), repeat=n):
        base = [x for x in range(1, n + 1) for _ in range(mults[x - 1])]
        yield from set(permutations(base))


def brute_force_labeled(n, edges, max_mult=2):
    edges = norm_edges(edges)
    for w in brute_force_words(n, max_mult):
        if word_graph(w) == edges:
            return w
    return None


def labeled_word(n, edges):
    """A representant of the labeled graph, or None.

    The unknowns are the positions of the first and last copy of each letter.
    An edge x < y forces last(y) < first(x); a non-edge forces
    first(x) < last(y); always first(x) <= last(x).  This system of strict
    order constraints is satisfiable iff its constraint digraph is acyclic,
    and a topological order reads off as a word.
    """
    edges = norm_edges(edges)
    # node 2k = first copy of k+1, node 2k+1 = last copy of k+1
    succ = {i: set() for i in range(2 * n)}
    for x in range(1, n + 1):
        succ[2 * (x - 1)].add(2 * (x - 1) + 1)
        for y in range(x + 1, n + 1):
            fx, ly = 2 * (x - 1), 2 * (y - 1) + 1
            if (x, y) in edges:
                succ[ly].add(fx)
            else:
                succ[fx].add(ly)
    indeg = {i: 0 for i in succ}
    for i in succ:
        for j in succ[i]:
            indeg[j] += 1
    ready = sorted(i for i in succ if indeg[i] == 0)
    order = []
    while ready:
        i = ready.pop()
        order.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
    if len(order) < 2 * n:
        return None
    return tuple(i // 2 + 1 for i in order)


def unlabeled_representable(n, edges):
    """Try every labeling (no pruning); return (mapping, word) or None."""
    edges = norm_edges(edges)
    for perm in permutations(range(1, n + 1)):
        lab = {v: perm[v - 1] for v in range(1, n + 1)}
        e2 = {(min(lab[a], lab[b]), max(lab[a], lab[b])) for a, b in edges}
        w = labeled_word(n, e2)
        if w is not None:
            return lab, w
    return None


def is_good_by_subsets(n, edges):
    """Direct I3 / J4 / Q4 scan over all 3- and 4-subsets."""
    from itertools import combinations

    edges = norm_edges(edges)
    pats = {3: [{(1, 2), (2, 3)}], 4: [{(1, 3), (2, 4)}, {(1, 4), (2, 3)}]}
    for k, plist in pats.items():
        for s in combinations(range(1, n + 1), k):
            rank = {v: i for i, v in enumerate(s, start=1)}
            sub = {(rank[a], rank[b]) for a, b in edges if a in rank and b in rank}
            if sub in plist:
                return False
    return True


def good_labelings_brute(n, edges):
    """All good relabelings (as frozensets of edges) by trying all n! maps."""
    edges = norm_edges(edges)
    out = set()
    for perm in permutations(range(1, n + 1)):
        e2 = frozenset((min(perm[a - 1], perm[b - 1]), max(perm[a - 1], perm[b - 1]))
                       for a, b in edges)
        if is_good_by_subsets(n, e2):
            out.add(e2)
    return out


def first_good_labeling(n, edges):
    """A good labeling found by plain backtracking, or None.

    Labels are handed out in increasing order, so a newly labeled vertex is
    always the largest element of any pattern it completes.  Returns a dict
    vertex -> label.
    """
    from itertools import combinations

    adj = {v: set() for v in range(1, n + 1)}
    for a, b in norm_edges(edges):
        adj[a].add(b)
        adj[b].add(a)
    order = []

    def closes_pattern(v):
        for a, b in combinations(order, 2):
            # I3 with v largest: a-b-v path, a and v apart
            if b in adj[a] and v in adj[b] and v not in adj[a]:
                return True
        for a, b, c in combinations(order, 3):
            pairs = {(a, b): b in adj[a], (a, c): c in adj[a], (b, c): c in adj[b],
                     (a, v): v in adj[a], (b, v): v in adj[b], (c, v): v in adj[c]}
            on = {p for p, x in pairs.items() if x}
            if on == {(a, c), (b, v)} or on == {(a, v), (b, c)}:
                return True
        return False

    def rec():
        if len(order) == n:
            return True
        for v in range(1, n + 1):
            if v in order:
                continue
            if closes_pattern(v):
                continue
            order.append(v)
            if rec():
                return True
            order.pop()
        return False

    if rec():
        return {v: k for k, v in enumerate(order, start=1)}
    return None
