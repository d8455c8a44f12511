"""Labeled simple graphs on {1..n} and the labeled-pattern machinery.

A labeled graph's vertices *are* its labels, so relabeling a shape produces a
new :class:`LabeledGraph`.  Graphs with arbitrary positive labels (induced
subgraphs, before reduction) are :class:`SubGraph` values.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional

import numpy as np


def _norm_edge(u: int, v: int) -> tuple:
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SubGraph:
    """A graph on an arbitrary finite set of positive labels."""

    vertices: frozenset
    edges: frozenset

    def adjacent(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges


@dataclass(frozen=True)
class LabeledGraph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            e = _norm_edge(int(u), int(v))
            if not (1 <= e[0] and e[1] <= self.n):
                raise ValueError(f"edge {e} outside 1..{self.n}")
            norm.add(e)
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "LabeledGraph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacent(self, u: int, v: int) -> bool:
        return u != v and _norm_edge(u, v) in self.edges

    def neighbors(self, v: int) -> set:
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def masks(self) -> np.ndarray:
        """Neighbourhood bitmasks indexed by 0-based vertex (bit i = vertex i+1)."""
        out = np.zeros(self.n, dtype=np.int64)
        for a, b in self.edges:
            out[a - 1] |= 1 << (b - 1)
            out[b - 1] |= 1 << (a - 1)
        return out

    def relabel(self, mapping) -> "LabeledGraph":
        """Apply a bijection old label -> new label (dict or sequence indexed by old-1)."""
        if not isinstance(mapping, dict):
            mapping = {v: int(mapping[v - 1]) for v in self.vertices}
        if sorted(mapping.values()) != list(self.vertices):
            raise ValueError("relabeling is not a bijection onto 1..n")
        return LabeledGraph(self.n, frozenset(_norm_edge(mapping[a], mapping[b])
                                              for a, b in self.edges))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        adj = self.adjacency()
        seen = {1}
        stack = [1]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n

    def __str__(self) -> str:
        return format_graph(self)


def induced_subgraph(g: LabeledGraph, s: Iterable[int]) -> SubGraph:
    s = frozenset(s)
    bad = [v for v in s if not 1 <= v <= g.n]
    if bad:
        raise ValueError(f"not vertices of the graph: {sorted(bad)}")
    return SubGraph(s, frozenset(e for e in g.edges if e[0] in s and e[1] in s))


def reduced_form(h) -> LabeledGraph:
    """Order-preserving relabeling of ``h`` onto 1..|V(h)|."""
    verts = sorted(h.vertices)
    rank = {v: i for i, v in enumerate(verts, start=1)}
    return LabeledGraph(len(verts), frozenset((rank[a], rank[b]) for a, b in h.edges))


def supplement(g: LabeledGraph) -> LabeledGraph:
    """Relabel every x as n + 1 - x."""
    n = g.n
    return LabeledGraph(n, frozenset(_norm_edge(n + 1 - a, n + 1 - b) for a, b in g.edges))


# Labeled patterns.  A labeled graph containing any of these (in reduced
# form, as an induced subgraph) is not 12-representable.
I3 = LabeledGraph(3, frozenset({(1, 2), (2, 3)}))
J4 = LabeledGraph(4, frozenset({(1, 3), (2, 4)}))
Q4 = LabeledGraph(4, frozenset({(1, 4), (2, 3)}))
BAD_PATTERNS = {"I3": I3, "J4": J4, "Q4": Q4}


def find_labeled_pattern(g: LabeledGraph, p: LabeledGraph) -> Optional[tuple]:
    """Lexicographically first vertex set whose reduced induced subgraph equals ``p``."""
    k = p.n
    target = p.edges
    for s in combinations(range(1, g.n + 1), k):
        pos = {v: i for i, v in enumerate(s, start=1)}
        if all(g.adjacent(a, b) == ((pos[a], pos[b]) in target) for a, b in combinations(s, 2)):
            return s
    return None


def contains_labeled_pattern(g: LabeledGraph, p: LabeledGraph) -> bool:
    return find_labeled_pattern(g, p) is not None


def bad_pattern_witness(g: LabeledGraph) -> Optional[tuple]:
    """First (pattern name, vertex set) violating good labeling, or None."""
    for name, p in BAD_PATTERNS.items():
        s = find_labeled_pattern(g, p)
        if s is not None:
            return name, s
    return None


def is_good_labeling(g: LabeledGraph) -> bool:
    from .kernels import good_labeling_check

    return bool(good_labeling_check(g.masks()))


def enumerate_good_labelings(shape: LabeledGraph, *, first_vertex: Optional[int] = None,
                             cutset_prune: bool = False) -> Iterator[LabeledGraph]:
    """Every good relabeling of ``shape``.

    Labels 1, 2, ... are handed out in increasing order; a partial labeling is
    abandoned as soon as the newest vertex closes an I3, J4 or Q4.  Output is
    ordered by the vertex receiving label 1, then lexicographically by the
    vertex sequence receiving labels 2, 3, ...

    ``first_vertex`` restricts the search to the subtree where that vertex of
    ``shape`` gets label 1, which gives ``shape.n`` independent work units.
    With ``cutset_prune`` the cutset ordering condition for cutsets of size at
    most two is enforced during the search as well.
    """
    for order in iter_good_orders(shape, first_vertex=first_vertex, cutset_prune=cutset_prune):
        yield labeling_from_order(shape, order)


def iter_good_orders(shape: LabeledGraph, *, first_vertex=None, cutset_prune=False,
                     budget: int = -1, stats: Optional[dict] = None):
    """Yield vertex orders (vertex of shape receiving label 1, 2, ...)."""
    from .kernels import GoodLabelingSearch

    search = GoodLabelingSearch(shape, cutset_prune=cutset_prune, budget=budget)
    roots = [first_vertex] if first_vertex is not None else list(shape.vertices)
    try:
        for r in roots:
            yield from search.orders(r)
    finally:
        if stats is not None:
            stats["nodes"] = stats.get("nodes", 0) + search.nodes
            stats["exhausted_budget"] = search.exhausted


def labeling_from_order(shape: LabeledGraph, order) -> LabeledGraph:
    """``order[k]`` is the shape vertex that receives label k + 1."""
    mapping = {int(v): k for k, v in enumerate(order, start=1)}
    return shape.relabel(mapping)


# -- cutset condition -----------------------------------------------------

def components(g: LabeledGraph, removed: Iterable[int] = ()) -> list:
    removed = set(removed)
    adj = g.adjacency()
    seen = set(removed)
    comps = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = {v}
        seen.add(v)
        stack = [v]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        comps.append(frozenset(comp))
    return comps


def is_cutset(g: LabeledGraph, u: Iterable[int]) -> bool:
    return len(components(g, u)) >= 2


@dataclass(frozen=True)
class CutsetResult:
    cutset: tuple
    is_cutset: bool
    ok: bool
    violation: Optional[tuple] = None  # (smaller component, larger component)


def cutset_filter(g: LabeledGraph, u: Iterable[int]) -> CutsetResult:
    """Check the ordering condition for the cutset ``u``.

    For any two components of size at least two left after removing ``u``,
    the component holding the smaller minimum must lie entirely below the
    other.  ``ok`` is False exactly when the labeled graph is thereby shown
    not to be 12-representable.  A non-cutset is reported, not raised.
    """
    u = tuple(sorted(set(u)))
    comps = components(g, u)
    if len(comps) < 2:
        return CutsetResult(u, False, True)
    big = sorted((c for c in comps if len(c) >= 2), key=min)
    for c1, c2 in combinations(big, 2):
        if max(c1) > min(c2):
            return CutsetResult(u, True, False, (tuple(sorted(c1)), tuple(sorted(c2))))
    return CutsetResult(u, True, True)


def small_cutsets(g: LabeledGraph, max_size: int = 2) -> list:
    """Cutsets of size 1..max_size (inclusion-minimal ones are not filtered)."""
    out = []
    for k in range(1, max_size + 1):
        for u in combinations(g.vertices, k):
            if is_cutset(g, u):
                out.append(u)
    return out


def cutset_scan(g: LabeledGraph, max_size: int = 2) -> Optional[CutsetResult]:
    """First violated cutset of size at most ``max_size``, or None."""
    for u in small_cutsets(g, max_size):
        r = cutset_filter(g, u)
        if not r.ok:
            return r
    return None


# -- file format ------------------------------------------------------------

def parse_graph(text: str) -> LabeledGraph:
    """Read ``n m`` then ``m`` lines ``u v``; ``#`` starts a comment line."""
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    if not rows:
        raise ValueError("empty graph file")
    n, m = int(rows[0][0]), int(rows[0][1])
    body = rows[1:]
    if len(body) != m:
        raise ValueError(f"header declares {m} edges, found {len(body)}")
    edges = set()
    for r in body:
        u, v = int(r[0]), int(r[1])
        if not 1 <= u < v <= n:
            raise ValueError(f"bad edge line {u} {v}: need 1 <= u < v <= {n}")
        if (u, v) in edges:
            raise ValueError(f"duplicate edge {u} {v}")
        edges.add((u, v))
    return LabeledGraph(n, frozenset(edges))


def format_graph(g: LabeledGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def load_graph(path) -> LabeledGraph:
    with open(path) as fh:
        return parse_graph(fh.read())
