"""Named forbidden graphs and induced-containment tests.

Labeled patterns (I3, J4, Q4) are matched order-preservingly on labels;
everything else is an unlabeled shape matched up to isomorphism.  Shapes
that live on the grid ship as point files in ``twelverep/data``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Optional, Union

from .graphs import I3, J4, Q4, LabeledGraph, find_labeled_pattern
from .grid.embedding import GridEmbedding, parse_embedding, to_labeled_graph
from .grid.forbidden import find_long_cycle

LABELED = "labeled-pattern"
UNLABELED = "unlabeled-forbidden"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    shape: Union[LabeledGraph, GridEmbedding]
    kind: str
    params: dict = field(default_factory=dict)
    note: str = ""

    @property
    def graph(self) -> LabeledGraph:
        if isinstance(self.shape, GridEmbedding):
            return to_labeled_graph(self.shape)
        return self.shape

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return len(self.graph.edges)


def make_cycle(length: int) -> LabeledGraph:
    if length < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return LabeledGraph(length, frozenset((i, i % length + 1) for i in range(1, length + 1)))


def make_subdivided_claw(s: int, t: int, p: int) -> GridEmbedding:
    """Spider with straight branches of lengths s, t, p going left, right and up."""
    for b in (s, t, p):
        if b < 1:
            raise ValueError("branch lengths must be positive")
    pts = {(0, 0)}
    pts.update((-i, 0) for i in range(1, s + 1))
    pts.update((i, 0) for i in range(1, t + 1))
    pts.update((0, i) for i in range(1, p + 1))
    return GridEmbedding(frozenset(pts)).canonical()


def load_shape(name: str) -> GridEmbedding:
    """A shipped point file by base name, e.g. ``"g3"``."""
    text = resources.files("twelverep.data").joinpath(f"{name}.txt").read_text()
    return parse_embedding(text)


@lru_cache(maxsize=None)
def entries() -> tuple:
    out = [
        CatalogEntry("I3", I3, LABELED, note="labeled pattern, 3 vertices"),
        CatalogEntry("J4", J4, LABELED, note="labeled pattern, 4 vertices"),
        CatalogEntry("Q4", Q4, LABELED, note="labeled pattern, 4 vertices"),
        CatalogEntry("X", load_shape("x"), UNLABELED, note="in F; data/x.txt"),
        CatalogEntry("C2n", make_cycle(8), UNLABELED, {"min_length": 8, "even": True},
                     note="in F; every induced even cycle of length >= 8"),
        CatalogEntry("B(3,3,3)", load_shape("b333"), UNLABELED, {"s": 3, "t": 3, "p": 3},
                     note="data/b333.txt"),
    ]
    for k in (3, 4, 5, 6):
        out.append(CatalogEntry(f"G{k}", load_shape(f"g{k}"), UNLABELED, note=f"data/g{k}.txt"))
    return tuple(out)


def entry(name: str) -> CatalogEntry:
    for e in entries():
        if e.name == name:
            return e
    raise KeyError(name)


F_NAMES = ("X", "C2n")
# G3, G4 and G5 each contain an induced B(3,3,3); testing them first makes
# the certificate name the larger, more specific shape
P_NAMES = F_NAMES + ("G3", "G4", "G5", "G6", "B(3,3,3)")


# -- induced containment ------------------------------------------------------

def find_induced(host: LabeledGraph, pattern: LabeledGraph) -> Optional[dict]:
    """An embedding pattern vertex -> host vertex preserving edges and non-edges."""
    k, n = pattern.n, host.n
    if k > n:
        return None
    hadj = host.adjacency()
    padj = pattern.adjacency()
    hdeg = {v: len(hadj[v]) for v in host.vertices}
    # grow the pattern along its edges, high degree first
    order: list = []
    rest = sorted(pattern.vertices, key=lambda v: -len(padj[v]))
    while rest:
        nxt = next((v for v in rest if any(u in order for u in padj[v])), rest[0])
        order.append(nxt)
        rest.remove(nxt)
    hosts_by_degree = sorted(host.vertices, key=lambda v: -hdeg[v])
    image: dict = {}
    used: set = set()

    def fits(pv, hv) -> bool:
        if hv in used or hdeg[hv] < len(padj[pv]):
            return False
        for qv, qh in image.items():
            if (qv in padj[pv]) != (qh in hadj[hv]):
                return False
        return True

    def rec(i) -> bool:
        if i == k:
            return True
        pv = order[i]
        anchor = next((image[u] for u in padj[pv] if u in image), None)
        cands = sorted(hadj[anchor]) if anchor is not None else hosts_by_degree
        for hv in cands:
            if fits(pv, hv):
                image[pv] = hv
                used.add(hv)
                if rec(i + 1):
                    return True
                del image[pv]
                used.discard(hv)
        return False

    return dict(image) if rec(0) else None


def _induced_cycle(g: LabeledGraph, min_length: int, even: bool) -> Optional[tuple]:
    """A chordless cycle of at least ``min_length`` vertices, by plain DFS on ``g``."""
    adj = g.adjacency()
    for s in g.vertices:
        path = [s]
        on = {s}

        def dfs() -> Optional[tuple]:
            last = path[-1]
            for v in sorted(adj[last]):
                if v <= s or v in on:
                    continue
                back = [u for u in adj[v] if u in on and u != last]
                if any(u != s for u in back):
                    continue
                if back:
                    size = len(path) + 1
                    if size >= min_length and (not even or size % 2 == 0):
                        return tuple(path) + (v,)
                    continue
                path.append(v)
                on.add(v)
                found = dfs()
                if found:
                    return found
                path.pop()
                on.discard(v)
            return None

        found = dfs()
        if found:
            return found
    return None


def contains_induced_from(g: LabeledGraph, entry_: CatalogEntry) -> Optional[tuple]:
    """Sorted host vertices inducing a copy of the entry, or None."""
    if entry_.kind == LABELED:
        return find_labeled_pattern(g, entry_.shape)
    if entry_.name == "C2n":
        c = _induced_cycle(g, entry_.params["min_length"], entry_.params["even"])
        return tuple(sorted(c)) if c else None
    m = find_induced(g, entry_.graph)
    return tuple(sorted(m.values())) if m else None


@dataclass(frozen=True)
class PCheck:
    avoiding: bool
    entry: Optional[str] = None
    witness: tuple = ()  # points of the embedding

    def __bool__(self) -> bool:
        return self.avoiding

    def to_dict(self) -> dict:
        return {"avoiding": self.avoiding, "entry": self.entry,
                "witness": [list(p) for p in self.witness]}


def _check(e: GridEmbedding, names) -> PCheck:
    pts = e.sorted_points()
    g = to_labeled_graph(e)
    for name in names:
        ent = entry(name)
        if name == "C2n":
            c = find_long_cycle(e, 8)
            if c is not None:
                return PCheck(False, f"C{len(c)}", tuple(sorted(c)))
            continue
        if ent.n > len(pts):
            continue
        w = contains_induced_from(g, ent)
        if w is not None:
            return PCheck(False, name, tuple(sorted(pts[v - 1] for v in w)))
    return PCheck(True)


def is_P_avoiding(e: GridEmbedding) -> PCheck:
    """No induced X, long even cycle, B(3,3,3), G3, G4, G5 or G6."""
    return _check(e, P_NAMES)


def is_F_avoiding_generic(e: GridEmbedding) -> PCheck:
    """F-avoidance by graph isomorphism instead of lattice geometry."""
    pts = e.sorted_points()
    g = to_labeled_graph(e)
    m = find_induced(g, entry("X").graph) if len(pts) >= 9 else None
    if m is not None:
        return PCheck(False, "X", tuple(sorted(pts[v - 1] for v in m.values())))
    c = _induced_cycle(g, 8, True)
    if c is not None:
        return PCheck(False, f"C{len(c)}", tuple(sorted(pts[v - 1] for v in c)))
    return PCheck(True)


def catalog_rows() -> list:
    return [(e.name, e.kind, e.n, e.m, e.note) for e in entries()]
