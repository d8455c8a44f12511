"""12-representation: checking a word, normalizing, and the decision procedure.

For letters x < y, the pair is an edge exactly when every copy of y comes
before every copy of x.  Only first and last occurrences matter, which is why
two copies per letter always suffice.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import kernels
from .graphs import (LabeledGraph, cutset_filter, is_good_labeling, labeling_from_order,
                     small_cutsets)
from .words import Word, as_word, first_last, format_word

DEFAULT_BUDGET = 10 ** 8
BUDGET_ENV = "TWELVEREP_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV, "").strip()
    return int(raw) if raw else DEFAULT_BUDGET


# -- checking ----------------------------------------------------------------

@dataclass(frozen=True)
class RepresentationCheck:
    word: Word
    graph: LabeledGraph
    verdict: bool
    first_violation: Optional[tuple] = None  # ((x, y), reason)

    def __bool__(self) -> bool:
        return self.verdict


def represents(w: Iterable[int], g: LabeledGraph) -> RepresentationCheck:
    """Check whether ``w`` 12-represents ``g``; report the first failing pair."""
    w = as_word(w)
    letters = set(w)
    for x in g.vertices:
        if x not in letters:
            return RepresentationCheck(w, g, False, ((x, x), "missing-letter"))
    extra = sorted(x for x in letters if x > g.n)
    if extra:
        return RepresentationCheck(w, g, False, ((extra[0], extra[0]), "extra-letter"))
    first, last = first_last(w)
    for x in range(1, g.n + 1):
        for y in range(x + 1, g.n + 1):
            edge_in_word = last[y] < first[x]
            if edge_in_word != g.adjacent(x, y):
                reason = "should-be-edge" if g.adjacent(x, y) else "should-be-nonedge"
                return RepresentationCheck(w, g, False, ((x, y), reason))
    return RepresentationCheck(w, g, True)


def graph_of_word(w: Iterable[int]) -> LabeledGraph:
    """The labeled graph that ``w`` represents (alphabet must be 1..n)."""
    w = as_word(w)
    n = max(w, default=0)
    if set(w) != set(range(1, n + 1)):
        raise ValueError("alphabet of the word is not {1..n}")
    first, last = first_last(w)
    return LabeledGraph(n, frozenset((x, y) for x in range(1, n + 1)
                                     for y in range(x + 1, n + 1) if last[y] < first[x]))


def verify(w, g: LabeledGraph) -> Word:
    """Return ``w`` as a Word or raise AssertionError naming the violation."""
    chk = represents(w, g)
    if not chk.verdict:
        raise AssertionError(f"word {format_word(chk.word)} fails: {chk.first_violation}")
    return chk.word


# -- normal form -------------------------------------------------------------

def _check_end_square_labels(g: LabeledGraph):
    if g.n < 4:
        raise ValueError("normal form needs at least 4 vertices")
    if g.neighbors(3) != {1, 2}:
        raise ValueError("label 3 must be adjacent to exactly 1 and 2")
    if g.adjacent(1, 2):
        raise ValueError("labels 1 and 2 must be non-adjacent")
    if not (g.neighbors(1) - {3}) <= g.neighbors(2):
        raise ValueError("every neighbour of 1 other than 3 must be a neighbour of 2")


def normalize_representant(w: Iterable[int], g: LabeledGraph) -> Word:
    """Rewrite a representant into the shape ``3 w1 1 w2 2 w3`` with w1, w2, w3 >= 4."""
    w = as_word(w)
    _check_end_square_labels(g)
    verify(w, g)
    # 3 precedes everything it must: 1 and 2 (edges) and all larger letters
    out = [3] + [x for x in w if x != 3]
    # later copies of 1 only ever kill non-edges
    i1 = out.index(1)
    out = [x for i, x in enumerate(out) if x != 1 or i == i1]
    i1 = out.index(1)
    i2 = out.index(2)
    if i2 < i1:
        # the letters between the first 2 and the 1 all sit after 1 in the graph
        # sense already, since N(1) minus 3 lies inside N(2)
        del out[i1]
        out.insert(i2, 1)
    i2 = out.index(2)
    out = [x for i, x in enumerate(out) if x != 2 or i == i2]
    result = verify(out, g)
    assert is_normal_form(result), result
    return result


def is_normal_form(w: Iterable[int]) -> bool:
    w = tuple(w)
    return (len(w) >= 3 and w[0] == 3 and w.count(3) == 1 and w.count(1) == 1
            and w.count(2) == 1 and w.index(1) < w.index(2))


def split_normal_form(w: Iterable[int]) -> tuple:
    """(w1, w2, w3) of a normal-form word ``3 w1 1 w2 2 w3``."""
    w = tuple(w)
    if not is_normal_form(w):
        raise ValueError(f"not in normal form: {format_word(w)}")
    i1, i2 = w.index(1), w.index(2)
    return w[1:i1], w[i1 + 1:i2], w[i2 + 1:]


# -- search ------------------------------------------------------------------

@dataclass
class WordSearchResult:
    status: str  # "found" | "none" | "budget"
    word: Optional[Word]
    nodes: int


def find_representant(g: LabeledGraph, max_multiplicity: int = 2,
                      budget: int = -1) -> Optional[Word]:
    """A representant with at most ``max_multiplicity`` copies per letter, or None.

    Raises RuntimeError if the node budget is exhausted before a decision.
    """
    r = search_representant(g, max_multiplicity, budget)
    if r.status == "budget":
        raise RuntimeError("word search budget exhausted")
    return r.word


def search_representant(g: LabeledGraph, max_multiplicity: int = 2,
                        budget: int = -1) -> WordSearchResult:
    """Permutations first, then words with up to two copies of every letter."""
    if max_multiplicity < 1:
        raise ValueError("max_multiplicity must be at least 1")
    used = 0
    for mult in sorted({1, min(max_multiplicity, 2)}):
        left = -1 if budget < 0 else max(budget - used, 0)
        status, word, nodes = kernels.search_word(g, mult, left)
        used += nodes
        if status == "found":
            return WordSearchResult("found", verify(word, g), used)
        if status == "budget":
            return WordSearchResult("budget", None, used)
    return WordSearchResult("none", None, used)


# -- decisions ---------------------------------------------------------------

@dataclass(frozen=True)
class NoGoodLabeling:
    name = "NoGoodLabeling"

    def to_dict(self) -> dict:
        return {"kind": self.name}


@dataclass(frozen=True)
class ExhaustedAllGoodLabelings:
    """Every good labeling was rejected by the cutset filter or word search.

    ``count`` good labelings reached word search and failed it with up to two
    copies per letter; ``cutset_rejected`` more were discarded by the cutset
    condition (or pruned by it during enumeration, when ``pruned`` is set).
    """

    count: int
    cutset_rejected: int = 0
    pruned: bool = False
    max_multiplicity: int = 2
    name = "ExhaustedAllGoodLabelings"

    def to_dict(self) -> dict:
        return {"kind": self.name, "count": self.count, "cutset_rejected": self.cutset_rejected,
                "cutset_pruned_search": self.pruned, "max_multiplicity": self.max_multiplicity}


@dataclass(frozen=True)
class ForbiddenSubgraph:
    entry: str
    witness: tuple
    name = "ForbiddenSubgraph"

    def to_dict(self) -> dict:
        return {"kind": self.name, "entry": self.entry, "witness": list(self.witness)}


@dataclass
class Decision:
    outcome: str  # "Representable" | "NotRepresentable" | "Undecided"
    shape: LabeledGraph
    labeling: Optional[LabeledGraph] = None
    mapping: Optional[dict] = None  # shape vertex -> label
    word: Optional[Word] = None
    certificate: object = None
    nodes: int = 0
    stats: dict = field(default_factory=dict)

    @property
    def representable(self) -> Optional[bool]:
        if self.outcome == "Undecided":
            return None
        return self.outcome == "Representable"

    def to_dict(self) -> dict:
        d = {"outcome": self.outcome, "n": self.shape.n,
             "edges": [list(e) for e in sorted(self.shape.edges)], "nodes": self.nodes}
        if self.mapping is not None:
            d["labeling"] = {str(v): self.mapping[v] for v in sorted(self.mapping)}
        if self.word is not None:
            d["word"] = format_word(self.word)
        if self.certificate is not None:
            d["certificate"] = self.certificate.to_dict()
        if self.stats:
            d["stats"] = dict(self.stats)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _violates_cutsets(lab: LabeledGraph, cuts) -> bool:
    return any(not cutset_filter(lab, u).ok for u in cuts)


def is_12_representable(shape: LabeledGraph, *, budget: Optional[int] = None,
                        cutset_prune: bool = True, roots: Optional[Iterable[int]] = None,
                        max_multiplicity: int = 2) -> Decision:
    """Decide whether some labeling of ``shape`` is 12-representable.

    Good labelings are enumerated with the label-1 vertex ascending (``roots``
    restricts this to a subset, for partitioned runs).  Each is checked
    against every cutset of size at most two and then handed to the word
    search.  ``budget`` caps the total number of search nodes.
    """
    budget = default_budget() if budget is None else int(budget)
    roots = list(shape.vertices) if roots is None else sorted(roots)
    if shape.n == 0:
        return Decision("Representable", shape, shape, {}, ())
    cuts = small_cutsets(shape, 2)
    search = kernels.GoodLabelingSearch(shape, cutset_prune=cutset_prune, budget=budget)
    word_nodes = 0
    seen = failed = rejected = 0

    def spent() -> int:
        return search.nodes + word_nodes

    def stats() -> dict:
        return {"good_labelings": seen, "cutset_rejected": rejected,
                "word_search_failed": failed}

    for r in roots:
        for order in search.orders(r):
            seen += 1
            lab = labeling_from_order(shape, order)
            if _violates_cutsets(lab, cuts):
                rejected += 1
                continue
            left = budget - spent() if budget >= 0 else -1
            if budget >= 0 and left <= 0:
                return Decision("Undecided", shape, nodes=spent(), stats=stats())
            res = search_representant(lab, max_multiplicity, left)
            word_nodes += res.nodes
            if res.status == "found":
                mapping = {int(v): k for k, v in enumerate(order, start=1)}
                assert is_good_labeling(lab)
                return Decision("Representable", shape, lab, mapping, res.word,
                                nodes=spent(), stats=stats())
            if res.status == "budget":
                return Decision("Undecided", shape, nodes=spent(), stats=stats())
            failed += 1
        if search.exhausted:
            return Decision("Undecided", shape, nodes=spent(), stats=stats())
    partial = len(roots) < shape.n
    if seen == 0 and not cutset_prune:
        cert = NoGoodLabeling()
    elif seen == 0 and not partial and not _has_good_labeling(shape, budget - spent()
                                                               if budget >= 0 else -1):
        cert = NoGoodLabeling()
    else:
        cert = ExhaustedAllGoodLabelings(failed, rejected, cutset_prune, max_multiplicity)
    return Decision("NotRepresentable", shape, certificate=cert, nodes=spent(), stats=stats())


def _has_good_labeling(shape: LabeledGraph, budget: int) -> bool:
    """True unless an unpruned search proves there is no good labeling at all.

    Running out of budget counts as "maybe", which keeps the weaker but still
    valid exhaustion certificate.
    """
    if budget == 0:
        return True
    search = kernels.GoodLabelingSearch(shape, budget=budget)
    for r in shape.vertices:
        for _ in search.orders(r):
            return True
        if search.exhausted:
            return True
    return False
