"""A representant for any good labeling of a square grid graph.

The construction peels the square that carries labels 1 and 3 and recurses
on what is left.  Every word produced starts with the only copy of 3.  Which
gluing applies depends on the private points of that square:

* {1, 2, 3}: the rest hangs off the fourth corner x;
* {2, 3} or {2, 3, y}: the rest holds the edge 1-x, or only the node 1;
* {1, 3}: swap 1 and 2, which gives the previous situation.

A configuration outside these shapes is handled by a direct word search on
the fixed labeling; :func:`trace_good_labeling` reports how often that was
needed.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .. import kernels
from ..graphs import LabeledGraph, is_good_labeling
from ..represent import normalize_representant, verify
from ..words import Word, as_word
from .embedding import GridEmbedding, Kind, classify, squares, squares_of, to_labeled_graph


class PreconditionError(ValueError):
    pass


@dataclass
class GoodLabelingTrace:
    word: Word
    steps: list = field(default_factory=list)  # case names, outermost first

    @property
    def used_search(self) -> bool:
        return "search" in self.steps


def representant_from_good_labeling(e: GridEmbedding, labeling: dict) -> Word:
    """Verified word for ``labeling`` (point -> label) starting with its sole 3."""
    return trace_good_labeling(e, labeling).word


def trace_good_labeling(e: GridEmbedding, labeling: dict) -> GoodLabelingTrace:
    if classify(e) != Kind.SQUARE_GRID:
        raise PreconditionError("expected a SquareGrid embedding")
    if set(labeling) != set(e.points) or sorted(labeling.values()) != list(range(1, len(e) + 1)):
        raise PreconditionError("labeling must be a bijection onto 1..n")
    g = to_labeled_graph(e, labeling)
    if not is_good_labeling(g):
        raise PreconditionError("labeling is not good")
    steps: list = []
    w = _solve(dict(labeling), steps, swapped=False)
    verify(w, g)
    if w[0] != 3 or w.count(3) != 1:
        raise AssertionError(f"word does not start with its only 3: {w}")
    return GoodLabelingTrace(w, steps)


# -- helpers -----------------------------------------------------------------

def _graph(lab: dict) -> LabeledGraph:
    return to_labeled_graph(GridEmbedding(frozenset(lab)), lab)


def _reduce(lab: dict):
    """Relabel to 1..m keeping the order; return the new labeling and the inverse map."""
    order = sorted(lab.values())
    down = {v: k for k, v in enumerate(order, start=1)}
    return {p: down[v] for p, v in lab.items()}, dict(enumerate(order, start=1))


def _sub(lab: dict, removed) -> dict:
    return {p: v for p, v in lab.items() if p not in removed}


def _is_square_grid(lab: dict) -> bool:
    e = GridEmbedding(frozenset(lab))
    return e.is_connected() and classify(e) == Kind.SQUARE_GRID


def _solve_sub(lab: dict, steps: list) -> Word:
    """Solve the reduced labeling and lift the word back to the labels of ``lab``."""
    red, up = _reduce(lab)
    w = _solve(red, steps, swapped=False)
    return tuple(up[x] for x in w)


def _represents(w, lab: dict) -> bool:
    from ..represent import represents

    return represents(w, _graph(lab)).verdict


def _search(lab: dict, steps: list) -> Word:
    steps.append("search")
    g = _graph(lab)
    status, word, _ = kernels.search_word(g, 2, -1)
    if status != "found":
        raise AssertionError("good labeling of a square grid without a representant")
    # nothing above 3 touches 3, so a single leading 3 keeps every pair right
    w = (3,) + tuple(x for x in word if x != 3)
    return verify(w, g)


# -- the induction -----------------------------------------------------------

def _solve(lab: dict, steps: list, swapped: bool) -> Word:
    by_label = {v: p for p, v in lab.items()}
    e = GridEmbedding(frozenset(lab))
    sqs = squares(e)
    if len(sqs) == 1:
        w = (3, 4, 1, 2)
        if _represents(w, lab):
            steps.append("square")
            return w
        return _search(lab, steps)
    owners = squares_of(e)
    p1, p3 = by_label[1], by_label[3]
    home = [s for s in owners[p1] if p3 in s.corners and len(owners[p3]) == 1]
    if len(home) != 1:
        return _search(lab, steps)
    s = home[0]
    private = {p for p in s.corners if len(owners[p]) == 1}
    private_labels = {lab[p] for p in private}
    others = [p for p in s.corners if lab[p] not in (1, 2, 3)]
    if len(others) != 1 or by_label[2] not in s.corners:
        return _search(lab, steps)
    px = others[0]
    x = lab[px]

    if private_labels == {1, 2, 3}:
        w = _case_node(lab, private, x, steps)
    elif private_labels == {2, 3}:
        w = _case_edge(lab, private, px, x, steps)
    elif private_labels == {2, 3, x}:
        w = _case_pendant(lab, private, x, steps)
    elif {1, 3} <= private_labels and 2 not in private_labels and not swapped:
        w = _case_swap(lab, steps)
    else:
        w = None
    return w if w is not None else _search(lab, steps)


def _case_node(lab, private, x, steps):
    """Square {3, 1, 2, x} meets the rest only at x."""
    rest = _sub(lab, private)
    if not _is_square_grid(rest):
        return None
    if len(rest) == 4:
        w = (3, 6, 7, 1, 2, 6, 4, 5)
        if _represents(w, lab):
            steps.append("node-two-squares")
            return w
    if x == 6:
        wr = _solve_sub(rest, steps)
        if wr[0] == 6:
            w = (3, 6, 1, 2) + wr[1:]
            if _represents(w, lab):
                steps.append("node")
                return w
    return None


def _case_edge(lab, private, px, x, steps):
    """Square {2, 3, 1, x} shares the edge 1-x with the rest."""
    rest = _sub(lab, private)
    if not _is_square_grid(rest):
        return None
    if x == 5:
        wr = _solve_sub(rest, steps)
        if wr[0] == 5:
            w = (3, 5, 1, 2) + wr[1:]
            if _represents(w, lab):
                steps.append("edge-third")
                return w
            # 1 keeps its neighbours from the rest, so it cannot move to the
            # front; 2 goes after x and again after the first 1 instead
            i = wr.index(1)
            w = (3, 5, 2) + wr[1:i + 1] + (2,) + wr[i + 1:]
            if _represents(w, lab):
                steps.append("edge-third-late")
                return w
    if len(rest) == 4:
        w = (3, 5, 6, 2, 5, 1, 2, 4)
        if _represents(w, lab):
            steps.append("edge-two-squares")
            return w
    # the rest, relabeled, has 5 in the role of 3 on the square {5, x, 1, 4}
    red, up = _reduce(rest)
    try:
        wr = _solve(red, steps, swapped=False)
        wr = normalize_representant(wr, _graph(red))
    except ValueError:
        return None
    wr = tuple(up[c] for c in wr)
    i1, i4 = wr.index(1), wr.index(4)
    if wr[0] != 5 or i4 < i1:
        return None
    w = (3, 5) + wr[1:i1] + (2, 5, 1, 2) + wr[i1 + 1:]
    if _represents(w, lab):
        steps.append("edge")
        return w
    return None


def _case_pendant(lab, private, x, steps):
    """Square {2, 3, x, 1} meets the rest only at 1."""
    rest = _sub(lab, private)
    if x != 4 or not _is_square_grid(rest):
        return None
    wr = _solve_sub(rest, steps)
    i = wr.index(1)
    w = (3, 4, 2) + wr[:i + 1] + (2,) + wr[i + 1:]
    if _represents(w, lab):
        steps.append("pendant")
        return w
    return None


def _case_swap(lab, steps):
    """1 and 2 have the same neighbours outside the square, so swap them."""
    swap = {1: 2, 2: 1}
    other = {p: swap.get(v, v) for p, v in lab.items()}
    if not is_good_labeling(_graph(other)):
        return None
    steps.append("swap")
    w = _solve(other, steps, swapped=True)
    w = tuple(swap.get(c, c) for c in w)
    if not _represents(w, lab):
        # only the pair 1, 2 can break; a trailing 2 makes it a non-edge again
        w = w + (2,)
    return w if _represents(w, lab) else None
