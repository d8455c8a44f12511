"""Lines attached to grid graphs: suitability, gluing, necessary conditions."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from ..represent import verify
from ..words import Word
from .embedding import (STEPS, GridEmbedding, Kind, _require, classify, corner_nodes,
                        end_squares, neighbors, squares, to_labeled_graph)

Point = tuple


@dataclass(frozen=True)
class Suitability:
    suitable: bool
    straight: bool = False  # some witness path runs in a single direction
    path: tuple = ()

    def __bool__(self) -> bool:
        return self.suitable


def attachable_paths(e: GridEmbedding, v: Point, k: int) -> Iterator[tuple]:
    """Lattice paths of ``k`` new points hanging off ``v`` as an induced path."""
    if v not in e.points:
        raise ValueError(f"{v} is not a point of the embedding")
    if k < 1:
        raise ValueError("k must be positive")
    pts = e.points
    path: list = []

    def clean(q, prev) -> bool:
        # q may touch only prev among the old points and the path so far
        if q in pts or q in path:
            return False
        return all(r == prev or (r not in pts and r not in path) for r in neighbors(q))

    def grow(prev):
        if len(path) == k:
            yield tuple(path)
            return
        for dx, dy in STEPS:
            q = (prev[0] + dx, prev[1] + dy)
            if clean(q, prev):
                path.append(q)
                yield from grow(q)
                path.pop()

    yield from grow(v)


def _is_straight(v, path) -> bool:
    seq = (v,) + tuple(path)
    steps = {(b[0] - a[0], b[1] - a[1]) for a, b in zip(seq, seq[1:])}
    return len(steps) == 1


def k_suitable(e: GridEmbedding, v: Point, k: int) -> Suitability:
    """Whether an induced path of length ``k`` can be attached at ``v``.

    Turns are allowed; ``straight`` tells whether a straight path also works.
    """
    first = None
    for p in attachable_paths(e, v, k):
        if classify(e.with_points(p)) != Kind.LINE_GRID:
            continue
        if _is_straight(v, p):
            return Suitability(True, True, p)
        if first is None:
            first = p
    if first is None:
        return Suitability(False)
    return Suitability(True, False, first)


# -- gluing a pendant --------------------------------------------------------

@dataclass(frozen=True)
class Glued:
    embedding: GridEmbedding
    labeling: dict
    word: Word
    new_point: Point
    case: str  # "local-max" | "local-min"

    @property
    def graph(self):
        return to_labeled_graph(self.embedding, self.labeling)


class CornerNodeError(ValueError):
    """A pendant at a corner node would induce X, so the result is never representable."""


def glue_line_length1(e: GridEmbedding, v: Point, word, labeling: dict,
                      new_point: Optional[Point] = None) -> Glued:
    """Attach one new point at ``v`` and extend the word accordingly.

    ``word`` must represent ``e`` under ``labeling`` with the label of ``v``
    occurring once.  Square grids are checked for corner nodes.
    """
    word = tuple(word)
    if v not in e.points:
        raise ValueError(f"{v} is not a point of the embedding")
    if classify(e) == Kind.SQUARE_GRID and v in corner_nodes(e):
        raise CornerNodeError(f"{v} is a corner node; gluing there induces X")
    g = to_labeled_graph(e, labeling)
    verify(word, g)
    i = labeling[v]
    if word.count(i) != 1:
        raise ValueError(f"label {i} of {v} must occur exactly once in the word")
    if new_point is None:
        options = [p[0] for p in attachable_paths(e, v, 1)
                   if classify(e.with_points(p)) == Kind.LINE_GRID]
        if not options:
            raise ValueError(f"{v} is not 1-suitable")
        new_point = options[0]
    elif not any(p == (new_point,) for p in attachable_paths(e, v, 1)):
        raise ValueError(f"{new_point} does not hang off {v} as a pendant")
    nbrs = g.neighbors(i)
    if all(u < i for u in nbrs):
        case = "local-max"
        lab = {p: (x + 1 if x >= i else x) for p, x in labeling.items()}
        lab[new_point] = i
        body = []
        for c in word:
            if c == i:
                body += [i + 1, i]
            else:
                body.append(c + 1 if c > i else c)
        new_word = tuple(body) + (i,)
    elif all(u > i for u in nbrs):
        case = "local-min"
        lab = {p: (x + 1 if x > i else x) for p, x in labeling.items()}
        lab[new_point] = i + 1
        body = []
        for c in word:
            if c == i:
                body += [i + 1, i]
            else:
                body.append(c + 1 if c > i else c)
        new_word = (i + 1,) + tuple(body)
    else:
        raise ValueError(f"label {i} is neither a local maximum nor a local minimum")
    out = e.with_points([new_point])
    verify(new_word, to_labeled_graph(out, lab))
    return Glued(out, lab, new_word, new_point, case)


# -- necessary conditions for line grid graphs -----------------------------

@dataclass(frozen=True)
class LineViolation:
    rule: str  # "addline2" | "lineaddline"
    root: Point
    witness: tuple

    def to_dict(self) -> dict:
        return {"rule": self.rule, "root": list(self.root),
                "witness": [list(p) for p in self.witness]}


def square_components(e: GridEmbedding) -> list:
    """Point sets of the maximal groups of squares linked through shared nodes."""
    sqs = squares(e)
    parent = list(range(len(sqs)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    owner: dict = {}
    for k, s in enumerate(sqs):
        for p in s.corners:
            if p in owner:
                parent[find(k)] = find(owner[p])
            else:
                owner[p] = k
    groups: dict = {}
    for k, s in enumerate(sqs):
        groups.setdefault(find(k), set()).update(s.corners)
    return sorted((frozenset(g) for g in groups.values()), key=lambda g: sorted(g))


def _addline2(e: GridEmbedding) -> list:
    out = []
    on_square = {p for s in squares(e) for p in s.corners}
    for comp in square_components(e):
        sub = GridEmbedding(comp)
        if classify(sub) != Kind.SQUARE_GRID or not sub.is_connected():
            continue
        ends = {p for s in end_squares(sub) for p in s.corners}
        for r in sorted(comp - ends):
            for p1 in neighbors(r):
                if p1 not in e.points or p1 in on_square:
                    continue
                if any(q in comp and q != r for q in neighbors(p1)):
                    continue
                for p2 in neighbors(p1):
                    if p2 == r or p2 not in e.points or p2 in on_square:
                        continue
                    if any(q in comp for q in neighbors(p2)):
                        continue
                    out.append(LineViolation("addline2", r, (r, p1, p2)))
                    break
    return out


def _claw_witness(e: GridEmbedding, centre: Point, length: int = 3) -> Optional[tuple]:
    """An induced subdivided claw with three branches of ``length`` at ``centre``."""
    pts = e.points
    arms = [q for q in neighbors(centre) if q in pts]
    if len(arms) < 3:
        return None

    def branches(start):
        path = [start]

        def grow():
            if len(path) == length:
                yield tuple(path)
                return
            for q in neighbors(path[-1]):
                if q in pts and q != centre and q not in path:
                    path.append(q)
                    yield from grow()
                    path.pop()
        yield from grow()

    def induced_tree(nodes) -> bool:
        s = set(nodes)
        if len(s) != 3 * length + 1:
            return False
        edges = sum(1 for p in s for q in neighbors(p) if q in s) // 2
        return edges == 3 * length

    from itertools import combinations

    for trio in combinations(arms, 3):
        for a in branches(trio[0]):
            for b in branches(trio[1]):
                if set(a) & set(b):
                    continue
                for c in branches(trio[2]):
                    nodes = (centre,) + a + b + c
                    if induced_tree(nodes):
                        return nodes
    return None


def _lineaddline(e: GridEmbedding) -> list:
    out = []
    for c in e.sorted_points():
        w = _claw_witness(e, c)
        if w is not None:
            out.append(LineViolation("lineaddline", c, w))
    return out


def necessary_conditions_line(e: GridEmbedding) -> list:
    """Violations of the known necessary conditions for a line grid graph.

    ``addline2``: a line of length at least two leaves a square node that is
    on no end-square of its group of squares.  ``lineaddline``: an induced
    claw with three branches of length three.  An empty list does not imply
    representability.
    """
    _require(e, Kind.LINE_GRID)
    return _addline2(e) + _lineaddline(e)
