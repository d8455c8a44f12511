"""Constructing representants for square grid graphs by peeling end-squares.

The recursion keeps one square of the current graph in a fixed local form:
corners with labels 1, 3, 2 in a row around the square (3 adjacent to both
others), neither the 1 nor the 3 corner on any other square, and the word in
the shape ``3 w1 1 w2 2 w3`` with all letters of w1, w2, w3 at least 4.
A *role assignment* names which corner plays 1, 3, 2 and the fourth ("z").

Re-attaching a peeled square to such a square happens in one of five
geometric ways; each comes with an explicit word and leaves the new square
in the same local form, so the recursion can be steered: the caller asks
for a role assignment on the peeled square and the callee searches for one
on the exposed square that produces it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from ..graphs import LabeledGraph
from ..represent import is_normal_form, normalize_representant, split_normal_form, verify
from ..words import Word, format_word, shift
from .embedding import (SYMMETRIES, GridEmbedding, Kind, Square, apply_symmetry, classify,
                        squares, squares_of, to_labeled_graph, _end_squares)
from .forbidden import FCheck, f_check

ROLES = ("1", "3", "2", "z")
# role -> position in the local frame
FRAME = {"1": (0, 0), "3": (0, 1), "2": (1, 1), "z": (1, 0)}


@dataclass(frozen=True)
class Construction:
    embedding: GridEmbedding
    labeling: dict  # point -> label
    word: Word

    @property
    def graph(self) -> LabeledGraph:
        return to_labeled_graph(self.embedding, self.labeling)

    def to_dict(self) -> dict:
        return {"labeling": [[x, y, self.labeling[(x, y)]]
                             for x, y in self.embedding.sorted_points()],
                "word": format_word(self.word)}


class ExtensionCase:
    """One way of gluing a square onto the exposed square, in the local frame."""

    def __init__(self, number, corners, new_labels, roles, relabel, shift_by, compose):
        self.number = number
        self.corners = frozenset(corners)
        self.new_labels = new_labels  # frame point -> label of a new point
        self.roles = roles  # role of the glued square -> frame point
        self.relabel = relabel  # old 1, 3, 2 -> new label
        self.shift_by = shift_by  # added to every old label >= 4
        self.compose = compose  # (w1, w2, w3) already shifted -> new word

    def new_label(self, old: int) -> int:
        return self.relabel.get(old, old + self.shift_by)


CASES = (
    ExtensionCase(1, [(0, 1), (1, 1), (0, 2), (1, 2)], {(0, 2): 1, (1, 2): 3},
                  {"1": (0, 2), "3": (1, 2), "2": (1, 1), "z": (0, 1)}, {1: 4, 3: 5, 2: 2}, 2,
                  lambda a, b, c: (3, 5, 1) + a + (4,) + b + (2, 4) + c),
    ExtensionCase(2, [(0, 0), (1, 0), (0, -1), (1, -1)], {(1, -1): 1, (0, -1): 3},
                  {"1": (1, -1), "3": (0, -1), "2": (0, 0), "z": (1, 0)}, {1: 2, 3: 5, 2: 4}, 2,
                  lambda a, b, c: (3, 5) + a + (1, 5, 2) + b + (4,) + c),
    ExtensionCase(3, [(0, 0), (0, 1), (-1, 0), (-1, 1)], {(-1, 1): 1, (-1, 0): 3},
                  {"1": (-1, 1), "3": (-1, 0), "2": (0, 0), "z": (0, 1)}, {1: 2, 3: 5, 2: 4}, 2,
                  lambda a, b, c: (3, 5, 1) + a + (2,) + b + (4,) + c),
    ExtensionCase(4, [(0, 1), (-1, 1), (-1, 2), (0, 2)], {(-1, 1): 1, (-1, 2): 3, (0, 2): 2},
                  {"1": (-1, 1), "3": (-1, 2), "2": (0, 2), "z": (0, 1)}, {1: 4, 3: 6, 2: 5}, 3,
                  lambda a, b, c: (3, 6, 1, 2) + a + (4,) + b + (5,) + c),
    ExtensionCase(5, [(0, 0), (-1, -1), (-1, 0), (0, -1)], {(-1, -1): 1, (-1, 0): 3, (0, -1): 4},
                  {"1": (-1, -1), "3": (-1, 0), "2": (0, 0), "z": (0, -1)}, {1: 2, 3: 6, 2: 5}, 3,
                  lambda a, b, c: (3, 4, 1, 6) + a + (2,) + b + (5,) + c),
)


class Frame:
    """Affine lattice map sending a role assignment onto FRAME."""

    def __init__(self, roles: dict):
        self.origin = roles["1"]
        for sym in SYMMETRIES:
            if all(self.to_frame(roles[r], sym) == FRAME[r] for r in ROLES):
                self.sym = sym
                break
        else:
            raise ValueError(f"not a square role assignment: {roles}")

    def to_frame(self, p, sym=None):
        sym = self.sym if sym is None else sym
        return apply_symmetry(sym, (p[0] - self.origin[0], p[1] - self.origin[1]))

    def from_frame(self, q):
        # symmetries are orthogonal, so the inverse is the transpose
        a, b, c, d = self.sym
        x, y = a * q[0] + c * q[1], b * q[0] + d * q[1]
        return (x + self.origin[0], y + self.origin[1])


def role_assignments(s: Square) -> list:
    """The eight ways to place the local form on ``s``."""
    cyc = s.cycle
    out = []
    for i in range(4):
        for step in (1, -1):
            three = cyc[i]
            one = cyc[(i + step) % 4]
            two = cyc[(i - step) % 4]
            z = cyc[(i + 2) % 4]
            out.append({"1": one, "3": three, "2": two, "z": z})
    return out


def _free(e: GridEmbedding, p) -> bool:
    return len(squares_of(e)[p]) == 1


def _key(roles: dict) -> tuple:
    return tuple(roles[r] for r in ROLES)


def _base(roles: dict) -> tuple:
    lab = {roles["1"]: 1, roles["3"]: 3, roles["2"]: 2, roles["z"]: 4}
    return lab, (3, 4, 1, 2)


def _constructions(e: GridEmbedding, s: Square, want: dict, failed: set) -> Iterator[tuple]:
    """Yield (labeling, word) with ``s`` in local form under the roles ``want``."""
    key = (e.points, _key(want))
    if key in failed:
        return
    sqs = squares(e)
    if len(sqs) == 1:
        yield _base(want)
        return
    owners = squares_of(e)
    private = [p for p in s.corners if len(owners[p]) == 1]
    rest = e.without(private)
    produced = False
    if rest.is_connected() and classify(rest) == Kind.SQUARE_GRID:
        rest_owners = squares_of(rest)
        for t in squares(rest):
            if not set(t.corners) & set(s.corners):
                continue
            for rho in role_assignments(t):
                if len(rest_owners[rho["1"]]) != 1 or len(rest_owners[rho["3"]]) != 1:
                    continue
                frame = Frame(rho)
                local = frozenset(frame.to_frame(p) for p in s.corners)
                new_local = {frame.to_frame(p): p for p in private}
                for case in CASES:
                    if local != case.corners or set(new_local) != set(case.new_labels):
                        continue
                    if any(frame.from_frame(case.roles[r]) != want[r] for r in ROLES):
                        continue
                    for lab, word in _constructions(rest, t, rho, failed):
                        out = _extend(e, case, frame, lab, word)
                        if out is not None:
                            produced = True
                            yield out
    if not produced:
        failed.add(key)


def _extend(e: GridEmbedding, case: ExtensionCase, frame: Frame, lab: dict, word: Word):
    w1, w2, w3 = split_normal_form(word)
    s = case.shift_by
    new_word = case.compose(shift(w1, s), shift(w2, s), shift(w3, s))
    new_lab = {p: case.new_label(v) for p, v in lab.items()}
    for q, v in case.new_labels.items():
        new_lab[frame.from_frame(q)] = v
    g = to_labeled_graph(e, new_lab)
    verify(new_word, g)
    return new_lab, normalize_representant(new_word, g)


def _top_roles(e: GridEmbedding) -> list:
    out = []
    for s in _end_squares(e):
        for rho in role_assignments(s):
            if _free(e, rho["1"]) and _free(e, rho["3"]):
                out.append((s, rho))
    return out


def _trivial(e: GridEmbedding) -> Construction:
    pts = e.sorted_points()
    if len(pts) == 1:
        return Construction(e, {pts[0]: 1}, (1,))
    if len(pts) == 2:
        return Construction(e, {pts[0]: 1, pts[1]: 2}, (2, 1))
    raise ValueError("not a degenerate embedding")


def iter_constructions(e: GridEmbedding) -> Iterator[Construction]:
    """Every construction reachable by the peeling recursion, verified."""
    failed: set = set()
    for s, rho in _top_roles(e):
        for lab, word in _constructions(e, s, rho, failed):
            yield Construction(e, lab, word)


def build_representant(e: GridEmbedding):
    """A labeling and verified word for an F-avoiding square grid embedding.

    Returns a :class:`Construction`, or the failing :class:`FCheck` when the
    embedding contains X or an induced cycle of length at least 8.
    """
    kind = classify(e)
    if kind == Kind.DEGENERATE:
        return _trivial(e)
    if kind != Kind.SQUARE_GRID:
        raise ValueError(f"expected a SquareGrid embedding, got {kind.value}")
    chk = f_check(e)
    if not chk.avoiding:
        return chk
    for c in iter_constructions(e):
        verify(c.word, c.graph)
        return c
    raise RuntimeError("no extension sequence found for an F-avoiding embedding")


# -- corner repetition ------------------------------------------------------

# the L of three squares, labeled as in the reference drawing; its corner
# node is the one labeled 4
L_TROMINO = {(0, 0): 4, (0, 1): 5, (0, 2): 1, (1, 2): 3, (1, 1): 2, (1, 0): 7, (2, 0): 6,
             (2, 1): 8}
L_TROMINO_WORD = (3, 5, 1, 7, 4, 8, 2, 4, 6)


def corner_pattern_ok(word: Word, labeling: dict, corners) -> bool:
    """Corner labels occur twice with exactly two letters between; others once."""
    corner_labels = {labeling[p] for p in corners}
    pos: dict = {}
    for i, x in enumerate(word):
        pos.setdefault(x, []).append(i)
    for x in labeling.values():
        p = pos.get(x, [])
        if x in corner_labels:
            if len(p) != 2 or p[1] - p[0] != 3:
                return False
        elif len(p) != 1:
            return False
    return True


def drop_redundant_copies(word: Word, g: LabeledGraph, keep=()) -> Word:
    """Greedily delete repeated letters while the word still represents ``g``."""
    from ..represent import represents

    w = list(word)
    changed = True
    while changed:
        changed = False
        for x in sorted(set(w)):
            if x in keep or w.count(x) < 2:
                continue
            for i in [i for i, y in enumerate(w) if y == x]:
                trial = w[:i] + w[i + 1:]
                if represents(trial, g).verdict:
                    w = trial
                    changed = True
                    break
    return tuple(w)


def _l_tromino_construction(e: GridEmbedding) -> Optional[Construction]:
    base = GridEmbedding.of(L_TROMINO)
    for sym in SYMMETRIES:
        moved = base.transformed(sym)
        if moved.key() == e.key():
            shift_to = (min(p[0] for p in e.points) - min(p[0] for p in moved.points),
                        min(p[1] for p in e.points) - min(p[1] for p in moved.points))
            lab = {}
            for p, v in L_TROMINO.items():
                q = apply_symmetry(sym, p)
                lab[(q[0] + shift_to[0], q[1] + shift_to[1])] = v
            return Construction(e, lab, L_TROMINO_WORD)
    return None


def build_corner_representant(e: GridEmbedding, budget: int = 10 ** 7) -> Construction:
    """A construction whose word repeats exactly the corner-node labels.

    Each corner label occurs twice with two letters between the copies and
    every other label occurs once.
    """
    from .embedding import corner_nodes

    kind = classify(e)
    if kind == Kind.DEGENERATE:
        return _trivial(e)
    if kind != Kind.SQUARE_GRID:
        raise ValueError(f"expected a SquareGrid embedding, got {kind.value}")
    chk = f_check(e)
    if not chk.avoiding:
        raise ValueError(f"embedding is not F-avoiding: contains {chk.entry}")
    corners = corner_nodes(e)
    special = _l_tromino_construction(e)
    if special is not None:
        verify(special.word, special.graph)
        return special
    for c in iter_constructions(e):
        g = c.graph
        w = drop_redundant_copies(c.word, g)
        if corner_pattern_ok(w, c.labeling, corners):
            verify(w, g)
            return Construction(e, c.labeling, w)
    # The peeling recursion is steered by role requests, and when an exposed
    # square touches the rest only at a node it can be forced into a gluing
    # that repeats a non-corner letter.  Search the good labelings instead.
    found = corner_pattern_search(e, corners, budget)
    if found is not None:
        return found
    raise RuntimeError("no construction with the corner repetition pattern found")


def corner_pattern_search(e: GridEmbedding, corners, budget: int = 10 ** 7):
    """Search good labelings for a word with the corner occurrence pattern."""
    from ..graphs import iter_good_orders

    shape = to_labeled_graph(e)
    pts = e.sorted_points()
    corner_vertices = {pts.index(p) + 1 for p in corners}
    spent = [0]
    for order in iter_good_orders(shape):
        lab = {pts[v - 1]: k for k, v in enumerate(order, start=1)}
        g = to_labeled_graph(e, lab)
        twice = {lab[p] for p in corners}
        w = _pattern_word(g, twice, 3, budget, spent)
        if w is not None:
            verify(w, g)
            assert corner_pattern_ok(w, lab, corners)
            return Construction(e, lab, w)
        if spent[0] > budget:
            return None
    return None


def _pattern_word(g: LabeledGraph, twice: set, gap: int, budget: int, spent: list):
    """Word where letters in ``twice`` occur twice, ``gap`` apart, others once."""
    n = g.n
    adj = [0] * (n + 1)
    for a, b in g.edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    full = ((1 << (n + 1)) - 1) & ~1
    low = [((1 << x) - 1) & ~1 for x in range(n + 1)]
    high = [full & ~((1 << (x + 1)) - 1) for x in range(n + 1)]
    failed = set()
    word: list = []

    def can_open(x, started, finished):
        return (finished & high[x]) == (adj[x] & high[x])

    def can_close(x, started):
        return (started & low[x]) == (~adj[x] & low[x])

    def rec(started, finished, pending):
        if finished == full:
            return True
        key = (started, finished, tuple(sorted((c, len(word) - p) for c, p in pending.items())))
        if key in failed:
            return False
        spent[0] += 1
        if spent[0] > budget:
            return False
        due = [c for c, p in pending.items() if len(word) - p == gap]
        if due:
            c = due[0]
            if can_close(c, started):
                word.append(c)
                del pending[c]
                if rec(started, finished | (1 << c), pending):
                    return True
                word.pop()
                pending[c] = len(word) - gap
        else:
            for x in range(1, n + 1):
                bit = 1 << x
                if started & bit or not can_open(x, started, finished):
                    continue
                if x in twice:
                    pending[x] = len(word)
                    word.append(x)
                    if rec(started | bit, finished, pending):
                        return True
                    word.pop()
                    del pending[x]
                elif can_close(x, started):
                    word.append(x)
                    if rec(started | bit, finished | bit, pending):
                        return True
                    word.pop()
        failed.add(key)
        return False

    return tuple(word) if rec(0, 0, {}) else None
