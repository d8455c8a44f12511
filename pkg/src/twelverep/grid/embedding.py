"""Finite sets of lattice points and the induced grid graphs they define."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from ..graphs import LabeledGraph

Point = tuple  # (x, y)

STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))

# the 8 lattice symmetries as (x, y) -> (a*x + b*y, c*x + d*y)
SYMMETRIES = (
    (1, 0, 0, 1), (0, -1, 1, 0), (-1, 0, 0, -1), (0, 1, -1, 0),
    (-1, 0, 0, 1), (1, 0, 0, -1), (0, 1, 1, 0), (0, -1, -1, 0),
)


def apply_symmetry(sym, p: Point) -> Point:
    a, b, c, d = sym
    return (a * p[0] + b * p[1], c * p[0] + d * p[1])


def invert_symmetry(sym):
    a, b, c, d = sym
    det = a * d - b * c
    return (d * det, -b * det, -c * det, a * det)


def neighbors(p: Point):
    x, y = p
    return [(x + dx, y + dy) for dx, dy in STEPS]


@dataclass(frozen=True)
class Square:
    """Unit cell with lower-left corner ``(x, y)``."""

    x: int
    y: int

    @property
    def corners(self) -> tuple:
        x, y = self.x, self.y
        return ((x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1))

    @property
    def cycle(self) -> tuple:
        """Corners in boundary order (counter-clockwise from lower left)."""
        return self.corners

    def edges(self) -> list:
        c = self.corners
        return [frozenset((c[i], c[(i + 1) % 4])) for i in range(4)]

    def __contains__(self, p) -> bool:
        return p in self.corners


class Kind(str, Enum):
    SQUARE_GRID = "SquareGrid"
    LINE_GRID = "LineGrid"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class GridEmbedding:
    points: frozenset

    def __post_init__(self):
        pts = frozenset((int(x), int(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)

    @classmethod
    def of(cls, points: Iterable) -> "GridEmbedding":
        return cls(frozenset(tuple(p) for p in points))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.sorted_points())

    def sorted_points(self) -> list:
        """Row-major order: by y, then x."""
        return sorted(self.points, key=lambda p: (p[1], p[0]))

    def canonical(self) -> "GridEmbedding":
        if not self.points:
            return self
        mx = min(p[0] for p in self.points)
        my = min(p[1] for p in self.points)
        return GridEmbedding(frozenset((x - mx, y - my) for x, y in self.points))

    def transformed(self, sym) -> "GridEmbedding":
        return GridEmbedding(frozenset(apply_symmetry(sym, p) for p in self.points))

    def key(self) -> tuple:
        """Encoding of the canonical (translated) form, usable for sorting."""
        return tuple(sorted(self.canonical().points))

    def free_key(self) -> tuple:
        """Minimal encoding over all 8 lattice symmetries."""
        return min(self.transformed(s).key() for s in SYMMETRIES)

    def edges(self) -> list:
        out = []
        for x, y in self.points:
            for q in ((x + 1, y), (x, y + 1)):
                if q in self.points:
                    out.append(((x, y), q))
        return out

    def adjacency(self) -> dict:
        adj = {p: [] for p in self.points}
        for a, b in self.edges():
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def is_connected(self) -> bool:
        if not self.points:
            return True
        start = next(iter(self.points))
        seen = {start}
        stack = [start]
        while stack:
            p = stack.pop()
            for q in neighbors(p):
                if q in self.points and q not in seen:
                    seen.add(q)
                    stack.append(q)
        return len(seen) == len(self.points)

    def default_labeling(self) -> dict:
        return {p: i for i, p in enumerate(self.sorted_points(), start=1)}

    def with_points(self, extra: Iterable) -> "GridEmbedding":
        return GridEmbedding(self.points | frozenset(extra))

    def without(self, drop: Iterable) -> "GridEmbedding":
        return GridEmbedding(self.points - frozenset(drop))

    def __str__(self) -> str:
        return format_embedding(self)


def to_labeled_graph(e: GridEmbedding, labeling: Optional[dict] = None) -> LabeledGraph:
    """Induced grid graph of ``e``; row-major labels unless ``labeling`` is given."""
    n = len(e)
    if labeling is None:
        labeling = e.default_labeling()
    else:
        if set(labeling) != set(e.points) or sorted(labeling.values()) != list(range(1, n + 1)):
            raise ValueError("labeling must be a bijection from the points onto 1..n")
    return LabeledGraph(n, frozenset((labeling[a], labeling[b]) for a, b in e.edges()))


def squares(e: GridEmbedding) -> list:
    pts = e.points
    out = [Square(x, y) for x, y in pts
           if (x + 1, y) in pts and (x, y + 1) in pts and (x + 1, y + 1) in pts]
    return sorted(out, key=lambda s: (s.y, s.x))


def squares_of(e: GridEmbedding) -> dict:
    """point -> list of squares containing it."""
    out = {p: [] for p in e.points}
    for s in squares(e):
        for c in s.corners:
            out[c].append(s)
    return out


def line_edges(e: GridEmbedding) -> list:
    """Edges lying on no square."""
    sq_edges = set()
    for s in squares(e):
        sq_edges.update(s.edges())
    return [ed for ed in e.edges() if frozenset(ed) not in sq_edges]


def classify(e: GridEmbedding) -> Kind:
    if len(e) <= 1 or not squares(e) and len(e.edges()) <= 1:
        return Kind.DEGENERATE
    if line_edges(e):
        return Kind.LINE_GRID
    return Kind.SQUARE_GRID


def _require(e: GridEmbedding, kind: Kind):
    got = classify(e)
    if got != kind:
        raise ValueError(f"expected a {kind.value} embedding, got {got.value}")


def end_squares(e: GridEmbedding) -> list:
    """Squares with an edge whose two endpoints lie on no other square."""
    _require(e, Kind.SQUARE_GRID)
    return _end_squares(e)


def _end_squares(e: GridEmbedding) -> list:
    owners = squares_of(e)
    out = []
    for s in squares(e):
        for ed in s.edges():
            a, b = tuple(ed)
            if len(owners[a]) == 1 and len(owners[b]) == 1:
                out.append(s)
                break
    return out


def free_edges(e: GridEmbedding, s: Square) -> list:
    """Edges of ``s`` (as corner pairs in boundary order) on no other square."""
    owners = squares_of(e)
    c = s.cycle
    out = []
    for i in range(4):
        a, b = c[i], c[(i + 1) % 4]
        if len(owners[a]) == 1 and len(owners[b]) == 1:
            out.append((a, b))
    return out


def shares_edge(s: Square, t: Square) -> bool:
    return len(set(s.corners) & set(t.corners)) == 2


def shares_node(s: Square, t: Square) -> bool:
    return len(set(s.corners) & set(t.corners)) == 1


def corner_nodes(e: GridEmbedding) -> set:
    """Nodes on exactly one square that is a non-end square sharing edges with two others."""
    _require(e, Kind.SQUARE_GRID)
    sqs = squares(e)
    ends = set(_end_squares(e))
    owners = squares_of(e)
    out = set()
    for p, own in owners.items():
        if len(own) != 1:
            continue
        s = own[0]
        if s in ends:
            continue
        if sum(1 for t in sqs if t != s and shares_edge(s, t)) == 2:
            out.add(p)
    return out


def private_points(e: GridEmbedding, s: Square) -> list:
    owners = squares_of(e)
    return [p for p in s.corners if len(owners[p]) == 1]


# -- file format -------------------------------------------------------------

def parse_embedding(text: str) -> GridEmbedding:
    """One ``x y`` pair per line, ``#`` comments; canonicalized on load."""
    pts = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 2:
            raise ValueError(f"bad embedding line: {line!r}")
        pts.append((int(parts[0]), int(parts[1])))
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate points in embedding")
    e = GridEmbedding.of(pts)
    if not e.points:
        raise ValueError("empty embedding")
    if not e.is_connected():
        raise ValueError("embedding is not connected")
    return e.canonical()


def format_embedding(e: GridEmbedding, header: str = "") -> str:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines += [f"{x} {y}" for x, y in e.sorted_points()]
    return "\n".join(lines) + "\n"


def load_embedding(path) -> GridEmbedding:
    with open(path) as fh:
        return parse_embedding(fh.read())


def ascii_art(e: GridEmbedding, labels: Optional[dict] = None) -> str:
    """Small text drawing, top row first."""
    if not e.points:
        return ""
    xs = [p[0] for p in e.points]
    ys = [p[1] for p in e.points]
    width = max(len(str(v)) for v in labels.values()) if labels else 1
    rows = []
    for y in range(max(ys), min(ys) - 1, -1):
        row = []
        gap = []
        for x in range(min(xs), max(xs) + 1):
            p = (x, y)
            if p in e.points:
                row.append(str(labels[p]).rjust(width) if labels else "o")
            else:
                row.append(" " * width)
            if x < max(xs):
                row.append("-" if p in e.points and (x + 1, y) in e.points else " ")
            gap.append(("|" if p in e.points and (x, y - 1) in e.points else " ").rjust(width))
            if x < max(xs):
                gap.append(" ")
        rows.append("".join(row).rstrip())
        if y > min(ys):
            rows.append("".join(gap).rstrip())
    return "\n".join(rows)
