"""Geometric detection of the forbidden induced subgraphs X and long even cycles."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .embedding import GridEmbedding, Kind, _require, neighbors

# X in its reference position: an L of three unit squares with a pendant
# hanging off the node that lies on only one of them.
X_POINTS = ((-1, 0), (0, 0), (0, 1), (0, 2), (1, 2), (1, 1), (1, 0), (2, 0), (2, 1))


@dataclass(frozen=True)
class FCheck:
    avoiding: bool
    entry: Optional[str] = None  # "X" or "C<length>"
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.avoiding


def find_X(e: GridEmbedding) -> Optional[tuple]:
    """Point set inducing X, or None.

    In a lattice an induced X is exactly an L of three unit squares (a 3x3
    block of points with one corner left out of the set) plus a point next to
    the opposite corner, outside the block.  Whether the left-out corner is
    present in ``e`` does not matter, since it is not part of the set.
    """
    pts = e.points
    found = []
    for cx, cy in pts:
        # the centre of the block lies on all three squares, so it is present
        ox, oy = cx - 1, cy - 1
        block = [(ox + i, oy + j) for i in range(3) for j in range(3)]
        for skip in ((0, 0), (2, 0), (0, 2), (2, 2)):
            sk = (ox + skip[0], oy + skip[1])
            core = [p for p in block if p != sk]
            if not all(p in pts for p in core):
                continue
            corner = (ox + 2 - skip[0], oy + 2 - skip[1])
            for q in neighbors(corner):
                if q in pts and q not in block:
                    found.append(tuple(sorted(core + [q])))
    return min(found) if found else None


def chordless_cycles(e: GridEmbedding, min_length: int = 4):
    """Yield every chordless cycle of the induced graph as a tuple of points.

    Each cycle is produced once, starting at its smallest point (in row-major
    order) and oriented so the second point is smaller than the last.
    """
    order = e.sorted_points()
    idx = {p: i for i, p in enumerate(order)}
    adj = {p: [q for q in neighbors(p) if q in e.points] for p in order}

    for s in order:
        si = idx[s]
        path = [s]
        on_path = {s}

        def extend():
            last = path[-1]
            for v in adj[last]:
                if idx[v] <= si or v in on_path:
                    continue
                # v may touch only the last vertex, and s when it closes the cycle
                touches = [u for u in adj[v] if u in on_path and u != last]
                closes = s in touches
                if any(u != s for u in touches):
                    continue
                if closes:
                    if len(path) >= 2 and len(path) + 1 >= min_length and idx[path[1]] < idx[v]:
                        yield tuple(path) + (v,)
                    continue
                path.append(v)
                on_path.add(v)
                yield from extend()
                path.pop()
                on_path.discard(v)

        yield from extend()


def find_long_cycle(e: GridEmbedding, min_length: int = 8) -> Optional[tuple]:
    for c in chordless_cycles(e, min_length):
        return c
    return None


def is_F_avoiding(e: GridEmbedding) -> FCheck:
    """No induced X and no induced cycle of length at least 8."""
    _require(e, Kind.SQUARE_GRID)
    return f_check(e)


def f_check(e: GridEmbedding) -> FCheck:
    """Same test without the classification precondition."""
    x = find_X(e)
    if x is not None:
        return FCheck(False, "X", x)
    c = find_long_cycle(e, 8)
    if c is not None:
        return FCheck(False, f"C{len(c)}", tuple(sorted(c)))
    return FCheck(True)
