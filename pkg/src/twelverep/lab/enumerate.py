"""Enumerating connected lattice point sets.

Point sets connected under 4-adjacency are polyominoes with points in the
role of cells, so the fixed enumeration is Redelmeier's algorithm.  Square
grid embeddings are generated more cheaply from their unit squares: a set of
unit cells connected through shared corners, grown while the union of their
corners stays within the point limit.
"""
from __future__ import annotations

from typing import Iterator

from ..grid.embedding import GridEmbedding, Kind, classify

FOUR = ((1, 0), (0, 1), (-1, 0), (0, -1))
EIGHT = FOUR + ((1, 1), (-1, 1), (-1, -1), (1, -1))


def _allowed(c) -> bool:
    # the origin is the smallest cell in (y, x) order
    return c[1] > 0 or (c[1] == 0 and c[0] >= 0)


def _redelmeier(limit: int, steps, weight) -> Iterator[list]:
    """Yield every connected set containing the origin as its smallest cell.

    ``weight(cells)`` must be monotone under adding cells; sets heavier than
    ``limit`` are cut off.  The yielded list is reused: copy it if kept.
    """
    origin = (0, 0)
    poly: list = []
    seen = {origin}

    def grow(untried: list):
        while untried:
            c = untried.pop()
            poly.append(c)
            if weight(poly) <= limit:
                yield poly
                new = []
                for dx, dy in steps:
                    nb = (c[0] + dx, c[1] + dy)
                    if _allowed(nb) and nb not in seen:
                        new.append(nb)
                seen.update(new)
                yield from grow(untried + new)
                seen.difference_update(new)
            poly.pop()

    yield from grow([origin])


def fixed_point_sets(max_points: int) -> Iterator[GridEmbedding]:
    """Every connected point set with at most ``max_points`` points, up to translation."""
    if max_points < 1:
        return
    for cells in _redelmeier(max_points, FOUR, len):
        yield GridEmbedding(frozenset(cells)).canonical()


def _corners(cells) -> set:
    pts = set()
    for x, y in cells:
        pts.update(((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)))
    return pts


def fixed_square_grids(max_points: int) -> Iterator[GridEmbedding]:
    """Every square grid embedding with at most ``max_points`` points, up to translation."""
    seen = set()
    for cells in _redelmeier(max_points, EIGHT, lambda cs: len(_corners(cs))):
        e = GridEmbedding(frozenset(_corners(cells))).canonical()
        k = e.key()
        if k in seen:
            continue
        seen.add(k)
        if classify(e) == Kind.SQUARE_GRID:
            yield e


def _dedupe_free(stream) -> list:
    best = {}
    for e in stream:
        fk = e.free_key()
        if fk not in best:
            best[fk] = GridEmbedding(frozenset(fk))
    return [best[k] for k in sorted(best, key=lambda k: (len(k), k))]


def enumerate_embeddings(max_points: int, symmetry: str = "free", *,
                         kind: Kind | None = None, min_points: int = 1) -> list:
    """Connected embeddings with ``min_points``..``max_points`` points.

    ``symmetry="fixed"`` keeps one representative per translation class,
    ``"free"`` one per class under the 8 lattice symmetries as well.
    ``kind`` filters by classification; asking for square grids switches to
    the faster generator.  The result is sorted by size, then encoding.
    """
    if max_points < 1:
        raise ValueError("max_points must be at least 1")
    if symmetry not in ("fixed", "free"):
        raise ValueError("symmetry must be 'fixed' or 'free'")
    if kind == Kind.SQUARE_GRID:
        stream = fixed_square_grids(max_points)
    else:
        stream = fixed_point_sets(max_points)
    stream = (e for e in stream if len(e) >= min_points and (kind is None or classify(e) == kind))
    if symmetry == "free":
        return _dedupe_free(stream)
    return sorted(stream, key=lambda e: (len(e), e.key()))
