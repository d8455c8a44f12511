"""Words over the positive integers and the pattern machinery on them.

Words are plain tuples of ints.  Every function accepts any iterable of ints
and returns a tuple, so results can be hashed and compared directly.
"""
from __future__ import annotations

from typing import Iterable, Optional, Sequence

Word = tuple


def as_word(letters: Iterable[int]) -> Word:
    w = tuple(int(x) for x in letters)
    for x in w:
        if x < 1:
            raise ValueError(f"letters must be positive integers, got {x}")
    return w


def parse_word(text: str) -> Word:
    """Parse a word from its text form.

    Space-separated integers are the canonical form.  A bare run of digits
    such as ``3412`` is read one letter per digit, which is how the short
    words in the literature are usually written.
    """
    text = text.strip()
    if not text:
        return ()
    parts = text.replace(",", " ").split()
    if len(parts) == 1 and parts[0].isdigit() and len(parts[0]) > 1:
        return as_word(int(c) for c in parts[0])
    return as_word(int(p) for p in parts)


def format_word(w: Sequence[int]) -> str:
    return " ".join(str(x) for x in w)


def alphabet(w: Iterable[int]) -> frozenset:
    return frozenset(w)


def restrict(w: Iterable[int], keep: Iterable[int]) -> Word:
    keep = set(keep)
    return tuple(x for x in w if x in keep)


def reduce_word(w: Iterable[int]) -> Word:
    w = tuple(w)
    rank = {x: i for i, x in enumerate(sorted(set(w)), start=1)}
    return tuple(rank[x] for x in w)


def is_reduced(u: Sequence[int]) -> bool:
    return tuple(u) == reduce_word(u)


def find_pattern(w: Sequence[int], u: Sequence[int]) -> Optional[tuple]:
    """Lexicographically first positions of an occurrence of ``u`` in ``w``.

    Returns 0-based positions, or None when ``w`` avoids ``u``.  Plain
    backtracking: patterns used here have length at most 4.
    """
    u = tuple(u)
    if not is_reduced(u):
        raise ValueError(f"pattern {u} is not in reduced form")
    w = tuple(w)
    m = len(u)
    if m == 0:
        return ()
    chosen: list[int] = []

    def consistent(pos: int) -> bool:
        k = len(chosen)
        for j, p in enumerate(chosen):
            a, b = u[j], u[k]
            x, y = w[p], w[pos]
            if (a < b) != (x < y) or (a == b) != (x == y):
                return False
        return True

    def extend(start: int) -> bool:
        if len(chosen) == m:
            return True
        for pos in range(start, len(w) - (m - len(chosen)) + 1):
            if consistent(pos):
                chosen.append(pos)
                if extend(pos + 1):
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if extend(0) else None


def contains_pattern(w: Sequence[int], u: Sequence[int]) -> bool:
    return find_pattern(w, u) is not None


def occurrences(w: Sequence[int], u: Sequence[int]) -> list:
    """All occurrences of ``u`` in ``w`` as position tuples (brute force)."""
    from itertools import combinations

    u = tuple(u)
    if not is_reduced(u):
        raise ValueError(f"pattern {u} is not in reduced form")
    w = tuple(w)
    return [c for c in combinations(range(len(w)), len(u))
            if reduce_word(w[i] for i in c) == u]


def reverse_complement(w: Sequence[int], n: int) -> Word:
    """Reverse ``w`` and replace every letter x by n + 1 - x."""
    w = tuple(w)
    for x in w:
        if not 1 <= x <= n:
            raise ValueError(f"letter {x} outside 1..{n}")
    return tuple(n + 1 - x for x in reversed(w))


def shift(w: Iterable[int], by: int) -> Word:
    return tuple(x + by for x in w)


def relabel(w: Iterable[int], mapping) -> Word:
    return tuple(mapping[x] for x in w)


def first_last(w: Sequence[int]) -> tuple:
    """Maps letter -> index of its first and of its last occurrence."""
    first: dict = {}
    last: dict = {}
    for i, x in enumerate(w):
        first.setdefault(x, i)
        last[x] = i
    return first, last
