"""The two counting engines: brute-force enumeration and a rank-profile DP.

Both engines build puzzles column by column.  After m columns only the
relative order of the 2m placed labels matters, and a window's piece is
fixed by four values: the previous column's (bottom, top) ranks and the
new column's.  The brute-force engine walks the whole choice tree (and can
materialize the puzzles); the DP engine collapses the tree onto the state
"(u, v) = merged ranks of the rightmost column", which is exactly the
corner-refined count table.

Extending a state (u, v) over 2m labels by a new column with ranks
(u', v') among 2m+2: the old ranks shift to their positions in
{1..2m+2} minus {u', v'}, and the window (old column, new column) must
reduce to a supported piece.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Iterator, Mapping

from .pieces import _PATTERN_ORDINAL, Puzzle, Support

#: Ceiling for exhaustive enumeration; the tree has up to (2n+2)!/2 leaves.
BRUTE_FORCE_BOUND = 5


def _check_brute_bound(n: int, bound: int) -> None:
    if n < 1:
        raise ValueError("puzzles need n >= 1 pieces")
    if n > bound:
        raise ValueError(f"n={n} exceeds the brute-force bound {bound}")


@lru_cache(maxsize=4096)
def _dp_layer(mask: int, m: int) -> Mapping[tuple[int, int], int]:
    """Corner-count table after m columns for the support bitmask."""
    if m == 1:
        return MappingProxyType({(1, 2): 1, (2, 1): 1})
    prev = _dp_layer(mask, m - 1)
    size = 2 * m
    pattern = _PATTERN_ORDINAL
    out: dict[tuple[int, int], int] = defaultdict(int)
    for (u, v), cnt in prev.items():
        for u2 in range(1, size + 1):
            for v2 in range(1, size + 1):
                if v2 == u2:
                    continue
                if u2 < v2:
                    lo, hi1 = u2, v2 - 1
                else:
                    lo, hi1 = v2, u2 - 1
                au = u + (u >= lo) + (u >= hi1)
                av = v + (v >= lo) + (v >= hi1)
                # window: TL = av, TR = v2, BL = au, BR = u2
                key = ((av > v2) << 5 | (av > au) << 4 | (av > u2) << 3
                       | (v2 > au) << 2 | (v2 > u2) << 1 | (au > u2))
                if mask >> pattern[key] & 1:
                    out[(u2, v2)] += cnt
    return MappingProxyType(dict(out))


@dataclass(frozen=True)
class CornerTable:
    """Counts of m-column puzzles refined by the last column's rank pair.

    entries[(u, v)] counts puzzles whose bottom-right label has rank u and
    top-right label rank v among all 2m labels.
    """

    columns: int
    entries: Mapping[tuple[int, int], int]

    def total(self) -> int:
        return sum(self.entries.values())

    def bottom_sum(self, x: int) -> int:
        self._check_rank(x)
        return sum(c for (u, _), c in self.entries.items() if u == x)

    def top_sum(self, x: int) -> int:
        self._check_rank(x)
        return sum(c for (_, v), c in self.entries.items() if v == x)

    def _check_rank(self, x: int) -> None:
        if not 1 <= x <= 2 * self.columns:
            raise ValueError(f"rank {x} out of range 1..{2 * self.columns}")


def corner_table(support: Support, m: int) -> CornerTable:
    """The DP table after m columns (m-1 pieces)."""
    if m < 1:
        raise ValueError("corner_table needs m >= 1")
    return CornerTable(m, dict(_dp_layer(support.mask, m)))


def count_dp(support: Support, n: int) -> int:
    """Number of standard n-puzzles supported by `support`, via the rank DP."""
    if n < 1:
        raise ValueError("puzzles need n >= 1 pieces")
    return sum(_dp_layer(support.mask, n + 1).values())


def count_corner_bottom(support: Support, n: int, x: int) -> int:
    """Puzzles with label x in the bottom-right corner."""
    return corner_table(support, n + 1).bottom_sum(x)


def count_corner_top(support: Support, n: int, x: int) -> int:
    """Puzzles with label x in the top-right corner."""
    return corner_table(support, n + 1).top_sum(x)


@lru_cache(maxsize=64)
def _transition_table(m: int) -> Mapping[tuple[int, int], tuple]:
    """For each rank pair over 2m labels: every next-column rank pair over
    2m+2 labels with the piece the window reduces to."""
    pattern = _PATTERN_ORDINAL
    size = 2 * m + 2
    table = {}
    for u in range(1, 2 * m + 1):
        for v in range(1, 2 * m + 1):
            if v == u:
                continue
            moves = []
            for u2 in range(1, size + 1):
                for v2 in range(1, size + 1):
                    if v2 == u2:
                        continue
                    if u2 < v2:
                        lo, hi1 = u2, v2 - 1
                    else:
                        lo, hi1 = v2, u2 - 1
                    au = u + (u >= lo) + (u >= hi1)
                    av = v + (v >= lo) + (v >= hi1)
                    key = ((av > v2) << 5 | (av > au) << 4 | (av > u2) << 3
                           | (v2 > au) << 2 | (v2 > u2) << 1 | (au > u2))
                    moves.append((u2, v2, pattern[key]))
            table[(u, v)] = tuple(moves)
    return MappingProxyType(table)


def count_bruteforce(support: Support, n: int, bound: int = BRUTE_FORCE_BOUND) -> int:
    """Ground-truth count by walking the whole column-insertion tree.

    No state merging: every supported puzzle corresponds to one root-leaf
    path (the final level is summed in place rather than materialized).
    """
    _check_brute_bound(n, bound)
    mask = support.mask
    allowed = {}
    for m in range(1, n + 1):
        allowed[m] = {
            state: tuple((u2, v2) for (u2, v2, pid) in moves if mask >> pid & 1)
            for state, moves in _transition_table(m).items()
        }
    last = allowed[n]

    def rec(u: int, v: int, m: int) -> int:
        if m == n:
            return len(last[(u, v)])
        total = 0
        nxt = m + 1
        for u2, v2 in allowed[m][(u, v)]:
            total += rec(u2, v2, nxt)
        return total

    return rec(1, 2, 1) + rec(2, 1, 1)


def _gen(top: tuple[int, ...], bottom: tuple[int, ...], n: int,
         mask: int) -> Iterator[Puzzle]:
    m = len(top)
    if m == n + 1:
        yield Puzzle(top, bottom)
        return
    u, v = bottom[-1], top[-1]
    for u2, v2, pid in _transition_table(m)[(u, v)]:
        if mask >> pid & 1:
            lo, hi1 = (u2, v2 - 1) if u2 < v2 else (v2, u2 - 1)
            yield from _gen(
                tuple(x + (x >= lo) + (x >= hi1) for x in top) + (v2,),
                tuple(y + (y >= lo) + (y >= hi1) for y in bottom) + (u2,),
                n, mask)


def enumerate_puzzles(support: Support, n: int,
                      bound: int = BRUTE_FORCE_BOUND) -> list[Puzzle]:
    """All supported n-puzzles, sorted lexicographically by (bottom, top)."""
    _check_brute_bound(n, bound)
    mask = support.mask
    found = list(_gen((2,), (1,), n, mask))
    found.extend(_gen((1,), (2,), n, mask))
    found.sort(key=lambda p: (p.bottom, p.top))
    return found
