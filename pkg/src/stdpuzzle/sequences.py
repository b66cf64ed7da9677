"""Closed-form and recurrence oracles for the classic sequences.

Everything here is independent of the puzzle engines: these are the
reference values the counting results get checked against.  Conventions at
the boundary indices follow the combinatorial definitions: (-1)!! = 0!! = 1,
T(n,0) = 0, t(n,n+1) = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional


def double_factorial(k: int) -> int:
    """k!! = k (k-2) (k-4) ...; (-1)!! = 0!! = 1."""
    if k < -1:
        raise ValueError(f"double factorial undefined for {k}")
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def catalan(k: int) -> int:
    """C(k) = binom(2k, k) / (k+1)."""
    if k < 0:
        raise ValueError("catalan index must be >= 0")
    return math.comb(2 * k, k) // (k + 1)


def fibonacci(k: int) -> int:
    """F(0) = 0, F(1) = 1, F(k) = F(k-1) + F(k-2)."""
    if k < 0:
        raise ValueError("fibonacci index must be >= 0")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def _entringer_row(n: int) -> tuple[int, ...]:
    # Boustrophedon: E(n,k) = E(n,k-1) + E(n-1,n-k), E(0,0) = 1, E(n,0) = 0.
    if n == 0:
        return (1,)
    prev = _entringer_row(n - 1)
    row = [0]
    for k in range(1, n + 1):
        row.append(row[k - 1] + prev[n - k])
    return tuple(row)


def entringer(n: int, k: int) -> int:
    """E(n,k): down-up permutations of n+1 elements starting with k+1."""
    if not 0 <= k <= n:
        raise ValueError(f"entringer index k={k} out of range 0..{n}")
    return _entringer_row(n)[k]


def secant(k: int) -> int:
    """Secant (even Euler) numbers 1, 1, 5, 61, 1385, ...: S(k) = E(2k, 2k)."""
    if k < 0:
        raise ValueError("secant index must be >= 0")
    return entringer(2 * k, 2 * k)


@lru_cache(maxsize=None)
def _triangle_t_row(n: int) -> tuple[int, ...]:
    # T(n,k) for k = 0..n+1 via T(n,k) = k * sum_{i=k-1}^{n} T(n-1,i).
    if n == 0:
        return (0, 1)
    prev = _triangle_t_row(n - 1)
    row = [0]
    for k in range(1, n + 2):
        row.append(k * sum(prev[max(k - 1, 0):n + 1]))
    return tuple(row)


def triangle_T(n: int, k: int) -> int:
    """Weighted Catalan-tree triangle: T(n,k) = k (2n-k+1)! / ((n-k+1)! 2^(n-k+1)).

    Both the closed form and the recurrence T(n,k) = k * sum T(n-1,i) are
    evaluated and must agree.  Defined for 1 <= k <= n+1, with T(n,0) = 0.
    """
    if n < 0 or not 0 <= k <= n + 1:
        raise ValueError(f"T({n},{k}) out of range")
    if k == 0:
        return 0
    closed = k * math.factorial(2 * n - k + 1) // (
        math.factorial(n - k + 1) << (n - k + 1))
    by_recurrence = _triangle_t_row(n)[k]
    if closed != by_recurrence:
        raise RuntimeError(f"T({n},{k}): closed form {closed} != recurrence {by_recurrence}")
    return closed


@lru_cache(maxsize=None)
def _ballot_row(n: int) -> tuple[int, ...]:
    # t(n,k) for k = 0..n via t(n,k) = sum_{j<=k} t(n-1,j).
    if n == 0:
        return (1,)
    prev = _ballot_row(n - 1)
    row = []
    acc = 0
    for k in range(n + 1):
        acc += prev[k] if k < n else 0
        row.append(acc)
    return tuple(row)


def catalan_triangle_t(n: int, k: int) -> int:
    """Ballot numbers t(n,k) = (n-k+1)/(n+1) binom(n+k, n), t(n,n+1) = 0."""
    if n < 0 or not 0 <= k <= n + 1:
        raise ValueError(f"t({n},{k}) out of range")
    if k == n + 1:
        return 0
    closed = (n - k + 1) * math.comb(n + k, n) // (n + 1)
    by_recurrence = _ballot_row(n)[k]
    if closed != by_recurrence:
        raise RuntimeError(f"t({n},{k}): closed form {closed} != recurrence {by_recurrence}")
    return closed


@lru_cache(maxsize=None)
def lattice_L(n: int, bound: int = 12) -> int:
    """Paths from (2,...,2) to (0,...,0) in n coordinates, one unit step down
    at a time, every visited point having |p_i - p_{i+1}| <= 1."""
    if n < 1:
        raise ValueError("lattice_L needs n >= 1")
    if n > bound:
        raise ValueError(f"n={n} exceeds the lattice-path bound {bound}")
    target = (0,) * n
    memo: dict[tuple[int, ...], int] = {}

    def smooth(state: tuple[int, ...]) -> bool:
        return all(abs(state[i] - state[i + 1]) <= 1 for i in range(len(state) - 1))

    def ways(state: tuple[int, ...]) -> int:
        if state == target:
            return 1
        got = memo.get(state)
        if got is not None:
            return got
        total = 0
        for i, v in enumerate(state):
            if v:
                nxt = state[:i] + (v - 1,) + state[i + 1:]
                if smooth(nxt):
                    total += ways(nxt)
        memo[state] = total
        return total

    return ways((2,) * n)


@lru_cache(maxsize=None)
def whirlpool_W(n: int, bound: int = 5) -> int:
    """Permutations p of 1..2n with p[2k-1] < p[2k]  iff  p[2k] < p[2k+1],
    counted by pruned backtracking."""
    if n < 1:
        raise ValueError("whirlpool_W needs n >= 1")
    if n > bound:
        raise ValueError(f"n={n} exceeds the whirlpool bound {bound}")
    size = 2 * n
    used = [False] * (size + 1)
    prefix: list[int] = []

    def ok_tail() -> bool:
        # Position j = 2k+1 just placed closes the comparison pair at k.
        j = len(prefix)
        if j >= 3 and j % 2 == 1:
            a, b, c = prefix[j - 3], prefix[j - 2], prefix[j - 1]
            return (a < b) == (b < c)
        return True

    def rec() -> int:
        if len(prefix) == size:
            return 1
        total = 0
        for v in range(1, size + 1):
            if not used[v]:
                used[v] = True
                prefix.append(v)
                if ok_tail():
                    total += rec()
                prefix.pop()
                used[v] = False
        return total

    return rec()


def multinomial_all_pairs(m: int) -> int:
    """(2m)! / 2^m: arrangements of m labeled pairs, each pair ordered."""
    if m < 1:
        raise ValueError("multinomial_all_pairs needs m >= 1")
    return math.factorial(2 * m) >> m


@dataclass(frozen=True)
class SequenceId:
    """A named reference sequence with an optional index cap for slow oracles."""

    name: str
    oeis: Optional[str]
    generator: Callable[[int], int]
    max_index: Optional[int] = None

    def terms(self, indices) -> Optional[list[int]]:
        """Values at the given indices, or None if any index is out of reach."""
        out = []
        for i in indices:
            if i < 0 or (self.max_index is not None and i > self.max_index):
                return None
            try:
                out.append(self.generator(i))
            except ValueError:
                return None
        return out


REGISTRY: tuple[SequenceId, ...] = (
    SequenceId("catalan", "A000108", catalan),
    SequenceId("double_factorial_odd", "A001147", lambda k: double_factorial(2 * k - 1)),
    SequenceId("double_factorial_even", "A000165", lambda k: double_factorial(2 * k)),
    SequenceId("secant", "A000364", secant),
    SequenceId("fibonacci", "A000045", fibonacci),
    SequenceId("lattice_smooth_paths", "A227656", lattice_L, max_index=12),
    SequenceId("whirlpool", "A261683", whirlpool_W, max_index=5),
    SequenceId("ordered_pair_arrangements", "A000680",
               lambda k: multinomial_all_pairs(k) if k else 1),
    SequenceId("all_ones", "A000012", lambda k: 1),
    SequenceId("naturals", "A000027", lambda k: k),
    SequenceId("powers_of_two", "A000079", lambda k: 1 << k),
)

#: Scale factors tried when matching counts against the registry.
MATCH_FACTORS = (Fraction(1), Fraction(2), Fraction(4, 3), Fraction(3, 2))
MATCH_OFFSETS = (0, 1, 2, 3)


def registry_matches(prefix: list[int], start: int = 1) -> list[dict]:
    """Identify a count prefix s_start, s_start+1, ... against the registry.

    Tries every registered sequence shifted by 0..3 and scaled by the small
    factor set; returns candidate matches ranked plain-first.
    """
    if not prefix:
        return []
    hits = []
    ns = range(start, start + len(prefix))
    for seq in REGISTRY:
        for offset in MATCH_OFFSETS:
            terms = seq.terms([n + offset for n in ns])
            if terms is None:
                continue
            for factor in MATCH_FACTORS:
                if all(factor * t == s for t, s in zip(terms, prefix)):
                    hits.append({
                        "name": seq.name,
                        "oeis": seq.oeis,
                        "offset": offset,
                        "factor": str(factor),
                        "label": "candidate match",
                    })
    hits.sort(key=lambda h: (h["factor"] != "1", h["offset"], h["name"]))
    return hits
