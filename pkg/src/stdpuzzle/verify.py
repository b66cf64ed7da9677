"""The verification suite: every published count the engine reproduces.

Each claim recomputes one family of results two independent ways (closed
form vs engine, engine vs engine, or formula vs exhaustive oracle) and
reports pass/fail with both value vectors.  One claim is deliberately
"flagged" rather than failing: the alternative Fibonacci offset that
circulates for the {A1,B1,C1} family disagrees with enumeration, and the
suite records that discrepancy instead of hiding it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from . import theorems
from .counting import (corner_table, count_bruteforce, count_corner_bottom,
                       count_corner_top, count_dp)
from .pieces import PIECES, Support, reduce_window
from .sequences import (catalan, catalan_triangle_t, double_factorial,
                        entringer, fibonacci, lattice_L, secant,
                        triangle_T, whirlpool_W)
from .skeleton import all_simple_pieces, drawn_edge_count

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_FLAGGED = "flagged"
STATUS_SKIPPED = "skipped"


@dataclass
class ClaimResult:
    claim: str
    description: str
    n_range: str
    status: str
    computed: list = field(default_factory=list)
    expected: list = field(default_factory=list)
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "description": self.description,
            "n_range": self.n_range,
            "status": self.status,
            "computed": [str(v) for v in self.computed],
            "expected": [str(v) for v in self.expected],
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    results: list

    @property
    def summary(self) -> dict:
        out = {STATUS_PASS: 0, STATUS_FAIL: 0, STATUS_FLAGGED: 0, STATUS_SKIPPED: 0}
        for r in self.results:
            out[r.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.summary[STATUS_FAIL] == 0

    def to_dict(self) -> dict:
        return {"claims": [r.to_dict() for r in self.results],
                "summary": self.summary}


def _vectors(claim, description, n_range, computed, expected, detail="") -> ClaimResult:
    status = STATUS_PASS if list(computed) == list(expected) else STATUS_FAIL
    return ClaimResult(claim, description, n_range, status,
                       list(computed), list(expected), detail)


def _count_down_up(length: int) -> int:
    """Brute-force count of permutations of 1..length with pattern
    down, up, down, ... (pruned backtracking; no recurrences)."""
    used = [False] * (length + 1)
    prefix: list[int] = []

    def rec() -> int:
        pos = len(prefix)
        if pos == length:
            return 1
        total = 0
        for v in range(1, length + 1):
            if used[v]:
                continue
            if pos:
                down = pos % 2 == 1  # comparison at positions (pos, pos+1)
                if down == (prefix[-1] < v):
                    continue
            used[v] = True
            prefix.append(v)
            total += rec()
            prefix.pop()
            used[v] = False
        return total

    return rec()


def _claim_pieces(nmax: int) -> ClaimResult:
    grids = {p.grid for p in PIECES}
    rules = {"A": (True, True), "B": (True, False), "C": (False, True),
             "D": (False, False)}
    consistent = all(
        (p.bl < p.tl, p.br < p.tr) == rules[p.category] for p in PIECES)
    idempotent = all(reduce_window(p.tl, p.tr, p.bl, p.br) == p for p in PIECES)
    computed = [len(PIECES), len(grids), consistent, idempotent]
    return _vectors("pieces", "24 distinct pieces, category rules, reduction idempotent",
                    "-", computed, [24, 24, True, True])


def _claim_catalan(nmax: int) -> ClaimResult:
    hi = min(nmax, 8)
    s = Support.parse("A2,A3")
    return _vectors("catalan", "counts for {A2,A3} are the Catalan numbers",
                    f"1..{hi}",
                    [count_dp(s, n) for n in range(1, hi + 1)],
                    [catalan(n + 1) for n in range(1, hi + 1)])


def _claim_double_factorial(nmax: int) -> ClaimResult:
    hi = min(nmax, 8)
    a123, a12 = Support.parse("A1,A2,A3"), Support.parse("A1,A2")
    computed = [count_dp(a123, n) for n in range(1, hi + 1)] + \
        [count_dp(a12, n) for n in range(1, hi + 1)]
    expected = [double_factorial(2 * n + 1) for n in range(1, hi + 1)] + \
        [double_factorial(2 * n) for n in range(1, hi + 1)]
    return _vectors("double-factorial",
                    "{A1,A2,A3} counts (2n+1)!!, {A1,A2} counts (2n)!!",
                    f"1..{hi}", computed, expected)


def _claim_secant(nmax: int) -> ClaimResult:
    hi = min(nmax, 5)
    s = Support.parse("A1,A2,A3,A4,A5")
    computed = [count_dp(s, n) for n in range(1, hi + 1)]
    expected = [secant(n + 1) for n in range(1, hi + 1)]
    # Independent confirmation of the secant values themselves.
    for k in range(1, min(hi + 1, 5) + 1):
        computed.append(_count_down_up(2 * k))
        expected.append(secant(k))
    return _vectors("secant", "counts for {A1..A5} are the secant numbers "
                    "(confirmed by brute-force down-up permutation counts)",
                    f"1..{hi}", computed, expected)


def _claim_lattice(nmax: int) -> ClaimResult:
    hi = min(nmax, 6)
    s = Support.parse("A1,A2,A4,A5")
    return _vectors("lattice-paths",
                    "counts for {A1,A2,A4,A5} are the smooth lattice-path numbers",
                    f"1..{hi}",
                    [count_dp(s, n) for n in range(1, hi + 1)],
                    [lattice_L(n + 1) for n in range(1, hi + 1)])


def _claim_fibonacci(nmax: int) -> ClaimResult:
    hi = min(nmax, 8)
    computed, expected = [], []
    for text in ("A1,B1,C1", "B1,C1,D1"):
        s = Support.parse(text)
        computed += [count_dp(s, n) for n in range(1, hi + 1)]
        expected += [fibonacci(n + 3) for n in range(1, hi + 1)]
    return _vectors("fibonacci",
                    "counts for {A1,B1,C1} and its flip are F(n+3)",
                    f"1..{hi}", computed, expected)


def _claim_fibonacci_alt(nmax: int) -> ClaimResult:
    hi = min(nmax, 6)
    s = Support.parse("A1,B1,C1")
    computed = [count_dp(s, n) for n in range(1, hi + 1)]
    alt = [fibonacci(n + 2) for n in range(1, hi + 1)]
    if computed == alt:
        return ClaimResult("fibonacci-alt-offset",
                           "the circulated F(n+2) variant for {A1,B1,C1}",
                           f"1..{hi}", STATUS_FAIL, computed, alt,
                           "the F(n+2) variant unexpectedly matched")
    return ClaimResult("fibonacci-alt-offset",
                       "the circulated F(n+2) variant for {A1,B1,C1}",
                       f"1..{hi}", STATUS_FLAGGED, computed, alt,
                       "known discrepancy in the published variant: counts "
                       "match F(n+3) (see claim 'fibonacci'), not F(n+2)")


def _claim_linear_family(nmax: int) -> ClaimResult:
    hi = min(nmax, 6)
    computed, expected = [], []
    for text in ("A1,B1,D1", "A1,C1,D1"):
        s = Support.parse(text)
        computed += [count_dp(s, n) for n in range(1, hi + 1)]
        expected += [n + 2 for n in range(1, hi + 1)]
    return _vectors("linear-family",
                    "counts for {A1,B1,D1} and its flip are n+2",
                    f"1..{hi}", computed, expected)


def _claim_corner_refinements(nmax: int) -> ClaimResult:
    hi = min(nmax, 5)
    computed, expected = [], []
    a123 = Support.parse("A1,A2,A3")
    for n in range(1, hi + 1):
        for k in range(1, n + 2):
            computed.append(count_corner_bottom(a123, n, 2 * n - k + 2))
            expected.append(triangle_T(n, k))
    a23 = Support.parse("A2,A3")
    for n in range(1, hi + 1):
        for k in range(0, n + 1):
            computed.append(count_corner_bottom(a23, n, n + k + 1))
            expected.append(catalan_triangle_t(n, k))
    return _vectors("corner-refinements",
                    "bottom-corner refinements hit the weighted-Catalan and "
                    "ballot triangles",
                    f"1..{hi}", computed, expected)


def _claim_corner_entringer(nmax: int) -> ClaimResult:
    hi = min(nmax, 4)
    s = Support.parse("A1,A2,A3,A4,A5")
    computed, expected = [], []
    for n in range(1, hi + 1):
        for x in range(1, 2 * n + 3):
            computed.append(count_corner_bottom(s, n, x))
            expected.append(entringer(2 * n + 1, 2 * n + 2 - x))
        for x in range(1, 2 * n + 3):
            computed.append(count_corner_top(s, n, x))
            expected.append(0 if x == 1 else (x - 1) * entringer(2 * n, x - 2))
    return _vectors("corner-entringer",
                    "corner refinements of {A1..A5} are Entringer numbers",
                    f"1..{hi}", computed, expected)


def _claim_hypergeometric(nmax: int) -> ClaimResult:
    hi = min(max(nmax, 1), 20)
    computed, expected = [], []
    for n in range(1, hi + 1):
        computed.append(sum((k + 1) * triangle_T(n - 1, k) for k in range(1, n + 1)))
        expected.append(double_factorial(2 * n))
        lhs = sum((2 * n - k) * (k + 1) * triangle_T(n - 1, k)
                  for k in range(1, n + 1))
        assert lhs % 2 == 0
        computed.append(lhs // 2 + double_factorial(2 * n + 1))
        expected.append(2 ** n * _fact(n + 1))
        computed.append(sum(_comb(2 * n - k + 1, 2) * triangle_T(n - 1, k)
                            for k in range(1, n + 1)) + double_factorial(2 * n + 1))
        expected.append((n + 3) * double_factorial(2 * n + 1)
                        - double_factorial(2 * n + 2))
    return _vectors("hypergeometric-sums",
                    "the three weighted triangle sums equal their closed forms",
                    f"1..{hi}", computed, expected)


def _fact(k):
    import math
    return math.factorial(k)


def _comb(n, k):
    import math
    return math.comb(n, k) if 0 <= k <= n else 0


def _claim_simple_piece_table(nmax: int) -> ClaimResult:
    hi = min(nmax, 4)
    computed, expected = [], []
    for row in theorems.SIMPLE_PIECES:
        for n in range(1, hi + 1):
            computed.append(count_dp(row.support, n))
            expected.append(row.count(n))
    return _vectors("simple-piece-table",
                    "all 20 tabulated simple-piece formulas match the engine",
                    f"1..{hi}", computed, expected)


def _claim_simple_pieces(nmax: int) -> ClaimResult:
    per_class = [len(all_simple_pieces(i)) for i in (1, 2, 3, 4)]
    ones = all_simple_pieces(1)
    drawn = sorted(drawn_edge_count(s) for s in ones)
    group_sizes = sorted(drawn.count(e) for e in set(drawn))
    total = len({s for i in (1, 2, 3, 4) for s in all_simple_pieces(i)})
    table_match = {row.support for row in theorems.SIMPLE_PIECES} == set(ones)
    zero_tail = all(count_dp(s, n) == 0
                    for i in (2, 3) for s in all_simple_pieces(i) for n in (2, 3))
    computed = [per_class, sorted(set(drawn)), group_sizes, sum(group_sizes),
                total, table_match, zero_tail]
    expected = [[20, 20, 20, 20], [2, 3, 4, 5], sorted((1, 9, 8, 2)), 20,
                80, True, True]
    return _vectors("simple-pieces",
                    "20 simple pieces per class (80 total), drawn-skeleton "
                    "group sizes {1,2,8,9} over 2..5 edges, converter "
                    "classes die at n >= 2",
                    "-", computed, expected,
                    detail="the published grouping 1+9+8+2 pairs 9 with 3 "
                    "edges and 8 with 4; the consistent drawing statistic "
                    "gives 8 and 9 there (middle entries transposed, same "
                    "multiset and total)")


def _claim_converter_closed_forms(nmax: int) -> ClaimResult:
    hi = min(nmax, 4)
    computed, expected = [], []

    def run(fn, codes, i, lo=1):
        s = Support.parse(codes)
        for n in range(max(lo, 1), hi + 1):
            computed.append(count_dp(s, n))
            expected.append(fn(i, n))

    for i in range(1, 7):
        run(theorems.a123_plus_b, f"A1,A2,A3,B{i}", i)
        run(theorems.a12_plus_b, f"A1,A2,B{i}", i)
        run(theorems.a123_plus_c, f"A1,A2,A3,C{i}", i)
        run(theorems.a12_plus_c, f"A1,A2,C{i}", i, lo=1 if i == 3 else 2)
        run(theorems.a23_plus_b, f"A2,A3,B{i}", i)
        run(theorems.a2_plus_b, f"A2,B{i}", i)
    return _vectors("converter-closed-forms",
                    "every one-converter closed form matches the engine",
                    f"1..{hi}", computed, expected)


def _claim_entringer_closed_forms(nmax: int) -> ClaimResult:
    hi = min(nmax, 3)
    if hi < 2:
        return ClaimResult("entringer-closed-forms",
                           "{A1..A5}+B_i Entringer sums match the engine",
                           "-", STATUS_SKIPPED, [], [],
                           "needs nmax >= 2")
    computed, expected = [], []
    for i in range(1, 7):
        s = Support.parse(f"A1,A2,A3,A4,A5,B{i}")
        for n in range(2, hi + 1):
            computed.append(count_dp(s, n))
            expected.append(theorems.a12345_plus_b(i, n))
    return _vectors("entringer-closed-forms",
                    "{A1..A5}+B_i Entringer sums match the engine",
                    f"2..{hi}", computed, expected)


def _claim_converter_images(nmax: int) -> ClaimResult:
    hi = min(nmax, 3)
    computed, expected = [], []
    for codes in theorems._CONVERTER_FAMILIES:
        family = Support.parse(codes)
        for i in range(1, 7):
            _, j = theorems.converter_image(family, i)
            for n in range(1, hi + 1):
                computed.append(count_dp(family | Support.of(f"C{i}"), n))
                expected.append(count_dp(family | Support.of(f"B{j}"), n))
    return _vectors("converter-images",
                    "2-converter families count like their mapped 1-converter families",
                    f"1..{hi}", computed, expected)


def _claim_q_lemma(nmax: int) -> ClaimResult:
    computed, expected = [], []
    for m in range(1, 4):
        for p in range(1, 5 - m):
            for i in range(1, 2 * m):
                for j in range(1, 2 * m - i + 1):
                    for k in range(1, 2 * p):
                        for l in range(1, 2 * p - k + 1):
                            for which, fn in ((1, theorems.q1), (2, theorems.q2),
                                              (3, theorems.q3)):
                                computed.append(fn(i, j, k, l, m, p))
                                expected.append(
                                    _q_oracle(which, i, j, k, l, m, p))
    return _vectors("q-partition-lemma",
                    "the three split-counting formulas match exhaustive partitioning",
                    "m+p<=4", computed, expected)


def _q_oracle(which, i, j, k, l, m, p) -> int:
    total = 2 * m + 2 * p
    cnt = 0
    for a_part in combinations(range(1, total + 1), 2 * m):
        b_part = [x for x in range(1, total + 1) if x not in a_part]
        ai, aij = a_part[i - 1], a_part[i + j - 1]
        bk, bkl = b_part[k - 1], b_part[k + l - 1]
        if which == 1:
            cnt += ai < bk < bkl < aij
        elif which == 2:
            cnt += ai < bk < aij < bkl
        else:
            cnt += ai < aij < bk < bkl
    return cnt


def _claim_refinement_table(nmax: int) -> ClaimResult:
    hi = min(nmax + 1, 4)
    computed, expected = [], []
    for row in theorems.SIMPLE_PIECES:
        if not row.refinement_known:
            continue
        for m in range(1, hi + 1):
            table = corner_table(row.support, m).entries
            for i in range(1, 2 * m):
                for j in range(1, 2 * m - i + 1):
                    computed.append(theorems.px_refinement(row.x, i, j, m))
                    expected.append(table.get((i, i + j), 0))
    return _vectors("refinement-table",
                    "the per-family corner refinements match the DP tables",
                    f"m<={hi}", computed, expected)


def _claim_composition(nmax: int) -> ClaimResult:
    hi = min(nmax, 3)
    computed, expected = [], []
    for query in theorems.sample_composition_queries(12, nmax=hi):
        computed.append(theorems.compose(query))
        expected.append(count_dp(theorems.compose_support(query), query.n))
    for query in theorems.sample_composition_queries(6, nmax=hi, seed=7,
                                                     converter_kind="C"):
        computed.append(theorems.compose(query))
        expected.append(count_dp(theorems.compose_support(query), query.n))
    return _vectors("composition",
                    "the glued-family triple sum matches the engine "
                    "(both converter kinds)",
                    f"n<={hi}", computed, expected)


def _claim_flip_pair(nmax: int) -> ClaimResult:
    hi = min(nmax, 3)
    checks = []
    for r in (1, 2):
        for alpha in combinations(range(1, 7), r):
            for bits_p in range(1 << r):
                for bits_q in range(1 << r):
                    cp = {i: "AB"[bits_p >> t & 1] for t, i in enumerate(alpha)}
                    cq = {i: "CD"[bits_q >> t & 1] for t, i in enumerate(alpha)}
                    cp2 = {i: "AC"[bits_p >> t & 1] for t, i in enumerate(alpha)}
                    cq2 = {i: "BD"[bits_q >> t & 1] for t, i in enumerate(alpha)}
                    for n in range(1, hi + 1):
                        checks.append(theorems.flip_pair_identity(alpha, cp, cq, n))
                        checks.append(theorems.flip_pair_corollary(alpha, cp2, cq2, n))
    rng = random.Random(13)
    for _ in range(20):
        r = rng.randrange(3, 7)
        alpha = tuple(sorted(rng.sample(range(1, 7), r)))
        cp = {i: rng.choice("AB") for i in alpha}
        cq = {i: rng.choice("CD") for i in alpha}
        checks.append(theorems.flip_pair_identity(alpha, cp, cq, min(hi, 2)))
    return _vectors("flip-pair-identity",
                    "aligned converter/plain choices count twice the all-A family",
                    f"n<={hi}", [all(checks), len(checks)], [True, len(checks)])


def _claim_whirlpool(nmax: int) -> ClaimResult:
    hi = min(nmax, 3)
    s = Support.parse("A1,A4,B3,B6,C3,C6,D1,D4")
    return _vectors("whirlpool",
                    "the vortex-style support counts whirlpool permutations",
                    f"1..{hi}",
                    [count_dp(s, n) for n in range(1, hi + 1)],
                    [whirlpool_W(n + 1) for n in range(1, hi + 1)])


def _claim_product_identity(nmax: int) -> ClaimResult:
    hi = min(nmax, 3)
    checks = 0
    failures = []
    for size in range(1, 5):
        for classes in combinations("ABCD", size):
            for r in (1, 2):
                for alpha in combinations(range(1, 7), r):
                    for n in range(1, hi + 1):
                        lhs, rhs = theorems.product_identity_pair(classes, alpha, n)
                        checks += 1
                        if lhs != rhs:
                            failures.append((classes, alpha, n, lhs, rhs))
    return _vectors("product-identity",
                    "spreading a subscript-1 family across subscripts multiplies counts",
                    f"n<={hi}", [len(failures), checks], [0, checks])


def _claim_flip_invariance(nmax: int) -> ClaimResult:
    from .transforms import f1, f2, f3
    hi = min(nmax, 4)
    rng = random.Random(101)
    supports = [Support.parse(t) for t in
                ("A2,A3", "A1,A2,A3", "A1,B1,C1", "A1,A4,B3,B6,C3,C6,D1,D4")]
    for _ in range(20):
        size = rng.randrange(0, 25)
        supports.append(Support(frozenset(rng.sample(PIECES, size))))
    computed, expected = [], []
    for s in supports:
        for fmap in (f1, f2, f3):
            for n in range(1, hi + 1):
                computed.append(count_dp(s, n))
                expected.append(count_dp(fmap(s), n))
    return _vectors("flip-invariance",
                    "counts are invariant under the three piece-set bijections",
                    f"1..{hi}", computed, expected)


def _claim_engine_equivalence(nmax: int) -> ClaimResult:
    hi = min(nmax, 3)
    rng = random.Random(77)
    computed, expected = [], []
    for _ in range(30):
        size = rng.randrange(0, 25)
        s = Support(frozenset(rng.sample(PIECES, size)))
        for n in range(1, hi + 1):
            computed.append(count_dp(s, n))
            expected.append(count_bruteforce(s, n))
    return _vectors("engine-equivalence",
                    "the transfer DP agrees with brute-force enumeration",
                    f"1..{hi}", computed, expected)


CLAIMS = {
    "pieces": _claim_pieces,
    "catalan": _claim_catalan,
    "double-factorial": _claim_double_factorial,
    "secant": _claim_secant,
    "lattice-paths": _claim_lattice,
    "fibonacci": _claim_fibonacci,
    "fibonacci-alt-offset": _claim_fibonacci_alt,
    "linear-family": _claim_linear_family,
    "corner-refinements": _claim_corner_refinements,
    "corner-entringer": _claim_corner_entringer,
    "hypergeometric-sums": _claim_hypergeometric,
    "simple-piece-table": _claim_simple_piece_table,
    "simple-pieces": _claim_simple_pieces,
    "converter-closed-forms": _claim_converter_closed_forms,
    "entringer-closed-forms": _claim_entringer_closed_forms,
    "converter-images": _claim_converter_images,
    "q-partition-lemma": _claim_q_lemma,
    "refinement-table": _claim_refinement_table,
    "composition": _claim_composition,
    "flip-pair-identity": _claim_flip_pair,
    "whirlpool": _claim_whirlpool,
    "product-identity": _claim_product_identity,
    "flip-invariance": _claim_flip_invariance,
    "engine-equivalence": _claim_engine_equivalence,
}


def run_verification(scope="all", nmax: int = 3) -> VerificationReport:
    """Run the claim suite (all claims or a list of claim ids)."""
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    if scope == "all":
        names = list(CLAIMS)
    else:
        names = list(scope)
        unknown = [n for n in names if n not in CLAIMS]
        if unknown:
            raise ValueError(f"unknown claim ids: {', '.join(unknown)}")
    return VerificationReport([CLAIMS[name](nmax) for name in names])
