"""Tour of the two counting engines and the classic families they verify.

The brute-force engine walks every column insertion; the transfer engine
keeps only the rank pair of the rightmost column.  They agree everywhere,
and the classic families come out: Catalan numbers, double factorials,
secant numbers, smooth lattice paths, Fibonacci, whirlpool permutations.
"""

from stdpuzzle import (Support, corner_table, count_bruteforce, count_dp,
                       double_factorial, enumerate_puzzles, fibonacci,
                       lattice_L, secant, whirlpool_W)

families = [
    ("A2,A3", "Catalan numbers", lambda n: None),
    ("A1,A2,A3", "(2n+1)!!", lambda n: double_factorial(2 * n + 1)),
    ("A1,A2", "(2n)!!", lambda n: double_factorial(2 * n)),
    ("A1,A2,A3,A4,A5", "secant numbers S(n+1)", lambda n: secant(n + 1)),
    ("A1,A2,A4,A5", "smooth lattice paths L(n+1)", lambda n: lattice_L(n + 1)),
    ("A1,B1,C1", "Fibonacci F(n+3)", lambda n: fibonacci(n + 3)),
    ("A1,A4,B3,B6,C3,C6,D1,D4", "whirlpool W(n+1)", lambda n: whirlpool_W(n + 1)),
]

for codes, label, reference in families:
    support = Support.parse(codes)
    counts = [count_dp(support, n) for n in range(1, 6)]
    print(f"{{{codes}}}: {counts}   <- {label}")
    for n in range(1, 6):
        try:
            expected = reference(n)
        except ValueError:
            break  # reference oracle bounded below n=5
        if expected is not None:
            assert counts[n - 1] == expected

print()
print("Both engines agree (brute force walks the whole tree):")
support = Support.parse("A2,A3,B5")
for n in (1, 2, 3, 4):
    print(f"  n={n}: dp={count_dp(support, n)}, brute={count_bruteforce(support, n)}")

print()
print("The five 2-piece Catalan puzzles:")
for p in enumerate_puzzles(Support.parse("A2,A3"), 2):
    print("  ", p)

print()
print("Corner refinement (counts by the last column's rank pair), 3 columns")
print("over {A1,A2,A3}:")
table = corner_table(Support.parse("A1,A2,A3"), 3)
for (u, v), count in sorted(table.entries.items()):
    print(f"  bottom-right rank {u}, top-right rank {v}: {count}")
print("  total:", table.total(), "= count of 2-piece puzzles",
      count_dp(Support.parse("A1,A2,A3"), 2))
