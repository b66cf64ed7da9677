"""Tour of the piece algebra: the 24 pieces, reduction, and supports.

A standard n-puzzle is a 2x(n+1) grid holding each of 1..2n+2 once.  Every
2x2 window of adjacent columns "reduces" to one of 24 standard pieces by
replacing its four labels with 1..4 in the same relative order.  The set
of distinct reductions is the puzzle's minimal support; counting puzzles
with a prescribed support is what the rest of the package is about.
"""

from stdpuzzle import (Puzzle, Support, is_supported, minimal_support,
                       piece_table, pieces_of, reduce_window)

print("The 24 standard pieces (code = category + index, letter = Han's code):")
for p in piece_table():
    print(f"  {p.code}  ({p.letter})   [{p.tl} {p.tr} / {p.bl} {p.br}]")

print()
print("Reduction standardizes any window of four distinct labels:")
for window in [(3, 6, 1, 2), (8, 7, 4, 5), (1, 2, 3, 4)]:
    print(f"  {window} -> {reduce_window(*window)}")

puzzle = Puzzle.parse("3 6 8 7 / 1 2 4 5")
print()
print(f"The 3-piece puzzle [{puzzle}] has windows:",
      ", ".join(str(q) for q in pieces_of(puzzle)))
print("so its minimal support is", minimal_support(puzzle))

big = Support.parse("A1,A2,A3")
print(f"It is supported by {big}: {is_supported(puzzle, big)}")
print(f"It is supported by A1 alone: {is_supported(puzzle, Support.parse('A1'))}")
