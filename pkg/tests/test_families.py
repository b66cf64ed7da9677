import pytest

from stdpuzzle.families import FamilySpec, iter_family_specs, sweep
from stdpuzzle.pieces import Support
from stdpuzzle.theorems import a123_plus_b
from stdpuzzle.transforms import f2


def test_descriptor_counts_match_family_arithmetic():
    assert sum(1 for _ in iter_family_specs(1)) == 19 * 2 ** 6 * 2 * 2
    assert sum(1 for _ in iter_family_specs(2)) == 19 * 19 * 2 ** 6 * 2


def test_include_open_adds_family_ten():
    specs = list(iter_family_specs(1, include_open=True))
    assert len(specs) == 20 * 2 ** 6 * 2 * 2
    open_rows = [s for s in specs if s.formula_free]
    assert open_rows and all(s.x == 10 for s in open_rows)


def test_spec_validation():
    with pytest.raises(ValueError):
        FamilySpec(3, 4, "B", frozenset())
    with pytest.raises(ValueError):
        FamilySpec(1, 4, "E", frozenset())
    with pytest.raises(ValueError):
        FamilySpec(1, 4, "B", frozenset({7}))
    with pytest.raises(ValueError):
        FamilySpec(1, 4, "B", frozenset(), z=5)
    with pytest.raises(ValueError):
        FamilySpec(2, 4, "B", frozenset(), z=5, mirrored=True)


def test_support_assembly():
    plain = FamilySpec(1, 4, "B", frozenset({1}))
    assert str(plain.support()) == "A1,A2,A3,B1"
    mirrored = FamilySpec(1, 4, "C", frozenset({2}), mirrored=True)
    assert str(mirrored.support()) == "C2,D1,D2,D3"
    assert mirrored.support() == f2(Support.parse("A1,A2,A3")) | Support.parse("C2")
    glued = FamilySpec(2, 4, "B", frozenset({1}), z=16)
    assert str(glued.support()) == "A1,A2,A3,B1,D4"


def test_single_family_prefix_matches_closed_form():
    row = next(r for r in sweep(1, 3, xs=[4])
               if r["converter_kind"] == "B" and r["converter_subset"] == "1"
               and not r["mirrored"])
    assert [int(v) for v in row["prefix"]] == [a123_plus_b(1, n) for n in (1, 2, 3)]
    assert row["match"] == "double_factorial_odd"


def test_sweep_rows_unique_and_duplicates_flagged():
    rows = list(sweep(1, 2, xs=[17]))
    assert len(rows) == 2 ** 6 * 2 * 2
    descriptors = {(r["x"], r["converter_kind"], r["converter_subset"],
                    r["mirrored"], r["z"]) for r in rows}
    assert len(descriptors) == len(rows)
    # the empty B-subset and empty C-subset assemble the same support
    empty = [r for r in rows if r["converter_subset"] == ""]
    assert sum(1 for r in empty if r["duplicate_support"]) == 2
    # rows with equal support must carry equal prefixes
    by_support = {}
    for r in rows:
        by_support.setdefault(r["support"], set()).add(tuple(r["prefix"]))
    assert all(len(v) == 1 for v in by_support.values())


def test_sweep_kind2_slice():
    rows = list(sweep(2, 2, xs=[16, 17]))
    assert len(rows) == 2 * 2 * 2 * 2 ** 6
    assert all(r["kind"] == 2 and r["z"] in (16, 17) for r in rows)


def test_sweep_threads_smoke():
    rows_seq = list(sweep(1, 2, xs=[19]))
    rows_par = list(sweep(1, 2, xs=[19], threads=4))
    assert [r["support"] for r in rows_seq] == [r["support"] for r in rows_par]
    assert [r["prefix"] for r in rows_seq] == [r["prefix"] for r in rows_par]
