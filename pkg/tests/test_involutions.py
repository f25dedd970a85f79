import itertools

import pytest

from sporbits.involutions import (
    FpfInvolution,
    NoUniqueMeet,
    InfeasibleBox,
    basics_decomposition,
    conjugate_by_transposition,
    construct_a_even,
    construct_a_odd,
    covers,
    direct_sum,
    enumerate_fpf,
    fpf_length,
    glb,
    hasse_diagram,
    in_basic_family,
    is_a_even,
    is_a_odd,
    j_bar,
    lower_covers,
    odd_rank_constraint_holds,
    opposite_leq,
    pair_statistics,
    poset_dot,
    symplectic_diagram,
    symplectic_essential_boxes,
    upper_covers,
    wiring_ascii,
    wiring_parse,
)
from sporbits.permutations import length


def fpf(text):
    return FpfInvolution.from_any(text)


def word_length(iota):
    return length(iota.permutation())


class TestConstruction:
    def test_validation(self):
        with pytest.raises(ValueError):
            FpfInvolution((1, 2, 4, 3))  # fixed points
        with pytest.raises(ValueError):
            FpfInvolution((2, 3, 1, 4))  # not an involution
        with pytest.raises(ValueError):
            FpfInvolution((2, 1, 3))  # odd size

    def test_arcs(self):
        assert fpf("43217856").arcs == ((1, 4), (2, 3), (5, 7), (6, 8))

    def test_from_arcs_roundtrip(self):
        for iota in enumerate_fpf(3):
            assert FpfInvolution.from_arcs(iota.arcs) == iota


class TestJbarAndDirectSum:
    def test_j_bar(self):
        assert j_bar(1).word == (2, 1)
        assert j_bar(2).word == (2, 1, 4, 3)
        assert j_bar(4).word == (2, 1, 4, 3, 6, 5, 8, 7)
        assert fpf_length(j_bar(5)) == 5

    def test_direct_sum_simple(self):
        assert direct_sum(j_bar(1), j_bar(1)) == j_bar(2)

    def test_countryside_example(self):
        # 21563487 = 21 + 3412 + 21
        got = direct_sum(fpf("21"), fpf("3412"), fpf("21"))
        assert got == fpf("21563487")

    def test_rainbow_example(self):
        # J_2 + 4321 + J_1 = 2,1,4,3,8,7,6,5,10,9
        got = direct_sum(j_bar(2), fpf("4321"), j_bar(1))
        assert got.word == (2, 1, 4, 3, 8, 7, 6, 5, 10, 9)


class TestPairStatistics:
    def test_mixed_example(self):
        stats = pair_statistics(fpf("532614"))
        assert (stats.c, stats.r) == (1, 1)

    def test_j_bar_has_none(self):
        for n in (1, 2, 3, 4):
            stats = pair_statistics(j_bar(n))
            assert (stats.c, stats.r) == (0, 0)
            assert stats.d == n * (n - 1) // 2

    def test_double_crossing(self):
        stats = pair_statistics(fpf("351624"))
        assert (stats.c, stats.r) == (2, 0)

    def test_counts_partition_pairs(self):
        for iota in enumerate_fpf(4):
            s = pair_statistics(iota)
            assert s.c + s.r + s.d == 4 * 3 // 2


class TestLengthFormula:
    @pytest.mark.parametrize("word,expected", [("216543", 7), ("532614", 9)])
    def test_examples(self, word, expected):
        assert fpf_length(fpf(word)) == expected
        assert word_length(fpf(word)) == expected

    def test_formula_matches_inversions_2n_le_8(self):
        for n in range(1, 5):
            for iota in enumerate_fpf(n):
                assert fpf_length(iota) == word_length(iota)


class TestCovers:
    def test_cover_example(self):
        assert covers(fpf("341265"), fpf("214365"))
        assert fpf("214365") in upper_covers(fpf("341265"))

    def test_4321_covered_by_3412(self):
        assert covers(fpf("4321"), fpf("3412"))

    def test_j_bar_is_maximal(self):
        for n in (2, 3):
            assert upper_covers(j_bar(n)) == frozenset()

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            covers(j_bar(2), j_bar(3))

    def test_cover_consistency_2n_le_6(self):
        # covers holds iff the length gap is 2 and nothing sits strictly between
        for n in (2, 3):
            items = enumerate_fpf(n)
            for iota, kappa in itertools.product(items, items):
                strictly_above = (
                    iota != kappa
                    and opposite_leq(iota, kappa)
                    and word_length(iota) - word_length(kappa) == 2
                )
                no_between = not any(
                    mid != iota
                    and mid != kappa
                    and opposite_leq(iota, mid)
                    and opposite_leq(mid, kappa)
                    for mid in items
                )
                assert covers(iota, kappa) == (strictly_above and no_between)

    def test_covering_switch_shifts_statistics_by_one_step(self):
        # a downward cover adds 2 to the length, so by the length formula the
        # crossing/nesting counts satisfy delta_c + 2*delta_r == 1
        for n in (2, 3):
            for kappa in enumerate_fpf(n):
                before = pair_statistics(kappa)
                for iota in lower_covers(kappa):
                    after = pair_statistics(iota)
                    assert (after.c - before.c) + 2 * (after.r - before.r) == 1


class TestEnumeration:
    def test_counts(self):
        assert [str(i) for i in enumerate_fpf(1)] == ["21"]
        assert {str(i) for i in enumerate_fpf(2)} == {"2143", "3412", "4321"}
        assert len(enumerate_fpf(3)) == 15
        assert len(enumerate_fpf(4)) == 105

    def test_no_duplicates(self):
        items = enumerate_fpf(4)
        assert len(set(items)) == len(items)

    def test_bound(self):
        with pytest.raises(ValueError):
            enumerate_fpf(6)
        assert len(enumerate_fpf(6, bound=6)) == 10395


class TestOppositeOrderAndGlb:
    def test_glb_of_two_basics(self):
        assert glb([fpf("341265"), fpf("215634")]) == fpf("351624")

    def test_singleton(self):
        for iota in enumerate_fpf(2):
            assert glb([iota]) == iota

    def test_chain_2n4(self):
        assert opposite_leq(fpf("4321"), fpf("3412"))
        assert opposite_leq(fpf("3412"), fpf("2143"))
        assert glb([fpf("2143"), fpf("3412")]) == fpf("3412")

    def test_empty_set_convention(self):
        assert glb([], n=3) == j_bar(3)
        with pytest.raises(ValueError):
            glb([])

    def test_bottom_element_meets(self):
        bottom = max(enumerate_fpf(3), key=word_length)  # the reverse word
        for iota in enumerate_fpf(3):
            assert glb([iota, bottom]) == bottom


class TestSymplecticBoxes:
    def test_216543(self):
        iota = fpf("216543")
        assert symplectic_diagram(iota) == frozenset({(3, 4), (3, 5)})
        assert symplectic_essential_boxes(iota) == frozenset({(3, 5, 2)})

    def test_21573846(self):
        boxes = symplectic_essential_boxes(fpf("21573846"))
        assert boxes == frozenset({(3, 4, 2), (4, 6, 3)})

    def test_j_bar_empty(self):
        for n in (1, 2, 3, 4):
            assert symplectic_essential_boxes(j_bar(n)) == frozenset()

    def test_row_col_strictly_upper(self):
        for iota in enumerate_fpf(3):
            for (i, j, _) in symplectic_essential_boxes(iota):
                assert i < j


class TestOddRankConstraint:
    def test_cover_examples(self):
        assert odd_rank_constraint_holds(fpf("21573846"))
        assert odd_rank_constraint_holds(fpf("361542"))

    def test_exhaustive_2n_le_8(self):
        for n in range(1, 5):
            assert all(odd_rank_constraint_holds(i) for i in enumerate_fpf(n))


class TestBasicFamilies:
    def test_membership(self):
        assert is_a_even(fpf("216543"))
        assert is_a_odd(fpf("21573846"))
        assert is_a_odd(fpf("351624"))
        assert not in_basic_family(j_bar(3))

    def test_construct_even_example(self):
        assert construct_a_even(3, 3, 5, 2) == fpf("216543")

    def test_construct_even_corner_box(self):
        # the iota_e' family instance 73254816 has the single box (1,6) rank 0
        iota = fpf("73254816")
        assert symplectic_essential_boxes(iota) == frozenset({(1, 6, 0)})
        assert construct_a_even(4, 1, 6, 0) == iota

    def test_construct_odd_example(self):
        iota = fpf("361542")
        assert symplectic_essential_boxes(iota) == frozenset({(1, 2, 0), (2, 5, 1)})
        assert construct_a_odd(3, 2, 5, 1) == iota

    def test_infeasible_requests(self):
        with pytest.raises(InfeasibleBox):
            construct_a_even(2, 1, 2, 1)  # odd rank in the even family
        with pytest.raises(InfeasibleBox):
            construct_a_odd(3, 2, 3, 1)  # odd rank on the superdiagonal
        with pytest.raises(InfeasibleBox):
            construct_a_even(2, 3, 2, 0)  # not upper triangular

    def test_construction_unambiguous_2n_le_8(self):
        # essential sets of basic elements pin down a unique involution
        seen = {}
        for n in range(1, 5):
            for iota in enumerate_fpf(n):
                if in_basic_family(iota):
                    key = (n, symplectic_essential_boxes(iota))
                    assert key not in seen, (iota, seen[key])
                    seen[key] = iota


class TestBasicsDecomposition:
    def test_j_bar_empty(self):
        for n in (1, 2, 3):
            assert basics_decomposition(j_bar(n)) == frozenset()
            assert glb(basics_decomposition(j_bar(n)), n=n) == j_bar(n)

    def test_self_basic(self):
        assert basics_decomposition(fpf("216543")) == frozenset({fpf("216543")})

    def test_351624(self):
        parts = basics_decomposition(fpf("351624"))
        assert len(parts) == 2
        assert all(in_basic_family(p) for p in parts)
        assert glb(parts) == fpf("351624")

    def test_every_element_decomposes_2n_le_6(self):
        for n in (1, 2, 3):
            for iota in enumerate_fpf(n):
                parts = basics_decomposition(iota)
                assert all(in_basic_family(p) for p in parts)
                assert glb(parts, n=n) == iota

    def test_non_minimality_of_family(self):
        # 351624 is in the family yet is already a meet of two others
        assert in_basic_family(fpf("351624"))
        assert glb([fpf("341265"), fpf("215634")]) == fpf("351624")


class TestPosetPlumbing:
    def test_hasse_matches_upper_covers(self):
        edges = hasse_diagram(2)
        expected = set()
        for iota in enumerate_fpf(2):
            for upper in upper_covers(iota):
                expected.add((iota.word, upper.word))
        assert set(edges) == expected

    def test_dot_output(self):
        dot = poset_dot(2)
        assert dot.startswith("digraph")
        assert '"4321" -> "3412"' in dot


class TestWiring:
    def test_roundtrip_2n_le_6(self):
        for n in (1, 2, 3):
            for iota in enumerate_fpf(n):
                assert wiring_parse(wiring_ascii(iota)) == iota

    def test_deterministic(self):
        iota = fpf("43217856")
        assert wiring_ascii(iota) == wiring_ascii(fpf("43217856"))

    def test_side_by_side(self):
        art = wiring_ascii(fpf("2143"))
        lines = art.splitlines()
        assert lines[0] == ".-. .-."
        assert lines[-1] == "word: 2,1,4,3"

    def test_nested_and_crossing(self):
        art = wiring_ascii(fpf("43217856"))
        # the nested pair {1,4},{2,3} needs two height levels
        assert len(art.splitlines()) >= 4
