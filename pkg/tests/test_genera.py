"""Equivariant genus formulas against catalog rows and structural laws."""

from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twobridge.genera import (
    Arc,
    Inversion,
    MarkedClass,
    MarkedClassError,
    SymmetryType,
    classify_marked_classes,
    equivariant_genus,
    find_arc_gap_example,
    find_gap_example,
    genus_profile,
    seifert_genus,
)
from twobridge.slopes import (
    Slope,
    canonicalize_slope,
    expand_even_cf,
    inverse_slope,
)

H_SHORT = MarkedClass(Inversion.H_Q, Arc.SHORT)
H_LONG = MarkedClass(Inversion.H_Q, Arc.LONG)
DUAL_SHORT = MarkedClass(Inversion.H_QPRIME, Arc.SHORT)
DUAL_LONG = MarkedClass(Inversion.H_QPRIME, Arc.LONG)
EXC_SHORT = MarkedClass(Inversion.H_PRIME, Arc.SHORT)


@st.composite
def slopes_st(draw, p_max=399):
    p = 2 * draw(st.integers(1, (p_max - 1) // 2)) + 1
    q0 = draw(st.integers(1, p - 1).filter(lambda q: gcd(p, q) == 1))
    return canonicalize_slope(p, q0)


class TestClassify:
    def test_torus_has_two_classes(self):
        sym, classes = classify_marked_classes(Slope(5, 4))
        assert sym is SymmetryType.TORUS
        assert classes == (H_SHORT, H_LONG)

    def test_generic_has_dual_inversion(self):
        sym, classes = classify_marked_classes(Slope(9, 2))
        assert sym is SymmetryType.GENERIC
        assert len(classes) == 4
        assert {mc.inversion for mc in classes} == {Inversion.H_Q, Inversion.H_QPRIME}

    def test_palindromic_has_exceptional_inversion(self):
        sym, classes = classify_marked_classes(Slope(15, 4))  # 16 = 1 mod 15
        assert sym is SymmetryType.PALINDROMIC
        assert len(classes) == 4
        assert {mc.inversion for mc in classes} == {Inversion.H_Q, Inversion.H_PRIME}


class TestSeifertGenus:
    @pytest.mark.parametrize("p,q,n", [(3, 2, 1), (5, 4, 2), (37, 16, 3)])
    def test_examples(self, p, q, n):
        assert seifert_genus(Slope(p, q)) == n


class TestEquivariantGenus:
    def test_catalog_row_six_one(self):
        s = Slope(9, 2)
        assert equivariant_genus(s, H_SHORT) == 2
        assert genus_profile(s).genera == (2, 1, 1, 2)

    def test_catalog_row_ten_six(self):
        prof = genus_profile(Slope(37, 16))
        assert prof.genus == 3
        assert prof.genera == (3, 4, 4, 3)

    def test_palindromic_exceptional_entries_realize_genus(self):
        s = Slope(15, 4)
        assert equivariant_genus(s, EXC_SHORT) == 1 == seifert_genus(s)
        assert equivariant_genus(s, H_SHORT) == 2
        assert equivariant_genus(s, H_LONG) == 2

    def test_invalid_class_raises(self):
        with pytest.raises(MarkedClassError):
            equivariant_genus(Slope(15, 4), DUAL_SHORT)  # palindromic: no dual class
        with pytest.raises(MarkedClassError):
            equivariant_genus(Slope(9, 2), EXC_SHORT)  # generic: no exceptional class
        with pytest.raises(MarkedClassError):
            equivariant_genus(Slope(5, 4), DUAL_LONG)  # torus: only the h pair


class TestProfiles:
    def test_fibered_profile_is_constant(self):
        prof = genus_profile(Slope(11, 4))
        assert prof.genus == 2
        assert prof.genera == (2, 2, 2, 2)

    @pytest.mark.parametrize("p,q,expected", [
        (11, 6, (1, 2, 3, 1)),
        (17, 2, (4, 1, 1, 2)),
        (41, 24, (2, 4, 4, 2)),
        (37, 24, (4, 2, 2, 3)),
    ])
    def test_catalog_tuples(self, p, q, expected):
        assert genus_profile(Slope(p, q)).genera == expected

    def test_torus_profile(self):
        prof = genus_profile(Slope(5, 4))
        assert prof.strong_equivalence_class_count == 2
        assert prof.genera == (2, 2)

    @given(slopes_st())
    def test_duality_swaps_inversions(self, s):
        prof = genus_profile(s)
        dual = genus_profile(inverse_slope(s))
        if prof.symmetry_type is SymmetryType.GENERIC:
            g = dict(prof.entries)
            gd = dict(dual.entries)
            assert gd[H_SHORT] == g[DUAL_SHORT]
            assert gd[H_LONG] == g[DUAL_LONG]
            assert gd[DUAL_SHORT] == g[H_SHORT]
            assert gd[DUAL_LONG] == g[H_LONG]
        else:
            assert dual == prof  # torus and palindromic slopes are self dual

    @given(slopes_st())
    def test_mirror_invariance(self, s):
        assert genus_profile(s.mirror()).genera == genus_profile(s).genera

    @given(slopes_st())
    def test_bounds_and_long_arc_identity(self, s):
        cf = expand_even_cf(s)
        n = cf.n
        prof = genus_profile(s)
        for mc, value in prof.entries:
            assert value >= n
            if mc.arc is Arc.LONG and mc.inversion is not Inversion.H_PRIME:
                assert value <= 2 * n
        if prof.symmetry_type is not SymmetryType.TORUS:
            g = dict(prof.entries)
            b = cf.b_halves
            assert g[H_LONG] == n + sum(1 for x in b if abs(x) > 1) \
                == 2 * n - sum(1 for x in b if abs(x) == 1)
            assert g[H_SHORT] <= sum(abs(x) for x in cf.a_halves)

    @given(slopes_st())
    def test_fibered_means_all_entries_equal_genus(self, s):
        cf = expand_even_cf(s)
        if all(abs(c) == 2 for c in cf.entries):
            prof = genus_profile(s)
            assert set(prof.genera) == {cf.n}

    @given(slopes_st())
    def test_torus_entries_are_half_p_minus_one(self, s):
        if abs(s.q) == s.p - 1:
            prof = genus_profile(s)
            assert prof.genera == ((s.p - 1) // 2,) * 2


class TestGapWitnesses:
    def test_equal_pair_is_trefoil(self):
        s, mc = find_gap_example(1, 1)
        assert s == Slope(3, 2)
        assert mc == H_SHORT

    def test_all_entry_one_expansion(self):
        s, mc = find_gap_example(2, 5)
        assert expand_even_cf(s).entries == (8, 2, 2, 2)
        assert (seifert_genus(s), equivariant_genus(s, mc)) == (2, 5)

    @pytest.mark.parametrize("g,ghat", [(1, 4), (3, 3), (4, 9), (6, 6)])
    def test_verified_pairs(self, g, ghat):
        s, mc = find_gap_example(g, ghat)
        assert (seifert_genus(s), equivariant_genus(s, mc)) == (g, ghat)

    def test_rejects_bad_order(self):
        with pytest.raises(ValueError):
            find_gap_example(3, 2)

    @given(st.integers(1, 8), st.integers(0, 8))
    def test_range(self, g, extra):
        s, mc = find_gap_example(g, g + extra)
        assert (seifert_genus(s), equivariant_genus(s, mc)) == (g, g + extra)


class TestArcGapWitnesses:
    def test_zero_is_trefoil(self):
        s, (short, long_) = find_arc_gap_example(0)
        assert s == Slope(3, 2)
        assert equivariant_genus(s, short) == equivariant_genus(s, long_) == 1

    def test_positive_three(self):
        s, (short, long_) = find_arc_gap_example(3)
        assert s == Slope(17, 2)  # [8,-2], catalog knot 10_1
        assert equivariant_genus(s, short) == 4
        assert equivariant_genus(s, long_) == 1

    def test_negative_one(self):
        s, (short, long_) = find_arc_gap_example(-1)
        assert s == Slope(7, 4)  # [2,4], catalog knot 5_2
        assert equivariant_genus(s, short) == 1
        assert equivariant_genus(s, long_) == 2

    @given(st.integers(-8, 8))
    def test_range(self, d):
        s, (short, long_) = find_arc_gap_example(d)
        assert equivariant_genus(s, short) - equivariant_genus(s, long_) == d
