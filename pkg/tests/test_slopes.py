"""Slope arithmetic: frozen examples plus property tests.

Expected values come from independent oracles computed in-line where
they are cheap (exhaustive residue scans, direct evaluation); the
expansion algorithm itself is checked against them, never against
itself.
"""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twobridge.slopes import (
    EvenCF,
    EvenDenominatorError,
    MalformedExpansionError,
    NotCoprimeError,
    Slope,
    SlopeError,
    SmallDenominatorError,
    ZeroNumeratorError,
    canonical_slopes,
    canonicalize_slope,
    evaluate_cf,
    expand_even_cf,
    format_cf,
    inverse_slope,
    parse_cf,
    slope_predicates,
)


@st.composite
def slopes_st(draw, p_max=399):
    p = 2 * draw(st.integers(1, (p_max - 1) // 2)) + 1
    q0 = draw(st.integers(1, p - 1).filter(lambda q: gcd(p, q) == 1))
    return canonicalize_slope(p, q0)


def residue_scan(p, q):
    """Oracle: the even representative of q mod p by exhaustive scan."""
    hits = [r for r in range(-p + 1, p) if r % 2 == 0 and (r - q) % p == 0]
    assert len(hits) == 1
    return hits[0]


class TestCanonicalize:
    def test_already_canonical(self):
        assert canonicalize_slope(3, 2) == Slope(3, 2)

    def test_odd_numerator_shifts_down(self):
        assert canonicalize_slope(9, 5).q == residue_scan(9, 5) == -4

    def test_catalog_row_is_stable(self):
        assert canonicalize_slope(13, 8) == Slope(13, 8)

    @given(slopes_st())
    def test_matches_residue_scan(self, s):
        assert canonicalize_slope(s.p, s.q + 3 * s.p).q == residue_scan(s.p, s.q)

    def test_distinct_validation_errors(self):
        with pytest.raises(EvenDenominatorError):
            canonicalize_slope(6, 4)
        with pytest.raises(SmallDenominatorError):
            canonicalize_slope(1, 1)
        with pytest.raises(NotCoprimeError):
            canonicalize_slope(9, 6)
        with pytest.raises(ZeroNumeratorError):
            canonicalize_slope(9, 18)

    def test_direct_construction_requires_canonical_form(self):
        with pytest.raises(SlopeError):
            Slope(9, 5)  # odd numerator
        with pytest.raises(SlopeError):
            Slope(9, 11)  # out of range


class TestExpansion:
    @pytest.mark.parametrize("p,q,entries", [
        (3, 2, (2, 2)),          # positive trefoil
        (5, 2, (2, -2)),         # figure eight
        (37, 16, (2, -4, -2, -2, -2, -2)),
    ])
    def test_known_expansions(self, p, q, entries):
        assert expand_even_cf(Slope(p, q)).entries == entries

    def test_halves(self):
        cf = EvenCF((2, -4, -2, -2, -2, -2))
        assert cf.n == 3
        assert cf.a_halves == (1, -1, -1)
        assert cf.b_halves == (-2, -1, -1)

    def test_rejects_odd_length(self):
        with pytest.raises(MalformedExpansionError):
            EvenCF((2, 2, 2))

    @given(slopes_st())
    def test_roundtrip_and_shape(self, s):
        cf = expand_even_cf(s)
        assert len(cf.entries) % 2 == 0
        assert all(c != 0 and c % 2 == 0 for c in cf.entries)
        assert evaluate_cf(cf.entries) == Fraction(s.q, s.p)

    @given(slopes_st())
    def test_reexpansion_is_idempotent(self, s):
        cf = expand_even_cf(s)
        f = evaluate_cf(cf.entries)
        again = expand_even_cf(canonicalize_slope(f.denominator, f.numerator))
        assert again == cf

    @given(slopes_st())
    def test_mirror_negates_entries(self, s):
        assert expand_even_cf(s.mirror()).entries == tuple(
            -c for c in expand_even_cf(s).entries)


class TestEvaluate:
    @pytest.mark.parametrize("entries,value", [
        ([2, 4], Fraction(4, 7)),
        ([2, 2, 2, 2], Fraction(4, 5)),
        ([-2, 4], Fraction(-4, 9)),  # direct: 1/(-2 - 1/4)
    ])
    def test_known_values(self, entries, value):
        assert evaluate_cf(entries) == value

    def test_rejects_zero_entry(self):
        with pytest.raises(MalformedExpansionError):
            evaluate_cf([2, 0, 2, 2])

    def test_rejects_odd_entry(self):
        with pytest.raises(MalformedExpansionError):
            evaluate_cf([2, 3])

    def test_rejects_empty(self):
        with pytest.raises(MalformedExpansionError):
            evaluate_cf([])

    def test_format_parse_roundtrip(self):
        entries = (2, -4, -2, -2, -2, -2)
        assert parse_cf(format_cf(entries)) == entries
        assert format_cf(entries) == "[2,-4,-2,-2,-2,-2]"


class TestInverse:
    def test_extended_euclid_example(self):
        assert inverse_slope(Slope(7, 4)) == Slope(7, 2)  # 4*2 = 8 = 1 mod 7

    def test_parity_adjustment(self):
        # 2*5 = 1 mod 9 but 5 is odd, so q' = 5 - 9 = -4
        assert inverse_slope(Slope(9, 2)) == Slope(9, -4)
        assert expand_even_cf(Slope(9, 2)).entries == (4, -2)
        assert expand_even_cf(Slope(9, -4)).entries == (-2, 4)

    def test_self_inverse(self):
        assert inverse_slope(Slope(3, 2)) == Slope(3, 2)

    @given(slopes_st())
    def test_involution(self, s):
        assert inverse_slope(inverse_slope(s)) == s

    @given(slopes_st())
    def test_reversal_duality(self, s):
        assert expand_even_cf(inverse_slope(s)) == expand_even_cf(s).reversed()


class TestPredicates:
    @pytest.mark.parametrize("p,q,torus,palin,fib", [
        (5, 4, True, True, True),
        (21, 8, False, True, True),   # 8^2 = 64 = 1 mod 21
        (7, 4, False, False, False),  # 16 = 2 mod 7, entry 4
    ])
    def test_examples(self, p, q, torus, palin, fib):
        pred = slope_predicates(Slope(p, q))
        assert (pred.is_torus, pred.is_palindromic, pred.is_fibered) == (torus, palin, fib)

    @given(slopes_st())
    def test_palindromic_iff_self_reversed_iff_square_one(self, s):
        cf = expand_even_cf(s)
        modular = (s.q * s.q) % s.p == 1
        assert cf.is_palindrome() == modular
        assert slope_predicates(s).is_palindromic == modular

    @given(slopes_st())
    def test_torus_implies_fibered_palindromic(self, s):
        pred = slope_predicates(s)
        if pred.is_torus:
            assert pred.is_fibered and pred.is_palindromic

    @given(slopes_st())
    def test_fibered_iff_all_entries_two(self, s):
        cf = expand_even_cf(s)
        assert slope_predicates(s).is_fibered == all(abs(c) == 2 for c in cf.entries)


@settings(deadline=None)
@given(st.integers(0, 200))
def test_canonical_slopes_enumeration_is_canonical(seed):
    slopes = list(canonical_slopes(41))
    s = slopes[seed % len(slopes)]
    assert canonicalize_slope(s.p, s.q) == s
    assert len(slopes) == len(set(slopes))
