#!/usr/bin/env python3
"""Unit tests for syzygy gaps and two-variable SLP"""

import sys
from fractions import Fraction
from pathlib import Path

import pytest

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

from core.algebra.domain import METHOD_SYZYGY_GAP, WitnessKind
from core.exceptions import InvalidCharacteristicError, PreconditionError
from core.lefschetz.oracle import has_slp_oracle, has_wlp_oracle
from core.lefschetz.syzgap import (
    ScaledTriple,
    exceptional_failing_range,
    han_delta_positive,
    han_witness_levels,
    manhattan,
    slp_dd_criterion,
    slp_two_var,
    wlp_three_gen_via_syzgap,
)


class TestScaledTriple:
    """Test the rational triple helpers"""

    def test_sorted_and_scaled(self):
        """Test that entries sort ascending and scale by powers of p"""
        triple = ScaledTriple.of(13, 5, 12, 2)

        assert triple.entries == (5, 12, 13)
        assert triple.semistable
        assert triple.scaled(-2).entries == (Fraction(5, 4), 3, Fraction(13, 4))

    def test_manhattan(self):
        """Test exact l1 distances"""
        assert manhattan((Fraction(5, 4), 3, Fraction(13, 4)), (1, 3, 3)) == Fraction(1, 2)


class TestHanCriterion:
    """Test odd lattice points near scaled triples"""

    def test_witness_at_deeper_scale(self):
        """Test (5, 12, 13) in characteristic 2: nothing at p^-1, a point at p^-2"""
        positive, witness = han_delta_positive(5, 12, 13, 2)

        assert positive
        assert witness.scale == -2
        assert witness.point == (1, 3, 3)
        assert witness.distance == Fraction(1, 2)
        assert witness.gap(2) == 2
        assert len(han_witness_levels(5, 12, 13, 2)) == 1

    def test_no_witness(self):
        """Test (2, 3, 3) in characteristic 2, where every odd point is too far"""
        assert han_delta_positive(3, 3, 2, 2) == (False, None)
        assert wlp_three_gen_via_syzgap(3, 3, 2, 2).holds

    def test_gap_decides_wlp(self):
        """Test that an even-sum triple with a witness fails WLP"""
        verdict = wlp_three_gen_via_syzgap(5, 12, 13, 2)

        assert verdict.fails
        assert verdict.method == METHOD_SYZYGY_GAP
        assert verdict.witness.kind is WitnessKind.SYZYGY
        assert verdict.witness.point == (1, 3, 3)
        assert verdict.witness.scale == -2

    @pytest.mark.parametrize("a,b,c,p", [(1, 2, 5, 2), (3, 3, 6, 3), (5, 12, 13, 0), (5, 12, 13, 4)])
    def test_hypotheses_checked(self, a, b, c, p):
        """Test strict stability and a prime characteristic"""
        with pytest.raises((PreconditionError, InvalidCharacteristicError)):
            han_delta_positive(a, b, c, p)


class TestTwoVariableSlp:
    """Test SLP of K[x, y]/(x^a, y^b)"""

    def test_examples(self):
        """Test verdicts worked out by hand and their failing members"""
        assert slp_two_var(2, 2, 3).holds
        assert slp_two_var(4, 5, 0).holds

        verdict = slp_two_var(2, 2, 2)
        assert verdict.fails
        assert verdict.witness.prime == 2
        assert verdict.witness.member == (2, 2, 2)

        assert slp_two_var(5, 4, 3).status is has_slp_oracle((5, 4), 3).status

    def test_matches_oracle(self):
        """Test the family reduction against ranks on small pairs"""
        for a in range(2, 8):
            for b in range(2, a + 1):
                for p in (2, 3, 5):
                    expected = has_slp_oracle((a, b), p).status
                    assert slp_two_var(a, b, p).status is expected, f"({a},{b}) in char {p}"

    @pytest.mark.parametrize("d,p,holds", [
        (2, 2, False),
        (2, 3, True),
        (3, 3, False),
        (3, 5, True),
        (4, 3, True),
        (4, 5, False),
    ])
    def test_equal_degree_criterion(self, d, p, holds):
        """Test the valuation criterion for (d, d)"""
        verdict = slp_dd_criterion(d, p)

        assert verdict.holds == holds
        assert verdict.method == "theorem:two-uniform"

    def test_equal_degree_matches_oracle(self):
        """Test the valuation criterion against ranks"""
        for d in range(2, 8):
            for p in (2, 3, 5, 7):
                assert slp_dd_criterion(d, p).status is has_slp_oracle((d, d), p).status, f"d={d} in char {p}"

    def test_bounds(self):
        """Test that degrees below 2 are refused"""
        with pytest.raises(PreconditionError):
            slp_two_var(4, 1, 2)
        with pytest.raises(PreconditionError):
            slp_dd_criterion(1, 3)


class TestExceptionalPairs:
    """Test the pairs (2^m l, 2^m + 1) in characteristic 2"""

    def test_failing_range_matches_oracle(self):
        """Test (12, 5): members k = 1, 2 fail and both endpoints hold"""
        failing = exceptional_failing_range(12, 5)

        assert [k for k, _ in failing] == [1, 2]
        for _, witness in failing:
            assert witness.scale == -2
            assert witness.point == (3, 1, 3)
            assert witness.distance == Fraction(1, 2)

        assert has_wlp_oracle((13, 12, 5), 2).fails
        assert has_wlp_oracle((12, 11, 5), 2).fails
        assert has_wlp_oracle((15, 12, 5), 2).holds
        assert has_wlp_oracle((12, 9, 5), 2).holds

    def test_members_fail_by_syzygy_gap(self):
        """Test that the syzygy-gap route agrees on every listed member"""
        for k, _ in exceptional_failing_range(12, 5):
            assert wlp_three_gen_via_syzgap(12, 5, 12 + 5 - 2 - 2 * k, 2).fails

    def test_non_exceptional_pair_rejected(self):
        """Test that other pairs are refused"""
        with pytest.raises(PreconditionError):
            exceptional_failing_range(8, 5)
