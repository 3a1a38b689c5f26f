#!/usr/bin/env python3
"""Unit tests for the WLP and SLP rule cascades"""

import sys
from pathlib import Path

import pytest

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

from core.algebra.combinat import primes_up_to
from core.algebra.domain import Status, Verdict, WitnessKind, enumerate_degree_tuples
from core.exceptions import PreconditionError
from core.lefschetz.classify import (
    SLP_RULES,
    WLP_RULES,
    char_two_slp,
    classify_slp,
    classify_wlp,
    even_socle_lift,
    slp_via_wlp_family,
    small_second_degree_slp,
    two_variable_wlp,
    uniform_degree_slp,
)
from core.lefschetz.oracle import has_slp_oracle, has_wlp_oracle


def _oracle_wlp(member, p):
    return has_wlp_oracle(member, p)


class TestRuleOrder:
    """Test the cascade layout"""

    def test_cheap_rules_first(self):
        """Test that closed forms come before the expensive routes"""
        wlp = [rule_id for rule_id, _ in WLP_RULES]
        slp = [rule_id for rule_id, _ in SLP_RULES]

        assert wlp[0] == "char-zero"
        assert wlp.index("half-socle-bound") < wlp.index("determinant")
        assert wlp.index("conjecture-gap") < wlp.index("syzygy-gap")
        assert wlp[-1] == "even-socle-lift"
        assert slp[0] == "char-zero"
        assert slp[-1] == "wlp-family"


class TestClassifyWlp:
    """Test the WLP cascade on cases with known answers"""

    def test_char_zero_holds(self):
        """Test that characteristic zero is decided first"""
        verdict, trace = classify_wlp((5, 5, 5), 0)

        assert verdict.holds
        assert verdict.method == "theorem:char-zero"
        assert trace.decisive_rule == "char-zero"

    def test_two_variables_hold(self):
        """Test two variables in small characteristic"""
        verdict, trace = classify_wlp((7, 4), 2)

        assert verdict.holds
        assert trace.decisive_rule == "two-variables"
        assert two_variable_wlp((7, 4)).holds

    def test_large_top_degree_holds(self):
        """Test (5, 2, 2) in characteristic 2, where d_0 > ceil(t/2)"""
        verdict, trace = classify_wlp((5, 2, 2), 2)

        assert verdict.holds
        assert trace.decisive_rule == "large-top-degree"
        assert has_wlp_oracle((5, 2, 2), 2).holds

    @pytest.mark.parametrize("degrees,p,holds", [
        ((3, 3, 3, 3, 3), 2, False),
        ((3, 3, 3, 3, 3), 3, False),
        ((3, 3, 3, 3, 3), 5, False),
        ((3, 3, 3, 3, 3), 7, True),
        ((2, 2, 2, 2, 2), 2, False),
        ((2, 2, 2, 2, 2), 3, False),
        ((2, 2, 2, 2, 2), 5, True),
    ])
    def test_uniform_many_variables(self, degrees, p, holds):
        """Test equal degrees in five variables against ceil(t/2)"""
        verdict, trace = classify_wlp(degrees, p)

        assert verdict.holds == holds
        assert trace.decisive_rule == "uniform-many-vars"

    @pytest.mark.parametrize("degrees,p", [((3, 3, 3), 3), ((4, 3, 3), 3), ((5, 5, 3), 5)])
    def test_frobenius_window_fails(self, degrees, p):
        """Test d_1 <= p <= d_0 <= ceil(t/2)"""
        verdict, trace = classify_wlp(degrees, p)

        assert verdict.fails
        assert trace.decisive_rule == "frobenius-window"
        assert verdict.witness.prime == p
        assert has_wlp_oracle(degrees, p).fails

    @pytest.mark.parametrize("degrees,p", [((4, 4, 4), 2), ((3, 3, 3, 3), 2)])
    def test_prime_power_window_fails(self, degrees, p):
        """Test a power of p between d_0 and ceil(t/2)"""
        verdict, trace = classify_wlp(degrees, p)

        assert verdict.fails
        assert trace.decisive_rule == "prime-power-window"
        assert has_wlp_oracle(degrees, p).fails

    @pytest.mark.parametrize("degrees,p", [((3, 3, 3), 5), ((4, 4, 4), 7)])
    def test_half_socle_bound_holds(self, degrees, p):
        """Test p above ceil((t + 1)/2)"""
        verdict, trace = classify_wlp(degrees, p)

        assert verdict.holds
        assert trace.decisive_rule == "half-socle-bound"
        assert has_wlp_oracle(degrees, p).holds

    @pytest.mark.parametrize("p", [3, 7])
    def test_near_uniform_fails(self, p):
        """Test (11, 11, 11, 11, 10) below p = d"""
        verdict, trace = classify_wlp((11, 11, 11, 11, 10), p, oracle_fallback=False)

        assert verdict.fails
        assert trace.decisive_rule == "near-uniform-degree"

    def test_near_uniform_needs_odd_parameter(self):
        """Test that d and n both even leaves the shape to later rules"""
        _, trace = classify_wlp((4, 4, 4, 4, 3), 3, oracle_fallback=False)

        step = next(s for s in trace.steps if s.rule == "near-uniform-degree")
        assert not step.applicable
        assert step.note == "d and n both even"

    def test_uniform_minus_three(self):
        """Test (6, 6, 6, 3) in characteristic 5 with an explicit syzygy"""
        verdict, trace = classify_wlp((6, 6, 6, 3), 5)

        assert verdict.fails
        assert trace.decisive_rule == "uniform-minus-three"
        assert verdict.witness.kind is WitnessKind.SYZYGY
        assert verdict.witness.theorem == "uniform-minus-three"
        assert verdict.witness.degree <= 9
        assert has_wlp_oracle((6, 6, 6, 3), 5).fails

    def test_uniform_minus_three_characteristic_two(self):
        """Test (9, 9, 9, 6) in characteristic 2"""
        verdict, _ = classify_wlp((9, 9, 9, 6), 2, oracle_fallback=False)

        assert verdict.fails
        assert verdict.witness.kind is WitnessKind.SYZYGY
        assert verdict.witness.degree == 11

    def test_uniform_minus_three_syzygy_is_verified(self, monkeypatch):
        """Test that a syzygy failing verification is never emitted as a witness"""
        class _Unverified:
            def verify(self):
                return False

        monkeypatch.setattr("core.lefschetz.classify.build_low_degree_syzygy", lambda d, p: _Unverified())
        verdict, trace = classify_wlp((6, 6, 6, 3), 5, oracle_fallback=False)

        assert verdict.fails
        assert trace.decisive_rule == "uniform-minus-three"
        assert verdict.witness.kind is not WitnessKind.SYZYGY
        assert verdict.witness.theorem == "uniform-minus-three"
        assert verdict.witness.prime == 5

    def test_conjecture_gap_routes_to_oracle(self):
        """Test (5, 5, 5) in characteristic 7 = t/2 + 1"""
        verdict, trace = classify_wlp((5, 5, 5), 7)

        assert verdict.holds
        assert trace.tags == ["conjecture-gap"]
        assert trace.decisive_rule == "oracle"
        assert verdict.method == "oracle"

    def test_conjecture_gap_without_oracle(self):
        """Test that disabling the oracle leaves the gap undecided"""
        verdict, trace = classify_wlp((5, 5, 5), 7, oracle_fallback=False)

        assert verdict.status is Status.UNKNOWN
        assert verdict.method == "undecided"
        assert trace.to_dict()["status"] == "unknown"

    @pytest.mark.parametrize("p,holds", [(2, False), (3, True)])
    def test_determinant_route(self, p, holds):
        """Test (5, 5, 5, 2), an odd socle tuple with no closed form"""
        verdict, trace = classify_wlp((5, 5, 5, 2), p)

        assert verdict.holds == holds
        assert trace.decisive_rule == "determinant"
        if not holds:
            assert verdict.witness.prime == p

    def test_syzygy_gap_route(self):
        """Test (13, 12, 5) in characteristic 2"""
        verdict, trace = classify_wlp((13, 12, 5), 2)

        assert verdict.fails
        assert trace.decisive_rule == "syzygy-gap"
        assert verdict.witness.point == (1, 3, 3)

    def test_units_rejected(self):
        """Test that unit degrees are refused"""
        with pytest.raises(PreconditionError) as excinfo:
            classify_wlp((3, 1), 2)
        assert excinfo.value.hypothesis == "d_i >= 2"

    def test_trace_serialization(self):
        """Test the trace as a dictionary"""
        _, trace = classify_wlp((3, 3, 3), 5)
        payload = trace.to_dict()

        assert payload["property"] == "wlp"
        assert payload["degrees"] == [3, 3, 3]
        assert payload["char"] == 5
        assert payload["steps"][0] == {
            "rule": "char-zero",
            "applicable": False,
            "note": "positive characteristic",
            "decisive": False,
        }
        assert payload["method"] == "theorem:half-socle-bound"


class TestEvenSocleLift:
    """Test WLP of d from WLP of (d, 2)"""

    def test_lift_declines_when_lift_fails(self):
        """Test (3, 3, 3) in characteristic 2, whose lift (3, 3, 3, 2) fails"""
        verdict = even_socle_lift((3, 3, 3), 2)

        assert verdict.status is Status.UNKNOWN
        assert verdict.method == "theorem:even-socle-lift"

    def test_lift_holds(self):
        """Test (3, 3, 3) in characteristic 5"""
        verdict = even_socle_lift((3, 3, 3), 5)

        assert verdict.holds
        assert verdict.witness.member == (3, 3, 3, 2)

    def test_odd_socle_rejected(self):
        """Test that the lift needs an even socle degree"""
        with pytest.raises(PreconditionError):
            even_socle_lift((3, 3, 2), 3)


class TestClassifySlp:
    """Test the SLP cascade"""

    @pytest.mark.parametrize("degrees", [(3, 3), (2, 2, 2)])
    def test_above_socle_holds(self, degrees):
        """Test p > t"""
        verdict, trace = classify_slp(degrees, 5)

        assert verdict.holds
        assert trace.decisive_rule == "above-socle"
        assert has_slp_oracle(degrees, 5).holds

    @pytest.mark.parametrize("degrees,p,rule", [
        ((3, 3, 3), 3, "frobenius-window"),
        ((4, 4, 4), 3, "prime-power-window"),
        ((5, 2), 5, "frobenius-window"),
    ])
    def test_window_failures(self, degrees, p, rule):
        """Test both SLP failure windows"""
        verdict, trace = classify_slp(degrees, p)

        assert verdict.fails
        assert trace.decisive_rule == rule
        assert has_slp_oracle(degrees, p).fails

    def test_char_two(self):
        """Test (2, 2, 2) in characteristic 2"""
        verdict, trace = classify_slp((2, 2, 2), 2)

        assert verdict.fails
        assert trace.decisive_rule == "char-two"

    def test_two_variable_family(self):
        """Test (5, 4) in characteristic 3"""
        verdict, trace = classify_slp((5, 4), 3)

        assert trace.decisive_rule == "two-variable-family"
        assert verdict.status is has_slp_oracle((5, 4), 3).status

    def test_uniform(self):
        """Test (7, 7, 7) in characteristic 5, below 3(d - 1)"""
        verdict, trace = classify_slp((7, 7, 7), 5)

        assert verdict.fails
        assert trace.decisive_rule == "uniform"
        assert verdict.method == "theorem:three-uniform"

    def test_wlp_family(self):
        """Test (4, 4, 3) in characteristic 3 through its WLP family"""
        verdict, trace = classify_slp((4, 4, 3), 3)

        assert trace.decisive_rule == "wlp-family"
        assert verdict.decisive
        assert verdict.status is has_slp_oracle((4, 4, 3), 3).status


class TestSlpFamily:
    """Test SLP of d through WLP of (d, t - 2k)"""

    def test_family_matches_oracle(self):
        """Test the family reduction with the rank oracle as member decider"""
        tuples = enumerate_degree_tuples(2, 5) + enumerate_degree_tuples(3, 3)
        for d in tuples:
            for p in (2, 3, 5):
                via_family = slp_via_wlp_family(d, p, _oracle_wlp)
                assert via_family.status is has_slp_oracle(d, p).status, f"{d} in char {p}"

    @pytest.mark.slow
    @pytest.mark.parametrize("length", [2, 3])
    def test_family_matches_definition_full_range(self, length):
        """Test SLP by definition against the family for degrees up to 4, characteristic 0 included"""
        for d in enumerate_degree_tuples(length, 4):
            for p in (0, 2, 3, 5, 7):
                via_family = slp_via_wlp_family(d, p, _oracle_wlp)
                by_definition = has_slp_oracle(d, p, full_definition=True)
                assert via_family.status is by_definition.status, f"{d} in char {p}"

    def test_failing_member_named(self):
        """Test that a failure names the member and the power"""
        verdict = slp_via_wlp_family((2, 2), 2, _oracle_wlp)

        assert verdict.fails
        assert verdict.witness.member == (2, 2, 2)
        assert verdict.witness.power == 2

    def test_undecided_member(self):
        """Test that an undecided member leaves SLP undecided"""
        verdict = slp_via_wlp_family((3, 3), 5, lambda member, p: Verdict.undecided("undecided"))
        assert verdict.status is Status.UNKNOWN


class TestStandaloneClassifications:
    """Test the closed forms that bypass the cascade"""

    def test_char_two_matches_oracle(self):
        """Test the characteristic two classification against ranks"""
        tuples = enumerate_degree_tuples(2, 6) + enumerate_degree_tuples(3, 4)
        for d in tuples:
            assert char_two_slp(d).status is has_slp_oracle(d, 2).status, f"{d}"

    @pytest.mark.slow
    @pytest.mark.parametrize("length", [2, 3, 4])
    def test_char_two_full_range(self, length):
        """Test characteristic two up to four variables with degrees up to 6"""
        for d in enumerate_degree_tuples(length, 6):
            assert char_two_slp(d).status is has_slp_oracle(d, 2).status, f"{d}"

    def test_char_two_failure_witness(self):
        """Test the witness for a failing tuple in three or more variables"""
        verdict = char_two_slp((3, 3, 3))

        assert verdict.fails
        assert verdict.witness.prime == 2

    def test_small_second_degree(self):
        """Test (a, 2) and (a, 3) against ranks"""
        for a in range(3, 13):
            for b in (2, 3):
                for p in (2, 3, 5, 7):
                    expected = has_slp_oracle((a, b), p).status
                    assert small_second_degree_slp(a, b, p).status is expected, f"({a},{b}) in char {p}"
        with pytest.raises(PreconditionError):
            small_second_degree_slp(5, 4, 3)

    @pytest.mark.parametrize("n,d", [(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 2), (2, 3), (3, 2)])
    def test_uniform_degree_thresholds(self, n, d):
        """Test equal degrees against ranks in small characteristics"""
        degrees = (d,) * (n + 1)
        for p in (2, 3, 5, 7):
            assert uniform_degree_slp(n, d, p).status is has_slp_oracle(degrees, p).status, f"{degrees} in char {p}"

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_uniform_degree_full_range(self, n, d):
        """Test every characteristic up to (n + 1)(d - 1) + 2, and 0, against ranks"""
        degrees = (d,) * (n + 1)
        for p in [0] + primes_up_to((n + 1) * (d - 1) + 2):
            assert uniform_degree_slp(n, d, p).status is has_slp_oracle(degrees, p).status, f"{degrees} in char {p}"

    def test_uniform_degree_bounds(self):
        """Test the many-variable threshold and argument checks"""
        assert uniform_degree_slp(4, 2, 7).holds
        assert uniform_degree_slp(4, 2, 5).fails
        assert uniform_degree_slp(3, 3, 0).holds
        with pytest.raises(PreconditionError):
            uniform_degree_slp(0, 3, 5)
