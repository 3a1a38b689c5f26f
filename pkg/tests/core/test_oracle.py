#!/usr/bin/env python3
"""Unit tests for the exact rank oracle"""

import sys
from pathlib import Path

import pytest
from hypothesis import given, strategies as st
from sympy import Matrix

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

from core.algebra.domain import Status, WitnessKind, enumerate_degree_tuples, normalize
from core.exceptions import PreconditionError
from core.lefschetz.oracle import (
    bareiss_determinant,
    determinant_matrix,
    has_slp_oracle,
    has_wlp_oracle,
    has_wlp_via_mgd,
    matrix_rank,
    mgd_nonkoszul,
    mult_map_matrix,
    rank_profile,
    syzygy_dimensions,
)


small_matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda rows: st.integers(min_value=1, max_value=4).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(min_value=-6, max_value=6), min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
)

square_matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda size: st.lists(
        st.lists(st.integers(min_value=-6, max_value=6), min_size=size, max_size=size),
        min_size=size,
        max_size=size,
    )
)


class TestExactLinearAlgebra:
    """Test ranks and determinants of integer matrices"""

    def test_rank_small_examples(self):
        """Test ranks over Q and over F_p"""
        assert matrix_rank([[1, 2], [2, 4]], 0) == 1
        assert matrix_rank([[1, 2], [2, 4]], 3) == 1
        assert matrix_rank([[1, 1], [1, 3]], 0) == 2
        assert matrix_rank([[1, 1], [1, 3]], 2) == 1
        assert matrix_rank([], 5) == 0

    @given(small_matrices)
    def test_rank_over_rationals_matches_sympy(self, entries):
        """Test fraction-free rank against sympy"""
        assert matrix_rank(entries, 0) == Matrix(entries).rank()

    @given(small_matrices, st.sampled_from([2, 3, 5, 7]))
    def test_rank_mod_p_bounded_by_rational_rank(self, entries, p):
        """Test that reduction mod p never raises the rank"""
        assert matrix_rank(entries, p) <= matrix_rank(entries, 0)

    @given(square_matrices)
    def test_bareiss_matches_sympy(self, entries):
        """Test the signed determinant against sympy"""
        assert bareiss_determinant(entries) == Matrix(entries).det()

    def test_bareiss_examples(self):
        """Test determinants computed by hand"""
        assert bareiss_determinant([[2, 1], [1, 3]]) == 5
        assert bareiss_determinant([[0, 1], [1, 0]]) == -1
        assert bareiss_determinant([[2, 0, 1], [1, 3, 2], [1, 1, 2]]) == 6
        with pytest.raises(PreconditionError):
            bareiss_determinant([[1, 2]])


class TestMultiplicationMatrices:
    """Test the matrices of x l^k"""

    def test_shapes_follow_hilbert_function(self):
        """Test that rows and columns are the graded pieces"""
        matrix = mult_map_matrix((3, 3, 3), 0, 2, 1)

        assert matrix.shape == (7, 6)
        assert matrix.target_degree == 3
        assert not matrix.is_square

    def test_determinant_matrix(self):
        """Test the peak matrix of (2, 2, 2)"""
        assert determinant_matrix((2, 2, 2)).to_lists() == [[2]]

    def test_power_checked(self):
        """Test that powers must be positive"""
        with pytest.raises(PreconditionError):
            mult_map_matrix((3, 3), 0, 1, 0)


class TestOracle:
    """Test WLP and SLP by definition"""

    def test_wlp_of_quadrics(self):
        """Test (2, 2, 2): only characteristic 2 fails, from degree 1"""
        assert has_wlp_oracle((2, 2, 2), 0).holds
        assert has_wlp_oracle((2, 2, 2), 3).holds

        verdict = has_wlp_oracle((2, 2, 2), 2)
        assert verdict.fails
        assert verdict.witness.kind is WitnessKind.DEGREE
        assert verdict.witness.degree == 1
        assert verdict.witness.power == 1

    def test_wlp_of_cubes(self):
        """Test that l^3 vanishes on (3, 3, 3) in characteristic 3"""
        verdict = has_wlp_oracle((3, 3, 3), 3)

        assert verdict.fails
        assert verdict.witness.degree == 2

    def test_two_variables_always_have_wlp(self):
        """Test WLP of two-variable algebras in small characteristics"""
        for d in enumerate_degree_tuples(2, 5):
            for p in (2, 3, 5):
                assert has_wlp_oracle(d, p).holds, f"{d} in char {p}"

    def test_slp_of_two_quadrics(self):
        """Test SLP of (2, 2): l^2 = 2xy"""
        assert has_slp_oracle((2, 2), 2).fails
        assert has_slp_oracle((2, 2), 3).holds
        assert has_slp_oracle((2, 2), 0).holds

    def test_slp_full_definition_agrees(self):
        """Test that the bijectivity shortcut matches the full definition"""
        for d in [(2, 2), (3, 2), (3, 3), (4, 3), (2, 2, 2)]:
            for p in (2, 3, 5):
                short = has_slp_oracle(d, p).status
                full = has_slp_oracle(d, p, full_definition=True).status
                assert short is full, f"{d} in char {p}"

    def test_rank_profile(self):
        """Test the rank profile of x l on (2, 2, 2) in characteristic 2"""
        profile = rank_profile((2, 2, 2), 2)

        assert [step.degree for step in profile] == [0, 1, 2]
        assert [step.maximal for step in profile] == [True, False, True]


class TestSyzygyCriterion:
    """Test WLP through the least degree of a non-Koszul syzygy"""

    def test_mgd_agrees_with_rank(self):
        """Test the syzygy criterion against the rank oracle on small tuples"""
        tuples = enumerate_degree_tuples(2, 5) + enumerate_degree_tuples(3, 4)
        for d in tuples:
            for p in (0, 2, 3, 5):
                via_mgd = has_wlp_via_mgd(d, p)
                assert via_mgd.witness.kind is WitnessKind.SYZYGY
                assert via_mgd.status is has_wlp_oracle(d, p).status, f"{d} in char {p}"

    def test_dimensions(self):
        """Test syzygy and Koszul dimensions of (l^2, x^2, y^2) in K[x, y]"""
        syz, kos = syzygy_dimensions((2, 2, 2), 0, 4)
        assert syz >= kos

    def test_quadrics_in_characteristic_two(self):
        """Test the non-Koszul syzygy of (l^2, x^2, y^2) over F_2"""
        assert mgd_nonkoszul((2, 2, 2), 2) == 2
        assert mgd_nonkoszul((2, 2, 2), 3) is None
        assert has_wlp_via_mgd(normalize([2, 2, 2]), 2).status is Status.FAILS
