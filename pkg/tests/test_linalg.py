from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ncdegen.linalg import (
    RatMatrix, complement_basis, integer_cokernel, kernel_basis_q, rank_q, smith_normal_form, solve_q,
)
from ncdegen.spectral import differential_d1
from ncdegen.surfaces import restriction_matrix
from ncdegen.incidence import BlownPlane, DelPezzo

from oracles import int_rows, sympy_invariant_factors, sympy_rank


def small_int_matrices(max_dim=6, lo=-4, hi=4):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)))


def test_identity_rank():
    assert rank_q(RatMatrix.identity(3)) == 3


def test_zero_rank():
    assert rank_q(RatMatrix.zeros(4, 7)) == 0


def test_empty_rank():
    assert rank_q(RatMatrix.zeros(0, 0)) == 0


def test_rank_d1_02_against_sympy():
    d = differential_d1(0, 2)
    assert d.shape == (105, 135)
    assert sympy_rank(int_rows(d)) == 100
    assert rank_q(d) == rank_q(d.transpose()) == 100


def test_kernel_identity_empty():
    assert kernel_basis_q(RatMatrix.identity(2)) == []


def test_kernel_of_difference():
    (v,) = kernel_basis_q(RatMatrix.from_rows([[1, -1]]))
    assert v[0] == v[1] != 0


def test_blown_plane_restriction_injective():
    r = restriction_matrix(BlownPlane((1, 2)))
    assert r.shape == (10, 7)
    assert sympy_rank(int_rows(r)) == 7
    assert kernel_basis_q(r) == []


@pytest.mark.parametrize("rows,factors", [
    ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], (1, 1, 1)),
    ([[2, 0], [0, 0]], (2,)),
    ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], (2, 6, 12)),
])
def test_snf_small(rows, factors):
    assert smith_normal_form(rows).invariant_factors == factors


def test_snf_del_pezzo_transpose():
    r = restriction_matrix(DelPezzo(1)).transpose()
    assert r.shape == (5, 10)
    snf = smith_normal_form(r)
    assert snf.invariant_factors == (1, 1, 1, 1, 1)
    assert snf.cokernel() == (5, ())
    assert integer_cokernel(r.transpose()) == (5, ())


def test_snf_torsion_cokernel():
    m = RatMatrix.from_rows([[2, 0], [0, 3]])
    assert integer_cokernel(m) == (0, (6,))


def test_csv_round_trip():
    m = RatMatrix.from_rows([[Fraction(1, 2), -3], [0, Fraction(-7, 4)]])
    assert m.to_csv() == "1/2,-3\n0,-7/4\n"
    assert RatMatrix.from_csv(m.to_csv()) == m


def test_shape_invariant_rejected():
    with pytest.raises(ValueError):
        RatMatrix(2, 2, (Fraction(1),) * 3)


def test_solve_and_complement():
    m = RatMatrix.from_rows([[1, 0], [1, 1], [0, 1]])
    assert solve_q(m, [1, 2, 1]) == (1, 1)
    assert solve_q(m, [1, 0, 1]) is None
    assert complement_basis(m) == [0]
    assert complement_basis(RatMatrix.from_rows([[0], [0], [1]])) == [0, 1]


@settings(max_examples=60, deadline=None)
@given(small_int_matrices())
def test_rank_matches_sympy(rows):
    assert rank_q(RatMatrix.from_rows(rows)) == sympy_rank(rows)


@settings(max_examples=60, deadline=None)
@given(small_int_matrices())
def test_rank_nullity_and_kernel(rows):
    m = RatMatrix.from_rows(rows)
    ker = kernel_basis_q(m)
    assert len(ker) + rank_q(m) == m.cols
    assert all(not any(m.apply(v)) for v in ker)


@settings(max_examples=60, deadline=None)
@given(small_int_matrices(max_dim=5, lo=-6, hi=6))
def test_snf_matches_sympy(rows):
    snf = smith_normal_form(rows)
    assert list(snf.invariant_factors) == sympy_invariant_factors(rows)
    assert snf.rank == rank_q(RatMatrix.from_rows(rows))


@settings(max_examples=40, deadline=None)
@given(small_int_matrices(max_dim=5, lo=-6, hi=6), st.randoms(use_true_random=False))
def test_snf_permutation_invariant(rows, rnd):
    r = list(range(len(rows)))
    c = list(range(len(rows[0])))
    rnd.shuffle(r)
    rnd.shuffle(c)
    shuffled = [[rows[i][j] for j in c] for i in r]
    assert smith_normal_form(shuffled) == smith_normal_form(rows)


@settings(max_examples=40, deadline=None)
@given(small_int_matrices(max_dim=4), st.integers(1, 5))
def test_rank_equals_factor_count_of_scaling(rows, k):
    m = RatMatrix.from_rows([[Fraction(x, k) for x in r] for r in rows])
    scaled = [[x for x in r] for r in rows]
    assert rank_q(m) == len(smith_normal_form(scaled).invariant_factors)
