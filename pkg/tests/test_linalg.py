from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from liecoh import linalg


def F(a, b=1):
    return Fraction(a, b)


def test_rank_identity():
    assert linalg.rank(linalg.identity(2)) == 2


def test_rank_zero_matrix():
    assert linalg.rank(linalg.zeros(3, 4)) == 0


def test_rank_dependent_rows():
    assert linalg.rank([[F(1), F(2)], [F(2), F(4)]]) == 1


def test_kernel_identity_empty():
    assert linalg.kernel_basis(linalg.identity(3)) == []


def test_kernel_zero_matrix():
    ker = linalg.kernel_basis(linalg.zeros(2, 3))
    assert len(ker) == 3


def test_kernel_vectors_annihilated():
    M = [[F(1), F(1), F(0)]]
    ker = linalg.kernel_basis(M)
    assert len(ker) == 2
    for v in ker:
        assert all(x == 0 for x in linalg.mat_vec(M, v))


def test_intersect_coordinate_spans():
    e = lambda j: linalg.unit_vector(3, j)
    inter = linalg.intersect([e(0), e(1)], [e(1), e(2)])
    assert len(inter) == 1
    assert linalg.rank(inter + [e(1)]) == 1


def test_intersect_self():
    span = [[F(1), F(2), F(0)], [F(0), F(1), F(5)]]
    inter = linalg.intersect(span, span)
    assert len(inter) == 2
    assert linalg.rank(inter + span) == 2


def test_intersect_dimension_mismatch():
    with pytest.raises(ValueError):
        linalg.intersect([[F(1), F(0)]], [[F(1), F(0), F(0)]])


def test_quotient_dim():
    assert linalg.quotient_dim(5, [[F(1)] + [F(0)] * 4, [F(0), F(1)] + [F(0)] * 3]) == 3
    assert linalg.quotient_dim(3, linalg.identity(3)) == 0
    # three vectors with one dependency in ambient 6
    v1 = linalg.unit_vector(6, 0)
    v2 = linalg.unit_vector(6, 1)
    v3 = [a + b for a, b in zip(v1, v2)]
    assert linalg.quotient_dim(6, [v1, v2, v3]) == 4


def test_quotient_dim_too_long():
    with pytest.raises(ValueError):
        linalg.quotient_dim(2, [[F(1), F(0), F(0)]])


def test_solve_in_span():
    span = [[F(1), F(0), F(1)], [F(0), F(1), F(1)]]
    c = linalg.solve_in_span(span, [F(2), F(3), F(5)])
    assert c == [F(2), F(3)]
    assert linalg.solve_in_span(span, [F(0), F(0), F(1)]) is None


rational = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, max_dim=5):
    n = draw(st.integers(1, max_dim))
    m = draw(st.integers(1, max_dim))
    return [[draw(rational) for _ in range(m)] for _ in range(n)]


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(M):
    assert linalg.rank(M) + len(linalg.kernel_basis(M)) == len(M[0])


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_exactness(M):
    for v in linalg.kernel_basis(M):
        assert all(x == 0 for x in linalg.mat_vec(M, v))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.data())
def test_intersection_dimension_formula(n, data):
    vecs = st.lists(st.lists(rational, min_size=n, max_size=n), min_size=1, max_size=4)
    A = data.draw(vecs)
    B = data.draw(vecs)
    dim_a = linalg.rank(A)
    dim_b = linalg.rank(B)
    dim_sum = linalg.rank(A + B)
    inter = linalg.intersect(A, B)
    assert len(inter) == dim_a + dim_b - dim_sum
