from fractions import Fraction

import sympy
from hypothesis import given, strategies as st

from cameronlab.linalg import RationalMatrix, SparseEchelon, image_intersection, independent_subset, span_rank

from . import oracles


def small_matrices(max_rows=4, max_cols=4):
    entry = st.integers(-3, 3).map(Fraction) | st.fractions(min_value=-2, max_value=2, max_denominator=4)
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(entry, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def test_rank_examples():
    assert RationalMatrix.identity(3).rank() == 3
    assert RationalMatrix.zero(2, 5).rank() == 0
    assert RationalMatrix.zero(2, 5).nullity() == 5


def test_nullspace_of_sum_map():
    assert RationalMatrix.from_rows([[1, 1]]).nullspace_basis() == [[1, -1]]


def test_nullspace_is_reduced():
    basis = RationalMatrix.from_rows([[1, 2, 3], [2, 4, 6]]).nullspace_basis()
    assert basis == [[1, 0, Fraction(-1, 3)], [0, 1, Fraction(-2, 3)]]


@given(small_matrices())
def test_rank_matches_minors(rows):
    assert RationalMatrix.from_rows(rows).rank() == oracles.rank_by_minors(rows)


@given(small_matrices(5, 6))
def test_rank_matches_sympy(rows):
    assert RationalMatrix.from_rows(rows).rank() == sympy.Matrix(rows).rank()


@given(small_matrices(5, 6))
def test_nullspace_vectors_are_killed(rows):
    mat = RationalMatrix.from_rows(rows)
    basis = mat.nullspace_basis()
    assert len(basis) == mat.nullity()
    for v in basis:
        assert all(x == 0 for x in mat.apply(v))
    if basis:
        assert RationalMatrix.from_rows(basis, mat.cols).rank() == len(basis)


@given(small_matrices(4, 4))
def test_transpose_preserves_rank(rows):
    mat = RationalMatrix.from_rows(rows)
    assert mat.transpose().rank() == mat.rank()


@given(small_matrices(3, 4), small_matrices(4, 3))
def test_matmul_matches_sympy(a, b):
    cols = len(a[0])
    b = [row[:3] for row in b][:cols]
    if len(b) < cols:
        return
    prod = RationalMatrix.from_rows(a) @ RationalMatrix.from_rows(b)
    expected = sympy.Matrix(a) * sympy.Matrix(b)
    assert [[sympy.Rational(x.numerator, x.denominator) for x in row] for row in prod.to_dense()] == expected.tolist()


def test_sparse_echelon_with_tuple_keys():
    ech = SparseEchelon()
    assert ech.add({(1, 2): 1, (2, 1): -1})
    assert ech.add({(1, 2): 2})
    assert not ech.add({(2, 1): 5})
    assert ech.rank == 2
    assert ech.contains({(1, 2): 3, (2, 1): 7})
    assert not ech.contains({(3, 3): 1})


def test_span_rank_and_independent_subset():
    vecs = [{0: 1, 1: 1}, {0: 2, 1: 2}, {1: 1}, {0: 1}]
    assert span_rank(vecs) == 2
    assert independent_subset(vecs) == [0, 2]


def test_image_intersection_of_planes():
    # span(e1, e2) meets span(e2, e3) in span(e2)
    inter = image_intersection([[[1, 0, 0], [0, 1, 0]], [[0, 1, 0], [0, 0, 1]]], 3)
    assert inter == [[0, 1, 0]]


def test_csv_export():
    assert RationalMatrix.from_rows([[1, Fraction(1, 2)]]).to_csv() == "1,1/2\r\n"
