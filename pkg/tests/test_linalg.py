import numpy as np
import pytest

from negacyclic.field import get_field
from negacyclic.linalg import FpBasis, left_kernel_vector, mod_p, rank, rref

F5 = get_field(5)


def test_rref():
    reduced, pivots = rref(np.array([[2, 4, 1], [1, 2, 3], [0, 0, 1]]), 5)
    assert pivots == [0, 2]
    assert reduced.tolist() == [[1, 2, 0], [0, 0, 1]]


def test_rref_requires_a_matrix():
    with pytest.raises(ValueError):
        rref(np.array([1, 2, 3]), 5)


@pytest.mark.parametrize(
    "matrix,p,expected",
    [
        ([[1, 2], [2, 4]], 5, 1),
        ([[1, 2], [2, 1]], 5, 2),
        ([[1, 2], [2, 1]], 3, 1),
        ([[3, 6], [1, 2]], 3, 1),
        ([[0, 0], [0, 0]], 7, 0),
        (np.zeros((0, 4), dtype=np.int64), 5, 0),
        (np.eye(4, dtype=np.int64), 3, 4),
    ],
)
def test_rank(matrix, p, expected):
    assert rank(np.array(matrix), p) == expected


def test_mod_p():
    assert mod_p(np.array([-1, 5, 7]), 5).tolist() == [4, 0, 2]


def test_left_kernel_vector():
    matrix = np.array([[1, 2, 0], [2, 4, 0], [0, 1, 1]])
    y = left_kernel_vector(matrix, 5)
    assert y is not None and y.any()
    assert not (y @ matrix % 5).any()
    assert left_kernel_vector(np.eye(3, dtype=np.int64), 5) is None
    assert left_kernel_vector(np.zeros((2, 0), dtype=np.int64), 5).tolist() == [1, 0]


def test_basis_span_and_membership():
    basis = FpBasis.span([(1, 1, 0, 0), (2, 2, 0, 0), (0, 0, 0, 3)], F5, 1)
    assert basis.dim == 2
    assert len(basis) == 2
    assert basis.width == 4
    assert basis.pivots == [0, 3]
    assert basis.contains((3, 3, 0, 1))
    assert not basis.contains((1, 0, 0, 0))
    assert basis.includes(FpBasis.span([(0, 0, 0, 1)], F5, 1))
    assert not FpBasis.span([(0, 0, 0, 1)], F5, 1).includes(basis)
    assert basis.coordinates((3, 3, 0, 1)).tolist() == [3, 1]


def test_basis_equality_ignores_presentation():
    one = FpBasis.span([(1, 0, 1, 0), (0, 1, 0, 0)], F5, 1)
    other = FpBasis.span([(1, 1, 1, 0), (0, 3, 0, 0), (1, 2, 1, 0)], F5, 1)
    assert one == other
    assert hash(one) == hash(other)
    assert one != FpBasis.span([], F5, 1)


def test_rows_interleave_positions():
    basis = FpBasis.span([(1, 2, 0, 0, 0, 3, 4, 0)], F5, 2)
    assert basis.rows == [(1, 0, 0, 4, 2, 0, 3, 0)]


def test_layers():
    vectors = [
        (1, 0, 1, 0, 0, 0, 0, 0),
        (0, 0, 0, 1, 1, 0, 0, 0),
        (0, 0, 0, 0, 0, 0, 0, 1),
    ]
    basis = FpBasis.span(vectors, F5, 2)
    assert basis.block_rows(0).shape == (1, 8)
    assert [part.tolist() for part in basis.layer_span(1)] == [[0, 1]]
    assert basis.layer_span(2) == []
    assert [part.tolist() for part in basis.layer_span(3)] == [[0, 1]]
    assert basis.restricted_rank(range(2, 4)) == 2
    assert basis.restricted_rank([]) == 0


def test_solve_prefix():
    basis = FpBasis.span([(1, 0, 2, 0), (0, 0, 1, 1)], F5, 1)
    element = basis.solve_prefix((3, 0, 1))
    assert element.tolist() == [3, 0, 1, 0]
    assert basis.solve_prefix((0, 1)) is None
    assert basis.solve_prefix(()).tolist() == [0, 0, 0, 0]
