from fractions import Fraction

import pytest

from cellular_hecke.linalg import (
    SingularMatrixError,
    inverse,
    left_nullspace,
    mat_identity,
    mat_mul,
    mat_pow,
    rank,
    right_nullspace,
    rref,
    solve_left,
    solve_right,
    transpose,
    vec_mat,
)


def F(rows):
    return [[Fraction(x) for x in row] for row in rows]


def test_inverse_round_trip():
    a = F([[2, 1], [1, 1]])
    assert mat_mul(a, inverse(a)) == mat_identity(2)


def test_singular_raises():
    with pytest.raises(SingularMatrixError):
        inverse(F([[1, 2], [2, 4]]))


def test_rank_and_nullspaces():
    a = F([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert rank(a) == 2
    for v in right_nullspace(a):
        assert all(x == 0 for x in vec_mat(v, transpose(a)))
    for v in left_nullspace(a):
        assert all(x == 0 for x in vec_mat(v, a))
    assert len(right_nullspace(a)) == 1
    assert len(left_nullspace(a)) == 1


def test_solve_both_sides():
    a = F([[1, 1], [0, 1]])
    x = solve_right(a, [Fraction(3), Fraction(2)])
    assert [sum(r[j] * x[j] for j in range(2)) for r in a] == [3, 2]
    c = solve_left([Fraction(3), Fraction(2)], a)
    assert vec_mat(c, a) == [3, 2]


def test_solve_inconsistent():
    with pytest.raises(SingularMatrixError):
        solve_right(F([[1, 0], [1, 0]]), [Fraction(1), Fraction(2)])


def test_rref_pivots_deterministic():
    a = F([[0, 1, 2], [0, 2, 4], [1, 0, 0]])
    red, pivots = rref(a)
    assert pivots == [0, 1]
    assert red[0][0] == 1 and red[1][1] == 1


def test_mat_pow():
    a = F([[1, 1], [0, 1]])
    assert mat_pow(a, 5)[0][1] == 5
