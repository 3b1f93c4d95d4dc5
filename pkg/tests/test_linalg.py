from fractions import Fraction

import pytest

from modulicones.linalg import (
    add,
    dot,
    kernel_basis,
    mat,
    primitive,
    primitive_line,
    rank,
    rref,
    scale,
    solve,
    sub,
    unit_vec,
    vec,
    zero_vec,
)

F = Fraction


def test_vec_coerces_to_fractions():
    v = vec([1, F(1, 2), F(3, 4)])
    assert all(isinstance(x, F) for x in v)
    assert v == (1, F(1, 2), F(3, 4))


def test_vector_arithmetic():
    u, v = vec([1, 2, 3]), vec([4, 5, 6])
    assert add(u, v) == (5, 7, 9)
    assert sub(v, u) == (3, 3, 3)
    assert scale(F(1, 2), u) == (F(1, 2), 1, F(3, 2))
    assert dot(u, v) == 32
    assert zero_vec(3) == (0, 0, 0)
    assert unit_vec(3, 1) == (0, 1, 0)


def test_rref_identity_and_rank():
    m = mat([[1, 2], [3, 4]])
    r, pivots = rref(m)
    assert r == [(1, 0), (0, 1)]
    assert pivots == [0, 1]
    assert rank(m) == 2


def test_rref_dependent_rows():
    m = mat([[1, 2, 3], [2, 4, 6], [1, 1, 1]])
    assert rank(m) == 2
    k = kernel_basis(m)
    assert len(k) == 1
    for row in m:
        assert dot(row, k[0]) == 0


def test_solve_exact():
    m = mat([[2, 1], [1, 3]])
    x = solve(m, vec([5, 10]))
    assert x == (1, 3)


def test_solve_inconsistent_returns_none():
    m = mat([[1, 1], [2, 2]])
    assert solve(m, vec([1, 3])) is None


def test_primitive_clears_denominators_and_sign():
    assert primitive(vec([F(2, 3), F(4, 3)])) == (1, 2)
    assert primitive(vec([-2, 4, -6])) == (-1, 2, -3)
    # primitive_line flips so the first nonzero entry is positive
    assert primitive_line(vec([-2, 4, -6])) == (1, -2, 3)
    assert primitive(vec([0, F(-5, 7)])) == (0, -1)


def test_primitive_rejects_zero():
    with pytest.raises(ValueError):
        primitive(zero_vec(4))
