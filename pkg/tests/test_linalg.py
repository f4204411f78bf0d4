import random
from fractions import Fraction

import pytest

from lsacat.errors import SingularWitness
from lsacat.linalg import (Mat, coords_in_span, in_span, solve_col, span_basis,
                           vec_eq)
from lsacat.scalars import ExtField, QI, format_scalar


def rand_mat(rng, n=3):
    return Mat([[Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                 for _ in range(n)] for _ in range(n)])


def test_inverse_roundtrip():
    rng = random.Random(21)
    done = 0
    while done < 20:
        m = rand_mat(rng)
        try:
            inv = m.inverse()
        except SingularWitness:
            continue
        assert m * inv == Mat.identity(3)
        assert inv * m == Mat.identity(3)
        done += 1


def test_singular_inverse_raises():
    with pytest.raises(SingularWitness):
        Mat([[1, 2], [2, 4]]).inverse()


def test_det_and_rank():
    m = Mat([[1, 2], [3, 4]])
    assert m.det() == -2
    assert m.rank() == 2
    assert Mat([[1, 2], [2, 4]]).rank() == 1


def test_nullspace():
    m = Mat([[1, 1, 0], [0, 0, 1]])
    ns = m.nullspace()
    assert len(ns) == 1
    for v in ns:
        assert all(x == 0 for x in m.apply_col(v))


def test_charpoly_swap_matrix():
    # det(tI - [[0,1],[1,0]]) = t^2 - 1
    co = Mat([[0, 1], [1, 0]]).charpoly()
    assert [format_scalar(c) for c in co] == ["-1", "0", "1"]


def test_charpoly_matches_eigenvalues():
    m = Mat([[2, 0, 0], [0, 3, 0], [0, 0, 2]])
    co = m.charpoly()
    # (t-2)^2 (t-3) = t^3 - 7t^2 + 16t - 12
    assert [format_scalar(c) for c in co] == ["-12", "16", "-7", "1"]


def test_matrix_ops_over_extension():
    f = ExtField([-2, 0, 1])
    t = f.gen()
    m = Mat([[t, f.one()], [f.one(), t]])
    inv = m.inverse()
    assert m * inv == Mat([[f.one(), f.zero()], [f.zero(), f.one()]])


def test_span_helpers():
    basis = span_basis([[1, 0, 1], [0, 1, 0], [1, 1, 1]], 3)
    assert len(basis) == 2
    assert in_span([2, 3, 2], basis)
    assert not in_span([0, 0, 1], basis)
    coords = coords_in_span(basis, [2, 3, 2])
    mixed = [0, 0, 0]
    for c, b in zip(coords, basis):
        mixed = [x + c * y for x, y in zip(mixed, b)]
    assert vec_eq(mixed, [QI(2), QI(3), QI(2)])


def test_solve_col():
    a = Mat([[1, 2], [3, 4]])
    x = solve_col(a, [5, 11])
    assert vec_eq(a.apply_col(x), [QI(5), QI(11)])
    assert solve_col(Mat([[1, 1], [1, 1]]), [0, 1]) is None


def test_apply_row_and_col():
    m = Mat([[1, 2], [3, 4]])
    assert vec_eq(m.apply_row([1, 0]), [QI(1), QI(2)])
    assert vec_eq(m.apply_col([1, 0]), [QI(1), QI(3)])
