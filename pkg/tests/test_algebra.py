import random
from fractions import Fraction

import pytest

from lsacat import catalog
from lsacat.algebra import (Algebra, basis_associator, basis_vector,
                            check_left_regular, check_left_symmetric,
                            commutator_lie, left_matrix, multiply, rebase,
                            right_matrix)
from lsacat.errors import DimensionMismatch
from lsacat.lie import classify3
from lsacat.linalg import Mat, vec_add, vec_eq, vec_is_zero
from lsacat.scalars import QI


H1 = Algebra.from_products(3, {
    (0, 0): [(1, 0)], (0, 1): [(1, 1), (1, 2)], (0, 2): [(1, 2)],
    (1, 0): [(1, 1)], (2, 0): [(1, 2)],
})


def test_multiply_h1_basis():
    # e1 e2 = e2 + e3 in (H-1)
    assert vec_eq(multiply(H1, basis_vector(H1, 0), basis_vector(H1, 1)),
                  [QI(0), QI(1), QI(1)])


def test_multiply_zero_table():
    z = Algebra.zero(3)
    assert vec_is_zero(multiply(z, [1, 2, 3], [4, 5, 6]))


def test_multiply_n1_lambda2():
    n1 = catalog.instantiate("N-1", {"lambda": 2})
    assert vec_eq(multiply(n1, basis_vector(n1, 2), basis_vector(n1, 2)),
                  [QI(0), QI(0), QI(2)])


def test_multiply_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        multiply(H1, [1, 0], [0, 1, 0])


def test_associator_zero_on_associative():
    diag = Algebra.from_products(3, {(0, 0): [(1, 0)], (1, 1): [(1, 1)],
                                     (2, 2): [(1, 2)]})
    for i in range(3):
        for j in range(3):
            for k in range(3):
                assert vec_is_zero(basis_associator(diag, i, j, k))


def test_associator_h1_e2_e1_e2():
    # (e2 e1) e2 - e2 (e1 e2) = e2 e2 - e2 (e2 + e3) = 0
    assert vec_is_zero(basis_associator(H1, 1, 0, 1))


def test_left_symmetric_catalog_entry():
    ok, cert = check_left_symmetric(H1)
    assert ok and cert is None


def test_left_symmetric_zero_algebra():
    ok, _ = check_left_symmetric(Algebra.zero(3))
    assert ok


def test_left_symmetric_failure_certificate():
    bad = Algebra.from_products(3, {(0, 0): [(1, 1)], (1, 0): [(1, 0)]})
    ok, cert = check_left_symmetric(bad)
    assert not ok
    i, j, k, diff = cert
    d = [a - b for a, b in zip(basis_associator(bad, i, j, k),
                               basis_associator(bad, j, i, k))]
    assert vec_eq(d, diff) and not vec_is_zero(diff)


def test_commutator_h1_is_heisenberg():
    g = commutator_lie(H1)
    assert vec_eq(g.b[0][1], [QI(0), QI(0), QI(1)])
    assert all(vec_is_zero(g.b[i][j]) for i in range(3) for j in range(3)
               if (i, j) not in ((0, 1), (1, 0)))


def test_commutator_commutative_table_abelian():
    sym = Algebra.from_products(3, {(0, 1): [(1, 2)], (1, 0): [(1, 2)]})
    assert commutator_lie(sym).is_zero_bracket()


def test_commutator_n1():
    n1 = catalog.instantiate("N-1", {"lambda": 2})
    g = commutator_lie(n1)
    assert vec_eq(g.b[2][1], [QI(0), QI(1), QI(0)])


def test_left_matrix_h1():
    m = left_matrix(H1, basis_vector(H1, 0))
    # columns: e1 -> e1, e2 -> e2 + e3, e3 -> e3
    assert vec_eq(m.col(0), [QI(1), QI(0), QI(0)])
    assert vec_eq(m.col(1), [QI(0), QI(1), QI(1)])
    assert vec_eq(m.col(2), [QI(0), QI(0), QI(1)])


def test_right_matrix_h1_is_identity_at_e1():
    assert right_matrix(H1, basis_vector(H1, 0)) == Mat.identity(3)


def test_left_right_matrices_zero_algebra():
    z = Algebra.zero(3)
    assert left_matrix(z, [1, 1, 1]).is_zero()
    assert right_matrix(z, [1, 1, 1]).is_zero()


def test_left_regular_equals_left_symmetric():
    rng = random.Random(31)
    h2 = catalog.instantiate("H-2")
    bad = Algebra.from_products(3, {(0, 0): [(1, 1)], (1, 0): [(1, 0)]})
    for alg in (H1, h2, Algebra.zero(3), bad):
        assert check_left_regular(alg)[0] == check_left_symmetric(alg)[0]
    for _ in range(10):
        table = [[[QI(rng.randint(-1, 1)) for _ in range(3)]
                  for _ in range(3)] for _ in range(3)]
        alg = Algebra(table)
        assert check_left_regular(alg)[0] == check_left_symmetric(alg)[0]


def test_multiply_bilinear():
    rng = random.Random(32)
    for _ in range(10):
        x = [QI(rng.randint(-3, 3)) for _ in range(3)]
        x2 = [QI(rng.randint(-3, 3)) for _ in range(3)]
        y = [QI(rng.randint(-3, 3)) for _ in range(3)]
        lhs = multiply(H1, vec_add(x, x2), y)
        rhs = vec_add(multiply(H1, x, y), multiply(H1, x2, y))
        assert vec_eq(lhs, rhs)


def test_rebase_preserves_class():
    w = Mat([[1, 1, 0], [0, 1, 0], [Fraction(1, 2), 0, 1]])
    moved = rebase(H1, w)
    assert check_left_symmetric(moved)[0]
    assert classify3(commutator_lie(moved)).tag == "Heisenberg"
