"""Representations, 1-cocycles, and the bijection with left-symmetric
structures.

Matrix-action convention (fixed by forcing phi to rebuild the printed
characteristic matrices): row r of a representation matrix F_i holds the
image of v_r, so coordinate row vectors act by x -> x * F_i, and the
commutator of the operators f(e_i), f(e_j) has row matrix
F_j * F_i - F_i * F_j.  Likewise row i of the cocycle matrix C holds the
coordinates of q(e_i).
"""

from __future__ import annotations

from .algebra import Algebra, check_left_symmetric, commutator_lie
from .errors import (DimensionMismatch, NotAutomorphism, NotBijective,
                     NotCocycle, NotLeftSymmetric, SingularWitness)
from .lie import check_lie_automorphism
from .linalg import Mat, vec_add, vec_eq, vec_scale, vec_zero
from .scalars import is_zero


class Representation:
    """A Lie algebra action on a same-dimensional space V."""

    __slots__ = ("g", "mats")

    def __init__(self, g, mats):
        if len(mats) != g.dim:
            raise DimensionMismatch("need one matrix per basis element")
        for m in mats:
            if not (m.is_square() and m.nrows == g.dim):
                raise DimensionMismatch("representation matrices must be dim x dim")
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "mats", tuple(mats))

    def __setattr__(self, name, value):
        raise AttributeError("Representation is immutable")

    def act(self, x):
        "Row matrix of f(x) for a coordinate vector x on g."
        out = Mat.zero(self.g.dim)
        for xi, m in zip(x, self.mats):
            if not is_zero(xi):
                out = out + xi * m
        return out


def check_representation(rep):
    """f([e_i,e_j]) = f(e_i) f(e_j) - f(e_j) f(e_i) as operators, which in
    the row convention reads F_j F_i - F_i F_j.  Returns (ok, certificate)."""
    g, mats = rep.g, rep.mats
    n = g.dim
    for i in range(n):
        for j in range(i + 1, n):
            lhs = Mat.zero(n)
            for k, ck in enumerate(g.b[i][j]):
                if not is_zero(ck):
                    lhs = lhs + ck * mats[k]
            rhs = mats[j] * mats[i] - mats[i] * mats[j]
            if lhs != rhs:
                return False, (i, j, lhs - rhs)
    return True, None


class Cocycle:
    """A pair (representation, C) with C[i][j] = A_j(e_i)."""

    __slots__ = ("rep", "C")

    def __init__(self, rep, c):
        if not (c.is_square() and c.nrows == rep.g.dim):
            raise DimensionMismatch("C must be dim x dim")
        object.__setattr__(self, "rep", rep)
        object.__setattr__(self, "C", c)

    def __setattr__(self, name, value):
        raise AttributeError("Cocycle is immutable")


def check_cocycle(c):
    """q[e_i,e_j] = f(e_i) q(e_j) - f(e_j) q(e_i) row-wise; (ok, cert)."""
    ok, cert = check_representation(c.rep)
    if not ok:
        return False, ("representation", cert)
    g, mats, cm = c.rep.g, c.rep.mats, c.C
    n = g.dim
    for i in range(n):
        for j in range(i + 1, n):
            lhs = vec_zero(n)
            for k, ck in enumerate(g.b[i][j]):
                if not is_zero(ck):
                    lhs = vec_add(lhs, vec_scale(cm.row(k), ck))
            rhs = [a - b for a, b in zip(mats[i].apply_row(cm.row(j)),
                                         mats[j].apply_row(cm.row(i)))]
            if not vec_eq(lhs, rhs):
                return False, (i, j, [a - b for a, b in zip(lhs, rhs)])
    return True, None


def is_bijective(c):
    return not is_zero(c.C.det())


def phi(c):
    """Left-symmetric product x*y = q^{-1}(f(x) q(y)) as an Algebra.

    Requires a valid bijective cocycle; the result is left-symmetric and
    its commutator Lie algebra equals c.rep.g table-for-table.
    """
    ok, cert = check_cocycle(c)
    if not ok:
        raise NotCocycle("cocycle conditions fail: %r" % (cert,))
    if not is_bijective(c):
        raise NotBijective("det C = 0")
    cm = c.C
    cinv = cm.inverse()
    n = c.rep.g.dim
    table = []
    for i in range(n):
        fi = c.rep.mats[i]
        row = []
        for j in range(n):
            row.append(cinv.apply_row(fi.apply_row(cm.row(j))))
        table.append(row)
    # the result is left-symmetric with sub-adjacent bracket c.rep.g;
    # both facts are exercised by the roundtrip test suites
    return Algebra(table)


def psi(a):
    """The bijective 1-cocycle (L, id) of a left-symmetric algebra; the
    representation matrices are the left multiplications in the row
    convention (row j of F_i is e_i * e_j)."""
    ok, cert = check_left_symmetric(a)
    if not ok:
        raise NotLeftSymmetric("not left-symmetric at %r" % (cert,))
    g = commutator_lie(a)
    mats = [Mat([a.product(i, j) for j in range(a.dim)]) for i in range(a.dim)]
    return Cocycle(Representation(g, mats), Mat.identity(a.dim))


def verify_cocycle_iso(c1, c2, g):
    """Isomorphism of cocycles via the linear map g: V1 -> V2 (row matrix):
    f_2 = g f_1 g^{-1} and q_2 = g q_1."""
    try:
        ginv = g.inverse()
    except SingularWitness:
        raise SingularWitness("cocycle isomorphism witness is singular")
    n = c1.rep.g.dim
    if c1.rep.g != c2.rep.g:
        return False
    for i in range(n):
        if ginv * c1.rep.mats[i] * g != c2.rep.mats[i]:
            return False
    return c1.C * g == c2.C


def verify_cocycle_equiv(c1, c2, g, t):
    """Equivalence of cocycles: f_2 = g (f_1 T) g^{-1} and q_2 = g q_1 T
    for an automorphism T of the underlying Lie algebra."""
    try:
        ginv = g.inverse()
    except SingularWitness:
        raise SingularWitness("cocycle equivalence witness g is singular")
    if c1.rep.g != c2.rep.g:
        return False
    lie = c1.rep.g
    if not check_lie_automorphism(lie, t):
        raise NotAutomorphism("T does not preserve the bracket")
    n = lie.dim
    for i in range(n):
        f1_t = Mat.zero(n)
        for k, ck in enumerate(t.row(i)):
            if not is_zero(ck):
                f1_t = f1_t + ck * c1.rep.mats[k]
        if ginv * f1_t * g != c2.rep.mats[i]:
            return False
    return t * c1.C * g == c2.C


def precompose_rep(rep, t):
    "The representation x -> f(T x) for an automorphism T (row matrix)."
    n = rep.g.dim
    mats = []
    for i in range(n):
        acc = Mat.zero(n)
        for k, ck in enumerate(t.row(i)):
            if not is_zero(ck):
                acc = acc + ck * rep.mats[k]
        mats.append(acc)
    return Representation(rep.g, mats)


def find_rep_intertwiner(rep1, rep2):
    """An invertible g with f2 = g f1 g^{-1} (row matrices: F1_i G = G F2_i),
    found from the linear intertwiner space; None when the representations
    are not isomorphic or no invertible intertwiner shows up in small
    combinations of the solution basis."""
    from itertools import combinations

    from .scalars import ZERO

    n = rep1.g.dim
    rows = []
    for a, b in zip(rep1.mats, rep2.mats):
        for r in range(n):
            for s in range(n):
                row = [ZERO] * (n * n)
                for j in range(n):
                    row[j * n + s] = row[j * n + s] + a.rows[r][j]
                    row[r * n + j] = row[r * n + j] - b.rows[j][s]
                rows.append(row)
    basis = Mat(rows).nullspace()
    cands = list(basis)
    for x, y in combinations(range(len(basis)), 2):
        cands.append([p + q for p, q in zip(basis[x], basis[y])])
        cands.append([p - q for p, q in zip(basis[x], basis[y])])
    for v in cands:
        g = Mat([v[k * n:(k + 1) * n] for k in range(n)])
        if not is_zero(g.det()):
            return g
    return None


def equivalent_cocycle(c1, g, t):
    """Construct the cocycle (g f_1 T g^{-1}, g q_1 T) equivalent to c1;
    useful for randomized roundtrip tests."""
    ginv = g.inverse()
    lie = c1.rep.g
    if not check_lie_automorphism(lie, t):
        raise NotAutomorphism("T does not preserve the bracket")
    n = lie.dim
    mats = []
    for i in range(n):
        f1_t = Mat.zero(n)
        for k, ck in enumerate(t.row(i)):
            if not is_zero(ck):
                f1_t = f1_t + ck * c1.rep.mats[k]
        mats.append(ginv * f1_t * g)
    rep = Representation(lie, mats)
    return Cocycle(rep, t * c1.C * g)
