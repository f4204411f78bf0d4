"""Constructions of left-symmetric algebras from other structures:
derivations of commutative associative algebras, classical r-matrices,
and O-operators on representations.

A linear map on the underlying space is given in the row convention
(row i = image of e_i) except where an operator is explicitly said to be
a column matrix; r-matrices R and O-operator maps T are row-convention
here, matching the witness matrices elsewhere in the package.
"""

from __future__ import annotations

from .algebra import Algebra, check_left_symmetric, multiply
from .cocycle import check_representation
from .errors import (CybeFails, NotCommutativeAssociative, NotDerivation,
                     NotOOperator, SingularWitness)
from .linalg import Mat, coords_in_span, span_basis, vec_eq, vec_is_zero, vec_sub, vec_zero
from .props import is_associative, is_commutative, is_novikov


def check_derivation(base, d):
    "Leibniz rule D(xy) = D(x)y + x D(y) on basis pairs (row matrix d)."
    n = base.dim
    for i in range(n):
        for j in range(n):
            lhs = d.apply_row(base.product(i, j))
            rhs = [x + y for x, y in zip(
                multiply(base, d.row(i), _unit(n, j)),
                multiply(base, _unit(n, i), d.row(j)))]
            if not vec_eq(lhs, rhs):
                return False
    return True


def novikov_from_derivation(base, d):
    """x*y = x . D(y) on a commutative associative algebra; the result is a
    Novikov (in particular left-symmetric) algebra."""
    if not (is_commutative(base) and is_associative(base)):
        raise NotCommutativeAssociative("base must be commutative associative")
    if not check_derivation(base, d):
        raise NotDerivation("D violates the Leibniz rule")
    n = base.dim
    table = [[multiply(base, _unit(n, i), d.row(j)) for j in range(n)]
             for i in range(n)]
    out = Algebra(table)
    ok, cert = check_left_symmetric(out)
    assert ok, "derivation construction broke left-symmetry: %r" % (cert,)
    assert is_novikov(out), "derivation construction is not Novikov"
    return out


def derivation_space(base):
    """Row-convention basis matrices of the derivation Lie algebra of a
    bilinear product, from the linear Leibniz constraints."""
    from .scalars import ZERO

    n = base.dim
    # unknowns d[r][s]; Leibniz at pair (i,j), coordinate k:
    # sum_m c[i][j][m] d[m][k] - sum_s d[i][s] c[s][j][k]
    #                          - sum_s d[j][s] c[i][s][k] = 0
    rows = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                row = [ZERO] * (n * n)
                for m in range(n):
                    row[m * n + k] = row[m * n + k] + base.c[i][j][m]
                for s in range(n):
                    row[i * n + s] = row[i * n + s] - base.c[s][j][k]
                    row[j * n + s] = row[j * n + s] - base.c[i][s][k]
                rows.append(row)
    basis = Mat(rows).nullspace()
    return [Mat([v[r * n:(r + 1) * n] for r in range(n)]) for v in basis]


def check_cybe(g, r):
    """Operator form of the classical Yang-Baxter equation,
    [R(x),R(y)] = R([R(x),y] + [x,R(y)]) on basis pairs; (ok, cert)."""
    n = g.dim
    for i in range(n):
        for j in range(i + 1, n):
            rx, ry = r.row(i), r.row(j)
            lhs = g.bracket(rx, ry)
            inner = [a + b for a, b in zip(g.bracket(rx, _unit(n, j)),
                                           g.bracket(_unit(n, i), ry))]
            rhs = r.apply_row(inner)
            if not vec_eq(lhs, rhs):
                return False, (i, j, vec_sub(lhs, rhs))
    return True, None


def lsa_from_rmatrix(g, r):
    "x*y = [R(x), y]; left-symmetric whenever R solves the CYBE."
    ok, cert = check_cybe(g, r)
    if not ok:
        raise CybeFails("CYBE fails at basis pair %r" % (cert[:2],))
    n = g.dim
    table = [[g.bracket(r.row(i), _unit(n, j)) for j in range(n)]
             for i in range(n)]
    out = Algebra(table)
    ok, cert = check_left_symmetric(out)
    assert ok, "r-matrix construction broke left-symmetry: %r" % (cert,)
    return out


def check_o_operator(g, rho, t):
    """[T(u),T(v)] = T(rho(T(u))v - rho(T(v))u) on basis pairs of V, for a
    representation rho of g on V and a linear map T: V -> g (row matrix)."""
    ok, cert = check_representation(rho)
    if not ok:
        return False, ("representation", cert)
    n = g.dim
    for r in range(n):
        for s in range(r + 1, n):
            tu, tv = t.row(r), t.row(s)
            lhs = g.bracket(tu, tv)
            act_u = rho.act(tu)      # row matrix of rho(T(u))
            act_v = rho.act(tv)
            inner = vec_sub(act_u.apply_row(_unit(n, s)),
                            act_v.apply_row(_unit(n, r)))
            rhs = t.apply_row(inner)
            if not vec_eq(lhs, rhs):
                return False, (r, s, vec_sub(lhs, rhs))
    return True, None


def induced_products(g, rho, t):
    """The two left-symmetric products of an O-operator: u*v = rho(T(u))v
    on V, and T(u)*T(v) = T(rho(T(u))v) on the image T(V).

    Returns (algebra_on_v, image_basis, image_table) where image_table[i][j]
    holds coordinates in the image basis.  For rank-deficient T the image
    product is checked to be independent of preimage choices.
    """
    ok, cert = check_o_operator(g, rho, t)
    if not ok:
        raise NotOOperator("O-operator identity fails: %r" % (cert,))
    n = g.dim
    v_table = [[rho.act(t.row(r)).apply_row(_unit(n, s)) for s in range(n)]
               for r in range(n)]
    on_v = Algebra(v_table)
    ok, cert = check_left_symmetric(on_v)
    assert ok, "V-product is not left-symmetric: %r" % (cert,)

    image = span_basis([t.row(r) for r in range(n)
                        if not vec_is_zero(t.row(r))], n)
    if not image:
        return on_v, [], []
    # preimages of the image basis under T
    pre = []
    for b in image:
        x = _solve_row(t, b)
        pre.append(x)
    k = len(image)
    image_table = []
    for i in range(k):
        row = []
        for j in range(k):
            prod = t.apply_row(multiply(on_v, pre[i], pre[j]))
            row.append(coords_in_span(image, prod))
        image_table.append(row)
    # well-definedness across the kernel of T
    kernel = t.transpose().nullspace()
    for z in kernel:
        for j in range(k):
            if not vec_is_zero(t.apply_row(multiply(on_v, z, pre[j]))):
                raise NotOOperator("image product depends on preimage choice")
            if not vec_is_zero(t.apply_row(multiply(on_v, pre[j], z))):
                raise NotOOperator("image product depends on preimage choice")
    if k == n:
        img_alg = Algebra(image_table)
        ok, _ = check_left_symmetric(img_alg)
        assert ok
    return on_v, image, image_table


def transported_product(g, rho, t):
    """For invertible T, the V-product pushed onto g along T; this must
    coincide with phi of the cocycle (rho, C = T^{-1})."""
    on_v, image, image_table = induced_products(g, rho, t)
    if len(image) != g.dim:
        raise SingularWitness("T is not invertible")
    n = g.dim
    tinv = t.inverse()
    table = [[t.apply_row(multiply(on_v, tinv.row(i), tinv.row(j)))
              for j in range(n)] for i in range(n)]
    return Algebra(table)


def o_operator_from_cocycle(c):
    "T = q^{-1} as a row matrix, an O-operator for the same representation."
    return c.C.inverse()


def _unit(n, k):
    v = vec_zero(n)
    from .scalars import ONE
    v[k] = ONE
    return v


def _solve_row(m, target):
    "One x with x * M = target."
    from .linalg import solve_col
    sol = solve_col(m.transpose(), target)
    assert sol is not None
    return sol
