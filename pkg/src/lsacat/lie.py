"""Lie algebra checks, the dimension-3 classifier, and automorphism groups.

The five solvable 3-dimensional families appearing in the catalog, with
their canonical bracket tables (only nonzero brackets shown):

    abelian      --
    heisenberg   [e1,e2] = e3
    N            [e3,e2] = e2
    D(l)         [e3,e1] = e1, [e3,e2] = l e2   (l != 0)
    E            [e3,e1] = e1, [e3,e2] = e1+e2

plus sl2 for the semisimple case.  D(1) is the algebra the catalog calls
D1; the classifier reports it as Dl with parameter 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, NotDimension3
from .linalg import (Mat, basis_vec, coords_in_span, in_span, span_basis,
                     vec_add, vec_eq, vec_is_zero, vec_scale, vec_zero)
from .scalars import (ONE, QI, ZERO, MultiPoly, as_scalar, gaussian_sqrt,
                      is_zero, qi)


class LieAlgebra:
    """Antisymmetric bracket table b[i][j] = coords of [e_i, e_j]."""

    __slots__ = ("dim", "b")

    def __init__(self, table):
        dim = len(table)
        if not 1 <= dim <= 4:
            raise DimensionMismatch("supported dimensions are 1..4")
        b = []
        for i, row in enumerate(table):
            if len(row) != dim:
                raise DimensionMismatch("bracket table is not square")
            b.append(tuple(tuple(as_scalar(x) for x in cell) for cell in row))
        for i in range(dim):
            for j in range(dim):
                if not vec_eq(b[i][j], [-x for x in b[j][i]]):
                    raise DimensionMismatch(
                        "bracket table is not antisymmetric at (%d,%d)" % (i, j))
        object.__setattr__(self, "b", tuple(b))
        object.__setattr__(self, "dim", dim)

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    @staticmethod
    def from_brackets(dim, brackets):
        """Build from {(i, j): [(coeff, k), ...]} with i < j, 0-indexed."""
        table = [[vec_zero(dim) for _ in range(dim)] for _ in range(dim)]
        for (i, j), terms in brackets.items():
            v = vec_zero(dim)
            for coeff, k in terms:
                v[k] = v[k] + as_scalar(coeff)
            table[i][j] = v
            table[j][i] = [-x for x in v]
        return LieAlgebra(table)

    def bracket(self, x, y):
        out = vec_zero(self.dim)
        for i, xi in enumerate(x):
            if is_zero(xi):
                continue
            for j, yj in enumerate(y):
                if is_zero(yj):
                    continue
                f = xi * yj
                out = vec_add(out, [f * ck for ck in self.b[i][j]])
        return out

    def check_jacobi(self):
        "Jacobi identity on all basis triples; (ok, certificate)."
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    s = vec_add(
                        self.bracket(self.b[i][j], _unit(n, k)),
                        vec_add(
                            self.bracket(self.b[j][k], _unit(n, i)),
                            self.bracket(self.b[k][i], _unit(n, j))))
                    if not vec_is_zero(s):
                        return False, (i, j, k, s)
        return True, None

    def ad(self, x):
        "Column-convention matrix of ad_x = [x, .]."
        cols = [self.bracket(x, _unit(self.dim, j)) for j in range(self.dim)]
        return Mat(list(zip(*cols)))

    def rebase(self, w):
        "Bracket table in the new basis given by the rows of w."
        winv = w.inverse()
        n = self.dim
        table = []
        for i in range(n):
            row = []
            for j in range(n):
                row.append(winv.apply_row(self.bracket(w.row(i), w.row(j))))
            table.append(row)
        return LieAlgebra(table)

    def is_zero_bracket(self):
        return all(vec_is_zero(self.b[i][j])
                   for i in range(self.dim) for j in range(self.dim))

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        if self.dim != other.dim:
            return False
        return all(vec_eq(self.b[i][j], other.b[i][j])
                   for i in range(self.dim) for j in range(self.dim))

    def __hash__(self):
        raise TypeError("LieAlgebra is unhashable")


def _unit(n, k):
    return basis_vec(n, k)


def killing_form(g):
    "Killing form K(x,y) = tr(ad x ad y) on basis pairs; (matrix, rank)."
    ads = [g.ad(_unit(g.dim, i)) for i in range(g.dim)]
    k = Mat([[(ads[i] * ads[j]).trace() for j in range(g.dim)]
             for i in range(g.dim)])
    return k, k.rank()


def check_lie_automorphism(g, t):
    "True iff t is invertible and preserves all basis brackets."
    if not (t.is_square() and t.nrows == g.dim):
        raise DimensionMismatch("automorphism candidate has wrong shape")
    from .errors import SingularWitness
    try:
        t.inverse()
    except SingularWitness:
        return False
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = t.apply_row(g.b[i][j])
            rhs = g.bracket(t.row(i), t.row(j))
            if not vec_eq(lhs, rhs):
                return False
    return True


# ---------------------------------------------------------------------------
# canonical families and their automorphism groups


FAMILIES = ("abelian", "heisenberg", "N", "Dl", "E", "sl2")


def canonical_lie(family, l=None):
    if family == "abelian":
        return LieAlgebra.from_brackets(3, {})
    if family == "heisenberg":
        return LieAlgebra.from_brackets(3, {(0, 1): [(1, 2)]})
    if family == "N":
        return LieAlgebra.from_brackets(3, {(2, 1): [(1, 1)]})
    if family == "Dl":
        if l is None:
            raise ValueError("Dl needs the parameter l")
        return LieAlgebra.from_brackets(
            3, {(2, 0): [(1, 0)], (2, 1): [(qi(l), 1)]})
    if family == "E":
        return LieAlgebra.from_brackets(
            3, {(2, 0): [(1, 0)], (2, 1): [(1, 0), (1, 1)]})
    if family == "sl2":
        # [h,e]=2e, [h,f]=-2f, [e,f]=h with basis (h,e,f)
        return LieAlgebra.from_brackets(
            3, {(0, 1): [(2, 1)], (0, 2): [(-2, 2)], (1, 2): [(1, 0)]})
    raise ValueError("unknown family %r" % (family,))


def aut_template(family):
    """Parameter names, parametric matrix, and determinant expression of
    the canonical family's automorphism group, in the row convention."""
    def v(name):
        return MultiPoly.var(name)

    z, one = ZERO, ONE
    if family == "heisenberg":
        names = ("a11", "a12", "a13", "a21", "a22", "a23")
        m = Mat([
            [v("a11"), v("a12"), v("a13")],
            [v("a21"), v("a22"), v("a23")],
            [z, z, v("a11") * v("a22") - v("a12") * v("a21")],
        ])
        det = v("a11") * v("a22") - v("a12") * v("a21")
        return names, m, det
    if family == "N":
        names = ("a11", "a22", "a31", "a32")
        m = Mat([
            [v("a11"), z, z],
            [z, v("a22"), z],
            [v("a31"), v("a32"), one],
        ])
        return names, m, v("a11") * v("a22")
    if family == "D1":
        names = ("a11", "a12", "a21", "a22", "a31", "a32")
        m = Mat([
            [v("a11"), v("a12"), z],
            [v("a21"), v("a22"), z],
            [v("a31"), v("a32"), one],
        ])
        det = v("a11") * v("a22") - v("a12") * v("a21")
        return names, m, det
    if family == "Dl":
        names = ("a11", "a22", "a31", "a32")
        m = Mat([
            [v("a11"), z, z],
            [z, v("a22"), z],
            [v("a31"), v("a32"), one],
        ])
        return names, m, v("a11") * v("a22")
    if family == "Dm1_swap":
        # second component of Aut(D(-1)): e1 and e2 exchanged, e3 negated
        names = ("a12", "a21", "a31", "a32")
        m = Mat([
            [z, v("a12"), z],
            [v("a21"), z, z],
            [v("a31"), v("a32"), -one],
        ])
        return names, m, v("a12") * v("a21")
    if family == "E":
        names = ("a11", "a21", "a31", "a32")
        m = Mat([
            [v("a11"), z, z],
            [v("a21"), v("a11"), z],
            [v("a31"), v("a32"), one],
        ])
        return names, m, v("a11") * v("a11")
    raise ValueError("no stored automorphism group for %r" % (family,))


def aut_components(family, l=None):
    "Template names for all components of the family's automorphism group."
    if family == "Dl" and l is not None and qi(l) == QI(-1):
        return ("Dl", "Dm1_swap")
    if family == "Dl" and l is not None and qi(l) == ONE:
        return ("D1",)
    return (family,)


def instantiate_aut(template_family, values):
    "Fill the parametric automorphism matrix with concrete scalars."
    names, m, det = aut_template(template_family)
    bind = {n: qi(values[n]) for n in names}
    from .scalars import substitute
    rows = [[substitute(x, bind) if not isinstance(x, QI) else x
             for x in m.row(i)] for i in range(m.nrows)]
    d = substitute(det, bind)
    if is_zero(d):
        raise ValueError("automorphism parameters make the matrix singular")
    return Mat(rows)


def aut_shape_member(family, t, l=None):
    "Does t match the printed parametric group (any component)?"
    for comp in aut_components(family, l):
        if _shape_member_one(comp, t):
            return True
    return False


def _shape_member_one(comp, t):
    r = t.rows
    if comp == "heisenberg":
        det2 = r[0][0] * r[1][1] - r[0][1] * r[1][0]
        return (is_zero(r[2][0]) and is_zero(r[2][1])
                and r[2][2] == det2 and not is_zero(det2))
    if comp == "N" or comp == "Dl":
        return (is_zero(r[0][1]) and is_zero(r[0][2]) and is_zero(r[1][0])
                and is_zero(r[1][2]) and r[2][2] == ONE
                and not is_zero(r[0][0] * r[1][1]))
    if comp == "D1":
        det2 = r[0][0] * r[1][1] - r[0][1] * r[1][0]
        return (is_zero(r[0][2]) and is_zero(r[1][2]) and r[2][2] == ONE
                and not is_zero(det2))
    if comp == "Dm1_swap":
        return (is_zero(r[0][0]) and is_zero(r[0][2]) and is_zero(r[1][1])
                and is_zero(r[1][2]) and r[2][2] == QI(-1)
                and not is_zero(r[0][1] * r[1][0]))
    if comp == "E":
        return (is_zero(r[0][1]) and is_zero(r[0][2]) and is_zero(r[1][2])
                and r[0][0] == r[1][1] and r[2][2] == ONE
                and not is_zero(r[0][0]))
    raise ValueError("unknown component %r" % (comp,))


def random_automorphism(family, rng, l=None):
    "Random member of the stored group, exact small Gaussian rationals."
    from fractions import Fraction

    comps = aut_components(family, l)
    comp = comps[rng.randrange(len(comps))]
    names, _, _ = aut_template(comp)
    pool_unit = [QI(1), QI(-1), QI(2), QI(Fraction(1, 2)), QI(-2), QI(3),
                 QI(0, 1), QI(1, 1)]
    pool_any = pool_unit + [QI(0), QI(0), QI(Fraction(-1, 2)), QI(1, -1)]
    while True:
        vals = {}
        for n in names:
            need_unit = n in ("a11", "a22", "a12", "a21")
            pool = pool_unit if need_unit else pool_any
            vals[n] = pool[rng.randrange(len(pool))]
        try:
            return instantiate_aut(comp, vals)
        except ValueError:
            continue


# ---------------------------------------------------------------------------
# the dimension-3 classifier


@dataclass
class LieClass:
    tag: str                 # Abelian | Heisenberg | N | Dl | E | Sl2 | Unrecognized
    param: object = None     # canonical l for Dl, when it lies in Q(i)
    witness: object = None   # Mat whose rows express the canonical basis
    detail: str = ""

    def key(self):
        p = self.param
        return (self.tag, None if p is None else (qi(p).re, qi(p).im))


def canonical_l(l):
    """Pick the representative of {l, 1/l}: |l| <= 1, ties broken by
    nonnegative imaginary part (and then nonnegative real part)."""
    l = qi(l)
    if l.is_zero():
        return l
    inv = QI(1) / l
    n1, n2 = l.norm2(), inv.norm2()
    if n1 < n2:
        return l
    if n2 < n1:
        return inv
    # |l| = 1, so inv is the conjugate of l; prefer im >= 0
    if l.im >= 0:
        return l
    return inv


def classify3(g):
    """Classify a 3-dimensional complex Lie algebra onto the catalog list.

    Decision procedure: d = dim [g,g]; d=0 abelian; d=1 Heisenberg when the
    derived algebra is central, else N; d=2 via the action of an outside
    element on the derived plane (diagonalizable -> Dl with canonical l,
    non-semisimple -> E); d=3 sl2.  A witness basis change (rows = new
    basis) is attached whenever the eigen-data lies in Q(i).
    """
    if g.dim != 3:
        raise NotDimension3("classify3 needs dim 3, got %d" % g.dim)
    n = 3
    vecs = [g.b[i][j] for i in range(n) for j in range(i + 1, n)]
    derived = span_basis([v for v in vecs if not vec_is_zero(v)], n)
    d = len(derived)

    if d == 0:
        return LieClass("Abelian", witness=Mat.identity(3))

    if d == 1:
        z = derived[0]
        central = all(vec_is_zero(g.bracket(_unit(n, i), z)) for i in range(n))
        if central:
            return _classify_heisenberg(g, z)
        return _classify_n(g, z)

    if d == 2:
        return _classify_d2(g, derived)

    kf, rank = killing_form(g)
    if rank == 3:
        return LieClass("Sl2", detail="killing rank 3")
    return LieClass("Unrecognized", detail="derived dim 3, killing rank %d" % rank)


def _classify_heisenberg(g, z):
    n = 3
    for i in range(n):
        for j in range(i + 1, n):
            if not vec_is_zero(g.b[i][j]):
                c = _coeff_along(g.b[i][j], z)
                e1 = _unit(n, i)
                e2 = vec_scale(_unit(n, j), 1 / c)
                w = Mat([e1, e2, z])
                assert g.rebase(w) == canonical_lie("heisenberg")
                return LieClass("Heisenberg", witness=w)
    return LieClass("Unrecognized", detail="no nonzero bracket found")


def _classify_n(g, z):
    n = 3
    e3 = None
    for i in range(n):
        v = g.bracket(_unit(n, i), z)
        if not vec_is_zero(v):
            c = _coeff_along(v, z)
            e3 = vec_scale(_unit(n, i), 1 / c)
            break
    # center: x with [x, e_j] = 0 for all j
    rows = []
    for i in range(n):
        rows.append([x for j in range(n) for x in g.b[i][j]])
    center = Mat(rows).transpose().nullspace()
    for c0 in center:
        w = Mat([c0, z, e3])
        try:
            w.inverse()
        except Exception:
            continue
        if g.rebase(w) == canonical_lie("N"):
            return LieClass("N", witness=w)
    return LieClass("Unrecognized", detail="N-type normalization failed")


def _classify_d2(g, derived):
    n = 3
    b1, b2 = derived
    if not vec_is_zero(g.bracket(b1, b2)):
        return LieClass("Unrecognized", detail="derived plane not abelian")
    w0 = None
    for i in range(n):
        if not in_span(_unit(n, i), derived):
            w0 = _unit(n, i)
            break
    # action of ad(w0) on the derived plane, row convention
    r1 = coords_in_span(derived, g.bracket(w0, b1))
    r2 = coords_in_span(derived, g.bracket(w0, b2))
    a2 = Mat([r1, r2])
    tr = a2.trace()
    det = a2.det()
    if is_zero(det):
        return LieClass("Unrecognized", detail="outside action is singular")
    disc = tr * tr - QI(4) * det
    if is_zero(disc):
        alpha = tr / QI(2)
        nil = a2 * (1 / alpha) - Mat.identity(2)
        e3 = vec_scale(w0, 1 / alpha)
        if nil.is_zero():
            w = Mat([b1, b2, e3])
            assert g.rebase(w) == canonical_lie("Dl", 1)
            return LieClass("Dl", param=ONE, witness=w)
        # Jordan block: E family
        for v in ([ONE, ZERO], [ZERO, ONE]):
            img = nil.apply_row(v)
            if not vec_is_zero(img):
                e2c, e1c = v, img
                break
        e1 = _mix(derived, e1c)
        e2 = _mix(derived, e2c)
        w = Mat([e1, e2, e3])
        assert g.rebase(w) == canonical_lie("E")
        return LieClass("E", witness=w)
    root = gaussian_sqrt(disc)
    if root is None:
        return LieClass(
            "Dl", param=None, witness=None,
            detail="eigenvalue ratio outside Q(i); charpoly disc %s" % disc)
    alpha = (tr + root) / QI(2)
    beta = (tr - root) / QI(2)
    l = canonical_l(beta / alpha)
    if l != beta / alpha:
        alpha, beta = beta, alpha
    # now l = beta/alpha is canonical; eigenvectors (row convention)
    v1 = _left_eigvec(a2, alpha)
    v2 = _left_eigvec(a2, beta)
    e1 = _mix(derived, v1)
    e2 = _mix(derived, v2)
    e3 = vec_scale(w0, 1 / alpha)
    w = Mat([e1, e2, e3])
    assert g.rebase(w) == canonical_lie("Dl", l)
    return LieClass("Dl", param=l, witness=w)


def _left_eigvec(m, ev):
    sub = m - ev * Mat.identity(m.nrows)
    null = sub.transpose().nullspace()
    assert null, "eigenvalue is not actually an eigenvalue"
    return null[0]


def _mix(basis, coords):
    out = vec_zero(len(basis[0]))
    for c, b in zip(coords, basis):
        out = vec_add(out, vec_scale(b, c))
    return out


def _coeff_along(v, z):
    "Scalar c with v = c z for collinear vectors."
    for a, b in zip(v, z):
        if not is_zero(b):
            return a / b
    raise ValueError("zero direction vector")
