"""Structure-constant algebras and the left-symmetry machinery.

An Algebra stores the full multiplication table c[i][j] = coordinates of
e_i e_j, which is exactly the characteristic-matrix reading: entry (i, j)
of the printed table is the product (left factor e_i) * (right factor e_j).
Vectors are plain coordinate lists in the algebra's basis.
"""

from __future__ import annotations

from .errors import DimensionMismatch
from .linalg import Mat, vec_add, vec_eq, vec_is_zero, vec_sub, vec_zero
from .scalars import as_scalar, format_scalar, is_zero, substitute


class Algebra:
    """Finite-dimensional bilinear product given by structure constants."""

    __slots__ = ("dim", "basis_names", "c")

    def __init__(self, table, basis_names=None):
        dim = len(table)
        if not 1 <= dim <= 4:
            raise DimensionMismatch("supported dimensions are 1..4")
        c = []
        for row in table:
            if len(row) != dim:
                raise DimensionMismatch("table is not dim x dim")
            crow = []
            for cell in row:
                if len(cell) != dim:
                    raise DimensionMismatch("product vector has wrong length")
                crow.append(tuple(as_scalar(x) for x in cell))
            c.append(tuple(crow))
        object.__setattr__(self, "c", tuple(c))
        object.__setattr__(self, "dim", dim)
        object.__setattr__(
            self, "basis_names",
            tuple(basis_names) if basis_names
            else tuple("e%d" % (k + 1) for k in range(dim)))

    def __setattr__(self, name, value):
        raise AttributeError("Algebra is immutable")

    @staticmethod
    def zero(dim):
        return Algebra([[vec_zero(dim) for _ in range(dim)] for _ in range(dim)])

    @staticmethod
    def from_products(dim, products):
        """Build from a sparse {(i, j): [(coeff, k), ...]} map, 0-indexed."""
        table = [[vec_zero(dim) for _ in range(dim)] for _ in range(dim)]
        for (i, j), terms in products.items():
            v = vec_zero(dim)
            for coeff, k in terms:
                v[k] = v[k] + as_scalar(coeff)
            table[i][j] = v
        return Algebra(table)

    def product(self, i, j):
        "Coordinates of e_i e_j."
        return list(self.c[i][j])

    def is_zero_product(self):
        return all(vec_is_zero(self.c[i][j])
                   for i in range(self.dim) for j in range(self.dim))

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        if self.dim != other.dim:
            return False
        return all(vec_eq(self.c[i][j], other.c[i][j])
                   for i in range(self.dim) for j in range(self.dim))

    def __hash__(self):
        raise TypeError("Algebra is unhashable")

    def table_str(self):
        "Characteristic-matrix rendering, one row per left factor."
        def cell(v):
            parts = []
            for k, x in enumerate(v):
                if is_zero(x):
                    continue
                s = format_scalar(x)
                name = self.basis_names[k]
                if s == "1":
                    parts.append(name)
                elif s == "-1":
                    parts.append("-%s" % name)
                else:
                    if ("+" in s[1:]) or ("-" in s[1:]) or "/" in s:
                        s = "(%s)" % s
                    parts.append("%s*%s" % (s, name))
            if not parts:
                return "0"
            out = parts[0]
            for p in parts[1:]:
                out += p if p.startswith("-") else "+" + p
            return out

        rows = [[cell(self.c[i][j]) for j in range(self.dim)]
                for i in range(self.dim)]
        w = max(len(x) for r in rows for x in r)
        return "\n".join("  ".join(x.rjust(w) for x in r) for r in rows)

    def __repr__(self):
        return "Algebra(dim=%d)\n%s" % (self.dim, self.table_str())


def multiply(a, x, y):
    "Bilinear extension of the table to arbitrary vectors."
    _conform(a, x)
    _conform(a, y)
    out = vec_zero(a.dim)
    for i, xi in enumerate(x):
        if is_zero(xi):
            continue
        for j, yj in enumerate(y):
            if is_zero(yj):
                continue
            f = xi * yj
            out = vec_add(out, [f * ck for ck in a.c[i][j]])
    return out


def associator(a, x, y, z):
    "(x y) z - x (y z)."
    return vec_sub(multiply(a, multiply(a, x, y), z),
                   multiply(a, x, multiply(a, y, z)))


def basis_associator(a, i, j, k):
    xy_z = multiply(a, a.product(i, j), _basis(a, k))
    y_z = a.product(j, k)
    x_yz = multiply(a, _basis(a, i), y_z)
    return vec_sub(xy_z, x_yz)


def check_left_symmetric(a):
    """Left-symmetry of the associator on all basis triples.

    Returns (True, None) or (False, (i, j, k, difference)); the certificate
    indices are 0-based and the difference is assoc(i,j,k) - assoc(j,i,k).
    """
    n = a.dim
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                d = vec_sub(basis_associator(a, i, j, k),
                            basis_associator(a, j, i, k))
                if not vec_is_zero(d):
                    return False, (i, j, k, d)
    return True, None


def commutator_lie(a):
    "Sub-adjacent Lie algebra with bracket [x, y] = xy - yx."
    from .lie import LieAlgebra

    n = a.dim
    table = [[vec_zero(n) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            table[i][j] = vec_sub(a.product(i, j), a.product(j, i))
    g = LieAlgebra(table)
    jac, cert = g.check_jacobi()
    if not jac:
        ok, _ = check_left_symmetric(a)
        assert not ok, \
            "left-symmetric table produced non-Jacobi bracket: %r" % (cert,)
    return g


def left_matrix(a, x):
    "Column-convention matrix of L_x: column j holds coords of x * e_j."
    _conform(a, x)
    cols = [multiply(a, x, _basis(a, j)) for j in range(a.dim)]
    return Mat(list(zip(*cols)))


def right_matrix(a, x):
    "Column-convention matrix of R_x: column j holds coords of e_j * x."
    _conform(a, x)
    cols = [multiply(a, _basis(a, j), x) for j in range(a.dim)]
    return Mat(list(zip(*cols)))


def left_row_matrix(a, i):
    "Row-convention matrix of L_{e_i}: row j holds coords of e_i * e_j."
    return Mat([a.product(i, j) for j in range(a.dim)])


def check_left_regular(a):
    """[L_x, L_y] = L_{[x,y]} on all basis pairs (column matrices).

    Equivalent to check_left_symmetric; kept as an independent route.
    """
    n = a.dim
    lmats = [left_matrix(a, _basis(a, i)) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            bracket_vec = vec_sub(a.product(i, j), a.product(j, i))
            lhs = lmats[i] * lmats[j] - lmats[j] * lmats[i]
            rhs = Mat.zero(n)
            for k, ck in enumerate(bracket_vec):
                rhs = rhs + ck * lmats[k]
            if lhs != rhs:
                return False, (i, j)
    return True, None


def rebase(a, w):
    """Structure constants of the same product in the new basis whose
    vectors are the rows of w (expressed in the old basis)."""
    if w.nrows != a.dim or w.ncols != a.dim:
        raise DimensionMismatch("basis-change matrix has wrong shape")
    winv = w.inverse()
    n = a.dim
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = multiply(a, w.row(i), w.row(j))
            row.append(winv.apply_row(prod))
        table.append(row)
    return Algebra(table, a.basis_names)


def substitute_algebra(a, bindings):
    "Instantiate a parametric table at Gaussian-rational parameter values."
    n = a.dim
    table = [[[substitute(x, bindings) for x in a.c[i][j]]
              for j in range(n)] for i in range(n)]
    return Algebra(table, a.basis_names)


def _basis(a, k):
    v = vec_zero(a.dim)
    from .scalars import ONE
    v[k] = ONE
    return v


def basis_vector(a, k):
    return _basis(a, k)


def _conform(a, x):
    if len(x) != a.dim:
        raise DimensionMismatch("vector length %d != algebra dim %d"
                                % (len(x), a.dim))
