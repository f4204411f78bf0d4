"""Small exact matrices and vectors over the scalar domains.

Vectors are plain lists of scalars.  Unless an operation says otherwise,
matrices follow the row convention used throughout the package: M[i][j] is
the coefficient of basis vector j in the image of basis vector i, and a row
vector x maps to x * M.
"""

from __future__ import annotations

from .errors import DimensionMismatch, SingularWitness
from .scalars import ZERO, ONE, as_scalar, is_zero, qi


class Mat:
    """Immutable dense matrix with exact scalar entries."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        rs = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        if not rs or not rs[0]:
            raise DimensionMismatch("empty matrix")
        w = len(rs[0])
        if any(len(r) != w for r in rs):
            raise DimensionMismatch("ragged rows")
        object.__setattr__(self, "rows", rs)
        object.__setattr__(self, "nrows", len(rs))
        object.__setattr__(self, "ncols", w)

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    @staticmethod
    def identity(n):
        return Mat([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(n, m=None):
        m = n if m is None else m
        return Mat([[ZERO] * m for _ in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i):
        return list(self.rows[i])

    def col(self, j):
        return [r[j] for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if self.nrows != other.nrows or self.ncols != other.ncols:
            return False
        return all(a == b for ra, rb in zip(self.rows, other.rows)
                   for a, b in zip(ra, rb))

    def __hash__(self):
        raise TypeError("Mat is unhashable")

    def __add__(self, other):
        self._same_shape(other)
        return Mat([[a + b for a, b in zip(ra, rb)]
                    for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._same_shape(other)
        return Mat([[a - b for a, b in zip(ra, rb)]
                    for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self):
        return Mat([[-a for a in r] for r in self.rows])

    def _same_shape(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionMismatch("shape mismatch")

    def __mul__(self, other):
        if isinstance(other, Mat):
            if self.ncols != other.nrows:
                raise DimensionMismatch("inner dimensions differ")
            cols = list(zip(*other.rows))
            return Mat([[_dot(r, c) for c in cols] for r in self.rows])
        s = as_scalar(other)
        return Mat([[a * s for a in r] for r in self.rows])

    def __rmul__(self, other):
        s = as_scalar(other)
        return Mat([[s * a for a in r] for r in self.rows])

    def transpose(self):
        return Mat(list(zip(*self.rows)))

    def is_zero(self):
        return all(is_zero(a) for r in self.rows for a in r)

    def is_square(self):
        return self.nrows == self.ncols

    def apply_row(self, x):
        "Row vector x (length nrows) times this matrix."
        if len(x) != self.nrows:
            raise DimensionMismatch("vector length mismatch")
        return [_dot(x, col) for col in zip(*self.rows)]

    def apply_col(self, x):
        "This matrix times column vector x (length ncols)."
        if len(x) != self.ncols:
            raise DimensionMismatch("vector length mismatch")
        return [_dot(r, x) for r in self.rows]

    def det(self):
        if not self.is_square():
            raise DimensionMismatch("determinant of a non-square matrix")
        return _det(self.rows)

    def inverse(self):
        "Exact inverse by Gauss-Jordan elimination; SingularWitness if none."
        if not self.is_square():
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.nrows
        a = [list(r) for r in self.rows]
        b = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = None
            for r in range(col, n):
                if not is_zero(a[r][col]):
                    piv = r
                    break
            if piv is None:
                raise SingularWitness("matrix is singular")
            a[col], a[piv] = a[piv], a[col]
            b[col], b[piv] = b[piv], b[col]
            inv = 1 / a[col][col]
            a[col] = [x * inv for x in a[col]]
            b[col] = [x * inv for x in b[col]]
            for r in range(n):
                if r == col or is_zero(a[r][col]):
                    continue
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                b[r] = [x - f * y for x, y in zip(b[r], b[col])]
        return Mat(b)

    def rref(self):
        "Reduced row echelon form; returns (Mat, pivot column list)."
        a = [list(r) for r in self.rows]
        n, m = self.nrows, self.ncols
        pivots = []
        r = 0
        for col in range(m):
            piv = None
            for k in range(r, n):
                if not is_zero(a[k][col]):
                    piv = k
                    break
            if piv is None:
                continue
            a[r], a[piv] = a[piv], a[r]
            inv = 1 / a[r][col]
            a[r] = [x * inv for x in a[r]]
            for k in range(n):
                if k == r or is_zero(a[k][col]):
                    continue
                f = a[k][col]
                a[k] = [x - f * y for x, y in zip(a[k], a[r])]
            pivots.append(col)
            r += 1
            if r == n:
                break
        return Mat(a), pivots

    def rank(self):
        return len(self.rref()[1])

    def nullspace(self):
        "Basis (as coordinate lists) of the right-nullspace {x : M x = 0}."
        red, pivots = self.rref()
        free = [j for j in range(self.ncols) if j not in pivots]
        basis = []
        for f in free:
            v = [ZERO] * self.ncols
            v[f] = ONE
            for r, p in enumerate(pivots):
                v[p] = -red.rows[r][f]
            basis.append(v)
        return basis

    def charpoly(self):
        """Coefficients (low to high) of det(t I - M) via Faddeev-LeVerrier;
        entries must be QI."""
        if not self.is_square():
            raise DimensionMismatch("characteristic polynomial needs square")
        n = self.nrows
        m = self
        nmat = Mat.identity(n)
        cs = []
        for k in range(1, n + 1):
            mk = m * nmat
            ck = -(mk.trace() / qi(k))
            cs.append(ck)
            nmat = mk + ck * Mat.identity(n)
        # det(tI - M) = t^n + c1 t^(n-1) + ... + cn
        out = [ZERO] * (n + 1)
        out[n] = ONE
        for k, c in enumerate(cs, start=1):
            out[n - k] = as_scalar(c)
        return tuple(out)

    def trace(self):
        if not self.is_square():
            raise DimensionMismatch("trace of a non-square matrix")
        out = self.rows[0][0]
        for k in range(1, self.nrows):
            out = out + self.rows[k][k]
        return out

    def __repr__(self):
        from .scalars import format_scalar
        return "Mat([%s])" % ",".join(
            "[%s]" % ",".join(format_scalar(x) for x in r) for r in self.rows)


def _dot(xs, ys):
    out = None
    for x, y in zip(xs, ys):
        p = x * y
        out = p if out is None else out + p
    return ZERO if out is None else out


def _det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    out = None
    for j in range(n):
        a = rows[0][j]
        if is_zero(a):
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = a * _det(minor)
        if j % 2:
            term = -term
        out = term if out is None else out + term
    return ZERO if out is None else out


def vec_add(x, y):
    return [a + b for a, b in zip(x, y)]


def vec_sub(x, y):
    return [a - b for a, b in zip(x, y)]


def vec_scale(x, c):
    return [c * a for a in x]


def vec_neg(x):
    return [-a for a in x]


def vec_is_zero(x):
    return all(is_zero(a) for a in x)


def vec_eq(x, y):
    return len(x) == len(y) and all(a == b for a, b in zip(x, y))


def vec_zero(n):
    return [ZERO] * n


def basis_vec(n, k):
    v = [ZERO] * n
    v[k] = ONE
    return v


def span_rank(vectors, n):
    "Rank of the span of the given row vectors inside dimension n."
    if not vectors:
        return 0
    return Mat([list(v) + [ZERO] * (n - len(v)) for v in vectors]).rank()


def span_basis(vectors, n):
    "RREF basis rows for the span of the given vectors."
    if not vectors:
        return []
    red, pivots = Mat([list(v) for v in vectors]).rref()
    return [red.row(k) for k in range(len(pivots))]


def in_span(v, basis):
    "Is v in the row span of basis?"
    n = len(v)
    r0 = span_rank(basis, n)
    return span_rank(list(basis) + [v], n) == r0


def solve_col(a, v):
    "One solution x of A x = v, or None if inconsistent."
    n, m = a.nrows, a.ncols
    aug = Mat([list(a.row(i)) + [v[i]] for i in range(n)])
    red, pivots = aug.rref()
    if m in pivots:
        return None
    x = vec_zero(m)
    for r, p in enumerate(pivots):
        x[p] = red.rows[r][m]
    return x


def coords_in_span(basis, v):
    "Coordinates of v in the span of the basis rows; asserts membership."
    m = Mat(list(zip(*[list(b) for b in basis])))
    sol = solve_col(m, v)
    assert sol is not None, "vector is not in the span"
    return sol
