"""Exact scalar domains.

Four domains arranged in a promotion lattice::

    QI (Gaussian rationals)  -->  MultiPoly  -->  RatFunc
    QI                       -->  ExtScalar (Q(i)[t]/(m), deg m in {2,3})

Promotion is implicit only upward; mixing a polynomial domain with an
extension (or two different extensions) raises DomainMismatch.  Everything
is immutable and safe to share.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import (
    DegreeTooHigh,
    DenominatorVanishes,
    DivisionByZero,
    DomainMismatch,
    UnboundVariable,
)


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise DomainMismatch("not a rational value: %r" % (x,))


class QI:
    """Gaussian rational re + im*i with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("QI is immutable")

    def is_zero(self):
        return not self.re and not self.im

    def conj(self):
        return _mk(self.re, -self.im)

    def norm2(self):
        "re^2 + im^2 as a Fraction."
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        other = _coerce_qi(other)
        if other is NotImplemented:
            return NotImplemented
        return _mk(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_qi(other)
        if other is NotImplemented:
            return NotImplemented
        return _mk(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce_qi(other)
        if other is NotImplemented:
            return NotImplemented
        return _mk(other.re - self.re, other.im - self.im)

    def __mul__(self, other):
        other = _coerce_qi(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.im and not other.im:
            return _mk(self.re * other.re, _FR0)
        return _mk(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_qi(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.im and not other.im:
            if not other.re:
                raise DivisionByZero("division by zero Gaussian rational")
            return _mk(self.re / other.re, _FR0)
        n = other.norm2()
        if not n:
            raise DivisionByZero("division by zero Gaussian rational")
        return _mk(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        other = _coerce_qi(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return _mk(-self.re, -self.im)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return QI(1) / self ** (-n)
        out = QI(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, QI):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return "QI(%s)" % format_scalar(self)

    def __str__(self):
        return format_scalar(self)


_FR0 = Fraction(0)


def _mk(re, im):
    "Internal fast constructor; parts must already be Fractions."
    out = object.__new__(QI)
    object.__setattr__(out, "re", re)
    object.__setattr__(out, "im", im)
    return out


ZERO = QI(0)
ONE = QI(1)
I_UNIT = QI(0, 1)


def _coerce_qi(x):
    if isinstance(x, QI):
        return x
    if isinstance(x, int):
        return _mk(Fraction(x), _FR0)
    if isinstance(x, Fraction):
        return _mk(x, _FR0)
    return NotImplemented


def qi(x, im=0):
    "Coerce an int/Fraction/QI to QI."
    if isinstance(x, QI):
        return x
    return QI(x, im)


class MultiPoly:
    """Sparse polynomial over Q(i) in a sorted tuple of named variables.

    terms maps exponent tuples (aligned with ``vars``) to nonzero QI
    coefficients.  The monomial order used for printing and leading-term
    queries is lexicographic over the sorted variable list.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars=(), terms=None):
        vs = tuple(vars)
        if list(vs) != sorted(vs):
            raise ValueError("variables must be sorted: %r" % (vs,))
        tm = {}
        if terms:
            for exps, c in terms.items():
                c = qi(c)
                if c.is_zero():
                    continue
                if len(exps) != len(vs):
                    raise ValueError("exponent arity mismatch")
                tm[tuple(exps)] = c
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", tm)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @staticmethod
    def const(c, vars=()):
        c = qi(c)
        vs = tuple(sorted(vars))
        if c.is_zero():
            return MultiPoly(vs, {})
        return MultiPoly(vs, {(0,) * len(vs): c})

    @staticmethod
    def var(name):
        return MultiPoly((name,), {(1,): ONE})

    def is_zero(self):
        return not self.terms

    def is_const(self):
        return all(not any(e) for e in self.terms)

    def const_value(self):
        if not self.is_const():
            raise DomainMismatch("polynomial %s is not constant" % self)
        for c in self.terms.values():
            return c
        return ZERO

    def free_vars(self):
        used = set()
        for exps in self.terms:
            for v, e in zip(self.vars, exps):
                if e:
                    used.add(v)
        return used

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def _aligned(self, other):
        "Rewrite self and other over the union of their variables."
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        vs = tuple(sorted(set(self.vars) | set(other.vars)))

        def remap(p):
            idx = [vs.index(v) for v in p.vars]
            out = {}
            for exps, c in p.terms.items():
                e = [0] * len(vs)
                for i, v in zip(idx, exps):
                    e[i] = v
                out[tuple(e)] = c
            return out

        return vs, remap(self), remap(other)

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            return other
        c = _coerce_qi(other)
        if c is NotImplemented:
            return NotImplemented
        return MultiPoly.const(c, self.vars)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        vs, a, b = self._aligned(other)
        out = dict(a)
        for ic, c in b.items():
            s = out.get(ic, ZERO) + c
            if s.is_zero():
                out.pop(ic, None)
            else:
                out[ic] = s
        return MultiPoly(vs, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        vs, a, b = self._aligned(other)
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, ZERO) + c1 * c2
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly(vs, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = MultiPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("division by zero polynomial")
        if other.is_const():
            c = other.const_value()
            return MultiPoly(self.vars, {e: v / c for e, v in self.terms.items()})
        return RatFunc(self, other)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        if isinstance(other, (int, Fraction, QI)):
            return self.is_const() and self.const_value() == qi(other)
        if isinstance(other, MultiPoly):
            _, a, b = self._aligned(other)
            return a == b
        return NotImplemented

    def __hash__(self):
        if self.is_const():
            return hash(self.const_value())
        core = tuple(sorted(
            (e, c.re, c.im)
            for e, c in self._strip().terms.items()))
        return hash((self._strip().vars, core))

    def _strip(self):
        "Drop variables that never occur."
        used = self.free_vars()
        if len(used) == len(self.vars):
            return self
        vs = tuple(sorted(used))
        keep = [self.vars.index(v) for v in vs]
        return MultiPoly(vs, {tuple(e[i] for i in keep): c
                              for e, c in self.terms.items()})

    def lead(self):
        "(exponents, coefficient) of the lex-leading term."
        if self.is_zero():
            return None
        e = max(self.terms)
        return e, self.terms[e]

    def substitute(self, bindings):
        "Full evaluation; every occurring variable must be bound."
        vals = []
        for v in self.vars:
            if v in bindings:
                vals.append(qi(bindings[v]))
            else:
                vals.append(None)
        out = ZERO
        for exps, c in self.terms.items():
            term = c
            for val, e in zip(vals, exps):
                if not e:
                    continue
                if val is None:
                    missing = [v for v, x in zip(self.vars, vals) if x is None]
                    raise UnboundVariable("unbound variable(s): %s" % ", ".join(missing))
                term = term * val ** e
            out = out + term
        return out

    def __repr__(self):
        return "MultiPoly(%s)" % format_scalar(self)

    def __str__(self):
        return format_scalar(self)


class RatFunc:
    """Quotient num/den of MultiPolys, den lex-monic; no gcd reduction."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        if not isinstance(num, MultiPoly):
            num = MultiPoly.const(num)
        if not isinstance(den, MultiPoly):
            den = MultiPoly.const(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            den = MultiPoly.const(1)
        else:
            _, lead = den.lead()
            if lead != ONE:
                num = num / lead
                den = den / lead
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    def _lift(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MultiPoly):
            return RatFunc(other, MultiPoly.const(1))
        c = _coerce_qi(other)
        if c is NotImplemented:
            return NotImplemented
        return RatFunc(MultiPoly.const(c), MultiPoly.const(1))

    def is_zero(self):
        return self.num.is_zero()

    def is_const(self):
        return self.num.is_const() and self.den.is_const()

    def const_value(self):
        return self.num.const_value() / self.den.const_value()

    def free_vars(self):
        return self.num.free_vars() | self.den.free_vars()

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return RatFunc(self.den, self.num) ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        if self.is_const():
            return hash(self.const_value())
        raise TypeError("non-constant RatFunc is unhashable")

    def substitute(self, bindings):
        d = self.den.substitute(bindings)
        if d.is_zero():
            raise DenominatorVanishes(
                "denominator %s vanishes at %s"
                % (self.den, {k: str(qi(v)) for k, v in bindings.items()}))
        return self.num.substitute(bindings) / d

    def __repr__(self):
        return "RatFunc(%s)" % format_scalar(self)

    def __str__(self):
        return format_scalar(self)


class ExtField:
    """Q(i)[t]/(m(t)) for a monic irreducible m of degree 2 or 3."""

    def __init__(self, modulus, name="t"):
        co = tuple(qi(c) for c in modulus)
        while co and co[-1].is_zero():
            co = co[:-1]
        deg = len(co) - 1
        if deg not in (2, 3):
            raise DegreeTooHigh("extension degree must be 2 or 3, got %d" % deg)
        if co[-1] != ONE:
            co = tuple(c / co[-1] for c in co)
        if qi_roots(co):
            raise ValueError("modulus %s is reducible over Q(i)" % (co,))
        self.modulus = co
        self.name = name
        self.deg = deg

    def element(self, coeffs):
        co = [qi(c) for c in coeffs]
        if len(co) > self.deg:
            co = list(_up_divmod(tuple(co), self.modulus)[1])
        co += [ZERO] * (self.deg - len(co))
        return ExtScalar(self, tuple(co[:self.deg]))

    def gen(self):
        return self.element([0, 1])

    def from_qi(self, c):
        return self.element([qi(c)])

    def zero(self):
        return self.from_qi(0)

    def one(self):
        return self.from_qi(1)

    def __eq__(self, other):
        return isinstance(other, ExtField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return "ExtField(%s)" % format_unipoly(self.modulus, self.name)


class ExtScalar:
    """Element of an ExtField, stored as a QI coefficient vector."""

    __slots__ = ("field", "co")

    def __init__(self, field, co):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "co", tuple(co))

    def __setattr__(self, name, value):
        raise AttributeError("ExtScalar is immutable")

    def is_zero(self):
        return all(c.is_zero() for c in self.co)

    def _lift(self, other):
        if isinstance(other, ExtScalar):
            if other.field != self.field:
                raise DomainMismatch("elements of different extension fields")
            return other
        c = _coerce_qi(other)
        if c is NotImplemented:
            return NotImplemented
        return self.field.from_qi(c)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return ExtScalar(self.field,
                         tuple(a + b for a, b in zip(self.co, other.co)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return ExtScalar(self.field,
                         tuple(a - b for a, b in zip(self.co, other.co)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return ExtScalar(self.field, tuple(-a for a in self.co))

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        prod = _up_mul(self.co, other.co)
        _, rem = _up_divmod(prod, self.field.modulus)
        return self.field.element(list(rem))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero extension element")
        g, s, _ = _up_ext_euclid(_up_trim(self.co), self.field.modulus)
        # modulus irreducible, so g is a nonzero constant
        c = g[0]
        return self.field.element([x / c for x in s])

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QI)):
            other = self.field.from_qi(qi(other))
        if isinstance(other, ExtScalar):
            return self.field == other.field and self.co == other.co
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.co))

    def __repr__(self):
        return "ExtScalar(%s)" % str(self)

    def __str__(self):
        return format_unipoly(self.co, self.field.name)


Scalar = (QI, MultiPoly, RatFunc, ExtScalar)


def as_scalar(x):
    "Coerce python ints/Fractions to QI; pass scalars through."
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return QI(x)
    raise DomainMismatch("cannot interpret %r as a scalar" % (x,))


def is_zero(x):
    if isinstance(x, (int, Fraction)):
        return x == 0
    return x.is_zero()


_LEVEL = {QI: 0, MultiPoly: 1, RatFunc: 2, ExtScalar: 9}


def promote2(a, b):
    "Promote a pair of scalars into their join domain."
    a, b = as_scalar(a), as_scalar(b)
    la, lb = _LEVEL[type(a)], _LEVEL[type(b)]
    if la == lb:
        if isinstance(a, ExtScalar) and a.field != b.field:
            raise DomainMismatch("different extension fields")
        return a, b
    if la > lb:
        b2, a2 = promote2(b, a)
        return a2, b2
    # la < lb
    if isinstance(b, ExtScalar):
        if isinstance(a, QI):
            return b.field.from_qi(a), b
        raise DomainMismatch("cannot mix %s with extension scalars"
                             % type(a).__name__)
    if isinstance(b, MultiPoly):
        return MultiPoly.const(a, b.vars), b
    if isinstance(b, RatFunc):
        if isinstance(a, QI):
            a = MultiPoly.const(a)
        return RatFunc(a, MultiPoly.const(1)), b
    raise DomainMismatch("unknown scalar domain")


def field_arith(a, b, op):
    "Exact field operation with explicit upward promotion."
    a, b = promote2(a, b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if is_zero(b):
            raise DivisionByZero("field division by zero")
        return a / b
    raise ValueError("unknown op %r" % (op,))


def substitute(p, bindings):
    "Evaluate a MultiPoly or RatFunc at Gaussian-rational bindings."
    p = as_scalar(p)
    if isinstance(p, QI):
        return p
    if isinstance(p, (MultiPoly, RatFunc)):
        return p.substitute({k: qi(v) for k, v in bindings.items()})
    raise DomainMismatch("cannot substitute into %r" % (p,))


def partial_substitute(p, bindings):
    "Substitute a subset of the variables, keeping the rest symbolic."
    p = as_scalar(p)
    if isinstance(p, QI):
        return p
    if isinstance(p, RatFunc):
        num = partial_substitute(p.num, bindings)
        den = partial_substitute(p.den, bindings)
        return field_arith(num, den, "div")
    if not isinstance(p, MultiPoly):
        raise DomainMismatch("cannot substitute into %r" % (p,))
    bound = {v: qi(bindings[v]) for v in p.vars if v in bindings}
    if not bound:
        return p
    keep = tuple(v for v in p.vars if v not in bound)
    out = {}
    for exps, c in p.terms.items():
        coeff = c
        kept = []
        for v, e in zip(p.vars, exps):
            if v in bound:
                if e:
                    coeff = coeff * bound[v] ** e
            else:
                kept.append(e)
        key = tuple(kept)
        s = out.get(key, ZERO) + coeff
        if s.is_zero():
            out.pop(key, None)
        else:
            out[key] = s
    result = MultiPoly(keep, out)
    if result.is_const():
        return result.const_value()
    return result


# ---------------------------------------------------------------------------
# univariate polynomials over QI: dense low-to-high QI coefficient tuples


def _up_trim(co):
    co = list(co)
    while co and qi(co[-1]).is_zero():
        co.pop()
    return tuple(qi(c) for c in co)


def _up_deg(co):
    return len(co) - 1


def _up_add(a, b):
    n = max(len(a), len(b))
    return _up_trim([
        (a[i] if i < len(a) else ZERO) + (b[i] if i < len(b) else ZERO)
        for i in range(n)
    ])


def _up_scale(a, c):
    return _up_trim([x * c for x in a])


def _up_sub(a, b):
    return _up_add(a, _up_scale(b, QI(-1)))


def _up_mul(a, b):
    if not a or not b:
        return ()
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _up_trim(out)


def _up_divmod(a, b):
    a, b = _up_trim(a), _up_trim(b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    q = [ZERO] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    db, lb = _up_deg(b), b[-1]
    while len(r) >= len(b) and _up_trim(r):
        r = list(_up_trim(r))
        if len(r) < len(b):
            break
        c = r[-1] / lb
        k = len(r) - len(b)
        q[k] = c
        for i in range(len(b)):
            r[k + i] = r[k + i] - c * b[i]
        r.pop()
    return _up_trim(q), _up_trim(r)


def _up_ext_euclid(a, b):
    "Return (g, s, t) with s*a + t*b = g."
    r0, r1 = _up_trim(a), _up_trim(b)
    s0, s1 = (ONE,), ()
    t0, t1 = (), (ONE,)
    while r1:
        q, r = _up_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _up_sub(s0, _up_mul(q, s1))
        t0, t1 = t1, _up_sub(t0, _up_mul(q, t1))
    return r0, s0, t0


def _up_eval(co, x):
    out = ZERO
    for c in reversed(co):
        out = out * x + c
    return out


def _up_deriv(co):
    return _up_trim([co[i] * i for i in range(1, len(co))])


# ---------------------------------------------------------------------------
# root finding and factorization over Q(i), degree <= 4


def frac_sqrt(q):
    "Exact square root of a nonnegative Fraction, or None."
    if q < 0:
        return None
    if q == 0:
        return Fraction(0)
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def gaussian_sqrt(z):
    "Exact square root of a QI inside Q(i), or None."
    z = qi(z)
    if z.im == 0:
        r = frac_sqrt(z.re)
        if r is not None:
            return QI(r)
        r = frac_sqrt(-z.re)
        if r is not None:
            return QI(0, r)
        return None
    s = frac_sqrt(z.norm2())
    if s is None:
        return None
    u2 = (z.re + s) / 2
    u = frac_sqrt(u2)
    if u is None or u == 0:
        return None
    v = z.im / (2 * u)
    w = QI(u, v)
    if w * w == z:
        return w
    return None


def _int_divisors(n):
    n = abs(n)
    out = set()
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.add(i)
            out.add(n // i)
        i += 1
    return sorted(out)


def gaussian_integer_divisors(a, b):
    "All Gaussian integers dividing a+bi (including unit associates)."
    if a == 0 and b == 0:
        return []
    norm = a * a + b * b
    out = []
    for m in _int_divisors(norm):
        x = 0
        while x * x <= m:
            y2 = m - x * x
            y = math.isqrt(y2)
            if y * y == y2:
                for u, v in {(x, y), (x, -y), (-x, y), (-x, -y)}:
                    if u == 0 and v == 0:
                        continue
                    # (a+bi)/(u+vi) must be a Gaussian integer
                    n2 = u * u + v * v
                    pr, pi = a * u + b * v, b * u - a * v
                    if pr % n2 == 0 and pi % n2 == 0:
                        out.append((u, v))
            x += 1
    return out


def _clear_to_gaussian_integers(co):
    "Scale QI coefficients to Gaussian integers; returns int pairs."
    lcm = 1
    for c in co:
        for f in (c.re, c.im):
            lcm = lcm * f.denominator // math.gcd(lcm, f.denominator)
    return [(int(c.re * lcm), int(c.im * lcm)) for c in co]


def qi_roots(co):
    """All roots in Q(i) of a univariate QI polynomial (any degree, via the
    rational root theorem in Z[i]); no multiplicities."""
    co = _up_trim(co)
    if len(co) <= 1:
        return []
    roots = []
    # factor out powers of t
    k = 0
    while co[k].is_zero():
        k += 1
    if k:
        roots.append(ZERO)
        co = co[k:]
    if len(co) <= 1:
        return roots
    ints = _clear_to_gaussian_integers(co)
    c0, cn = ints[0], ints[-1]
    nums = gaussian_integer_divisors(*c0)
    dens = gaussian_integer_divisors(*cn)
    seen = set()
    for u in nums:
        zu = QI(u[0], u[1])
        for v in dens:
            zv = QI(v[0], v[1])
            cand = zu / zv
            key = (cand.re, cand.im)
            if key in seen:
                continue
            seen.add(key)
            if _up_eval(co, cand).is_zero():
                roots.append(cand)
    return roots


def _quadratic_roots(co):
    "Roots in Q(i) of a degree-2 QI polynomial via the discriminant."
    c, b, a = co[0], co[1], co[2]
    disc = b * b - QI(4) * a * c
    r = gaussian_sqrt(disc)
    if r is None:
        return None
    two_a = QI(2) * a
    return [(-b + r) / two_a, (-b - r) / two_a]


def _split_quartic(co):
    """Try to split a rootless monic quartic into two monic quadratics over
    Q(i).  Returns (q1, q2) coefficient tuples or None."""
    a3, a2, a1, a0 = co[3], co[2], co[1], co[0]
    sh = a3 / QI(4)
    # depress via t = s - sh: expand sum base_k (s - sh)^k
    base = (a0, a1, a2, a3, ONE)
    # p(s) = sum base_k (s - sh)^k
    dep = ()
    pw = (ONE,)
    for k in range(5):
        dep = _up_add(dep, _up_scale(pw, base[k]))
        pw = _up_mul(pw, (-sh, ONE))
    dep = list(dep) + [ZERO] * (5 - len(dep))
    r0, q0, p0 = dep[0], dep[1], dep[2]

    def recombine(b, a, c):
        "lift (s^2 + a s + b)(s^2 - a s + c) back to t."
        f1 = (b, a, ONE)
        f2 = (c, -a, ONE)
        out = []
        for f in (f1, f2):
            g = ()
            pw = (ONE,)
            for k in range(3):
                g = _up_add(g, _up_scale(pw, f[k]))
                pw = _up_mul(pw, (sh, ONE))
            out.append(g)
        return out[0], out[1]

    if q0.is_zero():
        rr = _quadratic_roots((r0, p0, ONE))
        if rr is None:
            return None
        y1, y2 = rr
        # s^4 + p0 s^2 + r0 = (s^2 - y1)(s^2 - y2) with y = -b of each factor
        return recombine(-y1, ZERO, -y2)
    # resolvent cubic z^3 + 2 p0 z^2 + (p0^2 - 4 r0) z - q0^2, z = a^2
    res = (-(q0 * q0), p0 * p0 - QI(4) * r0, QI(2) * p0, ONE)
    for z in qi_roots(res):
        if z.is_zero():
            continue
        a = gaussian_sqrt(z)
        if a is None:
            continue
        s = p0 + z
        b = (s - q0 / a) / QI(2)
        c = (s + q0 / a) / QI(2)
        if (b * c) == r0:
            return recombine(b, a, c)
    return None


def factor_unipoly(co):
    """Factor a QI polynomial of degree <= 4 into monic irreducibles.

    Returns (unit, [(coeffs, multiplicity), ...]) with unit * prod = input.
    """
    co = _up_trim(co)
    if not co:
        raise DivisionByZero("cannot factor the zero polynomial")
    if _up_deg(co) > 4:
        raise DegreeTooHigh("degree %d > 4" % _up_deg(co))
    unit = co[-1]
    co = tuple(c / unit for c in co)
    factors = []
    for r in qi_roots(co):
        lin = (-r, ONE)
        mult = 0
        while True:
            q, rem = _up_divmod(co, lin)
            if rem:
                break
            co = q
            mult += 1
        if mult:
            factors.append((lin, mult))
    deg = _up_deg(co)
    if deg == 2:
        factors.append((co, 1))
    elif deg == 3:
        factors.append((co, 1))
    elif deg == 4:
        split = _split_quartic(co)
        if split is None:
            factors.append((co, 1))
        else:
            for f in split:
                f = tuple(c / f[-1] for c in f)
                merged = False
                for k, (g, m) in enumerate(factors):
                    if g == f:
                        factors[k] = (g, m + 1)
                        merged = True
                        break
                if not merged:
                    factors.append((f, 1))
    factors.sort(key=lambda fm: (len(fm[0]), [(c.re, c.im) for c in fm[0]]))
    return unit, factors


def factor_low_degree(p):
    """Factor a univariate MultiPoly over Q(i), degree <= 4, into monic
    irreducible MultiPoly factors with multiplicities."""
    p = as_scalar(p)
    if isinstance(p, QI):
        raise DegreeTooHigh("expected a univariate polynomial, got a constant")
    if not isinstance(p, MultiPoly):
        raise DomainMismatch("expected a MultiPoly")
    fv = sorted(p.free_vars())
    if len(fv) != 1:
        raise DomainMismatch("polynomial is not univariate: vars %s" % (fv,))
    name = fv[0]
    q = p._strip()
    deg = q.total_degree()
    co = [ZERO] * (deg + 1)
    for exps, c in q.terms.items():
        co[exps[0]] = c
    _, factors = factor_unipoly(tuple(co))
    out = []
    for f, m in factors:
        poly = MultiPoly((name,), {(k,): c for k, c in enumerate(f)})
        out.append((poly, m))
    return out


# ---------------------------------------------------------------------------
# printing and parsing of the shared scalar literal syntax


def _format_fraction(f):
    return str(f)


def format_qi(z, product_context=False):
    "Canonical text for a QI; parseable by parse_scalar."
    re, im = z.re, z.im
    if im == 0:
        s = _format_fraction(re)
    elif re == 0:
        if im == 1:
            s = "i"
        elif im == -1:
            s = "-i"
        else:
            s = "%s*i" % _format_fraction(im)
    else:
        ims = "i" if im == 1 else ("-i" if im == -1 else "%s*i" % _format_fraction(im))
        if im > 0 or ims.startswith("-"):
            s = "%s%s%s" % (_format_fraction(re), "" if ims.startswith("-") else "+", ims)
        else:
            s = "%s+%s" % (_format_fraction(re), ims)
    if product_context and (("+" in s[1:]) or ("-" in s[1:]) or "/" in s):
        return "(%s)" % s
    return s


def _format_monomial(vars, exps):
    parts = []
    for v, e in zip(vars, exps):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append("%s^%d" % (v, e))
    return "*".join(parts)


def format_multipoly(p):
    if p.is_zero():
        return "0"
    items = sorted(p.terms.items(), key=lambda t: t[0], reverse=True)
    chunks = []
    for exps, c in items:
        mono = _format_monomial(p.vars, exps)
        if not mono:
            piece = format_qi(c)
        elif c == ONE:
            piece = mono
        elif c == QI(-1):
            piece = "-%s" % mono
        else:
            piece = "%s*%s" % (format_qi(c, product_context=True), mono)
        if chunks and not piece.startswith("-"):
            chunks.append("+%s" % piece)
        else:
            chunks.append(piece)
    return "".join(chunks)


def format_scalar(s):
    s = as_scalar(s)
    if isinstance(s, QI):
        return format_qi(s)
    if isinstance(s, MultiPoly):
        return format_multipoly(s)
    if isinstance(s, RatFunc):
        if s.den == 1:
            return format_multipoly(s.num)
        return "(%s)/(%s)" % (format_multipoly(s.num), format_multipoly(s.den))
    if isinstance(s, ExtScalar):
        return format_unipoly(s.co, s.field.name)
    raise DomainMismatch("cannot format %r" % (s,))


def format_unipoly(co, name):
    p = MultiPoly((name,), {(k,): c for k, c in enumerate(co) if not qi(c).is_zero()})
    return format_multipoly(p)


class _Tok:
    __slots__ = ("kind", "val", "pos")

    def __init__(self, kind, val, pos):
        self.kind = kind
        self.val = val
        self.pos = pos


def _tokenize(text):
    toks = []
    n = len(text)
    k = 0
    while k < n:
        ch = text[k]
        if ch.isspace():
            k += 1
            continue
        if ch.isdigit():
            j = k
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Tok("int", int(text[k:j]), k))
            k = j
            continue
        if ch.isalpha() or ch == "_":
            j = k
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Tok("name", text[k:j], k))
            k = j
            continue
        if ch in "+-*/^()":
            toks.append(_Tok(ch, ch, k))
            k += 1
            continue
        raise UnboundVariable("unexpected character %r at %d" % (ch, k))
    toks.append(_Tok("end", None, n))
    return toks


class _Parser:
    def __init__(self, toks, vars):
        self.toks = toks
        self.k = 0
        self.vars = vars

    def peek(self):
        return self.toks[self.k]

    def take(self, kind=None):
        t = self.toks[self.k]
        if kind and t.kind != kind:
            raise UnboundVariable("expected %s at %d, got %r" % (kind, t.pos, t.val))
        self.k += 1
        return t

    def parse_expr(self):
        out = self.parse_term()
        while self.peek().kind in "+-":
            op = self.take().kind
            rhs = self.parse_term()
            out = field_arith(out, rhs, "add" if op == "+" else "sub")
        return out

    def parse_term(self):
        out = self.parse_factor()
        while self.peek().kind in "*/":
            op = self.take().kind
            rhs = self.parse_factor()
            out = field_arith(out, rhs, "mul" if op == "*" else "div")
        return out

    def parse_factor(self):
        if self.peek().kind == "-":
            self.take()
            return field_arith(QI(0), self.parse_factor(), "sub")
        return self.parse_power()

    def parse_power(self):
        base = self.parse_atom()
        if self.peek().kind == "^":
            self.take()
            neg = False
            if self.peek().kind == "-":
                self.take()
                neg = True
            e = self.take("int").val
            out = base ** e
            if neg:
                out = field_arith(QI(1), out, "div")
            return out
        return base

    def parse_atom(self):
        t = self.peek()
        if t.kind == "int":
            self.take()
            return QI(t.val)
        if t.kind == "name":
            self.take()
            if t.val == "i":
                return I_UNIT
            if self.vars is not None and t.val not in self.vars:
                raise UnboundVariable("unknown name %r" % t.val)
            return MultiPoly.var(t.val)
        if t.kind == "(":
            self.take()
            out = self.parse_expr()
            self.take(")")
            return out
        raise UnboundVariable("unexpected token %r at %d" % (t.val, t.pos))


def parse_scalar(text, vars=None):
    """Parse the shared scalar literal syntax.

    vars: optional collection of allowed parameter names; None allows any
    name.  'i' is always the imaginary unit.
    """
    p = _Parser(_tokenize(text), set(vars) if vars is not None else None)
    out = p.parse_expr()
    p.take("end")
    return out
