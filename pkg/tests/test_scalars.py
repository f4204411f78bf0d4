import random
from fractions import Fraction

import pytest

from lsacat.errors import (DegreeTooHigh, DenominatorVanishes, DivisionByZero,
                           DomainMismatch, UnboundVariable)
from lsacat.scalars import (ExtField, MultiPoly, QI, RatFunc, factor_low_degree,
                            field_arith, format_scalar, gaussian_sqrt,
                            parse_scalar, qi, qi_roots, substitute)


def rand_qi(rng):
    return QI(Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
              Fraction(rng.randint(-6, 6), rng.randint(1, 4)))


def rand_poly(rng, vars=("l", "m")):
    p = MultiPoly.const(0)
    for _ in range(rng.randint(1, 4)):
        term = MultiPoly.const(rand_qi(rng))
        for v in vars:
            term = term * MultiPoly.var(v) ** rng.randint(0, 2)
        p = p + term
    return p


def test_gaussian_norm_product():
    assert QI(1, 1) * QI(1, -1) == 2


def test_field_axioms_gaussian():
    rng = random.Random(11)
    for _ in range(60):
        a, b, c = rand_qi(rng), rand_qi(rng), rand_qi(rng)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        if not a.is_zero():
            assert a * (QI(1) / a) == 1


def test_field_axioms_polynomials():
    rng = random.Random(12)
    for _ in range(25):
        a, b, c = rand_poly(rng), rand_poly(rng), rand_poly(rng)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_field_axioms_ratfunc():
    rng = random.Random(13)
    for _ in range(15):
        num, den = rand_poly(rng), rand_poly(rng)
        if den.is_zero():
            continue
        a = RatFunc(num, den)
        b = RatFunc(rand_poly(rng), MultiPoly.var("l") + 1)
        c = RatFunc(rand_poly(rng), MultiPoly.var("m") ** 2 + 2)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        if not a.is_zero():
            assert a * (1 / a) == 1


def test_field_axioms_extension():
    rng = random.Random(14)
    f = ExtField([-2, 0, 1])  # t^2 - 2
    for _ in range(40):
        a = f.element([rand_qi(rng), rand_qi(rng)])
        b = f.element([rand_qi(rng), rand_qi(rng)])
        c = f.element([rand_qi(rng), rand_qi(rng)])
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        if not a.is_zero():
            assert a * a.inverse() == 1


def test_field_arith_division_by_zero():
    with pytest.raises(DivisionByZero):
        field_arith(QI(1), QI(0), "div")


def test_domain_mismatch_poly_extension():
    f = ExtField([-2, 0, 1])
    with pytest.raises(DomainMismatch):
        field_arith(MultiPoly.var("l"), f.gen(), "add")


def test_extension_inverse_euclid():
    # inverse of (t+1) in Q(i)[t]/(t^2-2) is t-1, confirmed by multiplying back
    f = ExtField([-2, 0, 1])
    x = f.element([1, 1])
    inv = x.inverse()
    assert inv == f.element([-1, 1])
    assert x * inv == 1


def test_extension_rejects_reducible_modulus():
    with pytest.raises(ValueError):
        ExtField([-1, 0, 1])  # t^2 - 1 = (t-1)(t+1)


def test_like_denominator_addition():
    p = parse_scalar("(l^2-l)/m + l/m")
    assert p == parse_scalar("l^2/m")


def test_substitute_examples():
    p = parse_scalar("l^2-l")
    assert substitute(p, {"l": 2}) == 2
    q = parse_scalar("l*(l-1)/m")
    assert substitute(q, {"l": 1, "m": 3}) == 0
    # (1-2l) at l=1/2 vanishes: the excluded parameter point
    r = parse_scalar("1-2*l")
    assert substitute(r, {"l": Fraction(1, 2)}) == 0


def test_substitute_unbound_and_vanishing():
    p = parse_scalar("l/m")
    with pytest.raises(UnboundVariable):
        substitute(p, {"l": 1})
    with pytest.raises(DenominatorVanishes):
        substitute(p, {"l": 1, "m": 0})


def test_substitute_commutes_with_arithmetic():
    rng = random.Random(15)
    for _ in range(20):
        p, q = rand_poly(rng), rand_poly(rng)
        vals = {"l": rand_qi(rng), "m": rand_qi(rng)}
        assert substitute(p * q, vals) == substitute(p, vals) * substitute(q, vals)
        assert substitute(p + q, vals) == substitute(p, vals) + substitute(q, vals)


def test_parse_format_roundtrip():
    rng = random.Random(16)
    texts = ["1/2", "-i", "2+3*i", "l*(l-1)/m", "(1+i)*l^2-1/2*m", "0"]
    for t in texts:
        v = parse_scalar(t)
        w = parse_scalar(format_scalar(v))
        assert field_arith(v, w, "sub").is_zero()
    for _ in range(25):
        p = rand_poly(rng)
        assert parse_scalar(format_scalar(p)) == p


def test_factor_quadratic_over_qi():
    t = MultiPoly.var("t")
    factors = factor_low_degree(t ** 2 + 1)
    assert sorted(format_scalar(f) for f, _ in factors) == ["t+i", "t-i"]


def test_factor_cubic_split():
    t = MultiPoly.var("t")
    factors = factor_low_degree(t ** 3 - t)
    assert sorted(format_scalar(f) for f, _ in factors) == ["t", "t+1", "t-1"]


def test_factor_cubic_irreducible():
    # no root p/q with q | 1, p | 2 in Z[i], hence irreducible over Q(i)
    t = MultiPoly.var("t")
    factors = factor_low_degree(t ** 3 - 2)
    assert len(factors) == 1 and factors[0][1] == 1
    assert factors[0][0] == t ** 3 - 2
    assert qi_roots((qi(-2), qi(0), qi(0), qi(1))) == []


def test_factor_multiplies_back():
    rng = random.Random(17)
    t = MultiPoly.var("t")
    for _ in range(20):
        roots = [rand_qi(rng) for _ in range(rng.randint(1, 4))]
        p = MultiPoly.const(1)
        for r in roots:
            p = p * (t - r)
        lead = MultiPoly.const(rand_qi(rng) + 1)
        p = p * lead
        prod = MultiPoly.const(lead.const_value())
        for f, m in factor_low_degree(p):
            prod = prod * f ** m
        assert prod == p


def test_factor_quartic_into_quadratics():
    t = MultiPoly.var("t")
    p = (t ** 2 - 2) * (t ** 2 + 2)
    factors = factor_low_degree(p)
    assert sorted(format_scalar(f) for f, _ in factors) == ["t^2+2", "t^2-2"]


def test_factor_degree_too_high():
    t = MultiPoly.var("t")
    with pytest.raises(DegreeTooHigh):
        factor_low_degree(t ** 5 + 1)


def test_gaussian_sqrt():
    assert gaussian_sqrt(QI(0, 2)) == QI(1, 1)
    assert gaussian_sqrt(QI(Fraction(1, 4))) == QI(Fraction(1, 2))
    assert gaussian_sqrt(QI(-4)) == QI(0, 2)
    assert gaussian_sqrt(QI(2)) is None


def test_promotion_is_upward_only():
    # rational -> gaussian -> polynomial -> rational function
    out = field_arith(Fraction(1, 2), MultiPoly.var("l"), "mul")
    assert isinstance(out, MultiPoly)
    out = field_arith(MultiPoly.var("l"), RatFunc(MultiPoly.const(1), MultiPoly.var("m")), "add")
    assert isinstance(out, RatFunc)


def test_scalar_literal_rejects_malformed():
    with pytest.raises(DivisionByZero):
        parse_scalar("1/0")
    with pytest.raises(UnboundVariable):
        parse_scalar("l+", vars=("l",))
    with pytest.raises(UnboundVariable):
        parse_scalar("q", vars=("l",))
