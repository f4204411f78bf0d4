import random

import pytest

from lsacat import catalog
from lsacat.algebra import Algebra, check_left_symmetric
from lsacat.cocycle import Representation, phi, psi
from lsacat.constructions import (check_cybe, check_derivation,
                                  check_o_operator, derivation_space,
                                  induced_products, lsa_from_rmatrix,
                                  novikov_from_derivation,
                                  o_operator_from_cocycle,
                                  transported_product)
from lsacat.errors import (CybeFails, NotCommutativeAssociative,
                           NotDerivation, NotOOperator)
from lsacat.lie import canonical_lie
from lsacat.linalg import Mat
from lsacat.props import is_novikov
from lsacat.scalars import QI

TRUNC = Algebra.from_products(3, {(0, 0): [(1, 1)], (0, 1): [(1, 2)],
                                  (1, 0): [(1, 2)]})


def test_derivation_construction_zero_map():
    base = Algebra.from_products(3, {(0, 0): [(1, 0)]})
    out = novikov_from_derivation(base, Mat.zero(3))
    assert out.is_zero_product()


def test_derivation_construction_grading():
    # D(e_k) = k e_k on the truncated polynomial table e_i e_j = e_{i+j}
    d = Mat([[1, 0, 0], [0, 2, 0], [0, 0, 3]])
    assert check_derivation(TRUNC, d)
    out = novikov_from_derivation(TRUNC, d)
    # e_i * e_j = e_i . D(e_j) = j e_{i+j}
    expected = Algebra.from_products(3, {(0, 0): [(1, 1)], (0, 1): [(2, 2)],
                                         (1, 0): [(1, 2)]})
    assert out == expected
    assert is_novikov(out) and check_left_symmetric(out)[0]


def test_derivation_error_paths():
    with pytest.raises(NotDerivation):
        novikov_from_derivation(TRUNC, Mat([[0, 1, 0], [0, 0, 0], [0, 0, 0]]))
    noncomm = catalog.instantiate("H-1")
    with pytest.raises(NotCommutativeAssociative):
        novikov_from_derivation(noncomm, Mat.zero(3))


def test_derivation_space_members_satisfy_leibniz():
    rng = random.Random(71)
    basis = derivation_space(TRUNC)
    assert basis
    for _ in range(10):
        d = Mat.zero(3)
        for b in basis:
            d = d + QI(rng.randint(-3, 3)) * b
        assert check_derivation(TRUNC, d)


def test_cybe_zero_map():
    assert check_cybe(canonical_lie("heisenberg"), Mat.zero(3))[0]


def test_cybe_heisenberg_projection():
    h = canonical_lie("heisenberg")
    p = Mat([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    ok, _ = check_cybe(h, p)
    assert ok
    alg = lsa_from_rmatrix(h, p)
    assert check_left_symmetric(alg)[0]
    # e1 * e2 = [R e1, e2] = e3 is the only product
    assert alg == Algebra.from_products(3, {(0, 1): [(1, 2)]})


def test_cybe_failure_certificate():
    n = canonical_lie("N")
    bad = Mat([[0, 1, 0], [0, 0, 1], [1, 1, 0]])
    ok, cert = check_cybe(n, bad)
    assert not ok and cert is not None
    with pytest.raises(CybeFails):
        lsa_from_rmatrix(n, bad)


def test_rmatrix_zero_gives_zero_algebra():
    out = lsa_from_rmatrix(canonical_lie("E"), Mat.zero(3))
    assert out.is_zero_product()


def test_o_operator_zero():
    h = canonical_lie("heisenberg")
    rep = Representation(h, [Mat.zero(3)] * 3)
    assert check_o_operator(h, rep, Mat.zero(3))[0]


def test_o_operator_from_cocycles(first_samples):
    for entry, bindings, alg in first_samples[:12]:
        c = psi(alg)
        t = o_operator_from_cocycle(c)
        assert check_o_operator(c.rep.g, c.rep, t)[0]


def test_o_operator_perturbed_fails():
    alg = catalog.instantiate("H-1")
    c = psi(alg)
    t = o_operator_from_cocycle(c)
    bad = t + Mat([[0, 0, 0], [0, 0, 0], [1, 0, 0]])
    okA = check_o_operator(c.rep.g, c.rep, bad)[0]
    bad2 = t + Mat([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    okB = check_o_operator(c.rep.g, c.rep, bad2)[0]
    assert not (okA and okB)


def test_transported_product_matches_phi(first_samples):
    for entry, bindings, alg in first_samples[:12]:
        c = psi(alg)
        t = o_operator_from_cocycle(c)
        assert transported_product(c.rep.g, c.rep, t) == phi(c)


def test_induced_products_rank2():
    # adjoint representation of N with the rank-2 CYBE solution diag(1,0,1)
    n = canonical_lie("N")
    rho = Representation(n, [n.ad([1, 0, 0]).transpose(),
                             n.ad([0, 1, 0]).transpose(),
                             n.ad([0, 0, 1]).transpose()])
    t = Mat([[1, 0, 0], [0, 0, 0], [0, 0, 1]])
    assert check_cybe(n, t)[0]
    ok, cert = check_o_operator(n, rho, t)
    assert ok
    on_v, image, image_table = induced_products(n, rho, t)
    assert check_left_symmetric(on_v)[0]
    assert len(image) == 2


def test_induced_products_zero_map():
    h = canonical_lie("heisenberg")
    rep = Representation(h, [Mat.zero(3)] * 3)
    on_v, image, image_table = induced_products(h, rep, Mat.zero(3))
    assert on_v.is_zero_product() and image == []


def test_induced_products_rejects_non_o_operator():
    alg = catalog.instantiate("H-1")
    c = psi(alg)
    t = o_operator_from_cocycle(c)
    for pert in (Mat([[0, 0, 0], [0, 0, 0], [1, 0, 0]]),
                 Mat([[1, 0, 0], [0, 0, 0], [0, 0, 0]])):
        bad = t + pert
        if not check_o_operator(c.rep.g, c.rep, bad)[0]:
            with pytest.raises(NotOOperator):
                induced_products(c.rep.g, c.rep, bad)
            return
    pytest.fail("no perturbation broke the O-operator identity")


def test_seeded_derivation_inputs_yield_novikov(commutative_bases):
    rng = random.Random(72)
    for base in commutative_bases(rng, 15):
        basis = derivation_space(base)
        d = Mat.zero(3)
        for b in basis:
            d = d + QI(rng.randint(-2, 2)) * b
        out = novikov_from_derivation(base, d)
        assert check_left_symmetric(out)[0] and is_novikov(out)
