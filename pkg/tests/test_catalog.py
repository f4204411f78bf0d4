import pytest

from lsacat import catalog
from lsacat.algebra import basis_vector, multiply
from lsacat.errors import ConstraintViolated, UnknownId
from lsacat.linalg import vec_eq
from lsacat.scalars import QI


def test_entry_counts(full_catalog):
    counts = catalog.entry_counts()
    assert counts == {"H": 10, "N": 45, "D1": 12, "Dl": 32, "E": 9}


def test_lookup_unknown_id():
    with pytest.raises(UnknownId):
        catalog.lookup("H-99")


def test_instantiate_h7():
    alg = catalog.instantiate("H-7", {"lambda": 2})
    assert vec_eq(multiply(alg, basis_vector(alg, 0), basis_vector(alg, 0)),
                  [QI(0), QI(0), QI(1)])
    assert vec_eq(multiply(alg, basis_vector(alg, 1), basis_vector(alg, 1)),
                  [QI(0), QI(0), QI(2)])


def test_instantiate_n1_at_zero():
    alg = catalog.instantiate("N-1", {"lambda": 0})
    nonzero = [(i, j) for i in range(3) for j in range(3)
               if not vec_eq(alg.c[i][j], [QI(0)] * 3)]
    assert nonzero == [(2, 1)]


def test_instantiate_constraint_violation():
    with pytest.raises(ConstraintViolated):
        catalog.instantiate("H-10", {"lambda": 1})
    with pytest.raises(ConstraintViolated):
        catalog.instantiate("N-2", {"lambda": 0, "mu": 1})
    with pytest.raises(ConstraintViolated):
        catalog.instantiate("Dhalf-S-7", {"l": 1})
    # missing binding
    with pytest.raises(ConstraintViolated):
        catalog.instantiate("H-7")


def test_instantiate_override_for_remark_extensions():
    alg = catalog.instantiate("N-2", {"lambda": 0, "mu": 1}, check=False)
    assert alg == catalog.instantiate("N-3", {"mu": 1}, check=False)


def test_verify_entry_h1():
    r = catalog.verify_entry("H-1")
    assert r.ok and r.left_symmetric and r.lie_class_ok
    assert r.cocycle_reconstruction_ok and r.flags_ok


def test_verify_entry_n30_flags():
    r = catalog.verify_entry("N-30")
    assert r.ok
    flags = catalog.computed_flags(catalog.instantiate("N-30"))
    assert flags["semisimple"] and not flags["simple"]


def test_verify_entry_e5_display_witness():
    r = catalog.verify_entry("E-5")
    assert r.ok and r.cocycle_reconstruction_ok


def test_default_sample_plan_honors_constraints(full_catalog):
    for e in full_catalog.values():
        samples = e.sample_bindings()
        assert samples
        for b in samples:
            assert e.admissible(b)


def test_sample_plan_includes_zero_for_free_parameters():
    e = catalog.lookup("N-1")
    assert {str(b["lambda"]) for b in e.sample_bindings()} >= {"0", "2"}


def test_corrupted_entry_detected(tmp_path, monkeypatch):
    "Harness self test: a deliberately corrupted table must be caught."
    import os
    import shutil

    src = catalog.data_dir()
    for name in catalog.FAMILY_FILES.values():
        shutil.copy(os.path.join(src, name), tmp_path / name)
    text = (tmp_path / "h.cat").read_text()
    # break (H-1): e1 e2 = e2 + e3 -> e2 + 2 e3
    text = text.replace("table e1 e2 = e2 + e3", "table e1 e2 = e2 + 2 e3", 1)
    (tmp_path / "h.cat").write_text(text)
    report = catalog.verify_all(families=["H"], directory=str(tmp_path))
    assert any(r.entry_id == "H-1" for r in report.failures)
    assert len(report.failures) >= 1


def test_catalog_sweep_clean(catalog_sweep):
    assert catalog_sweep.ok, catalog_sweep.summary()
    assert catalog_sweep.total >= 250


def test_property_tables_clean(property_tables):
    assert property_tables["discrepancies"] == []
    sets = property_tables["sets"]
    # a few anchors from the printed tables
    h_transitive = {eid for eid, _ in sets[("H", "transitive")]}
    assert h_transitive == {"H-5", "H-6", "H-7", "H-8", "H-9", "H-10"}
    assert ("E", "associative") not in sets
    assert ("E", "bisymmetric") not in sets
    assert {eid for eid, _ in sets[("N", "semisimple")]} == {"N-30"}
    assert {eid for eid, _ in sets[("D1", "simple")]} == {"D1bar-10"}
    assert {eid for eid, _ in sets[("Dl", "simple")]} == {"Dl-10", "Dhalf-S-7"}
    assert ("H", "simple") not in sets
    assert ("N", "simple") not in sets
    assert ("E", "simple") not in sets


def test_remark_isos_all_confirmed(remark_isos):
    confirmed, unconfirmed, failed = remark_isos
    assert failed == []
    assert unconfirmed == []
    assert len(confirmed) >= 90


def test_source_cocycles_all_valid(full_catalog):
    from lsacat.cocycle import (check_cocycle, check_representation,
                                is_bijective)
    from lsacat.cocycle import Cocycle, Representation

    for e in full_catalog.values():
        assert e.f_mats is not None and e.cmat is not None, e.id
        b = e.sample_bindings()[0]
        lie = catalog.family_lie(e, b)
        mats = [catalog._instantiate_mat(m, b) for m in e.f_mats]
        rep = Representation(lie, mats)
        assert check_representation(rep)[0], e.id
        c = Cocycle(rep, catalog._instantiate_mat(e.cmat, b))
        assert check_cocycle(c)[0], e.id
        assert is_bijective(c), e.id
