import io
import os
from contextlib import redirect_stdout

from lsacat.cli import main

SAMPLES = os.path.join(os.path.dirname(__file__), "..", "src", "lsacat",
                       "data", "samples")


def run(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def sample(name):
    return os.path.join(SAMPLES, name)


def test_check_h1():
    code, out = run(["check", sample("h1.alg")])
    assert code == 0
    assert "left_symmetric: yes" in out
    assert "lie_class: Heisenberg" in out
    assert "novikov: yes" in out


def test_check_zero_algebra_flags():
    code, out = run(["check", sample("zero.alg")])
    assert code == 0
    for flag in ("left_symmetric", "transitive", "novikov", "bisymmetric",
                 "associative"):
        assert "%s: yes" % flag in out


def test_check_rejects_missing_file():
    code, out = run(["check", "no-such-file.alg"])
    assert code == 2


def test_check_rejects_malformed(tmp_path):
    p = tmp_path / "bad.alg"
    p.write_text("kind algebra dim 3 domain gaussian\ne1 e1 = 1/0 e2\n")
    code, out = run(["check", str(p)])
    assert code == 2


def test_check_failure_exit_code(tmp_path):
    p = tmp_path / "not_lsa.alg"
    p.write_text("kind algebra dim 3 domain gaussian\n"
                 "e1 e1 = e2\ne2 e1 = e1\n")
    code, out = run(["check", str(p)])
    assert code == 1
    assert "left_symmetric: no" in out


def test_cocycle_build_emits_h1():
    code, out = run(["cocycle-build", sample("h1_cocycle.coc")])
    assert code == 0
    with open(sample("h1.alg")) as fh:
        body = [l for l in fh.read().splitlines() if l and not l.startswith("#")]
    emitted = [l for l in out.splitlines() if l]
    assert emitted == body


def test_iso_verify_witness():
    code, out = run(["iso", "--verify", sample("h2prime_to_h2.wit")])
    assert code == 0
    assert "verdict: isomorphic" in out


def test_iso_search(tmp_path):
    a = tmp_path / "a.alg"
    b = tmp_path / "b.alg"
    a.write_text("kind algebra dim 3 domain gaussian\n"
                 "e1 e1 = e1\ne3 e2 = e2\ne3 e3 = 2 e3\n")
    b.write_text("kind algebra dim 3 domain gaussian\n"
                 "e1 e1 = e1\ne3 e2 = e2\ne3 e3 = 2 e3\n")
    code, out = run(["iso", "--search", str(a), str(b)])
    assert code == 0
    assert "verdict: isomorphic" in out


def test_fingerprint_output():
    code, out = run(["fingerprint", sample("h1.alg")])
    assert code == 0
    assert "dim product_span: 3" in out
    assert "lie_class: ('Heisenberg', None)" in out


def test_catalog_verify_family_h():
    code, out = run(["catalog-verify", "--family", "H"])
    assert code == 0
    assert "H: 10/10 classes verified" in out


def test_catalog_verify_single_entry():
    code, out = run(["catalog-verify", "--entry", "N-1", "--param", "lambda=2"])
    assert code == 0
    assert "failures: 0" in out


def test_deterministic_output():
    code1, out1 = run(["check", sample("h1.alg")])
    code2, out2 = run(["check", sample("h1.alg")])
    assert (code1, out1) == (code2, out2)
    code1, out1 = run(["fingerprint", sample("h1.alg")])
    code2, out2 = run(["fingerprint", sample("h1.alg")])
    assert (code1, out1) == (code2, out2)
