"""The machine-readable classification catalog and its batch verification.

Entries live in data files (one per family) in an entry-block format built
on the shared scalar/product/matrix grammar.  The data is source of truth:
nothing is regenerated at runtime.  The directory is overridable through
the LSACAT_DATA environment variable.

Per-entry checks: left-symmetry at every admissible sample, sub-adjacent
Lie class recovery (with canonical parameter for the D family), exact
reconstruction of the printed table from the stored (f, C) cocycle data
(up to the stored in-display witness for primed forms), expected property
flags, and any stored witness isomorphisms.  Remark coincidences without
printed maps are resolved by bounded isomorphism search.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Algebra, check_left_symmetric, commutator_lie, substitute_algebra
from .cocycle import Cocycle, Representation, check_cocycle, check_representation, is_bijective, phi
from .docs import (constraint_allows, parse_constraint, parse_matrix,
                   parse_term_list)
from .errors import ConstraintViolated, DocSemanticError, DocSyntaxError, UnknownId
from .iso import search_lsa_iso, verify_lsa_iso
from .lie import canonical_l, canonical_lie, classify3
from .linalg import Mat, vec_zero
from .props import (find_ideals, is_associative, is_bisymmetric,
                    is_novikov, is_semisimple, is_simple, is_transitive)
from .scalars import QI, format_scalar, parse_scalar, qi, substitute

FAMILY_FILES = {
    "H": "h.cat",
    "N": "n.cat",
    "D1": "d1bar.cat",
    "Dl": "dl.cat",
    "E": "e.cat",
}

FLAG_NAMES = ("associative", "transitive", "novikov", "bisymmetric",
              "simple", "semisimple")

_SAMPLE_POOLS = {
    "lambda": [QI(2), QI(-1), QI(Fraction(1, 2)), QI(3)],
    "mu": [QI(1), QI(2), QI(-1)],
    "l": [QI(Fraction(1, 2)), QI(-1), QI(0, 1)],
}


@dataclass
class IsoDecl:
    target: str
    when: dict = field(default_factory=dict)   # param -> QI
    bind: dict = field(default_factory=dict)   # target param -> expr text
    witness: object = None                     # parametric Mat or None


@dataclass
class CatalogEntry:
    id: str
    family: str
    params: dict = field(default_factory=dict)      # name -> constraint
    table: object = None                            # parametric Algebra
    primed: object = None
    primed_witness: object = None
    case: str = ""
    f_mats: object = None                           # list of parametric Mat
    cmat: object = None
    flags: dict = field(default_factory=dict)       # name -> condition
    isos: list = field(default_factory=list)
    samples_override: dict = field(default_factory=dict)

    def admissible(self, bindings):
        for name, c in self.params.items():
            if name not in bindings:
                return False
            if not constraint_allows(c, bindings[name]):
                return False
        return True

    def sample_bindings(self):
        "Default parameter sample plan, filtered by the constraints."
        names = list(self.params)
        if not names:
            return [{}]
        pools = []
        for name in names:
            c = self.params[name]
            if c[0] == "eq":
                pools.append([c[1]])
                continue
            pool = list(self.samples_override.get(
                name, _SAMPLE_POOLS.get(name, [QI(2), QI(-1)])))
            if c[0] == "any" and all(v != QI(0) for v in pool):
                pool = [QI(0)] + pool
            pool = [v for v in pool if constraint_allows(c, v)]
            pools.append(pool)
        out = [{}]
        for name, pool in zip(names, pools):
            out = [dict(b, **{name: v}) for b in out for v in pool]
        return out


def binding_key(bindings):
    return tuple(sorted((k, format_scalar(v)) for k, v in bindings.items()))


# ---------------------------------------------------------------------------
# data loading


def data_dir():
    return os.environ.get(
        "LSACAT_DATA", os.path.join(os.path.dirname(__file__), "data"))


def _parse_entry_block(block, path):
    lines = [l for l in block]
    head = lines[0][1].split()
    if head[0] != "entry" or len(head) != 2:
        raise DocSyntaxError("entry block must start with 'entry <id>'",
                             lines[0][0], 1)
    e = CatalogEntry(id=head[1], family="")
    table_lines, primed_lines = [], []
    pnames = set()
    for lineno, line in lines[1:]:
        toks = line.split()
        key = toks[0]
        if key == "family":
            e.family = toks[1]
        elif key == "params":
            pname = toks[1]
            e.params[pname] = parse_constraint(toks[2:])
            pnames.add(pname)
        elif key == "table":
            table_lines.append((lineno, line.split(None, 1)[1]))
        elif key == "primed":
            primed_lines.append((lineno, line.split(None, 1)[1]))
        elif key == "primed_witness":
            e.primed_witness = parse_matrix(line.split("=", 1)[1], 3, pnames)
        elif key == "case":
            e.case = toks[1]
        elif key.startswith("f(e"):
            if e.f_mats is None:
                e.f_mats = [None, None, None]
            idx = int(key[3:-1]) - 1
            e.f_mats[idx] = parse_matrix(line.split("=", 1)[1], 3, pnames)
        elif key == "C":
            e.cmat = parse_matrix(line.split("=", 1)[1], 3, pnames)
        elif key == "flags":
            for item in toks[1:]:
                fname, _, cond = item.partition("=")
                e.flags[fname] = _parse_cond(cond)
        elif key == "samples":
            pname = toks[1].rstrip(":")
            rest = line.split(":", 1)[1]
            e.samples_override[pname] = [
                _qi_value(v.strip()) for v in rest.split(",") if v.strip()]
        elif key == "iso":
            e.isos.append(_parse_iso(line, pnames))
        else:
            raise DocSyntaxError("unknown entry field %r in %s" % (key, path),
                                 lineno, 1)
    if e.family not in FAMILY_FILES:
        raise DocSemanticError("entry %s has bad family %r" % (e.id, e.family))
    def build(linelist):
        table = [[vec_zero(3) for _ in range(3)] for _ in range(3)]
        for lineno, text in linelist:
            lhs, _, rhs = text.partition("=")
            ij = lhs.split()
            i, j = int(ij[0][1:]) - 1, int(ij[1][1:]) - 1
            table[i][j] = parse_term_list(rhs.strip(), 3, pnames)
        return Algebra(table)
    e.table = build(table_lines)
    if primed_lines:
        e.primed = build(primed_lines)
    for fname in FLAG_NAMES:
        e.flags.setdefault(fname, False)
    return e


def _parse_cond(text):
    if text == "yes":
        return True
    if text == "no":
        return False
    conj = []
    for item in text.split("&"):
        name, _, val = item.partition("=")
        conj.append((name, _qi_value(val)))
    return tuple(conj)


def _qi_value(text):
    v = parse_scalar(text, vars=())
    if not isinstance(v, QI):
        raise DocSemanticError("expected a constant, got %r" % text)
    return v


def _parse_iso(line, pnames):
    toks = line.split()
    assert toks[0] == "iso"
    decl = IsoDecl(target=toks[1])
    k = 2
    mode = None
    while k < len(toks):
        t = toks[k]
        if t in ("when", "bind"):
            mode = t
            k += 1
            continue
        if t == "T":
            rest = line.split(" T ", 1)[1].strip()
            decl.witness = parse_matrix(rest, 3, pnames)
            break
        name, _, val = t.partition("=")
        if mode == "when":
            decl.when[name] = _qi_value(val)
        elif mode == "bind":
            decl.bind[name] = val
        else:
            raise DocSyntaxError("iso clause before when/bind: %r" % t)
        k += 1
    return decl


def _load_file(path):
    entries = []
    block = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].rstrip()
            if not line.strip():
                continue
            if line.strip() == "end":
                entries.append(_parse_entry_block(block, path))
                block = []
                continue
            block.append((lineno, line.strip()))
    if block:
        raise DocSyntaxError("unterminated entry block in %s" % path,
                             block[0][0], 1)
    return entries


_CACHE = {}


def load_catalog(directory=None):
    "Entries as an ordered {id: CatalogEntry} map; cached per directory."
    directory = directory or data_dir()
    if directory in _CACHE:
        return _CACHE[directory]
    out = {}
    for family in ("H", "N", "D1", "Dl", "E"):
        path = os.path.join(directory, FAMILY_FILES[family])
        for e in _load_file(path):
            if e.id in out:
                raise DocSemanticError("duplicate entry id %s" % e.id)
            out[e.id] = e
    _CACHE[directory] = out
    return out


def lookup(entry_id, directory=None):
    cat = load_catalog(directory)
    if entry_id not in cat:
        raise UnknownId("no catalog entry %r" % entry_id)
    return cat[entry_id]


def instantiate(entry_id, bindings=None, check=True, directory=None):
    "Exact Algebra over Q(i) for an entry at given parameter values."
    e = lookup(entry_id, directory)
    bindings = {k: qi(v) for k, v in (bindings or {}).items()}
    missing = [p for p in e.params if p not in bindings]
    if missing:
        raise ConstraintViolated("missing binding(s) %s for %s"
                                 % (", ".join(missing), entry_id))
    if check and not e.admissible(bindings):
        raise ConstraintViolated(
            "bindings %s violate the constraints of %s"
            % ({k: format_scalar(v) for k, v in bindings.items()}, entry_id))
    return substitute_algebra(e.table, bindings)


# ---------------------------------------------------------------------------
# verification


@dataclass
class EntryReport:
    entry_id: str
    bindings: dict
    left_symmetric: bool = False
    lie_class_ok: bool = False
    cocycle_reconstruction_ok: bool = True
    flags_ok: bool = False
    witness_isos_ok: bool = True
    computed: dict = None
    messages: list = field(default_factory=list)

    @property
    def ok(self):
        return (self.left_symmetric and self.lie_class_ok
                and self.cocycle_reconstruction_ok and self.flags_ok
                and self.witness_isos_ok)

    def describe(self):
        b = ",".join("%s=%s" % (k, format_scalar(v))
                     for k, v in sorted(self.bindings.items()))
        tag = "ok" if self.ok else "FAIL"
        out = "%s[%s]: %s" % (self.entry_id, b, tag)
        for m in self.messages:
            out += "\n    " + m
        return out


def expected_lie_key(entry, bindings):
    if entry.family == "H":
        return ("Heisenberg", None)
    if entry.family == "N":
        return ("N", None)
    if entry.family == "E":
        return ("E", None)
    if entry.family == "D1":
        return ("Dl", (Fraction(1), Fraction(0)))
    l = canonical_l(bindings["l"])
    return ("Dl", (l.re, l.im))


def family_lie(entry, bindings):
    if entry.family == "H":
        return canonical_lie("heisenberg")
    if entry.family == "N":
        return canonical_lie("N")
    if entry.family == "E":
        return canonical_lie("E")
    if entry.family == "D1":
        return canonical_lie("Dl", 1)
    return canonical_lie("Dl", bindings["l"])


def _flag_expected(cond, bindings):
    if cond is True or cond is False:
        return cond
    return all(qi(bindings[name]) == val for name, val in cond)


def computed_flags(alg):
    simple = False
    semi = False
    if not alg.is_zero_product():
        report = find_ideals(alg)
        simple = is_simple(alg, report)
        semi, _ = is_semisimple(alg, report)
    return {
        "associative": is_associative(alg),
        "transitive": is_transitive(alg),
        "novikov": is_novikov(alg),
        "bisymmetric": is_bisymmetric(alg),
        "simple": simple,
        "semisimple": semi,
    }


def verify_entry(entry_id, bindings=None, directory=None):
    "Run every per-entry check at one parameter sample."
    e = lookup(entry_id, directory)
    bindings = {k: qi(v) for k, v in (bindings or {}).items()}
    rep = EntryReport(entry_id, bindings)
    alg = instantiate(entry_id, bindings, directory=directory)

    ok, cert = check_left_symmetric(alg)
    rep.left_symmetric = ok
    if not ok:
        rep.messages.append("left-symmetry fails at triple %s" % (cert[:3],))

    cls = classify3(commutator_lie(alg))
    rep.lie_class_ok = cls.key() == expected_lie_key(e, bindings)
    if not rep.lie_class_ok:
        rep.messages.append("lie class %s, expected %s"
                            % (cls.key(), expected_lie_key(e, bindings)))

    if e.f_mats is not None and e.cmat is not None:
        rep.cocycle_reconstruction_ok = _check_reconstruction(
            e, bindings, alg, rep.messages)
    elif e.f_mats is not None or e.cmat is not None:
        rep.cocycle_reconstruction_ok = False
        rep.messages.append("incomplete (f, C) data")

    expected = {name: _flag_expected(cond, bindings)
                for name, cond in e.flags.items()}
    got = computed_flags(alg)
    rep.computed = got
    rep.flags_ok = got == expected
    if not rep.flags_ok:
        for name in FLAG_NAMES:
            if got[name] != expected[name]:
                rep.messages.append("flag %s: computed %s, expected %s"
                                    % (name, got[name], expected[name]))

    for decl in e.isos:
        if decl.witness is None:
            continue
        if not _iso_applies(decl, bindings):
            continue
        ok, msg = _verify_iso_decl(e, decl, bindings, alg,
                                   use_search=False, directory=directory)
        if not ok:
            rep.witness_isos_ok = False
            rep.messages.append(msg)
    return rep


def _instantiate_mat(m, bindings):
    return Mat([[substitute(x, bindings) for x in m.row(i)]
                for i in range(m.nrows)])


def _check_reconstruction(e, bindings, alg, messages):
    lie = family_lie(e, bindings)
    mats = [_instantiate_mat(m, bindings) for m in e.f_mats]
    cm = _instantiate_mat(e.cmat, bindings)
    rep = Representation(lie, mats)
    ok, cert = check_representation(rep)
    if not ok:
        messages.append("stored f data is not a representation: %r" % (cert,))
        return False
    c = Cocycle(rep, cm)
    ok, cert = check_cocycle(c)
    if not ok:
        messages.append("stored (f, C) is not a cocycle: %r" % (cert,))
        return False
    if not is_bijective(c):
        messages.append("stored C is singular")
        return False
    built = phi(c)
    if e.primed is not None:
        primed = substitute_algebra(e.primed, bindings)
        if built != primed:
            messages.append("phi does not match the primed table")
            return False
        if e.primed_witness is None:
            messages.append("primed table without a stored witness")
            return False
        w = _instantiate_mat(e.primed_witness, bindings)
        if not verify_lsa_iso(primed, alg, w):
            messages.append("stored primed witness fails")
            return False
        return True
    if built != alg:
        messages.append("phi does not reproduce the printed table")
        return False
    return True


def _iso_applies(decl, bindings):
    return all(qi(bindings.get(name)) == val if name in bindings else False
               for name, val in decl.when.items()) if decl.when else True


def _target_bindings(decl, bindings):
    out = {}
    for name, expr in decl.bind.items():
        val = parse_scalar(expr, vars=set(bindings))
        out[name] = substitute(val, bindings) if not isinstance(val, QI) else val
    return out


def _verify_iso_decl(e, decl, bindings, alg, use_search, directory=None):
    tgt_bind = _target_bindings(decl, bindings)
    try:
        target = instantiate(decl.target, tgt_bind, check=False,
                             directory=directory)
    except Exception as exc:
        return False, "iso %s -> %s: target instantiation failed: %s" % (
            e.id, decl.target, exc)
    label = "iso %s%s -> %s%s" % (
        e.id, _fmt_bind(bindings), decl.target, _fmt_bind(tgt_bind))
    if decl.witness is not None:
        w = _instantiate_mat(decl.witness, bindings)
        if verify_lsa_iso(alg, target, w):
            return True, label + ": ok (stored witness)"
        return False, label + ": stored witness fails"
    if not use_search:
        return True, label + ": deferred to search"
    verdict = search_lsa_iso(alg, target)
    if verdict.is_isomorphic:
        return True, label + ": ok (search)"
    return False, label + ": %s (%s)" % (verdict.status, verdict.reason)


def _fmt_bind(bindings):
    if not bindings:
        return ""
    return "[%s]" % ",".join("%s=%s" % (k, format_scalar(v))
                             for k, v in sorted(bindings.items()))


@dataclass
class SweepReport:
    total: int = 0
    failures: list = field(default_factory=list)
    reports: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def summary(self):
        lines = ["verified %d entry/sample pairs, %d failures"
                 % (self.total, len(self.failures))]
        for r in self.failures:
            lines.append(r.describe())
        return "\n".join(lines)


def verify_all(families=None, plan=None, directory=None):
    """Run verify_entry over all entries and samples.

    plan: optional {entry_id: [bindings, ...]} overriding the default
    sample plan for listed entries.
    """
    cat = load_catalog(directory)
    out = SweepReport()
    for e in cat.values():
        if families and e.family not in families:
            continue
        samples = (plan or {}).get(e.id, e.sample_bindings())
        for b in samples:
            r = verify_entry(e.id, b, directory=directory)
            out.total += 1
            out.reports.append(r)
            if not r.ok:
                out.failures.append(r)
    return out


def verify_property_tables(families=None, directory=None, sweep=None):
    """Compare the computed property sets with the stored expectations,
    itemizing every discrepancy per family and flag.  An existing sweep
    (from verify_all) is reused instead of recomputing the predicates."""
    cat = load_catalog(directory)
    if sweep is None:
        sweep = verify_all(families=families, directory=directory)
    discrepancies = []
    total = 0
    sets = {}
    for r in sweep.reports:
        e = cat[r.entry_id]
        if families and e.family not in families:
            continue
        got = r.computed
        if got is None:
            got = computed_flags(instantiate(e.id, r.bindings,
                                             directory=directory))
        total += 1
        for name in FLAG_NAMES:
            expected = _flag_expected(e.flags[name], r.bindings)
            if got[name]:
                sets.setdefault((e.family, name), []).append(
                    (e.id, binding_key(r.bindings)))
            if got[name] != expected:
                discrepancies.append(
                    "%s%s %s: computed %s, table says %s"
                    % (e.id, _fmt_bind(r.bindings), name, got[name], expected))
    return {"checked": total, "sets": sets, "discrepancies": discrepancies}


def verify_remark_isos(directory=None):
    """Check every stored coincidence declaration: explicit witnesses are
    verified directly, the rest go through bounded isomorphism search.
    Returns (confirmed, unconfirmed, failed) message lists."""
    cat = load_catalog(directory)
    confirmed, unconfirmed, failed = [], [], []
    for e in cat.values():
        for decl in e.isos:
            for b in _iso_sample_bindings(e, decl):
                alg = instantiate(e.id, b, check=False, directory=directory)
                ok, msg = _verify_iso_decl(e, decl, b, alg, use_search=True,
                                           directory=directory)
                if ok:
                    confirmed.append(msg)
                elif "unknown" in msg:
                    unconfirmed.append(msg)
                else:
                    failed.append(msg)
    return confirmed, unconfirmed, failed


def _iso_sample_bindings(e, decl):
    "Samples honoring the declaration's when-clause (pinning those params)."
    names = list(e.params)
    if not names:
        return [{}]
    out = [{}]
    for name in names:
        c = e.params[name]
        if name in decl.when:
            vals = [decl.when[name]]
        elif c[0] == "eq":
            vals = [c[1]]
        else:
            pool = list(e.samples_override.get(
                name, _SAMPLE_POOLS.get(name, [QI(2), QI(-1)])))
            if c[0] == "any" and all(v != QI(0) for v in pool):
                pool = [QI(0)] + pool
            vals = [v for v in pool if constraint_allows(c, v)]
        out = [dict(b, **{name: v}) for b in out for v in vals]
    return out


def entry_counts(directory=None):
    cat = load_catalog(directory)
    counts = {}
    for e in cat.values():
        counts[e.family] = counts.get(e.family, 0) + 1
    return counts
