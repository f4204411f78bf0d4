"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 input error.  Output is
deterministic: fixed ordering, no timestamps.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog
from .algebra import check_left_symmetric, commutator_lie
from .cocycle import phi
from .docs import Document, emit_document, parse_document
from .errors import DocSemanticError, DocSyntaxError, LsaError
from .iso import search_lsa_iso, verify_lsa_iso
from .lie import classify3


def _read_doc(path, kinds):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = parse_document(fh.read())
    except OSError as e:
        raise SystemExit(_fail(2, "cannot read %s: %s" % (path, e)))
    except (DocSyntaxError, DocSemanticError) as e:
        raise SystemExit(_fail(2, "bad document %s: %s" % (path, e)))
    if doc.kind not in kinds:
        raise SystemExit(_fail(2, "%s: expected a %s document, got %s"
                               % (path, "/".join(kinds), doc.kind)))
    return doc


def _fail(code, msg):
    print(msg)
    return code


def cmd_check(args):
    doc = _read_doc(args.file, ("algebra",))
    alg = doc.payload
    if doc.params:
        print("parametric table: instantiate before checking")
        return 2
    ok, cert = check_left_symmetric(alg)
    print("left_symmetric: %s" % ("yes" if ok else "no"))
    if not ok:
        i, j, k, _ = cert
        print("  violated at triple (e%d,e%d,e%d)" % (i + 1, j + 1, k + 1))
        return 1
    cls = classify3(commutator_lie(alg)) if alg.dim == 3 else None
    if cls is not None:
        from .scalars import format_scalar
        tag = cls.tag
        if cls.param is not None:
            tag += "(l=%s)" % format_scalar(cls.param)
        print("lie_class: %s" % tag)
    from .props import (is_associative, is_bisymmetric, is_novikov,
                        is_transitive)
    flags = [("associative", is_associative(alg)),
             ("transitive", is_transitive(alg)),
             ("novikov", is_novikov(alg)),
             ("bisymmetric", is_bisymmetric(alg))]
    if not alg.is_zero_product() and alg.dim == 3:
        from .props import is_semisimple, is_simple
        flags.append(("simple", is_simple(alg)))
        flags.append(("semisimple", is_semisimple(alg)[0]))
    for name, val in flags:
        print("%s: %s" % (name, "yes" if val else "no"))
    return 0


def cmd_cocycle_build(args):
    doc = _read_doc(args.file, ("cocycle",))
    try:
        alg = phi(doc.payload)
    except LsaError as e:
        print("cannot build: %s" % e)
        return 1
    out = Document("algebra", alg.dim, doc.domain, {}, alg)
    sys.stdout.write(emit_document(out))
    return 0


def cmd_catalog_verify(args):
    families = [args.family] if args.family else None
    try:
        if args.entry:
            entry = catalog.lookup(args.entry)
            if args.param:
                bindings = {}
                for item in args.param:
                    name, _, val = item.partition("=")
                    from .scalars import parse_scalar
                    bindings[name] = parse_scalar(val, vars=())
                samples = [bindings]
            else:
                samples = entry.sample_bindings()
            report = catalog.SweepReport()
            for b in samples:
                r = catalog.verify_entry(args.entry, b)
                report.total += 1
                report.reports.append(r)
                if not r.ok:
                    report.failures.append(r)
        elif args.param:
            print("--param requires --entry")
            return 2
        else:
            report = catalog.verify_all(families=families)
    except LsaError as e:
        print("catalog error: %s" % e)
        return 2
    by_family = {}
    for r in report.reports:
        fam = catalog.lookup(r.entry_id).family
        by_family.setdefault(fam, set()).add(r.entry_id)
    for fam in sorted(by_family):
        n = len(by_family[fam])
        bad = {r.entry_id for r in report.failures
               if catalog.lookup(r.entry_id).family == fam}
        print("%s: %d/%d classes verified" % (fam, n - len(bad), n))
    print("entry/sample pairs: %d, failures: %d"
          % (report.total, len(report.failures)))
    extra_bad = False
    if args.all:
        confirmed, unconfirmed, failed = catalog.verify_remark_isos()
        print("remark coincidences: %d confirmed, %d unconfirmed, %d failed"
              % (len(confirmed), len(unconfirmed), len(failed)))
        tables = catalog.verify_property_tables(
            sweep=report if not (args.entry or args.family) else None)
        print("property table discrepancies: %d" % len(tables["discrepancies"]))
        for d in tables["discrepancies"]:
            print("  " + d)
        for m in unconfirmed + failed:
            print("  " + m)
        extra_bad = bool(unconfirmed or failed or tables["discrepancies"])
    for r in report.failures:
        print(r.describe())
    return 1 if (report.failures or extra_bad) else 0


def cmd_iso(args):
    if args.verify:
        doc = _read_doc(args.verify, ("iso_witness",))
        src, tgt, t = doc.payload
        try:
            ok = verify_lsa_iso(src, tgt, t)
        except LsaError as e:
            print("verdict: error (%s)" % e)
            return 2
        print("verdict: %s" % ("isomorphic" if ok else "witness fails"))
        return 0 if ok else 1
    a = _read_doc(args.search[0], ("algebra",)).payload
    b = _read_doc(args.search[1], ("algebra",)).payload
    v = search_lsa_iso(a, b)
    print("verdict: %s" % v.status)
    if v.status == "isomorphic":
        from .docs import format_matrix
        print("witness: %s" % format_matrix(v.witness))
        return 0
    if v.status == "not_isomorphic":
        print("separated_by: %s" % v.reason)
        return 0
    return 1 if args.strict else 0


def cmd_fingerprint(args):
    doc = _read_doc(args.file, ("algebra",))
    from .props import fingerprint
    fp = fingerprint(doc.payload)
    for name in sorted(fp.flags):
        print("flag %s: %s" % (name, "yes" if fp.flags[name] else "no"))
    for name in sorted(fp.dims):
        print("dim %s: %d" % (name, fp.dims[name]))
    for name in sorted(fp.ranks):
        print("rank %s: %d" % (name, fp.ranks[name]))
    print("lie_class: %s" % (fp.lie_class,))
    return 0


def main(argv=None):
    p = argparse.ArgumentParser(
        prog="lsacat",
        description="Exact verification of the 3-dimensional left-symmetric "
                    "algebra catalog.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="check a left-symmetric algebra file")
    c.add_argument("file")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("cocycle-build",
                       help="emit the algebra built from a cocycle file")
    c.add_argument("file")
    c.set_defaults(func=cmd_cocycle_build)

    c = sub.add_parser("catalog-verify", help="verify the embedded catalog")
    c.add_argument("--family", choices=sorted(catalog.FAMILY_FILES))
    c.add_argument("--entry")
    c.add_argument("--param", action="append",
                   help="name=value (repeatable, with --entry)")
    c.add_argument("--all", action="store_true",
                   help="also run remark isomorphisms and property tables")
    c.set_defaults(func=cmd_catalog_verify)

    c = sub.add_parser("iso", help="verify or search an isomorphism")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--verify", metavar="WITNESS_FILE")
    g.add_argument("--search", nargs=2, metavar=("A", "B"))
    c.add_argument("--strict", action="store_true",
                   help="exit 1 when the search result is unknown")
    c.set_defaults(func=cmd_iso)

    c = sub.add_parser("fingerprint", help="print an algebra's fingerprint")
    c.add_argument("file")
    c.set_defaults(func=cmd_fingerprint)

    args = p.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    except (DocSyntaxError, DocSemanticError) as e:
        print("input error: %s" % e)
        return 2


if __name__ == "__main__":
    sys.exit(main())
