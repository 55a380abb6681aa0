"""``constel`` command line: check, convert, construct, embed, enumerate and
verify finite partial algebras stored as JSON bundles.

Exit codes: 0 pass, 1 fail, 2 input or parse error, 3 resource cap.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .core import (
    KINDS,
    ConstelError,
    InputError,
    ResourceError,
    load_bundle,
    save_bundle,
    serialize_bundle,
)
from .constellations import check_constellation, check_radiant, check_range, with_range
from .correspondence import C_of, Q_of, from_ordered_groupoid, to_ordered_groupoid
from .enumeration import ENUM_KINDS, REQUIREMENTS, EnumerationTask, enumerate_structures
from .ordered import check_category, check_groupoid, check_ordered_category, check_ordered_groupoid
from .preconstellations import check_pre_constellation, reconstruct_D, reduct
from .representations import (
    build_CX,
    build_IX,
    build_symmetric_inverse_monoid,
    cayley_radiant,
    inductive_groupoid,
    inv2inv,
)
from .semigroups import I_E_T_report, check_semigroup, lawson, nambooripad
from .verify import INFORMATIONAL, SUITES, run_all

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


CHECKERS = {
    "semigroup": check_semigroup,
    "involuted-semigroup": check_semigroup,
    "pre-constellation": check_pre_constellation,
    "constellation": check_constellation,
    "constellation-with-range": check_range,
    "category": check_category,
    "groupoid": check_groupoid,
    "ordered-category": check_ordered_category,
    "ordered-groupoid": check_ordered_groupoid,
}


def _as(a, kind):
    return a if kind is None else a.evolve(kind=kind)


def _cwr_of_groupoid(g):
    return Q_of(g.evolve(kind="ordered-category"))


# (source kind, target kind) -> conversion
CONVERSIONS = {
    ("constellation-with-range", "ordered-category"): C_of,
    ("ordered-category", "constellation-with-range"): Q_of,
    ("constellation", "ordered-groupoid"): to_ordered_groupoid,
    ("constellation", "constellation-with-range"): with_range,
    ("constellation", "pre-constellation"): reduct,
    ("ordered-groupoid", "constellation"): from_ordered_groupoid,
    ("ordered-groupoid", "constellation-with-range"): _cwr_of_groupoid,
    ("semigroup", "constellation"): inv2inv,
    ("semigroup", "ordered-groupoid"): inductive_groupoid,
    ("involuted-semigroup", "constellation"): inv2inv,
    ("pre-constellation", "constellation"): reconstruct_D,
}


def _emit_report(rep, as_json):
    if as_json:
        print(json.dumps(rep.to_dict(), sort_keys=True))
    else:
        print(rep.to_text())


def _write(bundle, path):
    if path == "-":
        print(serialize_bundle(bundle))
    else:
        save_bundle(bundle, path)


def _labels(arg):
    return None if arg is None else [x for x in arg.split(",") if x]


def cmd_check(args):
    a = _as(load_bundle(args.file), args.as_kind)
    rep = CHECKERS[a.kind](a, args.cap)
    _emit_report(rep, args.json)
    return EXIT_PASS if rep.passed else EXIT_FAIL


def cmd_convert(args):
    a = _as(load_bundle(args.file), args.as_kind)
    fn = CONVERSIONS.get((a.kind, args.to))
    if fn is None:
        known = ", ".join(f"{s}->{t}" for s, t in CONVERSIONS)
        raise InputError(f"no conversion from {a.kind} to {args.to} (known: {known})")
    _write(fn(a), args.output)
    return EXIT_PASS


def cmd_construct(args):
    if args.what in ("cx", "ix", "sim"):
        if args.n is None:
            raise InputError(f"construct {args.what} needs --n")
        build = {"cx": build_CX, "ix": build_IX, "sim": build_symmetric_inverse_monoid}[args.what]
        _write(build(args.n), args.output)
        return EXIT_PASS
    if args.file is None:
        raise InputError(f"construct {args.what} needs an input file")
    S = load_bundle(args.file)
    if args.what == "nambooripad":
        _write(nambooripad(S), args.output)
    elif args.what == "lawson":
        _write(lawson(S), args.output)
    else:
        rep = I_E_T_report(S, _labels(args.T), _labels(args.E))
        _write(rep.data, args.output)
        if not rep.passed:
            print(rep.to_text(), file=sys.stderr)
            return EXIT_FAIL
    return EXIT_PASS


def cmd_embed(args):
    cand = cayley_radiant(load_bundle(args.file))
    _write(cand.target, args.output)
    sidecar = {
        "source": list(cand.source.elements),
        "map": {cand.source.label(s): cand.target.label(v) for s, v in enumerate(cand.map)},
    }
    side = (os.path.splitext(args.output)[0] if args.output != "-" else "embed") + ".map.json"
    with open(side, "w", encoding="utf-8") as fh:
        json.dump(sidecar, fh, ensure_ascii=False, indent=1)
        fh.write("\n")
    rep = check_radiant(cand, args.cap)
    _emit_report(rep, args.json)
    return EXIT_PASS if rep.passed else EXIT_FAIL


def cmd_enumerate(args):
    require = tuple(_labels(args.require) or ())
    task = EnumerationTask(args.kind, args.order, require, args.count_only, args.limit, args.seed)
    res = enumerate_structures(task)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for i, b in enumerate(res.bundles):
            save_bundle(b, os.path.join(args.out, f"{args.kind}-{args.order}-{i:04d}.json"))
    if args.json:
        obj = {"kind": args.kind, "order": args.order, "require": list(require),
               "count": res.count, "truncated": res.truncated}
        if not (args.count_only or args.out):
            obj["bundles"] = [json.loads(serialize_bundle(b)) for b in res.bundles]
        print(json.dumps(obj, sort_keys=True))
        return EXIT_PASS
    if not (args.count_only or args.out):
        for b in res.bundles:
            print(serialize_bundle(b))
    print(f"count\t{res.count}" + ("\ttruncated" if res.truncated else ""))
    return EXIT_PASS


def cmd_verify(args):
    names = None if args.suite == ["all"] else args.suite
    for n in names or ():
        if n not in SUITES and n not in INFORMATIONAL:
            raise InputError(f"unknown suite {n!r}")
    if args.max_order < 1:
        raise InputError("--max-order must be at least 1")

    def progress(r):
        if not args.json:
            print(r.line(), flush=True)

    rows = run_all(args.max_order, names, progress)
    failed = [r for r in rows if not r.passed]
    if args.json:
        print(json.dumps([
            {"suite": r.name, "verdict": "info" if r.informational else ("pass" if r.passed else "fail"),
             "checked": r.checked, "detail": r.detail} for r in rows
        ], sort_keys=True))
    else:
        print(f"{len(rows) - len(failed)}/{len(rows)} rows pass", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_PASS


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable reports")
    common.add_argument("--cap", type=int, default=100, help="maximum violations listed per report")
    p = argparse.ArgumentParser(prog="constel", description="Finite constellations and related partial algebras.")
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("check", parents=[common], help="run the checker for the bundle's kind")
    c.add_argument("file")
    c.add_argument("--as", dest="as_kind", choices=KINDS, help="reinterpret the kind tag")
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("convert", parents=[common], help="convert between corresponding structures")
    v.add_argument("file")
    v.add_argument("--to", required=True, choices=KINDS)
    v.add_argument("--as", dest="as_kind", choices=KINDS, help="reinterpret the kind tag")
    v.add_argument("-o", "--output", default="-")
    v.set_defaults(func=cmd_convert)

    k = sub.add_parser("construct", parents=[common], help="build a model structure")
    k.add_argument("what", choices=("cx", "ix", "sim", "nambooripad", "lawson", "iet"))
    k.add_argument("file", nargs="?")
    k.add_argument("--n", type=int, help="number of points for cx, ix, sim")
    k.add_argument("--E", help="comma-separated labels of E (iet)")
    k.add_argument("--T", help="comma-separated labels of T (iet)")
    k.add_argument("-o", "--output", default="-")
    k.set_defaults(func=cmd_construct)

    e = sub.add_parser("embed", parents=[common], help="Cayley embedding into partial injections")
    e.add_argument("file")
    e.add_argument("-o", "--output", required=True)
    e.set_defaults(func=cmd_embed)

    n = sub.add_parser("enumerate", parents=[common], help="structures of one kind and order up to isomorphism")
    n.add_argument("--kind", required=True, choices=ENUM_KINDS)
    n.add_argument("--order", required=True, type=int)
    n.add_argument("--require", help="comma-separated: " + ",".join(REQUIREMENTS))
    n.add_argument("--count-only", action="store_true")
    n.add_argument("--limit", type=int)
    n.add_argument("--seed", type=int, help="permute the search order")
    n.add_argument("--out", help="directory for one bundle file per class")
    n.set_defaults(func=cmd_enumerate)

    r = sub.add_parser("verify", parents=[common], help="exhaustive checks of the structural results")
    r.add_argument("--suite", nargs="+", default=["all"],
                   help="'all' or suite names: " + " ".join([*SUITES, *INFORMATIONAL]))
    r.add_argument("--max-order", type=int, default=3)
    r.set_defaults(func=cmd_verify)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_PASS
    try:
        return args.func(args)
    except ResourceError as exc:
        print(f"constel: resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ConstelError, OSError) as exc:
        print(f"constel: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(run())
