"""The `dpa` command line.

Exit codes: 0 success, 1 mismatch or undecided, 2 invalid input.
"""
import argparse
import json
import os
import sys

from . import germ as germ_mod
from .field import format_rational
from .germ import germ_from_poly, germ_components, resolve_and_lct, classify_germ, newton_lct, NondegeneracyFailure
from .report import (ENGINE_ERRORS, run_classify, invariants_report, orbits_report, check_entry)
from .specfile import (SpecError, parse_spec, serialize_spec, catalog_keys, catalog_entry)
from .wpoly import ParseError


class InputError(Exception):
    pass


def load_spec(arg):
    """A catalog key or a path to a spec document."""
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            return parse_spec(fh.read())
    try:
        return catalog_entry(arg)
    except KeyError:
        raise InputError("%r is neither a file nor a catalog key (try `dpa catalog list`)" % arg)


def _emit(args, doc, text):
    if args.format == "machine":
        print(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


def _group_arg(args):
    return getattr(args, "subgroup", None) or getattr(args, "group", None)


# -------------------------------------------------------------------- commands

def cmd_classify(args):
    spec = load_spec(args.spec)
    doc, res = run_classify(spec, _group_arg(args), args.n_max)
    lines = ["%s [%s, %s]" % (spec.key, doc["group"], doc["label"] or ""), "  " + res.describe()]
    for k, v in sorted(doc["result"]["certificate"].items()):
        lines.append("  %s: %s" % (k, json.dumps(v, sort_keys=True, ensure_ascii=False)))
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_invariants(args):
    spec = load_spec(args.spec)
    doc = invariants_report(spec, n=args.n, degree=args.degree, group=_group_arg(args))
    where = "degree %s" % args.degree if args.degree is not None else "|-%dK|" % args.n
    lines = ["%s [%s]: invariant curves in %s" % (spec.key, doc["group"], where)]
    lines += ["  curve  %s = 0" % c for c in doc["curves"]]
    lines += ["  family <%s>" % ", ".join(f) for f in doc["families"]]
    if not doc["curves"] and not doc["families"]:
        lines.append("  none")
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_orbits(args):
    spec = load_spec(args.spec)
    doc = orbits_report(spec, args.k, group=_group_arg(args))
    lines = ["%s [%s]: orbits of length <= %d" % (spec.key, doc["group"], args.k)]
    for o in doc["orbits"]:
        lines.append("  length %d (stabilizer %d): %s" % (o["length"], o["stabilizer_order"],
                                                          ", ".join(o["points"])))
    for f in doc["fixed_curves"]:
        lines.append("  a subgroup of index %d fixes a curve pointwise" % f["index"])
    if len(lines) == 1:
        lines.append("  none")
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_germ_lct(args):
    try:
        g = germ_from_poly(args.poly)
        comps = germ_components(args.poly)
    except (ParseError, ValueError) as e:
        raise InputError(str(e))
    if not g.terms or g.value_at_origin():
        raise InputError("the germ must vanish at the origin and be nonzero")
    # non-reduced input is resolved as a divisor: reduced components with multiplicities
    value, trees = resolve_and_lct(comps)
    gt = classify_germ(g) if [k for _, k in comps] == [1] else "non-reduced"
    try:
        nl = format_rational(newton_lct(g))
    except NondegeneracyFailure as e:
        nl = "not applicable (%s)" % e
    doc = {"germ": args.poly, "lct": format_rational(value), "type": str(gt),
           "newton_lct": nl, "blowup_tree": trees[0].to_dict()}
    text = "lct = %s\ntype: %s\nnewton polygon: %s\nblow-ups: %d" % (
        doc["lct"], gt, nl, sum(1 for _ in _blowups(trees[0])))
    _emit(args, doc, text)
    return 0


def _blowups(node):
    if node.kind == "blowup":
        yield node
    for c in node.children:
        yield from _blowups(c)


def cmd_catalog(args):
    if args.action == "list":
        rows = []
        for k in catalog_keys():
            s = catalog_entry(k)
            rows.append({"key": k, "kind": s.kind, "label": s.label, "groups": list(s.groups)})
        text = "\n".join("%-14s %-13s %s  [%s]" % (r["key"], r["kind"], r["label"], ", ".join(r["groups"]))
                         for r in rows)
        _emit(args, rows, text)
        return 0
    if not args.key:
        raise InputError("catalog show needs a key")
    spec = load_spec(args.key)
    if args.format == "machine":
        print(json.dumps(spec.to_dict(), indent=2, sort_keys=True, ensure_ascii=False))
    else:
        sys.stdout.write(serialize_spec(spec))
    return 0


def cmd_verify_all(args):
    keys = args.keys or catalog_keys()
    checks = []
    for k in keys:
        checks.extend(check_entry(load_spec(k), args.n_max))
    bad = [c for c in checks if not c.ok]
    if args.format == "machine":
        print(json.dumps({"checks": [c.to_dict() for c in checks], "failures": len(bad)},
                         indent=2, sort_keys=True, ensure_ascii=False))
    else:
        for c in checks:
            print(c.line())
        print("%d checks, %d failed" % (len(checks), len(bad)))
    return 1 if bad else 0


# -------------------------------------------------------------------- parser

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--n-max", type=int, default=None, help="highest |-nK| level to scan")
    common.add_argument("--depth-cap", type=int, default=None, help="blow-ups allowed along one chain")

    p = argparse.ArgumentParser(prog="dpa",
                                description="Equivariant log canonical thresholds of del Pezzo surfaces.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="lct(X, G) with its certificate")
    c.add_argument("spec", help="catalog key or spec file")
    grp = c.add_mutually_exclusive_group()
    grp.add_argument("--group", help="group name in the spec document (default: the full automorphism group)")
    grp.add_argument("--subgroup", help="same as --group")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("invariants", parents=[common], help="invariant curves in |-nK|")
    c.add_argument("spec")
    how = c.add_mutually_exclusive_group(required=True)
    how.add_argument("-n", type=int)
    how.add_argument("--degree", type=int, help="plain degree (projective plane)")
    c.add_argument("--group")
    c.set_defaults(func=cmd_invariants)

    c = sub.add_parser("orbits", parents=[common], help="all orbits of length <= k")
    c.add_argument("spec")
    c.add_argument("-k", type=int, required=True)
    c.add_argument("--group")
    c.set_defaults(func=cmd_orbits)

    c = sub.add_parser("germ-lct", parents=[common], help="lct of a plane curve germ at the origin")
    c.add_argument("poly")
    c.set_defaults(func=cmd_germ_lct)

    c = sub.add_parser("catalog", parents=[common], help="list or show catalog entries")
    c.add_argument("action", choices=("list", "show"))
    c.add_argument("key", nargs="?")
    c.set_defaults(func=cmd_catalog)

    c = sub.add_parser("verify-all", parents=[common], help="check every catalog expectation")
    c.add_argument("keys", nargs="*")
    c.set_defaults(func=cmd_verify_all)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.depth_cap is not None:
        germ_mod.DEPTH_CAP = args.depth_cap
    try:
        return args.func(args)
    except (InputError, SpecError, ParseError) as e:
        print("dpa: error: %s" % e, file=sys.stderr)
        return 2
    except ENGINE_ERRORS as e:
        print("dpa: undecided: %s: %s" % (type(e).__name__, e), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
