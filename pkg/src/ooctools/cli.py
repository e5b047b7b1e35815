"""Command-line front end.

Exit status: 0 success, 1 domain failure (violation, inequivalent,
infeasible), 2 usage or format error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import documents as docs
from ._accel import BACKEND
from .bounds import bound_report
from .constructions import RECIPES, construct
from .conversions import (
    cwcpc_to_ooc,
    cyclic_closure,
    ooc_to_cwcpc,
    ooc_to_packing,
    packing_to_ooc,
    packing_violations,
)
from .core import (
    OocError,
    are_equivalent,
    auto_profile,
    canonical_form,
    cross_profile,
    is_nondegenerate,
    properness,
    verify_ooc,
)
from .search import phi_search

OK, FAIL, USAGE = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise docs.DocumentError(f"cannot read {path}: {exc}") from exc


def _load_family(path: str):
    return docs.family_from_doc(docs.loads(_read(path)))


def _emit(doc, args, bits_of=None) -> None:
    text = docs.dumps(doc)
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    # bitstrings go to stderr so stdout stays a parseable document
    if getattr(args, "bits", False) and bits_of is not None:
        for c in bits_of:
            print(c.bits, file=sys.stderr)


def _checked_family_doc(f, meta, la=None, lc=None):
    """Serialise, re-parse and re-verify before emission."""
    doc = docs.family_to_doc(f, meta)
    again, _ = docs.family_from_doc(docs.loads(docs.dumps(doc)))
    if again.codewords != f.codewords:
        raise RuntimeError("family document did not round-trip")
    if la is not None and not verify_ooc(again, la, lc):
        raise RuntimeError("emitted family fails verification")
    return doc


def cmd_verify(args) -> int:
    f, meta = _load_family(args.input)
    la = args.la if args.la is not None else meta.get("lambda_a", f.lambda_a)
    lc = args.lc if args.lc is not None else meta.get("lambda_c", f.lambda_c)
    report = verify_ooc(f, la, lc)
    result = {
        "ok": report.ok,
        "v": f.v,
        "w": f.w,
        "lambda_a": f.lambda_a,
        "lambda_c": f.lambda_c,
        "n": f.n,
        "checked": [la, lc],
        "nondegenerate": is_nondegenerate(f),
    }
    if report.ok:
        result["proper"] = list(properness(f, la, lc))
    else:
        result["violations"] = [str(x) for x in report.violations]
    if args.json:
        print(json.dumps(result))
    else:
        status = "ok" if report.ok else "VIOLATION"
        print(f"{status}: ({f.v},{f.w},{la},{lc})-OOC check, N={f.n}")
        print(f"measured lambda_a={f.lambda_a} lambda_c={f.lambda_c}")
        if report.ok:
            a, c = result["proper"]
            print(f"a-proper={a} c-proper={c} non-degenerate={result['nondegenerate']}")
        for line in result.get("violations", [])[:20]:
            print("  " + line)
    if args.bits:
        for c in f.codewords:
            print(c.bits)
    return OK if report.ok else FAIL


def cmd_profile(args) -> int:
    f, _ = _load_family(args.input)
    autos = [list(auto_profile(c)) for c in f.codewords]
    crosses = {
        f"{i},{j}": list(cross_profile(f[i], f[j])) for i in range(f.n) for j in range(i + 1, f.n)
    }
    if args.json:
        print(json.dumps({"auto": autos, "cross": crosses}))
        return OK
    for i, prof in enumerate(autos):
        label = f[i].bits if args.bits else str(f[i])
        print(f"auto  {i} {label}: " + " ".join(map(str, prof)) + "   (shifts 1..v-1)")
    for key, prof in crosses.items():
        print(f"cross {key}: " + " ".join(map(str, prof)) + "   (shifts 0..v-1)")
    return OK


def cmd_bounds(args) -> int:
    rep = bound_report(args.v, args.w, args.la, args.lc)
    ints = rep.integer_forms()
    rows = [
        ("johnson", rep.johnson),
        ("yang_fuja", rep.yang_fuja),
        ("gv_lower", rep.gv_lower),
        ("csw_lower", rep.csw_lower),
        ("fm_lower", rep.fm_lower),
        ("lambda_a_min", rep.lambda_a_min),
        ("lambda_c_min", rep.lambda_c_min),
    ]
    if args.json:
        out = {name: docs.fraction_str(val) for name, val in rows}
        out["integer"] = ints
        out["notes"] = rep.notes
        out["params"] = list(rep.params)
        print(json.dumps(out))
        return OK
    print(f"bounds for (v, w, lambda_a, lambda_c) = {rep.params}")
    for name, val in rows:
        if val is None:
            print(f"{name:13s} {rep.notes.get(name, 'inapplicable')}")
        else:
            print(f"{name:13s} {docs.fraction_str(val):>12s}   integer form {ints[name]}")
    return OK


def cmd_construct(args) -> int:
    f = construct(args.family, *args.params)
    meta = {
        "source": f"construct {args.family} {' '.join(map(str, args.params))}",
        "lambda_a": f.lambda_a,
        "lambda_c": f.lambda_c,
    }
    _emit(_checked_family_doc(f, meta, f.lambda_a, f.lambda_c), args, f.codewords)
    return OK


def cmd_search(args) -> int:
    res = phi_search(
        args.v,
        args.w,
        args.la,
        args.lc,
        budget=args.budget,
        use_johnson=not args.no_johnson,
        include_short=args.include_short,
    )
    if res.witness is None:
        print(f"no ({args.v},{args.w},{args.la},{args.lc})-OOC codeword exists", file=sys.stderr)
        return FAIL
    meta = {
        "source": f"search {args.v} {args.w} {args.la} {args.lc}",
        "lambda_a": args.la,
        "lambda_c": args.lc,
        "size": res.size,
        "exhaustive": res.exhaustive,
        "nodes": res.nodes,
        "backend": res.backend,
    }
    _emit(_checked_family_doc(res.witness, meta, args.la, args.lc), args, res.witness.codewords)
    return OK


def cmd_convert(args) -> int:
    raw = docs.loads(_read(args.input))
    if args.kind == "packing":
        f, _ = docs.family_from_doc(raw)
        p = ooc_to_packing(f, args.t)
        doc = docs.packing_to_doc(p)
        back = docs.packing_from_doc(docs.loads(docs.dumps(doc)))
        if packing_violations(back.v, back.t, 1, back.blocks):
            raise RuntimeError("emitted packing fails verification")
    elif args.kind == "family":
        p = docs.packing_from_doc(raw)
        f = packing_to_ooc(p)
        doc = _checked_family_doc(f, {"source": "packing base blocks"}, p.t - 1, p.t - 1)
    elif args.kind == "cwcpc":
        f, _ = docs.family_from_doc(raw)
        doc = docs.code_to_doc(ooc_to_cwcpc(f))
    elif args.kind == "closure":
        f, _ = docs.family_from_doc(raw)
        doc = docs.code_to_doc(cyclic_closure(f))
    elif args.kind == "ooc":
        res = cwcpc_to_ooc(docs.code_from_doc(raw))
        doc = _checked_family_doc(
            res.family, {"lambda_a": res.lambda_a, "lambda_c": res.lambda_c}, res.lambda_a, res.lambda_c
        )
    else:  # pragma: no cover - argparse restricts choices
        raise OocError(f"unknown conversion {args.kind}")
    _emit(doc, args)
    return OK


def cmd_canonical(args) -> int:
    f, meta = _load_family(args.input)
    g = canonical_form(f)
    _emit(_checked_family_doc(g, {**meta, "canonical": True}, f.lambda_a, f.lambda_c), args, g.codewords)
    return OK


def cmd_equivalent(args) -> int:
    f, _ = _load_family(args.input)
    g, _ = _load_family(args.other)
    same = are_equivalent(f, g)
    if args.json:
        print(json.dumps({"equivalent": same}))
    else:
        print("equivalent" if same else "not equivalent")
    return OK if same else FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ooctools", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, inp=True):
        if inp:
            p.add_argument("--input", default="-", help="family document (default stdin)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--bits", action="store_true", help="also print codewords as bitstrings")

    p = sub.add_parser("verify", help="check a family against (lambda_a, lambda_c)")
    common(p)
    p.add_argument("--la", type=int)
    p.add_argument("--lc", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("profile", help="print auto and cross correlation profiles")
    common(p)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("bounds", help="exact bounds for (v, w, lambda_a, lambda_c)")
    common(p, inp=False)
    for name in ("v", "w"):
        p.add_argument(name, type=int)
    p.add_argument("la", type=int, nargs="?")
    p.add_argument("lc", type=int, nargs="?")
    p.add_argument("--la", dest="la_opt", type=int)
    p.add_argument("--lc", dest="lc_opt", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("construct", help="build a named family")
    common(p, inp=False)
    p.add_argument("family", choices=sorted(RECIPES))
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="exact maximum-clique search")
    common(p, inp=False)
    for name in ("v", "w"):
        p.add_argument(name, type=int)
    p.add_argument("la", type=int, nargs="?")
    p.add_argument("lc", type=int, nargs="?")
    p.add_argument("--la", dest="la_opt", type=int)
    p.add_argument("--lc", dest="lc_opt", type=int)
    p.add_argument("--budget", type=float, help="soft time limit in seconds")
    p.add_argument("--no-johnson", action="store_true", help="do not stop early at the Johnson bound")
    p.add_argument("--include-short", action="store_true", help="admit periodic codewords")
    p.add_argument("--output")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("convert", help="convert to or from a neighbouring object")
    common(p)
    p.add_argument("kind", choices=["packing", "family", "cwcpc", "closure", "ooc"])
    p.add_argument("--t", type=int, default=2, help="packing strength")
    p.add_argument("--output")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("canonical", help="multiplier-equivalence canonical form")
    common(p)
    p.add_argument("--output")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("equivalent", help="test multiplier equivalence of two families")
    common(p)
    p.add_argument("--other", required=True, help="second family document")
    p.set_defaults(func=cmd_equivalent)
    return parser


def _resolve_lambdas(parser, args) -> None:
    if args.command not in ("bounds", "search"):
        return
    la = args.la if args.la is not None else args.la_opt
    lc = args.lc if args.lc is not None else args.lc_opt
    if la is None or lc is None:
        parser.error(f"{args.command} needs lambda_a and lambda_c")
    args.la, args.lc = la, lc


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    _resolve_lambdas(parser, args)
    try:
        return args.func(args)
    except docs.DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except OocError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL


if __name__ == "__main__":
    sys.exit(main())
