"""Command-line interface.

Subcommands: construct, invariants, classify, reliability, verify.
Exit codes: 0 on success or a passing verification, 1 on verification
failure, 2 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from math import comb

from .classify import classify, spectrum
from .errors import DomainError, FamilyDoesNotExist, SizeLimitError
from .families import (
    FamilyParams,
    FamilyTag,
    build_family,
    build_h_optimal,
    build_lmrttg,
    build_lmrttg_sparse,
)
from .graphs import TwoTerminalGraph, from_json, to_dot, to_json_obj
from .invariants import invariant_bundle
from .reliability import n_vector, reliability_at
from .scans import (
    ScanReport,
    band_bounds_report,
    band_decomposition_violations,
    brute_record,
    identity_suite,
    scan_tie_band,
    scan_uniqueness,
    sturm_report,
    verify_seven_pairs,
)


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True, default=str))


def _emit_report(report: ScanReport, fmt: str, meta: bool) -> int:
    if fmt == "json":
        _print_json(report.to_json_obj(meta=meta))
    else:
        print(report.to_markdown(), end="")
    return 0 if report.verdict else 1


def _parse_range(text: str) -> tuple:
    if ".." in text:
        lo, hi = text.split("..", 1)
    else:
        lo = hi = text
    return int(lo), int(hi)


def _cmd_construct(args) -> int:
    kind = args.family.lower()
    if kind == "h":
        _, g = build_h_optimal(args.n, args.m)
        obj = g
    elif kind == "g":
        obj = build_lmrttg(args.n, args.m)
    elif kind == "sparse":
        obj = build_lmrttg_sparse(args.n, args.m)
    else:
        obj = build_family(args.n, args.m, FamilyTag(kind))
    out = to_dot(obj) if args.format == "dot" else json.dumps(to_json_obj(obj), sort_keys=True)
    print(out, end="" if args.format == "dot" else "\n")
    return 0


def _load_graph(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return from_json(fh.read())


def _cmd_invariants(args) -> int:
    obj = _load_graph(args.graph)
    g = obj.graph if isinstance(obj, TwoTerminalGraph) else obj
    _print_json(invariant_bundle(g).__dict__)
    return 0


def _cmd_classify(args) -> int:
    n_lo, n_hi = _parse_range(args.n)
    rows = []
    for n in range(n_lo, n_hi + 1):
        sp = spectrum(n) if n >= 5 else None
        for m in range(comb(n, 2) + 1):
            pc = classify(n, m)
            if args.istar_only and pc.sign is not None and pc.sign.value != "=":
                continue
            fp = FamilyParams.from_nm(n, m)
            rows.append(
                {
                    "n": n,
                    "m": m,
                    "sign": str(pc.sign) if pc.sign else "",
                    "in_J": int(pc.in_J),
                    "k": fp.k,
                    "j": fp.j,
                    "kp": fp.kp,
                    "jp": fp.jp,
                    "k_n": sp.k if sp else "",
                    "q_n": str(sp.q) if sp else "",
                    "R_n": str(sp.r) if sp else "",
                }
            )
    if args.format == "json":
        _print_json(rows)
    else:
        print("n,m,sign,in_J,k,j,kp,jp,k_n,q_n,R_n")
        for r in rows:
            print(",".join(str(r[c]) for c in ("n", "m", "sign", "in_J", "k", "j", "kp", "jp", "k_n", "q_n", "R_n")))
    return 0


def _cmd_reliability(args) -> int:
    obj = _load_graph(args.graph)
    if not isinstance(obj, TwoTerminalGraph):
        raise DomainError("graph file must carry terminals for reliability evaluation")
    p = Fraction(args.at)
    value = reliability_at(obj, p)
    _print_json(
        {
            "at": str(p),
            "reliability": str(value),
            "n_vector": list(n_vector(obj)),
        }
    )
    return 0


def _default_jobs() -> int:
    return max(1, os.cpu_count() or 1)


def _cmd_verify(args) -> int:
    meta = not args.no_meta
    fmt = args.format
    sub = args.verify_cmd
    if sub in ("seven-pairs", "lemma7"):
        return _emit_report(verify_seven_pairs(), fmt, meta)
    if sub == "istar-scan":
        return _emit_report(scan_tie_band(args.from_n, args.to_n), fmt, meta)
    if sub == "theorem-main":
        report = scan_uniqueness(args.max_n, m_cap=args.m_cap, n_min=args.min_n, jobs=args.jobs)
        return _emit_report(report, fmt, meta)
    if sub == "brute":
        rec = brute_record(args.n, args.m, deep=args.deep)
        if not meta:
            rec.pop("elapsed", None)
        _print_json(rec)
        return 0 if rec["ok"] else 1
    if sub == "sturm":
        rep = sturm_report()
        _print_json(rep)
        ok = rep["roots_in_436_437"] == 1 and rep["roots_in_437_1e6"] == 0 and rep["sign_at_437"] > 0
        return 0 if ok else 1
    if sub == "identities":
        return _emit_report(identity_suite(seed=args.seed, samples=args.samples), fmt, meta)
    if sub == "bounds":
        report = band_bounds_report(args.from_n, args.to_n)
        violations = band_decomposition_violations(args.from_n, min(args.to_n, 200))
        if violations:
            report.verdict = False
            report.records.append({"check": "decomposition bounds", "violations": violations, "ok": False})
        return _emit_report(report, fmt, meta)
    # sub == "all"
    failures = 0
    for report in (
        verify_seven_pairs(),
        scan_tie_band(8, 436),
        identity_suite(seed=args.seed),
        band_bounds_report(8, 60),
    ):
        failures += _emit_report(report, fmt, meta)
    cap = {n: (12 if n >= 7 else None) for n in range(4, args.max_n + 1)}
    for n in range(4, args.max_n + 1):
        report = scan_uniqueness(n, m_cap=cap[n], n_min=n, jobs=args.jobs)
        failures += _emit_report(report, fmt, meta)
    rep = sturm_report()
    _print_json(rep)
    if not (rep["roots_in_436_437"] == 1 and rep["roots_in_437_1e6"] == 0 and rep["sign_at_437"] > 0):
        failures += 1
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lmrttg", description=__doc__)
    sub = parser.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("construct", help="build a family graph or an optimal graph")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--m", type=int, required=True)
    c.add_argument(
        "--family",
        required=True,
        choices=["c1", "c2", "c3", "s1", "s2", "s3", "h", "g", "sparse"],
        help="family tag, or h (optimal core) / g (optimal two-terminal graph)",
    )
    c.add_argument("--format", choices=["json", "dot"], default="json")
    c.set_defaults(func=_cmd_construct)

    i = sub.add_parser("invariants", help="exact invariants of a graph JSON file")
    i.add_argument("--graph", required=True)
    i.set_defaults(func=_cmd_invariants)

    k = sub.add_parser("classify", help="sign classification over a range of n")
    k.add_argument("--n", required=True, help="single value or range A..B")
    k.add_argument("--istar-only", action="store_true", help="only the tie rows")
    k.add_argument("--format", choices=["csv", "json"], default="csv")
    k.set_defaults(func=_cmd_classify)

    r = sub.add_parser("reliability", help="exact reliability of a two-terminal graph")
    r.add_argument("--graph", required=True)
    r.add_argument("--at", required=True, help='edge survival probability, e.g. "1/2"')
    r.set_defaults(func=_cmd_reliability)

    v = sub.add_parser("verify", help="verification scans")
    vsub = v.add_subparsers(dest="verify_cmd", required=True)

    def common(p):
        p.add_argument("--format", choices=["md", "json"], default="md")
        p.add_argument("--no-meta", action="store_true", help="omit timing for byte-stable output")
        p.set_defaults(func=_cmd_verify)

    common(vsub.add_parser("seven-pairs", aliases=["lemma7"], help="the seven exceptional tie pairs"))

    p = vsub.add_parser("istar-scan", help="central-band dominance scan")
    p.add_argument("--from", dest="from_n", type=int, default=8)
    p.add_argument("--to", dest="to_n", type=int, default=436)
    common(p)

    p = vsub.add_parser("theorem-main", help="brute-force uniqueness of the construction")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--min-n", type=int, default=4)
    p.add_argument("--m-cap", type=int, default=None)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    common(p)

    p = vsub.add_parser("brute", help="brute-force one (n, m) pair")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--deep", action="store_true", help="lift the default vertex bound")
    common(p)

    common(vsub.add_parser("sturm", help="root isolation for the dominance margin"))

    p = vsub.add_parser("identities", help="randomized exact identity suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1000)
    common(p)

    p = vsub.add_parser("bounds", help="polynomial bounds on the central band")
    p.add_argument("--from", dest="from_n", type=int, default=8)
    p.add_argument("--to", dest="to_n", type=int, default=60)
    common(p)

    p = vsub.add_parser("all", help="run every verification")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    common(p)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, FamilyDoesNotExist, SizeLimitError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
