"""Command-line frontend.

Subcommands: construct, stars, check, bound, verify, scan, closure.
graph6 flows on stdin/stdout so the tool composes with the usual graph
pipelines.  Exit codes: 0 success/verified, 2 argument error, 3 empty
domain, 4 budget exceeded, 5 verification failure (a theorem
contradiction, which would mean an implementation bug).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Iterable, Optional

from . import counts, search
from .canon import canonical_form
from .errors import (
    BudgetExceededError,
    EmptyDomainError,
    Graph6Error,
    ParameterError,
    PropertyDomainError,
)
from .graphs import Graph, build_g, build_h, graph6_decode, graph6_encode
from .properties import PropertySpec, bc_closure, chvatal_witness, has_property

EXIT_OK = 0
EXIT_ARGS = 2
EXIT_EMPTY_DOMAIN = 3
EXIT_BUDGET = 4
EXIT_VERIFY_FAIL = 5

VERIFY_CSV_COLUMNS = [
    "n", "ell_or_k", "d", "t", "property", "bound", "observed_max",
    "verdict", "extremal_count",
]

PROPERTY_CHOICES = [
    "hamiltonian", "traceable", "hamiltonian-connected",
    "k-edge-hamiltonian", "k-hamiltonian", "k-connected",
]


def _out_stream(path: Optional[str]):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def _write(path: Optional[str], text: str) -> None:
    stream, close = _out_stream(path)
    try:
        stream.write(text)
        if not text.endswith("\n"):
            stream.write("\n")
    finally:
        if close:
            stream.close()


def _read_graphs(arg: Optional[str]) -> list[Graph]:
    """graph6 lines from --graph or stdin (blank lines skipped)."""
    if arg is not None:
        return [graph6_decode(arg)]
    out = []
    for line in sys.stdin:
        line = line.strip()
        if line:
            out.append(graph6_decode(line))
    if not out:
        raise ParameterError("no graph6 input on stdin")
    return out


def _spec_from_name(name: str, k: Optional[int]) -> PropertySpec:
    kind = name.replace("-", "_")
    if kind in ("k_edge_hamiltonian", "k_hamiltonian", "k_connected"):
        if k is None:
            raise ParameterError(f"property {name} needs --k")
        return PropertySpec(kind, k)  # type: ignore[arg-type]
    if k is not None:
        raise ParameterError(f"property {name} takes no --k")
    return PropertySpec(kind)  # type: ignore[arg-type]


def _parse_range(text: str) -> tuple[int, int]:
    """'4:500' -> (4, 500); a bare number is a one-point range."""
    if ":" in text:
        lo_s, hi_s = text.split(":", 1)
        lo, hi = int(lo_s), int(hi_s)
    else:
        lo = hi = int(text)
    if lo > hi:
        raise ParameterError(f"empty range {text!r}")
    return lo, hi


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_construct(args: argparse.Namespace) -> int:
    if args.family == "G":
        if args.ell is None:
            raise ParameterError("family G needs -l/--ell")
        g = build_g(args.n, args.ell, args.i)
    else:
        if args.k is None:
            raise ParameterError("family H needs -k")
        g = build_h(args.n, args.k, args.i)
    _write(args.out, graph6_encode(g))
    return EXIT_OK


def cmd_stars(args: argparse.Namespace) -> int:
    lines = []
    for g in _read_graphs(args.graph):
        lines.append(str(counts.stars_from_degrees(
            (r.bit_count() for r in g.rows), args.t)))
    _write(args.out, "\n".join(lines))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    spec = _spec_from_name(args.property, args.k)
    results = []
    for g in _read_graphs(args.graph):
        verdict = has_property(g, spec)
        witness = chvatal_witness(g, spec)
        results.append({
            "n": g.n,
            "property": spec.label,
            "has_property": verdict,
            "witness": None if witness is None else {
                "i_star": witness.i_star,
                "low_cap": witness.low_cap,
                "low_count": witness.low_count,
                "high_count": witness.high_count,
            },
        })
    if args.format == "json":
        _write(args.out, json.dumps(results, indent=2))
    else:
        lines = []
        for r in results:
            w = r["witness"]
            wtext = ("no-witness" if w is None else
                     f"witness i*={w['i_star']} low<= {w['low_cap']} "
                     f"x{w['low_count']} high>={r['n'] - w['i_star']} x{w['high_count']}")
            lines.append(f"{str(r['has_property']).lower()} {wtext}")
        _write(args.out, "\n".join(lines))
    return EXIT_OK


def cmd_bound(args: argparse.Namespace) -> int:
    if args.which == "main":
        if args.ell is None:
            raise ParameterError("--main needs -l/--ell")
        b = counts.star_bound_g(args.n, args.ell, args.d, args.t)
        desc = counts.extremal_description(args.n, args.ell, args.d, args.t)
        payload = {
            "n": args.n, "ell": args.ell, "d": args.d, "t": args.t,
            "bound": b.value, "argmax": b.tag,
            "i_id": b.i_id, "i_i0": b.i_i0,
            "value_id": b.value_id, "value_i0": b.value_i0,
            "extremal": [
                {"kind": e.kind, "i": e.i, "labeled_count": e.labeled_count}
                for e in desc.entries
            ],
            "extremal_labeled_count": desc.labeled_count,
        }
    else:
        if args.k is None:
            raise ParameterError("--kconn needs -k")
        b = counts.star_bound_h(args.n, args.k, args.d, args.t)
        payload = {
            "n": args.n, "k": args.k, "d": args.d, "t": args.t,
            "bound": b.value, "argmax": b.tag,
            "i_id": b.i_id, "i_i0": b.i_i0,
            "value_id": b.value_id, "value_i0": b.value_i0,
        }
    if args.format == "json":
        _write(args.out, json.dumps(payload, indent=2))
    else:
        parts = [f"bound={payload['bound']}", f"argmax={payload['argmax']}"]
        if "extremal_labeled_count" in payload:
            parts.append(f"extremal_labeled_count={payload['extremal_labeled_count']}")
        _write(args.out, " ".join(parts))
    return EXIT_OK


def _verify_rows(sweeps: Iterable[search.LevelSweep]) -> list[dict]:
    rows = []
    for sweep in sweeps:
        for r in sweep.reports:
            rows.append(r.as_dict())
    return rows


def cmd_verify(args: argparse.Namespace) -> int:
    properties = None if args.all or not args.property else set(args.property)
    budget = args.budget
    if budget is None:
        env = os.environ.get("STAR_EXTREMAL_BUDGET")
        budget = float(env) if env else None
    incomplete = False
    try:
        sweeps = search.verify_sweep(
            n_lo=args.n_min, n_hi=args.n,
            properties=properties,
            kedge_max_n=args.kedge_max_n,
            kedge_max_k=args.kedge_max_k,
            budget_seconds=budget,
            workers=args.workers,
        )
    except BudgetExceededError as exc:
        sweeps = exc.partial  # type: ignore[attr-defined]
        incomplete = True
    rows = _verify_rows(sweeps)
    ok = all(s.all_ok for s in sweeps) and not incomplete
    if args.format == "json":
        payload = {
            "complete": not incomplete,
            "verified": ok,
            "witness_failures": [
                {"property": p, "degree_sequence": list(ds)}
                for s in sweeps for (p, ds) in s.witness_failures
            ],
            "cells": rows,
        }
        _write(args.out, json.dumps(payload, indent=2))
    else:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(VERIFY_CSV_COLUMNS)
        for r in rows:
            w.writerow([r["n"], r["ell_or_k"], r["d"], r["t"], r["property"],
                        r["bound"], r["observed_max"], r["verdict"],
                        r["extremal_count"]])
        if incomplete:
            buf.write("# INCOMPLETE: budget exceeded\n")
        _write(args.out, buf.getvalue())
    if incomplete:
        return EXIT_BUDGET
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def cmd_scan(args: argparse.Namespace) -> int:
    n_lo, n_hi = _parse_range(args.n)
    buf = io.StringIO()
    w = csv.writer(buf)
    if args.mode == "threshold":
        ell_lo, ell_hi = _parse_range(args.ell)
        if ell_lo != ell_hi:
            raise ParameterError("threshold scan takes a single ell")
        rows = counts.threshold_scan(n_lo, n_hi, ell_lo)
        if args.format == "json":
            payload = [
                {"n": r.n, "ell": r.ell, "t": r.t, "ordering": r.ordering,
                 "strict": r.strict, "predicted": r.predicted,
                 "consistent": r.consistent}
                for r in rows
            ]
            _write(args.out, json.dumps(payload, indent=2))
            return EXIT_OK
        w.writerow(["n", "ell", "t", "ordering", "strict", "predicted",
                    "consistent"])
        for r in rows:
            w.writerow([r.n, r.ell, r.t, r.ordering, r.strict,
                        r.predicted or "", "" if r.consistent is None else r.consistent])
    else:
        ell_lo, ell_hi = _parse_range(args.ell)
        result = counts.conjecture_scan(n_lo, n_hi, ell_lo, ell_hi)
        if args.format == "json":
            payload = {
                "rows": [{"n": r.n, "ell": r.ell, "t": r.t, "sign": r.sign}
                         for r in result.rows],
                "persistent_from": {str(k): v for k, v in
                                    sorted(result.persistent_from.items())},
            }
            _write(args.out, json.dumps(payload, indent=2))
            return EXIT_OK
        w.writerow(["n", "ell", "t", "sign"])
        for r in result.rows:
            w.writerow([r.n, r.ell, r.t, r.sign])
        for ell, n0 in sorted(result.persistent_from.items()):
            buf.write(f"# ell={ell} strict-from-n={'' if n0 is None else n0}\n")
    _write(args.out, buf.getvalue())
    return EXIT_OK


def cmd_closure(args: argparse.Namespace) -> int:
    lines = []
    for g in _read_graphs(args.graph):
        lines.append(graph6_encode(bc_closure(g, args.threshold)))
    _write(args.out, "\n".join(lines))
    return EXIT_OK


def cmd_canon(args: argparse.Namespace) -> int:
    lines = [canonical_form(g) for g in _read_graphs(args.graph)]
    _write(args.out, "\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="starextremal",
        description="Exact star-count bounds and brute-force verification "
                    "for graphs lacking hamiltonicity-type properties or "
                    "k-connectivity.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, fmt_default="csv"):
        sp.add_argument("--format", choices=["csv", "json", "text"],
                        default=fmt_default)
        sp.add_argument("--out", default=None, help="output path (default stdout)")

    sp = sub.add_parser("construct", help="emit a family member as graph6")
    sp.add_argument("--family", choices=["G", "H"], required=True)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-l", "--ell", type=int, default=None)
    sp.add_argument("-k", type=int, default=None)
    sp.add_argument("-i", type=int, required=True)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("stars", help="count t-stars of graph6 input")
    sp.add_argument("-t", type=int, required=True)
    sp.add_argument("--graph", default=None, help="single graph6 (else stdin)")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_stars)

    sp = sub.add_parser("check", help="decide a property and report the "
                                      "degree-condition witness")
    sp.add_argument("--property", choices=PROPERTY_CHOICES, required=True)
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--graph", default=None)
    add_common(sp, fmt_default="text")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("bound", help="closed-form star bound and extremal "
                                      "description")
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--main", dest="which", action="store_const", const="main")
    grp.add_argument("--kconn", dest="which", action="store_const", const="kconn")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-l", "--ell", type=int, default=None)
    sp.add_argument("-k", type=int, default=None)
    sp.add_argument("-d", type=int, required=True)
    sp.add_argument("-t", type=int, required=True)
    add_common(sp, fmt_default="text")
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("verify", help="brute-force verification sweep")
    sp.add_argument("-n", type=int, default=6, help="largest vertex count")
    sp.add_argument("--n-min", type=int, default=4)
    sp.add_argument("--all", action="store_true", help="all properties (default)")
    sp.add_argument("--property", action="append", choices=PROPERTY_CHOICES)
    sp.add_argument("--kedge-max-n", type=int, default=search.KEDGE_DEFAULT_MAX_N)
    sp.add_argument("--kedge-max-k", type=int, default=search.KEDGE_DEFAULT_MAX_K)
    sp.add_argument("--budget", type=float, default=None,
                    help="wall-clock seconds (default: STAR_EXTREMAL_BUDGET)")
    sp.add_argument("--workers", type=int, default=1)
    add_common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("scan", help="threshold table or conjecture evidence")
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--threshold", dest="mode", action="store_const",
                     const="threshold")
    grp.add_argument("--conjecture", dest="mode", action="store_const",
                     const="conjecture")
    sp.add_argument("-n", required=True, help="range lo:hi")
    sp.add_argument("-l", "--ell", required=True, help="ell or range lo:hi")
    sp.add_argument("--workers", type=int, default=1)
    add_common(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("closure", help="degree-threshold closure of graph6 input")
    sp.add_argument("--threshold", type=int, required=True)
    sp.add_argument("--graph", default=None)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_closure)

    sp = sub.add_parser("canon", help="canonical graph6 of graph6 input")
    sp.add_argument("--graph", default=None)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_canon)

    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EmptyDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY_DOMAIN
    except (ParameterError, PropertyDomainError, Graph6Error, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    raise SystemExit(main())
