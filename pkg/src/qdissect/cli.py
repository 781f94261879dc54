"""Command-line front end.

Exit codes: 0 success / verified, 1 verification failure, 2 usage or parse
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import congruence, oracle
from .expr import ParseError, evaluate, parse
from .identities import REGISTRY, run_identity
from .products import (GordonParams, overpartition_gf,
                       rrg_overpartition_product, s_gf)
from .report import SCHEMA_VERSION, reports_to_json
from .series import to_csv

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_params(text: str | None) -> dict[str, int]:
    if not text:
        return {}
    out = {}
    for item in text.split(","):
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise UsageError(f"bad parameter {item!r}; expected name=value")
        try:
            out[key.strip()] = int(value)
        except ValueError:
            raise UsageError(f"parameter {key.strip()} must be an integer, "
                             f"got {value!r}") from None
    return out


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


# -- expand ----------------------------------------------------------------

def cmd_expand(args) -> int:
    if (args.expr is None) == (args.sgf is None):
        raise UsageError("give exactly one of --expr or --sgf")
    if args.precision < 0:
        raise UsageError("--precision must be nonnegative")
    if args.sgf is not None:
        try:
            K, i = (int(x) for x in args.sgf.split(","))
        except ValueError:
            raise UsageError(f"--sgf expects K,i, got {args.sgf!r}") from None
        try:
            series = s_gf(K, i, args.precision)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if args.mod:
            series = series.reduce_mod(args.mod)
    else:
        expr = parse(args.expr, _parse_params(args.params))
        try:
            series = evaluate(expr, args.precision, args.mod)
        except ZeroDivisionError as exc:
            raise UsageError(f"cannot evaluate: {exc}") from None
    if args.format == "csv":
        sys.stdout.write(to_csv(series))
    else:
        start = min(series.min_exp, 0)
        doc = {
            "schema": SCHEMA_VERSION,
            "precision": series.precision,
            "min_exp": start,
            "coefficients": series.coefficients(start),
        }
        if series.modulus is not None:
            doc["modulus"] = series.modulus
        print(_dump(doc))
    return EXIT_OK


# -- verify ----------------------------------------------------------------

def cmd_verify(args) -> int:
    if args.identity not in REGISTRY:
        raise UsageError(f"unknown identity {args.identity!r}; known: "
                         f"{', '.join(REGISTRY)}")
    params = _parse_params(args.params)
    try:
        report = run_identity(args.identity, params, args.precision, args.mod)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(_dump(report.to_dict()))
    return EXIT_OK if report.verified else EXIT_FAIL


# -- oracle ----------------------------------------------------------------

def _oracle_rows(what: str, params: dict, n_max: int):
    N = n_max
    if what == "pbar":
        if params:
            raise UsageError("pbar takes no parameters")
        series = overpartition_gf(N)
        count = oracle.count_overpartitions
        key: dict = {}
    elif what in ("abar", "bbar"):
        try:
            p = GordonParams(params["k"], params["i"], params["j"])
        except KeyError as exc:
            raise UsageError(f"{what} needs k, i, j (missing {exc})") from None
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        series = rrg_overpartition_product(p, N)
        fn = oracle.count_A_bar if what == "abar" else oracle.count_B_bar
        count = lambda n: fn(p, n)  # noqa: E731
        key = {"k": p.k, "i": p.i, "j": p.j}
    elif what == "s":
        K = params.get("K", params.get("k"))
        i = params.get("i")
        if K is None or i is None:
            raise UsageError("s needs K and i")
        try:
            series = s_gf(K, i, N)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        count = lambda n: oracle.s_count(K, i, n)  # noqa: E731
        key = {"K": K, "i": i}
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown --what {what!r}")
    rows = []
    for n in range(n_max + 1):
        c = count(n)
        g = series.coeff(n)
        rows.append({**key, "n": n, "oracle": c, "series": g, "match": c == g})
    return key, rows


def cmd_oracle(args) -> int:
    if args.n_max < 0:
        raise UsageError("--n-max must be nonnegative")
    if args.n_max > oracle.DESK_SCALE:
        raise UsageError(f"--n-max {args.n_max} exceeds the enumeration cap "
                         f"{oracle.DESK_SCALE}")
    key, rows = _oracle_rows(args.what, _parse_params(args.params), args.n_max)
    if args.format == "json":
        print(_dump({"schema": SCHEMA_VERSION, "what": args.what, "rows": rows}))
    elif args.format == "csv":
        cols = list(key) + ["n", "count"]
        print(",".join(cols))
        for r in rows:
            print(",".join(str(r["oracle"] if c == "count" else r[c])
                           for c in cols))
    else:
        print(f"{'n':>4} {'oracle':>12} {'series':>12}  match")
        for r in rows:
            print(f"{r['n']:>4} {r['oracle']:>12} {r['series']:>12}  "
                  f"{'yes' if r['match'] else 'NO'}")
    return EXIT_OK if all(r["match"] for r in rows) else EXIT_FAIL


# -- suite / scan ----------------------------------------------------------

def _print_table(reports) -> None:
    width = max((len(r.identity_id) for r in reports), default=10)
    print(f"{'claim':<{width}}  {'source':<12} {'bound':>6}  status")
    for r in reports:
        line = (f"{r.identity_id:<{width}}  {r.params['source']:<12} "
                f"{r.n_max:>6}  {r.status}")
        if r.counterexample is not None:
            c = r.counterexample
            line += f" (n={c.n}: coefficient {c.coefficient} at q^{c.exponent})"
        print(line)
    bad = sum(not r.verified for r in reports)
    print(f"{len(reports) - bad}/{len(reports)} verified")


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from None


def cmd_suite(args) -> int:
    if args.n_max < 0:
        raise UsageError("--n-max must be nonnegative")
    reports = congruence.published_suite(args.k_max, args.n_max)
    if args.out:
        _write(args.out, reports_to_json(reports) + "\n")
    _print_table(reports)
    return EXIT_OK if all(r.verified for r in reports) else EXIT_FAIL


def cmd_scan(args) -> int:
    if args.d < 1 or args.mod < 2 or args.n_max < 0:
        raise UsageError("need --d >= 1, --mod >= 2, --n-max >= 0")
    found = congruence.scan(range(2, args.k_max + 1), None, args.d, args.mod,
                            args.n_max)
    published = [c for c in congruence.published_claims(args.k_max)
                 if c.family == "S" and c.m == args.mod]
    doc = {
        "schema": SCHEMA_VERSION,
        "d": args.d,
        "m": args.mod,
        "k_max": args.k_max,
        "n_max": args.n_max,
        "status": f"verified up to n={args.n_max}",
        "findings": [
            {**c.to_dict(), "label": c.label,
             "published": any(p.K == c.K and p.i == c.i and p.d == c.d
                              and p.a == c.a for p in published)}
            for c in found
        ],
    }
    if args.out:
        _write(args.out, _dump(doc) + "\n")
    if args.format == "json":
        print(_dump(doc))
    else:
        for f in doc["findings"]:
            mark = "" if f["published"] else "  (not in the published list)"
            print(f"{f['label']}  [verified up to n={args.n_max}]{mark}")
        print(f"{len(found)} progressions found")
    return EXIT_OK


# -- entry point -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdissect",
        description="Exact q-series expansion, identity checks and "
                    "overpartition congruence scans.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expand a q-expression or S_{K,i}")
    p.add_argument("--expr", help="expression text, e.g. 'F(2)/F(1)^2'")
    p.add_argument("--sgf", help="K,i for the S_{K,i} generating function")
    p.add_argument("--params", help="name=value,... bound inside --expr")
    p.add_argument("--precision", type=int, default=20)
    p.add_argument("--mod", type=int, default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="check a registered identity")
    p.add_argument("--identity", required=True,
                   help="one of: " + ", ".join(REGISTRY))
    p.add_argument("--params", help="e.g. i=1,k=5")
    p.add_argument("--precision", type=int, default=100)
    p.add_argument("--mod", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="compare enumeration with series")
    p.add_argument("--what", choices=("pbar", "abar", "bbar", "s"),
                   required=True)
    p.add_argument("--params", help="k=..,i=..,j=.. or K=..,i=..")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--format", choices=("table", "json", "csv"),
                   default="table")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("suite", help="check every published congruence")
    p.add_argument("--k-max", type=int, default=20)
    p.add_argument("--n-max", type=int, default=congruence.DEFAULT_N_MAX)
    p.add_argument("--out", help="write the JSON report array here")
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("scan", help="search for S(dn+a) = 0 mod m")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--k-max", type=int, default=20)
    p.add_argument("--n-max", type=int, default=congruence.DEFAULT_N_MAX)
    p.add_argument("--out", help="write the JSON findings here")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"qdissect: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"qdissect: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
