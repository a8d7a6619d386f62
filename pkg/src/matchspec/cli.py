"""Command-line interface: analyze, construct, verify, thresholds.

Exit codes are a stable contract for CI: 0 = success/verified,
1 = a counterexample or violation was found, 2 = usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import enumeration, families, graphs, matching, spectral, theorems
from .enumeration import BuiltIn, File, sweep_theorem, verify_charpoly_identities, verify_lemma
from .theorems import TheoremId

FIXTURES_ENV = "MATCHSPEC_FIXTURES"
THRESHOLDS_SCHEMA = "matchspec/thresholds/1"
ANALYZE_SCHEMA = "matchspec/analyze/1"


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load_graph(args) -> graphs.Graph:
    text = _read_input(args.input)
    if args.format == "edgelist":
        return graphs.parse_edge_list_text(text)
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            return graphs.parse_graph6(line)
    raise ValueError("no graph found in input")


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------

def cmd_analyze(args) -> int:
    g = _load_graph(args)
    tol = args.tolerance
    doc: dict = {
        "schema": ANALYZE_SCHEMA,
        "graph6": graphs.to_graph6(g) if g.n <= 62 else None,
        "n": g.n,
        "m": g.m,
        "min_degree": graphs.min_degree(g) if g.n else None,
        "connected": graphs.is_connected(g) if g.n else None,
    }
    if g.n:
        sr = spectral.spectral_radius(g)
        doc["rho"] = sr.rho
        doc["rho_residual"] = sr.residual
        doc["matching_number"] = matching.matching_number(g)
        doc["has_perfect_matching"] = matching.has_perfect_matching(g)

    max_k = args.k or 1
    extendable = {}
    if g.n % 2 == 0 and g.n >= 2:
        for k in range(1, max_k + 1):
            if g.n < 2 * k + 2:
                extendable[k] = {"holds": False, "reason": "too-few-vertices",
                                 "agrees_with_criterion": None}
                continue
            direct = matching.is_k_extendable(g, k)
            entry = {"holds": direct.holds, "reason": direct.reason,
                     "agrees_with_criterion": None}
            if g.n <= matching.SUBSET_SCAN_CAP:
                chen = matching.is_k_extendable_chen(g, k)
                entry["agrees_with_criterion"] = chen.holds == direct.holds
            extendable[k] = entry
        doc["k_extendable"] = extendable
        direct = matching.is_1_excludable(g)
        entry = {"holds": direct.holds, "reason": direct.reason,
                 "agrees_with_criterion": None}
        if g.n <= matching.SUBSET_SCAN_CAP and doc.get("connected"):
            crit = matching.is_1_excludable_criterion(g)
            entry["agrees_with_criterion"] = crit.holds == direct.holds
        doc["one_excludable"] = entry
    else:
        doc["k_extendable"] = None  # undefined off even orders
        doc["one_excludable"] = None

    verdicts = {}
    if g.n % 2 == 0:
        candidates: list[TheoremId] = []
        for k in range(1, max_k + 1):
            if g.n >= 2 * k + 2:
                candidates.append(TheoremId("t11", k))
                candidates.append(TheoremId("t14", k))
        if g.n >= 6:
            candidates.append(TheoremId("t13"))
            candidates.append(TheoremId("t16"))
        for t in candidates:
            v = theorems.theorem_verdict(g, t, tolerance=tol)
            verdicts[str(t)] = {
                "hypothesis_met": v.hypothesis_met,
                "conclusion_met": v.conclusion_met,
                "is_listed_exception": v.is_listed_exception,
                "consistent": v.consistent,
                "threshold": v.threshold,
                "measured": v.measured,
                "recognized": list(v.recognized) if v.recognized else None,
            }
    doc["theorems"] = verdicts

    if args.out == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        _print_analysis(doc)
    return 0


def _print_analysis(doc: dict) -> None:
    print(f"graph6:           {doc['graph6']}")
    print(f"n, m:             {doc['n']}, {doc['m']}")
    print(f"min degree:       {doc['min_degree']}")
    print(f"connected:        {doc['connected']}")
    if "rho" in doc:
        print(f"rho:              {doc['rho']:.6f}  (residual {doc['rho_residual']:.1e})")
        print(f"matching number:  {doc['matching_number']}")
        print(f"perfect matching: {doc['has_perfect_matching']}")
    if doc.get("k_extendable") is None:
        print("k-extendable:     N/A (odd order)")
        print("1-excludable:     N/A (odd order)")
    else:
        for k, entry in doc["k_extendable"].items():
            agree = entry["agrees_with_criterion"]
            agree_txt = "" if agree is None else f"  [criterion agrees: {agree}]"
            print(f"{k}-extendable:     {entry['holds']}{agree_txt}")
        entry = doc["one_excludable"]
        agree = entry["agrees_with_criterion"]
        agree_txt = "" if agree is None else f"  [criterion agrees: {agree}]"
        print(f"1-excludable:     {entry['holds']}{agree_txt}")
    for name, v in doc["theorems"].items():
        if v["is_listed_exception"]:
            status = "listed exception"
        elif not v["hypothesis_met"]:
            status = "hypothesis not met"
        else:
            status = "conclusion holds" if v["conclusion_met"] else "COUNTEREXAMPLE"
        print(f"{name}:  threshold={_fmt(v['threshold'])} measured={_fmt(v['measured'])}"
              f" -> {status}")


def _fmt(x) -> str:
    return f"{x:.6f}" if isinstance(x, float) else str(x)


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------

def cmd_construct(args) -> int:
    text = args.family_opt if args.family_opt else args.family
    if not text:
        raise ValueError("no family specification given")
    spec = families.parse_family_text(text)
    g = families.build(spec)
    print(graphs.to_graph6(g))
    if args.edgelist:
        print(g.n)
        for u, v in g.edges():
            print(u, v)
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _source_for(args, n: int | None):
    if args.input:
        return File(args.input)
    if n is None:
        raise ValueError("either --n or --input is required")
    if n <= enumeration.ENUMERATION_CAP:
        return BuiltIn(n)
    fixtures = os.environ.get(FIXTURES_ENV)
    if fixtures:
        path = os.path.join(fixtures, f"connected_n{n}.g6")
        if os.path.exists(path):
            return File(path)
        raise ValueError(f"no fixture connected_n{n}.g6 under {FIXTURES_ENV}={fixtures}")
    raise ValueError(
        f"n={n} exceeds the built-in enumeration cap; pass --input FILE or set "
        f"{FIXTURES_ENV} to a directory containing connected_n{n}.g6")


def _parse_grid(text: str | None) -> dict:
    """Parse '--grid n=6..14,trials=200' into verifier options."""
    if not text:
        return {}
    options: dict = {}
    for item in text.split(","):
        if "=" not in item:
            raise ValueError(f"bad grid item {item!r} (expected key=value)")
        key, val = (p.strip() for p in item.split("=", 1))
        if ".." in val:
            lo, hi = (int(x) for x in val.split("..", 1))
            values = tuple(v for v in range(lo, hi + 1))
            if key == "n":
                options["n_values"] = tuple(v for v in values if v % 2 == 0)
            elif key == "l":
                options["l_values"] = tuple(v for v in values if v % 2 == 0)
            else:
                raise ValueError(f"ranges are only supported for n/l, not {key!r}")
        else:
            options[key] = int(val)
    return options


def cmd_verify(args) -> int:
    picked = sum(bool(x) for x in (args.theorem, args.lemma, args.charpolys))
    if picked != 1:
        raise ValueError("pick exactly one of --theorem, --lemma, --charpolys")

    if args.theorem:
        t = theorems.parse_theorem_token(args.theorem, args.k)
        source = _source_for(args, args.n)
        report = sweep_theorem(source, t, min_degree=args.min_degree,
                               jobs=args.jobs, tolerance=args.tolerance)
        _emit_sweep(report, args.out)
        return 0 if not report.counterexamples else 1

    if args.charpolys:
        report = verify_charpoly_identities(tol=args.tolerance)
    else:
        options = _parse_grid(args.grid)
        if args.input:
            lemma = args.lemma.lower()
            if lemma in ("l2.9", "l2.10"):
                src = File(args.input)
                n = graphs.parse_graph6(src.graph6_lines()[0]).n
                options.setdefault("n_values", (n,))
                options["sources"] = {n: src}
        report = verify_lemma(args.lemma, **options)
    _emit_lemma(report, args.out)
    return 0 if report.ok else 1


def _emit_sweep(report, out: str) -> None:
    if out == "json":
        print(report.to_json())
    elif out == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerows(report.csv_rows())
    else:
        print(f"theorem {report.theorem} over {report.source}"
              f" (min_degree={report.min_degree})")
        print(f"graphs scanned:    {report.graphs_scanned}")
        print(f"hypothesis met:    {report.hypothesis_count}")
        print(f"counterexamples:   {len(report.counterexamples)}")
        for g6 in report.counterexamples:
            print(f"  COUNTEREXAMPLE {g6}")
        print(f"exceptions found:  {len(report.exceptions_found)}")
        for g6, fam, params in report.exceptions_found:
            tag = f"{fam} {params}" if fam else "UNRECOGNIZED"
            print(f"  {g6}  ->  {tag}")
        print(f"wall time:         {report.wall_time:.3f}s")


def _emit_lemma(report, out: str) -> None:
    if out == "json":
        print(report.to_json())
    elif out == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["lemma", "instances", "violations", "max_equality_gap"])
        writer.writerow([report.lemma, report.instances, len(report.violations),
                         report.max_equality_gap])
        for v in report.violations:
            writer.writerow(["violation", v, "", ""])
    else:
        print(f"{report.lemma}: {report.instances} instances, "
              f"{len(report.violations)} violations "
              f"(gap {report.max_equality_gap:.4g}, {report.wall_time:.3f}s)")
        for nt in report.notes:
            print(f"  note: {nt}")
        for v in report.violations:
            print(f"  VIOLATION: {v}")


# ---------------------------------------------------------------------------
# thresholds
# ---------------------------------------------------------------------------

def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = (int(x) for x in text.split("..", 1))
    else:
        lo = hi = int(text)
    return lo, hi


def cmd_thresholds(args) -> int:
    lo, hi = _parse_range(args.n)
    if lo > hi:
        raise ValueError(f"empty order range {args.n!r}")
    k = args.k or 1
    rows = []
    for n in range(lo, hi + 1):
        if n % 2 or n < 2 * k + 2:
            continue
        row = {
            "n": n,
            "k": k,
            "size_extendable": theorems.size_threshold_extendable(n, k),
            "spectral_extendable": theorems.spectral_threshold_extendable(n, k),
            "size_excludable": theorems.size_threshold_excludable(n) if n >= 6 else None,
            "spectral_excludable":
                theorems.spectral_threshold_excludable(n) if n >= 6 else None,
        }
        rows.append(row)
    if not rows:
        raise ValueError(f"no even n >= {2 * k + 2} in range {args.n!r}")

    if args.out == "json":
        print(json.dumps({"schema": THRESHOLDS_SCHEMA, "rows": rows},
                         indent=2, sort_keys=True))
        return 0
    header = ["n", "k", "size_extendable", "spectral_extendable",
              "size_excludable", "spectral_excludable"]
    if args.out == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(header)
        for row in rows:
            writer.writerow([row[h] for h in header])
        return 0
    widths = [4, 3, 16, 20, 16, 20]
    print("".join(h.ljust(w) for h, w in zip(header, widths)))
    for row in rows:
        cells = []
        for h, w in zip(header, widths):
            val = row[h]
            if isinstance(val, float):
                cells.append(f"{val:.6f}".ljust(w))
            else:
                cells.append(str(val if val is not None else "-").ljust(w))
        print("".join(cells))
    return 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchspec",
        description="matching extension/exclusion thresholds and sweeps")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze a single graph")
    p.add_argument("--input", default="-", help="path or '-' for stdin")
    p.add_argument("--format", choices=("g6", "edgelist"), default="g6")
    p.add_argument("--k", type=int, default=1,
                   help="check k-extendability for k=1..K")
    p.add_argument("--out", choices=("text", "json"), default="text")
    p.add_argument("--tolerance", type=float, default=theorems.SPECTRAL_TOL)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="build a named or textual family")
    p.add_argument("family", nargs="?", default=None,
                   help="e.g. 'thm13-f2', 'w2:n=10', 'K(2) v (K(3) u K1)'")
    p.add_argument("--family", dest="family_opt", default=None,
                   help="alternative to the positional form")
    p.add_argument("--edgelist", action="store_true",
                   help="also print the edge-list form")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run a sweep or a lemma/identity suite")
    p.add_argument("--theorem", help="t11, t13, t14, t16 (aliases c12, c15)")
    p.add_argument("--lemma", help="l2.1, l2.2, l2.4, l2.5, l2.8, l2.9, l2.10, l2.11")
    p.add_argument("--charpolys", action="store_true",
                   help="check the displayed quotient polynomial formulas")
    p.add_argument("--k", type=int, help="k for t11/t14")
    p.add_argument("--n", type=int, help="order for built-in/fixture sources")
    p.add_argument("--input", help="graph6 file source")
    p.add_argument("--min-degree", type=int, default=None)
    p.add_argument("--grid", help="e.g. 'n=6..14' or 'trials=200,seed=7'")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", choices=("text", "json", "csv"), default="text")
    p.add_argument("--tolerance", type=float, default=theorems.SPECTRAL_TOL)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("thresholds", help="tabulate size/spectral thresholds")
    p.add_argument("--n", required=True, help="order or range, e.g. 6..12")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--out", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_thresholds)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) is not None and getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be >= 1")
    if getattr(args, "tolerance", 1.0) <= 0:
        parser.error("--tolerance must be positive")
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
