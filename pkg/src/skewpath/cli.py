"""Command-line entry point.

Every subcommand is a thin adapter over library calls.  JSON output is
compact, key order is fixed by construction, and big integers are emitted as
decimal strings.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import checks, closed_forms, height, levels, oeis, paths, sampler
from .errors import SkewPathError


def _dumps(payload) -> str:
    return json.dumps(payload, separators=(",", ":"))


def _csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def cmd_count(args) -> int:
    value = closed_forms.s_coefficient(args.n)
    payload = {"n": args.n, "count": str(value)}
    status = 0
    if args.oracle:
        brute = paths.count_paths(args.n)
        payload["oracle"] = str(brute)
        payload["agree"] = brute == value
        status = 0 if brute == value else 1
    if args.format == "plain":
        _emit(str(value))
    else:
        _emit(_dumps(payload))
    return status


def _series_of(which: str, terms: int) -> list[int]:
    if which == "s":
        return closed_forms.s_series(terms).integers()
    if which == "total0":
        return levels.level_total_closed(0, terms).integers()
    f, g, h = levels.level_closed(0, terms)
    return {"f0": f, "g0": g, "h0": h}[which].integers()


def cmd_series(args) -> int:
    coeffs = _series_of(args.of, args.terms)
    if args.format == "csv":
        _emit(_csv(["k", "coeff"], enumerate(coeffs)))
    elif args.format == "plain":
        _emit(" ".join(str(c) for c in coeffs))
    else:
        _emit(_dumps({"of": args.of, "terms": args.terms, "coeffs": [str(c) for c in coeffs]}))
    return 0


def cmd_height(args) -> int:
    if args.dist is not None:
        dist = height.height_distribution(args.dist)
        if args.format == "csv":
            _emit(_csv(["height", "count"], sorted(dist.counts.items())))
        else:
            counts = {str(h): str(c) for h, c in sorted(dist.counts.items())}
            _emit(_dumps({"n": dist.n, "counts": counts, "total": str(dist.total)}))
        return 0
    ns = [args.average] if args.average is not None else [int(x) for x in args.compare.split(",") if x]
    rows = []
    for n in ns:
        exact = height.average_height_exact(n)
        asym = height.average_height_asymptotic(n)
        rows.append(
            {
                "n": n,
                "exact": f"{exact.numerator}/{exact.denominator}",
                "exact_float": float(exact),
                "asymptotic": asym,
                "ratio": float(exact) / asym,
                "refined_ratio": float(exact) / height.average_height_refined(n),
            }
        )
    if args.format == "csv":
        keys = list(rows[0])
        _emit(_csv(keys, [[r[k] for k in keys] for r in rows]))
    elif args.average is not None:
        _emit(_dumps(rows[0]))
    else:
        _emit(_dumps({"rows": rows}))
    return 0


def cmd_levels(args) -> int:
    table = levels.level_dp(args.order, level_cutoff=args.cutoff)
    rows = []
    for length in range(args.order):
        for i in range(min(length, table.max_level) + 1):
            f, g, h = (int(s[length]) for s in (table.f(i), table.g(i), table.h(i)))
            rows.append((length, i, f, g, h, f + g + h))
    header = ["length", "level", "f", "g", "h", "total"]
    if args.format == "json":
        _emit(_dumps({"order": args.order, "cutoff": args.cutoff, "rows": [dict(zip(header, map(str, r))) for r in rows]}))
    else:
        _emit(_csv(header, rows))
    return 0


def cmd_truncate(args) -> int:
    k, n = args.K, args.order
    g_cramer, h_cramer = levels.truncated_solution(k, n)
    g_cf = levels.continued_fraction_g0(k, n)
    g_dp = levels.level_dp(n, level_cutoff=k).g(0)
    h_dp = levels.level_dp(n, level_cutoff=k + levels.H_TRUNCATION_OFFSET).h(0)
    verdict = {
        "g0_cramer_eq_continued_fraction": g_cramer == g_cf,
        "h0_cramer_eq_dp_cap_K_plus_2": h_cramer == h_dp,
        "g0_cramer_eq_dp_cap_K": g_cramer == g_dp,
    }

    def strs(s):
        return [str(c) for c in s.integers()]

    payload = {
        "K": k,
        "order": n,
        "g0": {"cramer": strs(g_cramer), "continued_fraction": strs(g_cf), "dp_cap_K": strs(g_dp)},
        "h0": {"cramer": strs(h_cramer), "dp_cap_K_plus_2": strs(h_dp)},
        "verdict": verdict,
        "consistent": verdict["g0_cramer_eq_continued_fraction"] and verdict["h0_cramer_eq_dp_cap_K_plus_2"],
    }
    _emit(_dumps(payload))
    return 0 if payload["consistent"] else 1


def cmd_sample(args) -> int:
    stats = sampler.empirical_height_stats(args.n, args.trials, args.seed)
    payload = {
        "n": args.n,
        "trials": args.trials,
        "seed": args.seed,
        "rng": sampler.RNG_ALGORITHM,
        "mean": stats.mean,
        "stderr": stats.stderr,
        "exact_mean": float(height.average_height_exact(args.n)) if args.n >= 1 else 0.0,
        "histogram": {str(h): c for h, c in stats.histogram.items()},
    }
    if args.emit_paths:
        payload["paths"] = [str(p) for p in sampler.sample_paths(args.n, args.trials, args.seed)]
    _emit(_dumps(payload))
    return 0


def cmd_check(args) -> int:
    if args.all:
        report = checks.run_all(args.order)
    else:
        try:
            report = checks.run_check(args.id, args.order)
        except KeyError:
            names = sorted([*checks.CHECKS, *checks.KNOWN_FALSE])
            sys.stderr.write(f"unknown check {args.id!r}; choose from {', '.join(names)}\n")
            return 2
    if args.format == "plain":
        parts = report.parts or [report]
        for p in parts:
            _emit(f"{'PASS' if p.passed else 'FAIL'} {p.name} {p.detail}".rstrip())
    else:
        _emit(_dumps(report.as_dict()))
    return 0 if report.passed else 1


def cmd_oeis_verify(args) -> int:
    report = oeis.verify_sequence(
        args.id,
        args.upto,
        generator=args.generator,
        fixture=args.offline,
        offline=args.offline is not None,
    )
    _emit(_dumps(report.as_dict()))
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewpath", description="Skew Dyck paths with two down-step colours.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of paths of semilength n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="also enumerate by brute force and compare")
    p.add_argument("--format", choices=["json", "plain"], default="json")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("series", help="coefficients of a generating function")
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--of", choices=["s", "f0", "g0", "h0", "total0"], default="s")
    p.add_argument("--format", choices=["json", "csv", "plain"], default="json")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("height", help="height distribution and averages")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--dist", type=int, metavar="N")
    grp.add_argument("--average", type=int, metavar="N")
    grp.add_argument("--compare", metavar="N1,N2,...")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_height)

    p = sub.add_parser("levels", help="prefix counts by length, level and last step")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--cutoff", type=int)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_levels)

    p = sub.add_parser("truncate", help="truncated-system solutions g0^[K], h0^[K]")
    p.add_argument("--K", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_truncate)

    p = sub.add_parser("sample", help="uniform random paths and height statistics")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--emit-paths", action="store_true")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("check", help="run identity checks")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--all", action="store_true")
    grp.add_argument("--id", metavar="CHECK")
    p.add_argument("--order", type=int, default=24)
    p.add_argument("--format", choices=["json", "plain"], default="json")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oeis-verify", help="compare a local sequence with an OEIS b-file")
    p.add_argument("--id", required=True)
    p.add_argument("--upto", type=int, required=True)
    p.add_argument("--offline", metavar="FIXTURE", help="read this fixture instead of the network")
    p.add_argument("--generator", default="s", help="s | height:<h> | level:<f|g|h|total>:<i>")
    p.set_defaults(func=cmd_oeis_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SkewPathError as exc:
        _emit(_dumps({"error": type(exc).__name__, "message": str(exc)}))
        return 1
    except ValueError as exc:
        sys.stderr.write(f"skewpath: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
