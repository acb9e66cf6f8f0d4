"""Command line interface: ``lislc {seq,check,inject,tw}``.

Exit codes: 0 every verdict passes, 1 some verdict fails, 2 usage error,
3 internal or solver error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Any, Sequence

from . import counting, injections, logconcave, tracywidom
from .partitions import Family

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

INJECT_LIMITS = {"hook": 12, "2row": 12, "lift": 7}


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    """``"7"`` or ``"1..50"`` (inclusive)."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"empty or nonpositive range {text!r}")
    return range(lo, hi + 1)


def _family(text: str) -> Family:
    try:
        return Family.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _emit(args, columns: Sequence[str], rows: list[dict[str, Any]], meta: dict[str, Any]) -> None:
    if args.format == "json":
        text = json.dumps({**meta, "rows": rows}, indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _ns(args) -> list[int]:
    # Even-only families skip odd n inside a range; a lone odd n is still an error.
    ns = list(args.n)
    if len(ns) > 1 and args.family.even_only:
        ns = [n for n in ns if n % 2 == 0]
    return ns


def _sequences(args, n: int) -> counting.CountSequence:
    return counting.count_seq(n, args.stat, args.family, args.jobs)


def cmd_seq(args) -> int:
    rows = []
    for n in _ns(args):
        seq = _sequences(args, n)
        rows += [{"n": n, "k": k, "value": str(v)} for k, v in enumerate(seq.values, start=1)]
    _emit(args, ("n", "k", "value"), rows, {"command": "seq", "stat": args.stat, "family": args.family.value})
    return EXIT_OK


def _check_rows(args) -> list[dict[str, Any]]:
    rows = []
    if args.mode == "qlogconvex":
        ns = list(args.n)
        if len(ns) < 3 or args.family.even_only:
            raise UsageError("qlogconvex needs at least three consecutive n and a family defined for all n")
        polys = {n: counting.gen_poly(_sequences(args, n)) for n in ns}
        for n in ns[1:-1]:
            res = logconcave.q_log_convex_step(polys[n - 1], polys[n], polys[n + 1])
            detail = "" if res.ok else f"negative coefficient of q^{res.index}"
            rows.append({"n": n, "verdict": "pass" if res.ok else "fail",
                         "detail": f"triple ({n - 1},{n},{n + 1}) {detail}".strip()})
        return rows
    for n in _ns(args):
        seq = _sequences(args, n)
        if args.mode == "logconcave":
            res = logconcave.is_log_concave(seq.values)
            detail = "" if res.ok else f"k={res.index}" + (" (internal zero)" if res.internal_zero else "")
            ok = res.ok
        elif args.mode == "infinite":
            rep = logconcave.certify_infinite_lc(seq.values, args.max_iter)
            ok, detail = rep.ok, str(rep)
        else:
            real, total = logconcave.real_root_counts(counting.gen_poly(seq))
            ok, detail = real == total, f"{real} of {total} distinct roots real"
        rows.append({"n": n, "verdict": "pass" if ok else "fail", "detail": detail})
    return rows


def cmd_check(args) -> int:
    rows = _check_rows(args)
    _emit(args, ("n", "verdict", "detail"), rows,
          {"command": "check", "mode": args.mode, "stat": args.stat, "family": args.family.value})
    return EXIT_OK if all(r["verdict"] == "pass" for r in rows) else EXIT_FAIL


def cmd_inject(args) -> int:
    kind = "lift" if args.lift else args.family
    limit = INJECT_LIMITS[kind]
    if max(args.n) > limit:
        raise UsageError(f"exhaustive {kind} verification is limited to n <= {limit}")
    family = "hook" if args.family == "hook" else "two-row"
    rows = []
    for n in args.n:
        for k in range(1, n + 1):
            if args.lift:
                rep = injections.verify_lifted(family, n, k)
            elif family == "hook":
                rep = injections.verify_hook(n, k)
            else:
                rep = injections.verify_tworow(n, k)
            rows.append({"n": n, "k": k, "domain": rep.domain_size, "image": rep.image_size,
                         "collisions": len(rep.collisions), "violations": len(rep.violations),
                         "verdict": "pass" if rep.clean else "fail"})
    _emit(args, ("n", "k", "domain", "image", "collisions", "violations", "verdict"), rows,
          {"command": "inject", "family": args.family, "lift": args.lift})
    return EXIT_OK if all(r["verdict"] == "pass" for r in rows) else EXIT_FAIL


def cmd_tw(args) -> int:
    table = tracywidom.integrate(args.x0, args.x_min, args.tol, args.dx)
    if table.truncated_at is not None:
        print(f"solver truncated at x={table.truncated_at:.6f}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            tracywidom.write_csv(table, fh)
    mom = tracywidom.moments(table)
    scan = tracywidom.scan_log_concavity(table, 0.0, table.x_max)
    concave = tracywidom.concave_on_nonnegative(scan)
    residual = float(abs(table.residual()).max())
    summary = {
        "command": "tw",
        "x_range": [table.x_min, table.x_max],
        "tol": args.tol,
        "mean": mom.mean,
        "variance": mom.variance,
        "mass": mom.mass,
        "tail_mass": mom.tail_mass,
        "max_residual": residual,
        "concave_on_nonnegative": concave,
        "max_logdd_nonnegative": max(p.value for p in scan),
    }
    sys.stdout.write(json.dumps(summary, indent=2) + "\n")
    return EXIT_OK if concave and residual <= 1e-8 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lislc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, family_default="all"):
        p.add_argument("--stat", choices=counting.STATS, default="ell")
        p.add_argument("--family", type=_family, default=Family.parse(family_default))
        p.add_argument("--n", type=parse_range, required=True, help="N or A..B")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", help="write output here instead of stdout")
        p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)

    p = sub.add_parser("seq", help="emit LIS count sequences")
    common(p)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("check", help="run log-concavity style checks over a range of n")
    p.add_argument("mode", choices=("logconcave", "infinite", "qlogconvex", "realrooted"))
    common(p)
    p.add_argument("--max-iter", type=int, default=logconcave.DEFAULT_MAX_ITERATIONS)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("inject", help="exhaustively verify the lattice-path injections")
    p.add_argument("--family", choices=("hook", "2row"), default="hook")
    p.add_argument("--lift", action="store_true", help="verify the lifted permutation injection")
    p.add_argument("--n", type=parse_range, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1, help="accepted for symmetry; runs sequentially")
    p.set_defaults(func=cmd_inject)

    p = sub.add_parser("tw", help="tabulate Tracy-Widom and summarise")
    p.add_argument("--tol", type=float, default=tracywidom.DEFAULT_TOL)
    p.add_argument("--x0", type=float, default=tracywidom.DEFAULT_X0)
    p.add_argument("--x-min", type=float, default=-10.0)
    p.add_argument("--dx", type=float, default=tracywidom.DEFAULT_DX)
    p.add_argument("--out", help="CSV table path")
    p.set_defaults(func=cmd_tw)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "tol", 1.0) <= 0:
        parser.error("--tol must be positive")
    try:
        return args.func(args)
    except (UsageError, ValueError) as e:
        print(f"lislc: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"lislc: I/O error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as e:  # pragma: no cover - last-resort guard
        print(f"lislc: internal error: {e!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
