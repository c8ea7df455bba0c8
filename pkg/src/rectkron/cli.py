"""Command-line front end: ``rectkron <subcommand> ...``.

Partitions are written as comma-separated parts without spaces (``3,1``);
the empty string is the empty partition.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import stable, symchar
from .coeffs import kronecker, lr, rectangular_kron
from .errors import RectKronError, SizeMismatchError
from .partitions import Partition
from .verify import (
    check_e3,
    check_e4,
    check_e5,
    check_stabilization,
    check_symmetry_monotonicity,
    run_suite,
    summarize,
)

FORMATS = ("text", "json", "csv")


@dataclass
class CliConfig:
    cache_dir: Optional[Path]
    output_format: str = "text"
    max_table_m: int = symchar.DEFAULT_MAX_TABLE_M
    max_brute_m: int = stable.DEFAULT_MAX_BRUTE_M
    workers: int = 1

    def apply(self) -> None:
        if self.max_table_m <= 0 or self.max_brute_m <= 0 or self.workers <= 0:
            raise ValueError("ceilings and worker count must be positive")
        symchar.configure(
            cache_dir=self.cache_dir, max_table_m=self.max_table_m, workers=self.workers
        )
        stable.max_brute_m = self.max_brute_m


def partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid partition {text!r}: {exc}") from None


def nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def pos_int(text: str) -> int:
    value = nonneg_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, so parse + re-dump reproduces the bytes."""
    return json.dumps(obj, sort_keys=True)


def _emit_value(cfg: CliConfig, name: str, value: int, extra: Optional[dict] = None) -> str:
    extra = extra or {}
    if cfg.output_format == "json":
        return dumps({**extra, name: str(value)})
    if cfg.output_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(list(extra) + [name])
        writer.writerow([str(v) for v in extra.values()] + [value])
        return buf.getvalue().rstrip("\n")
    return str(value)


# -- subcommands -------------------------------------------------------------


def cmd_kron(args, cfg, parser) -> int:
    lam, mu, nu = args.lam, args.mu, args.nu
    if not lam.size == mu.size == nu.size:
        parser.error(
            f"size mismatch: |--lambda|={lam.size}, |--mu|={mu.size}, |--nu|={nu.size}"
        )
    value = kronecker(lam, mu, nu)
    print(_emit_value(cfg, "kronecker", value, {"lambda": str(lam), "mu": str(mu), "nu": str(nu)}))
    return 0


def cmd_lr(args, cfg, parser) -> int:
    value = lr(args.lam, args.alpha, args.beta)
    extra = {"lambda": str(args.lam), "alpha": str(args.alpha), "beta": str(args.beta)}
    print(_emit_value(cfg, "lr", value, extra))
    return 0


def cmd_rect(args, cfg, parser) -> int:
    try:
        value = rectangular_kron(args.rho, args.d, args.n)
    except ValueError as exc:
        parser.error(str(exc))
    print(_emit_value(cfg, "k", value, {"rho": str(args.rho), "d": args.d, "n": args.n}))
    return 0


def cmd_stable(args, cfg, parser) -> int:
    if args.n is None:
        value = stable.limit_in_dn(args.rho)
        extra = {"rho": str(args.rho)}
    else:
        value = stable.sl_invariant_dim(args.rho, args.n)
        extra = {"rho": str(args.rho), "n": args.n}
    print(_emit_value(cfg, "k", value, extra))
    return 0


def cmd_derangements(args, cfg, parser) -> int:
    ms = range(args.m, args.m + 1) if args.upto is None else range(args.m, args.upto + 1)
    rows = [(m, stable.derangement_count(m)) for m in ms]
    if cfg.output_format == "json":
        print(dumps({str(m): str(v) for m, v in rows}))
    elif cfg.output_format == "csv":
        print("m,D")
        for m, v in rows:
            print(f"{m},{v}")
    else:
        for m, v in rows:
            print(f"D_{m} = {v}")
    return 0


def format_table(rows, fmt: str, paper_diff: bool) -> str:
    if fmt == "json":
        out = []
        for row in rows:
            item = {
                "m": row.m,
                "values": {str(rho): str(k) for rho, k in row.values.items()},
                "D": str(row.derangement_total),
                "consistency_ok": row.consistency_ok,
            }
            if paper_diff:
                item["paper"] = {str(rho): str(k) for rho, k in row.paper_values.items()}
                if row.m in stable.PAPER_DERANGEMENTS:
                    item["paper_D"] = str(stable.PAPER_DERANGEMENTS[row.m])
                item["discrepancies"] = [str(rho) for rho in row.discrepancies]
                item["evidence"] = row.evidence
            out.append(item)
        return dumps(out)

    records = []
    for row in rows:
        for rho, k in row.values.items():
            rec = {"m": row.m, "rho": str(rho), "k": k}
            if paper_diff:
                printed = row.paper_values.get(rho)
                rec["paper"] = "" if printed is None else printed
                rec["flag"] = "DISCREPANCY" if rho in row.discrepancies else ""
            records.append(rec)
        rec = {"m": row.m, "rho": "D", "k": row.derangement_total}
        if paper_diff:
            rec["paper"] = stable.PAPER_DERANGEMENTS.get(row.m, "")
            rec["flag"] = ""
        records.append(rec)

    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(records[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
        return buf.getvalue().rstrip("\n")

    cols = list(records[0])
    widths = {c: max(len(c), *(len(str(r[c])) for r in records)) for c in cols}
    lines = ["  ".join(c.ljust(widths[c]) for c in cols).rstrip()]
    for r in records:
        lines.append("  ".join(str(r[c]).ljust(widths[c]) for c in cols).rstrip())
    for row in rows:
        flag = "ok" if row.consistency_ok else "FAILED"
        lines.append(f"m={row.m}: sum k*dim = {row.weighted_sum}, D_{row.m} = {row.derangement_total} ({flag})")
        if paper_diff:
            for rho in row.discrepancies:
                lines.append(
                    f"m={row.m}: printed k_{rho} = {row.paper_values[rho]} but computed "
                    f"{row.values[rho]}; evidence {json.dumps(row.evidence[str(rho)], sort_keys=True)}"
                )
    return "\n".join(lines)


def cmd_table(args, cfg, parser) -> int:
    if args.max_m > stable.max_brute_m:
        parser.error(f"--max-m {args.max_m} exceeds the brute-force ceiling {stable.max_brute_m}")
    rows = stable.stable_table(args.max_m)
    print(format_table(rows, cfg.output_format, args.paper_diff))
    return 0 if all(r.consistency_ok for r in rows) else 1


def cmd_verify(args, cfg, parser) -> int:
    if args.suite in ("e3", "e4", "e5"):
        if args.theta is None or args.d is None or args.n is None:
            parser.error(f"--suite {args.suite} needs --theta, --d and --n")
        check = {"e3": check_e3, "e4": check_e4, "e5": check_e5}[args.suite]
        reports = [check(args.theta, args.d, args.n)]
    elif args.suite == "stabilization":
        if args.rho is None or args.n is None or args.d_max is None:
            parser.error("--suite stabilization needs --rho, --n and --d-max")
        reports = [check_stabilization(args.rho, args.n, args.d_max)]
    elif args.suite == "symmetry" and args.rho is not None:
        pairs = [(d, n) for d in range(1, args.max_dn + 1) for n in range(1, args.max_dn // d + 1)]
        reports = [check_symmetry_monotonicity(args.rho, pairs)]
    else:
        reports = run_suite(args.max_m, args.max_dn, args.seed, suites=[args.suite])

    if cfg.output_format == "json":
        for r in reports:
            print(dumps(r.to_json()))
    elif cfg.output_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["identity", "instance", "lhs", "rhs", "passed", "erratum", "notes"])
        for r in reports:
            writer.writerow(
                [r.identity_name, dumps(r.instance), r.lhs, r.rhs, r.passed, r.erratum, r.notes]
            )
        print(buf.getvalue().rstrip("\n"))
    else:
        if args.verbose or len(reports) == 1:
            for r in reports:
                status = "PASS" if r.passed else ("ERRATUM" if r.erratum else "FAIL")
                print(f"{status:7s} {r.identity_name} {dumps(r.instance)} lhs={r.lhs} rhs={r.rhs}")
        print(summarize(reports))
    return 1 if any(r.failed_hard for r in reports) else 0


def cmd_cache(args, cfg, parser) -> int:
    base = symchar.settings.resolved_cache_dir()
    if args.action == "clear":
        n = symchar.clear_cache(base)
        print(_emit_value(cfg, "removed", n, {"cache_dir": str(base)}))
        return 0
    status = symchar.cache_status(base)
    if cfg.output_format == "json":
        print(dumps({"cache_dir": str(base), "tables": status}))
    elif cfg.output_format == "csv":
        print("m,bytes,valid,path")
        for s in status:
            print(f"{s['m']},{s['bytes']},{s['valid']},{s['path']}")
    else:
        print(f"cache directory: {base}")
        if not status:
            print("no cached tables")
        for s in status:
            print(f"m={s['m']:<3d} {s['bytes']:>10d} bytes  {'valid' if s['valid'] else 'CORRUPT'}")
    return 0


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rectkron",
        description="Exact Kronecker, Littlewood-Richardson and stable rectangular coefficients.",
    )
    parser.add_argument(
        "--cache-dir",
        type=Path,
        default=None,
        help=f"character-table cache (default: ${symchar.CACHE_ENV_VAR} or the user cache dir)",
    )
    parser.add_argument("--format", choices=FORMATS, default="text", dest="output_format")
    parser.add_argument("--max-table-m", type=pos_int, default=symchar.DEFAULT_MAX_TABLE_M)
    parser.add_argument("--max-brute-m", type=pos_int, default=stable.DEFAULT_MAX_BRUTE_M)
    parser.add_argument("--workers", type=pos_int, default=1)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kron", help="Kronecker coefficient k(lambda, mu, nu)")
    p.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
    p.add_argument("--mu", type=partition_arg, required=True)
    p.add_argument("--nu", type=partition_arg, required=True)
    p.set_defaults(func=cmd_kron)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient c^lambda_{alpha,beta}")
    p.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
    p.add_argument("--alpha", type=partition_arg, required=True)
    p.add_argument("--beta", type=partition_arg, required=True)
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("rect", help="rectangular coefficient k_rho(d, n)")
    p.add_argument("--rho", type=partition_arg, required=True)
    p.add_argument("--d", type=pos_int, required=True)
    p.add_argument("--n", type=pos_int, required=True)
    p.set_defaults(func=cmd_rect)

    p = sub.add_parser("stable", help="stable value k_rho, or dim S_rho(sl_n)^GL_n with --n")
    p.add_argument("--rho", type=partition_arg, required=True)
    p.add_argument("--n", type=pos_int, default=None)
    p.set_defaults(func=cmd_stable)

    p = sub.add_parser("table", help="table of stable values for m = 0..max-m")
    p.add_argument("--max-m", type=nonneg_int, default=6)
    p.add_argument("--paper-diff", action="store_true", help="add printed values and flag disagreements")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run identity checks")
    p.add_argument(
        "--suite",
        default="all",
        choices=["all", "e3", "e4", "e5", "stabilization", "symmetry", "n2", "kronecker", "lr", "stable"],
    )
    p.add_argument("--max-m", type=nonneg_int, default=5)
    p.add_argument("--max-dn", type=nonneg_int, default=12)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--theta", type=partition_arg)
    p.add_argument("--rho", type=partition_arg)
    p.add_argument("--d", type=pos_int)
    p.add_argument("--n", type=pos_int)
    p.add_argument("--d-max", type=pos_int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("derangements", help="derangement counts D_m")
    p.add_argument("m", type=nonneg_int)
    p.add_argument("--upto", type=nonneg_int, default=None)
    p.set_defaults(func=cmd_derangements)

    p = sub.add_parser("cache", help="inspect or clear the character-table cache")
    p.add_argument("action", choices=["status", "clear"])
    p.set_defaults(func=cmd_cache)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    cfg = CliConfig(
        cache_dir=args.cache_dir,
        output_format=args.output_format,
        max_table_m=args.max_table_m,
        max_brute_m=args.max_brute_m,
        workers=args.workers,
    )
    cfg.apply()
    try:
        return args.func(args, cfg, parser)
    except SizeMismatchError as exc:
        parser.error(str(exc))
    except RectKronError as exc:
        print(f"rectkron: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
