"""Command-line surface: every verifier and generator, machine-readable.

Exit codes: 0 all checks passed (or output produced), 1 a verification
failed (the discrepancy is printed), 2 usage error.  Results go to
stdout (or --out PATH); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Iterable, Optional, Sequence

from hookpart import anatomy, explorer, qseries, statistics
from hookpart.qseries import VerifyReport

USAGE_ERROR = 2


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {value}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default="text",
        help="output format (default: text)",
    )
    common.add_argument("--out", metavar="PATH", help="write results to PATH instead of stdout")
    common.add_argument(
        "--jobs",
        type=_positive,
        default=os.cpu_count() or 1,
        help="worker count for range verifications (default: available cores)",
    )

    parser = argparse.ArgumentParser(
        prog="hookpart",
        description="Verify cell-statistic identities on integer partitions "
        "and emit the underlying series, multisets, and matchings.",
    )
    top = parser.add_subparsers(dest="command", required=True)

    verify = top.add_parser("verify", help="run an identity check")
    checks = verify.add_subparsers(dest="check", required=True)

    p = checks.add_parser("theorem1", parents=[common], help="arm-leg vs arm-left multisets")
    p.add_argument("--n-max", type=_nonneg, required=True)

    p = checks.add_parser("identity1", parents=[common], help="hook vs part polynomials")
    p.add_argument("--n-max", type=_nonneg, required=True)

    p = checks.add_parser("lemma", parents=[common], help="pair counts vs closed-form series")
    p.add_argument("--stat", choices=statistics.PAIR_STATS, required=True)
    p.add_argument("--c", type=_nonneg, required=True)
    p.add_argument("--d", type=_nonneg, required=True)
    p.add_argument("--n-max", type=_nonneg, required=True)
    p.add_argument("--trunc", type=_nonneg, required=True)

    p = checks.add_parser("fact", parents=[common], help="one of the classical series facts")
    p.add_argument("--id", dest="fact_id", type=int, choices=(1, 2, 3, 4), required=True)
    p.add_argument("--a", type=_nonneg)
    p.add_argument("--k", type=_positive)
    p.add_argument("--m", type=_nonneg)
    p.add_argument("--n", type=_nonneg)
    p.add_argument("--trunc", type=_nonneg)

    p = checks.add_parser("anatomy", parents=[common], help="marked-hook decomposition vs brute")
    p.add_argument("--c", type=_nonneg, required=True)
    p.add_argument("--d", type=_nonneg, required=True)
    p.add_argument("--n-max", type=_nonneg, required=True)
    p.add_argument("--trunc", type=_nonneg, required=True)

    p = checks.add_parser("chain", parents=[common], help="five-stage derivation chain")
    p.add_argument("--c", type=_nonneg, required=True)
    p.add_argument("--d", type=_nonneg, required=True)
    p.add_argument("--trunc", type=_nonneg, required=True)

    series = top.add_parser("series", help="print series coefficients")
    kinds = series.add_subparsers(dest="kind", required=True)

    p = kinds.add_parser("euler-inv", parents=[common], help="partition-count series")
    p.add_argument("--trunc", type=_nonneg, required=True)

    p = kinds.add_parser("gauss", parents=[common], help="Gaussian binomial for an m-by-n box")
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--trunc", type=_nonneg, help="series order (default: m*n)")

    p = kinds.add_parser("lemma-rhs", parents=[common], help="closed-form pair-count series")
    p.add_argument("--c", type=_nonneg, required=True)
    p.add_argument("--d", type=_nonneg, required=True)
    p.add_argument("--trunc", type=_nonneg, required=True)

    p = top.add_parser("multiset", parents=[common], help="pair counts over all cells of n")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--stat", choices=statistics.PAIR_STATS, required=True)

    p = top.add_parser("match", parents=[common], help="canonical cell matching for n")
    p.add_argument("--n", type=_nonneg, required=True)

    return parser


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def _jsonable(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value


def _report_dict(report: VerifyReport) -> dict[str, Any]:
    entry: dict[str, Any] = {"context": report.context, "passed": report.passed}
    disc = report.first_discrepancy
    if disc is None:
        entry["first_discrepancy"] = None
    else:
        entry["first_discrepancy"] = {
            "where": _jsonable(disc.where),
            "expected": _jsonable(disc.expected),
            "actual": _jsonable(disc.actual),
        }
    return entry


def _render_reports(
    reports: Sequence[VerifyReport], fmt: str, extras: Optional[dict[str, Any]] = None
) -> tuple[str, int]:
    failed = [r for r in reports if not r.passed]
    code = 1 if failed else 0
    if fmt == "json":
        doc: dict[str, Any] = {
            "passed": not failed,
            "reports": [_report_dict(r) for r in reports],
        }
        if extras:
            doc.update(extras)
        return json.dumps(doc, indent=2, sort_keys=True), code
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["context", "passed", "where", "expected", "actual"])
        for r in reports:
            disc = r.first_discrepancy
            row = [r.context, str(r.passed).lower()]
            row += ["", "", ""] if disc is None else [
                repr(disc.where),
                repr(disc.expected),
                repr(disc.actual),
            ]
            writer.writerow(row)
        return buffer.getvalue().rstrip("\n"), code
    lines = []
    for r in reports:
        if r.passed:
            lines.append(f"PASS {r.context}")
        else:
            disc = r.first_discrepancy
            lines.append(
                f"FAIL {r.context} at {disc.where}: expected {disc.expected}, got {disc.actual}"
            )
    if extras:
        for key, value in extras.items():
            if isinstance(value, list):
                lines.append(f"{key}: " + " ".join(str(v) for v in value))
            else:
                lines.append(f"{key}: {value}")
    lines.append(
        f"ok ({len(reports)} checks)" if not failed else f"FAILED ({len(failed)} of {len(reports)} checks)"
    )
    return "\n".join(lines), code


def _render_series(label: str, series: qseries.QSeries, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(
            {"kind": label, "order": series.order, "coefficients": list(series.coeffs)},
            sort_keys=True,
        )
    lines = ["exponent,coefficient"] if fmt == "csv" else []
    sep = "," if fmt == "csv" else " "
    lines.extend(f"{e}{sep}{c}" for e, c in enumerate(series.coeffs))
    return "\n".join(lines)


def _render_multiset(n: int, stat: str, pm: statistics.PairMultiset, fmt: str) -> str:
    rows = sorted(pm.counts.items())
    if fmt == "json":
        return json.dumps(
            {
                "n": n,
                "stat": stat,
                "total": pm.total,
                "pairs": [[c, d, count] for (c, d), count in rows],
            },
            sort_keys=True,
        )
    lines = ["c,d,count"] if fmt == "csv" else []
    sep = "," if fmt == "csv" else " "
    lines.extend(f"{c}{sep}{d}{sep}{count}" for (c, d), count in rows)
    return "\n".join(lines)


def _render_matching(matching: explorer.Matching, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(
            {
                "n": matching.n,
                "pairs": [{"src": list(s), "dst": list(t)} for s, t in matching.pairs],
            },
            sort_keys=True,
        )
    if fmt == "csv":
        lines = ["src_partition,src_row,src_col,dst_partition,dst_row,dst_col"]
        lines.extend(
            f"{s.partition_index},{s.row},{s.col},{t.partition_index},{t.row},{t.col}"
            for s, t in matching.pairs
        )
        return "\n".join(lines)
    return "\n".join(
        f"({s.partition_index},{s.row},{s.col}) -> ({t.partition_index},{t.row},{t.col})"
        for s, t in matching.pairs
    )


# ---------------------------------------------------------------------------
# Range verification with optional worker pool
# ---------------------------------------------------------------------------


def _map_ordered(fn: Callable[[int], VerifyReport], items: Sequence[int], jobs: int) -> list[VerifyReport]:
    """Apply fn over items, possibly in parallel; results keep input order,
    so the final output is identical for every jobs setting."""
    if jobs > 1 and len(items) > 3:
        try:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                chunk = max(1, len(items) // (jobs * 4))
                return list(pool.map(fn, items, chunksize=chunk))
        except Exception as exc:  # pool unavailable: fall back, result unchanged
            print(f"note: worker pool unavailable ({exc}); running serially", file=sys.stderr)
    return [fn(n) for n in items]


def _emit(text: str, out_path: Optional[str]) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------------------
# Command handlers
# ---------------------------------------------------------------------------


def _cmd_verify(args: argparse.Namespace) -> int:
    extras: Optional[dict[str, Any]] = None
    if args.check == "theorem1":
        reports = _map_ordered(statistics.verify_theorem1, range(args.n_max + 1), args.jobs)
    elif args.check == "identity1":
        reports = _map_ordered(statistics.verify_identity1, range(args.n_max + 1), args.jobs)
    elif args.check == "lemma":
        reports = [statistics.verify_lemma(args.c, args.d, args.stat, args.n_max, args.trunc)]
        extras = {
            "counts": [
                statistics.count_pair(n, args.c, args.d, args.stat)
                for n in range(args.n_max + 1)
            ]
        }
    elif args.check == "fact":
        reports = [_dispatch_fact(args)]
    elif args.check == "anatomy":
        reports = [anatomy.verify_anatomy(args.c, args.d, args.n_max, args.trunc)]
    else:  # chain
        reports = [anatomy.proof_chain(args.c, args.d, args.trunc)]
    text, code = _render_reports(reports, args.format, extras)
    _emit(text, args.out)
    return code


def _require(args: argparse.Namespace, names: Iterable[str]) -> None:
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        flags = ", ".join("--" + name for name in missing)
        raise ValueError(f"fact {args.fact_id} requires {flags}")


def _dispatch_fact(args: argparse.Namespace) -> VerifyReport:
    if args.fact_id == 1:
        _require(args, ("a", "k", "trunc"))
        return qseries.verify_fact1(args.a, args.k, args.trunc)
    if args.fact_id == 2:
        _require(args, ("k", "trunc"))
        return qseries.verify_fact2(args.k, args.trunc)
    if args.fact_id == 3:
        _require(args, ("m", "n"))
        return statistics.verify_fact3(args.m, args.n)
    _require(args, ("m", "trunc"))
    return statistics.verify_fact4(args.m, args.trunc)


def _cmd_series(args: argparse.Namespace) -> int:
    if args.kind == "euler-inv":
        series = qseries.euler_inv(args.trunc)
        label = "euler-inv"
    elif args.kind == "gauss":
        order = args.trunc if args.trunc is not None else args.m * args.n
        series = qseries.gauss_binomial(args.m, args.n, order)
        label = f"gauss(m={args.m}, n={args.n})"
    else:
        series = qseries.lemma_rhs(args.c, args.d, args.trunc)
        label = f"lemma-rhs(c={args.c}, d={args.d})"
    _emit(_render_series(label, series, args.format), args.out)
    return 0


def _cmd_multiset(args: argparse.Namespace) -> int:
    pm = statistics.build_pair_multiset(args.n, args.stat)
    _emit(_render_multiset(args.n, args.stat, pm, args.format), args.out)
    return 0


def _cmd_match(args: argparse.Namespace) -> int:
    matching = explorer.canonical_matching(args.n)
    _emit(_render_matching(matching, args.format), args.out)
    return 0


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, execute one subcommand, and return the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "series":
            return _cmd_series(args)
        if args.command == "multiset":
            return _cmd_multiset(args)
        return _cmd_match(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except RuntimeError as exc:  # a verified identity failed to hold
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
