"""Command-line interface.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 bad input, 2 a verification disagreed, 3 a resource budget was hit.
Identical invocations produce byte-identical output.
"""

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from typing import TextIO

from .errors import ResourceLimitError, SequenceError
from .hypergraph import DEFAULT_EDGE_CAP, ThresholdHypergraph
from .sequences import format_binary, format_short, parse_sequence, to_binary, to_short
from .spectrum import (
    DEFAULT_SEQUENCE_BUDGET,
    Spectrum,
    family_sequence,
    family_spectrum_symbolic,
    full_spectrum_closed,
    full_spectrum_numeric,
    scan_quotient_simplicity,
)
from .verify import run_all_sweeps

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DISAGREE = 2
EXIT_BUDGET = 3

FORMATS = ("text", "csv", "structured")


@dataclass
class Config:
    output_format: str = "text"
    merge_tol: float = 1e-9
    edge_cap: int = DEFAULT_EDGE_CAP

    def __post_init__(self) -> None:
        if self.output_format not in FORMATS:
            raise SequenceError(f"unknown format {self.output_format!r}")
        if not self.merge_tol > 0:
            raise SequenceError("merge tolerance must be positive")
        if self.edge_cap < 1:
            raise SequenceError("edge cap must be positive")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as exit code 1, not 2."""

    def error(self, message: str) -> None:
        raise _UsageError(message)


def fmt(value: float) -> str:
    """12 significant digits, period decimal separator."""
    return format(float(value), ".12g")


def _parse_k_list(text: str) -> list[int]:
    try:
        values = [int(p) for p in text.split(",") if p.strip() != ""]
    except ValueError as exc:
        raise SequenceError(f"bad uniformity list {text!r}") from exc
    if not values or any(k < 2 for k in values):
        raise SequenceError(f"uniformities must all be >= 2, got {text!r}")
    return values


def _spectrum_rows(spec: Spectrum) -> list[tuple[str, str, str]]:
    return [(fmt(p.value), str(p.multiplicity), p.source) for p in spec.pairs]


def _emit_spectrum(
    spec: Spectrum,
    h: ThresholdHypergraph,
    cfg: Config,
    out: TextIO,
    err: TextIO,
    verify_info: dict | None = None,
) -> None:
    if cfg.output_format == "text":
        for value, mult, source in _spectrum_rows(spec):
            print(f"lambda={value} mult={mult} source={source}", file=out)
        if verify_info is not None:
            status = "ok" if verify_info["ok"] else "mismatch"
            print(
                f"max_dev={fmt(verify_info['max_dev'])} "
                f"tol={fmt(verify_info['tol'])} status={status}",
                file=out,
            )
    elif cfg.output_format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["lambda", "mult", "source"])
        writer.writerows(_spectrum_rows(spec))
        if verify_info is not None:
            status = "ok" if verify_info["ok"] else "mismatch"
            print(
                f"max_dev={fmt(verify_info['max_dev'])} "
                f"tol={fmt(verify_info['tol'])} status={status}",
                file=err,
            )
    else:
        doc = {
            "n": h.n,
            "k": h.k,
            "sequence": format_binary(h.sequence),
            "short": format_short(to_short(h.sequence)),
            "pairs": [
                {"value": p.value, "multiplicity": p.multiplicity, "source": p.source}
                for p in spec.pairs
            ],
            "distinct_count": spec.distinct_count,
            "merge_tol": spec.merge_tol,
        }
        if verify_info is not None:
            doc["verify"] = verify_info
        print(json.dumps(doc, indent=2), file=out)


def cmd_spectrum(args, cfg: Config, out: TextIO, err: TextIO) -> int:
    h = ThresholdHypergraph(parse_sequence(args.sequence))
    spec = full_spectrum_closed(h, cfg.merge_tol)
    verify_info = None
    code = EXIT_OK
    if args.verify:
        numeric = full_spectrum_numeric(h)
        deviations = [
            abs(x - y) for x, y in zip(spec.expanded(), numeric.expanded())
        ]
        max_dev = max(deviations, default=0.0)
        ok = max_dev <= args.tol
        verify_info = {"max_dev": max_dev, "tol": args.tol, "ok": ok}
        if not ok:
            code = EXIT_DISAGREE
    _emit_spectrum(spec, h, cfg, out, err, verify_info)
    return code


def cmd_edges(args, cfg: Config, out: TextIO, err: TextIO) -> int:
    h = ThresholdHypergraph(parse_sequence(args.sequence))
    edges = h.edges(cfg.edge_cap)
    if cfg.output_format == "structured":
        doc = {
            "n": h.n,
            "k": h.k,
            "sequence": format_binary(h.sequence),
            "edges": [list(e) for e in edges],
        }
        print(json.dumps(doc, indent=2), file=out)
    else:
        for e in edges:
            print(",".join(str(v) for v in e), file=out)
    return EXIT_OK


def cmd_adjacency(args, cfg: Config, out: TextIO, err: TextIO) -> int:
    h = ThresholdHypergraph(parse_sequence(args.sequence))
    mat = h.adjacency()
    if cfg.output_format == "structured":
        doc = {
            "n": h.n,
            "k": h.k,
            "sequence": format_binary(h.sequence),
            "entries": [list(row) for row in mat.entries],
        }
        print(json.dumps(doc, indent=2), file=out)
    else:
        for line in mat.csv_lines():
            print(line, file=out)
    return EXIT_OK


def cmd_verify(args, cfg: Config, out: TextIO, err: TextIO) -> int:
    results = run_all_sweeps(
        args.n_max, _parse_k_list(args.k), cfg.edge_cap, args.budget
    )
    all_ok = all(r.passed for r in results)
    if cfg.output_format == "structured":
        doc = {
            "sweeps": [
                {"name": r.name, "checked": r.checked, "failed": len(r.failures)}
                for r in results
            ],
            "ok": all_ok,
        }
        print(json.dumps(doc, indent=2), file=out)
    else:
        for r in results:
            print(
                f"sweep={r.name} checked={r.checked} failed={len(r.failures)}",
                file=out,
            )
        print("all checks passed" if all_ok else "FAILED", file=out)
    for r in results:
        for f in r.failures:
            print(f"{r.name}: {f}", file=err)
    return EXIT_OK if all_ok else EXIT_DISAGREE


def cmd_family(args, cfg: Config, out: TextIO, err: TextIO) -> int:
    ss = family_sequence(args.family, args.n, args.k, args.j)
    spec = family_spectrum_symbolic(args.family, args.n, args.k, args.j, cfg.merge_tol)
    h = ThresholdHypergraph(to_binary(ss))
    if cfg.output_format == "text":
        print(f"short={format_short(ss)}", file=out)
        print(f"sequence={format_binary(h.sequence)}", file=out)
    elif cfg.output_format == "csv":
        print(f"short={format_short(ss)}", file=err)
        print(f"sequence={format_binary(h.sequence)}", file=err)
    _emit_spectrum(spec, h, cfg, out, err)
    return EXIT_OK


def cmd_scan(args, cfg: Config, out: TextIO, err: TextIO) -> int:
    rows = scan_quotient_simplicity(
        args.n_max, _parse_k_list(args.k), args.tol, args.budget
    )
    flagged = sum(1 for row in rows if row.flagged)
    min_gap = min((row.min_quotient_gap for row in rows), default=float("inf"))
    if cfg.output_format == "structured":
        doc = {
            "rows": [
                {
                    "sequence": row.sequence,
                    "n": row.n,
                    "k": row.k,
                    "r": row.r,
                    "min_quotient_gap": row.min_quotient_gap,
                    "flagged": row.flagged,
                }
                for row in rows
            ],
            "sequences": len(rows),
            "flagged": flagged,
            "min_gap": min_gap,
        }
        print(json.dumps(doc, indent=2), file=out)
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["sequence", "n", "k", "r", "min_quotient_gap", "flagged"])
        for row in rows:
            writer.writerow(
                [
                    row.sequence,
                    row.n,
                    row.k,
                    row.r,
                    fmt(row.min_quotient_gap),
                    int(row.flagged),
                ]
            )
    print(
        f"sequences={len(rows)} flagged={flagged} min_gap={fmt(min_gap)}",
        file=err,
    )
    return EXIT_OK


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--merge-tol", type=float, default=1e-9)
    common.add_argument("--edge-cap", type=int, default=DEFAULT_EDGE_CAP)

    parser = _Parser(prog="threshspec", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="closed-form spectrum")
    p.add_argument("sequence")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(handler=cmd_spectrum)

    p = sub.add_parser("edges", parents=[common], help="edge list")
    p.add_argument("sequence")
    p.set_defaults(handler=cmd_edges)

    p = sub.add_parser("adjacency", parents=[common], help="pair-count matrix")
    p.add_argument("sequence")
    p.set_defaults(handler=cmd_adjacency)

    p = sub.add_parser("verify", parents=[common], help="exhaustive sweeps")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k", required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_SEQUENCE_BUDGET)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("family", parents=[common], help="catalogued families")
    p.add_argument("family", type=int, choices=(1, 2, 3))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--j", type=int, default=None)
    p.set_defaults(handler=cmd_family)

    p = sub.add_parser("scan", parents=[common], help="quotient gap report")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k", required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--budget", type=int, default=DEFAULT_SEQUENCE_BUDGET)
    p.set_defaults(handler=cmd_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = Config(
            output_format=args.format,
            merge_tol=args.merge_tol,
            edge_cap=args.edge_cap,
        )
        return args.handler(args, cfg, sys.stdout, sys.stderr)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SequenceError, ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
