"""Command line front end.

Exit status: 0 success, 1 verification violation, 2 usage or envelope error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import grid_triangles as gt
from .conic_maps import PERIMETER_TOL
from .construction import (
    DEFAULT_GRID_SLOPES,
    ELEKES_MAX_K,
    GRID_FAMILY_MAX_K,
    construct_elekes,
    construct_grid_family,
    find_figure1,
    parse_slope,
)
from .render import render_svg_text
from .verify import SUITES, run_suites

HERONIAN_MAX_P = 10**4
THREESQUARES_MAX_K = 100
LOWERBOUND_MAX_N = 10**6

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class EnvelopeError(ValueError):
    pass


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


class Outputs:
    def __init__(self, out_dir, fmt):
        self.dir = Path(out_dir)
        self.fmt = fmt
        self.written = []

    def write(self, name: str, kind: str, text: str) -> None:
        if self.fmt is not None and self.fmt != kind:
            return
        self.dir.mkdir(parents=True, exist_ok=True)
        path = self.dir / name
        path.write_text(text, encoding="utf-8")
        self.written.append(name)


def cmd_construct(args, outputs: Outputs) -> dict:
    if args.kind == "figure1":
        result = find_figure1(args.tol, args.threads)
    elif args.kind == "elekes":
        if args.size is None or not 1 <= args.size <= ELEKES_MAX_K:
            raise EnvelopeError(f"elekes needs 1 <= size <= {ELEKES_MAX_K}")
        result = construct_elekes(args.size, args.tol, args.threads)
    else:
        if args.size is None or not 2 <= args.size <= GRID_FAMILY_MAX_K:
            raise EnvelopeError(f"grid-family needs 2 <= size <= {GRID_FAMILY_MAX_K}")
        slopes = ([parse_slope(s) for s in args.slopes.split(",")]
                  if args.slopes else DEFAULT_GRID_SLOPES)
        result = construct_grid_family(args.size, slopes, args.scale, args.tol, args.threads)
    stem = f"{result.kind}_{result.size}"
    summary = result.summary()
    outputs.write(f"{stem}_config.json", "json", result.config.dumps() + "\n")
    outputs.write(f"{stem}_set.json", "json", result.ups.dumps() + "\n")
    outputs.write(f"{stem}.svg", "svg", render_svg_text(result.ups))
    outputs.write(f"{stem}_summary.json", "json", dump_json(summary))
    return summary


def cmd_grid(args, outputs: Outputs) -> dict:
    if not 2 <= args.n <= gt.CENSUS_MAX_N:
        raise EnvelopeError(f"grid needs 2 <= n <= {gt.CENSUS_MAX_N}")
    census = gt.grid_census(args.n, threads=args.threads)
    audit = gt.congruence_case_audit(census)
    key, count = census.max_class()
    summary = {
        "schema": 1,
        "n": args.n,
        "total_triangles": census.total,
        "collinear_triples": census.collinear,
        "n_classes": len(census.classes),
        "max_key": key.to_text(),
        "max_count": count,
        "audit": audit.to_json_obj(),
    }
    stem = f"grid_{args.n}"
    outputs.write(f"{stem}_census.csv", "csv",
                  csv_text(["perimeter_key", "count", "num_side_multisets"], census.csv_rows()))
    outputs.write(f"{stem}_census.json", "json", dump_json(census.to_json_obj()))
    outputs.write(f"{stem}_summary.json", "json", dump_json(summary))
    return summary


def _heronian_rows(p, triangles):
    rows = []
    for t in triangles:
        verts = t.embedding or ((None, None),) * 3
        rows.append([p, t.a, t.b, t.c, t.area] + [c for v in verts for c in v])
    return rows


HERONIAN_HEADER = ["p", "a", "b", "c", "area", "ax", "ay", "bx", "by", "cx", "cy"]


def cmd_heronian(args, outputs: Outputs) -> dict:
    value = args.value
    if args.mode == "enumerate":
        if not 3 <= value <= HERONIAN_MAX_P:
            raise EnvelopeError(f"enumerate needs 3 <= p <= {HERONIAN_MAX_P}")
        triangles = [gt.embed_heronian(t) for t in gt.heronian_enumerate(value)]
        summary = {"schema": 1, "mode": "enumerate", "p": value, "H": len(triangles)}
        rows = _heronian_rows(value, triangles)
    elif args.mode == "threesquares":
        if not 1 <= value <= THREESQUARES_MAX_K:
            raise EnvelopeError(f"threesquares needs 1 <= k <= {THREESQUARES_MAX_K}")
        p = 2 * (2 * value - 1) ** 2
        triangles = [gt.embed_heronian(t) for t in gt.heronian_from_three_squares(value)]
        summary = {"schema": 1, "mode": "threesquares", "k": value, "p": p, "classes": len(triangles)}
        rows = _heronian_rows(p, triangles)
    else:
        if not 400 <= value <= LOWERBOUND_MAX_N:
            raise EnvelopeError(f"lowerbound needs 400 <= n <= {LOWERBOUND_MAX_N}")
        result = gt.lower_bound_generate(value)
        summary = {"schema": 1, "mode": "lowerbound", **result.as_dict()}
        rows = _heronian_rows(result.p, result.triangles)
    stem = f"heronian_{args.mode}_{value}"
    outputs.write(f"{stem}.csv", "csv", csv_text(HERONIAN_HEADER, rows))
    outputs.write(f"{stem}_summary.json", "json", dump_json(summary))
    return summary


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default="out", help="output directory (default: out)")
    common.add_argument("--format", choices=["json", "csv", "svg"], default=None,
                        help="write only files of this format (default: all)")
    common.add_argument("--tol", type=float, default=PERIMETER_TOL,
                        help=f"perimeter / on-ellipse tolerance (default {PERIMETER_TOL:g})")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker threads; results do not depend on it")

    parser = argparse.ArgumentParser(
        prog="unitperim",
        description="Unit-perimeter triangle constructions and lattice census.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common],
                       help=f"conic construction (elekes k <= {ELEKES_MAX_K}, "
                            f"grid-family k <= {GRID_FAMILY_MAX_K}, figure1)")
    p.add_argument("kind", choices=["elekes", "grid-family", "figure1"])
    p.add_argument("size", type=int, nargs="?")
    p.add_argument("--slopes", help="grid-family slopes, comma separated, 'vertical' allowed")
    p.add_argument("--scale", default="1", help="grid-family spacing (rational)")

    p = sub.add_parser("grid", parents=[common],
                       help=f"equal-perimeter census of [n] x [n], 2 <= n <= {gt.CENSUS_MAX_N}")
    p.add_argument("n", type=int)

    p = sub.add_parser("heronian", parents=[common],
                       help=f"Heronian tables (enumerate p <= {HERONIAN_MAX_P}, "
                            f"threesquares k <= {THREESQUARES_MAX_K}, lowerbound n <= {LOWERBOUND_MAX_N})")
    p.add_argument("mode", choices=["enumerate", "threesquares", "lowerbound"])
    p.add_argument("value", type=int)

    p = sub.add_parser("verify", parents=[common], help="run invariant suites")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.tol <= 0 or args.threads < 1:
        parser.error("--tol must be positive and --threads at least 1")

    if args.command == "verify":
        names = sorted(SUITES) if args.suite == "all" else [args.suite]
        report = run_suites(names)
        sys.stdout.write(dump_json(report))
        return EXIT_OK if report["ok"] else EXIT_VIOLATION

    outputs = Outputs(args.out, args.format)
    handler = {"construct": cmd_construct, "grid": cmd_grid, "heronian": cmd_heronian}[args.command]
    try:
        summary = handler(args, outputs)
    except (EnvelopeError, ValueError) as exc:
        print(f"unitperim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ArithmeticError, LookupError, RuntimeError) as exc:
        print(f"unitperim: verification failed: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    sys.stdout.write(dump_json(summary))
    if args.command == "grid" and summary["audit"]["violations"]:
        return EXIT_VIOLATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
