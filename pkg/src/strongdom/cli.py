"""Command-line interface.

Exit codes: 0 when every check holds, 1 when a bound is violated, 2 for
usage, parse and hypothesis errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import audit as audit_mod
from .bounds import check_copies_bounds, check_hajos_bounds, check_vsum_bounds
from .errors import HypothesisViolated, StrongDomError
from .families import TIGHT_SIDE, Family, FamilyParams
from .io import format_graph_text, read_graph, render_reports, write_graph
from .ops import HajosSpec, VertexSumSpec, hajos_sum, vertex_sum, vertex_sum_copies
from .solver import gamma_st

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def _id_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated ids, got {text!r}") from None


def _emit_graph(g, out):
    if out:
        write_graph(g, out)
    else:
        sys.stdout.write(format_graph_text(g))


def _vsum_spec(files, at) -> VertexSumSpec:
    if len(files) != len(at):
        raise StrongDomError(f"{len(files)} graph files but {len(at)} --at ids")
    return VertexSumSpec([(read_graph(f), u) for f, u in zip(files, at)])


def cmd_gamma_st(args) -> int:
    g = read_graph(args.file)
    result = gamma_st(g, args.method, limit=args.oracle_limit)
    print(result.optimum)
    if args.witness:
        print(" ".join(map(str, result.sorted_witness)))
    return EXIT_OK


def cmd_hajos(args) -> int:
    spec = HajosSpec(read_graph(args.f1), args.x1, args.y1, read_graph(args.f2), args.x2, args.y2)
    _emit_graph(hajos_sum(spec).graph, args.output)
    return EXIT_OK


def cmd_vsum(args) -> int:
    _emit_graph(vertex_sum(_vsum_spec(args.files, args.at)).graph, args.output)
    return EXIT_OK


def cmd_vsum_copies(args) -> int:
    _emit_graph(vertex_sum_copies(read_graph(args.file), args.at, args.t).graph, args.output)
    return EXIT_OK


def cmd_check_bounds(args) -> int:
    if args.theorem == "hajos":
        if len(args.files) != 2 or None in (args.x1, args.y1, args.x2, args.y2):
            raise StrongDomError("check-bounds hajos needs two files and --x1 --y1 --x2 --y2")
        g1, g2 = read_graph(args.files[0]), read_graph(args.files[1])
        report = check_hajos_bounds(HajosSpec(g1, args.x1, args.y1, g2, args.x2, args.y2))
    elif args.theorem == "vsum":
        report = check_vsum_bounds(_vsum_spec(args.files, args.at or []))
    else:
        if len(args.files) != 1 or not args.at or len(args.at) != 1 or args.t is None:
            raise StrongDomError("check-bounds copies needs one file, --at <id> and --t <count>")
        report = check_copies_bounds(read_graph(args.files[0]), args.at[0], args.t)
    sys.stdout.write(render_reports([report], args.format))
    return EXIT_OK if report.holds else EXIT_VIOLATION


def cmd_family(args) -> int:
    family = Family(args.name)
    spec = FamilyParams(family, args.k, args.h, args.m).build()
    if isinstance(spec, HajosSpec):
        parts = [spec.g1, spec.g2]
        fused = hajos_sum(spec).graph
        where = f"x1y1=({spec.x1},{spec.y1}) x2y2=({spec.x2},{spec.y2})"
    else:
        parts = list(spec.graphs)
        fused = vertex_sum(spec).graph
        where = "at=" + ",".join(map(str, spec.centers))
    if args.output:
        out = Path(args.output)
        out.mkdir(parents=True, exist_ok=True)
        for i, g in enumerate(parts, start=1):
            write_graph(g, out / f"part{i}.g")
        write_graph(fused, out / "fused.g")
        tight = TIGHT_SIDE[family] or "-"
        print(f"{family.value}: {len(parts)} parts, fused n={fused.n} m={fused.m}, {where}, tight={tight}")
    else:
        sys.stdout.write(format_graph_text(fused))
    return EXIT_OK


def cmd_audit(args) -> int:
    hajos = audit_mod.hajos_audit(args.trials, args.seed, args.max_n, args.jobs)
    vsum = audit_mod.vsum_audit(args.trials, args.seed, min(args.max_n, args.vsum_max_n), args.jobs)
    if args.format != "summary":
        sys.stdout.write(render_reports(hajos + vsum, args.format))
    failed = 0
    for name, reports in (("hajos", hajos), ("vsum", vsum)):
        bad = [r for r in reports if not r.holds]
        failed += len(bad)
        tight_lower = sum(r.exact == r.lower for r in reports)
        tight_upper = sum(r.exact == r.upper for r in reports)
        print(
            f"{name}: {len(reports)} trials, {len(bad)} violations, "
            f"tight lower {tight_lower}, tight upper {tight_upper}",
            file=sys.stderr if args.format != "summary" else sys.stdout,
        )
        for r in bad:
            print(f"BOUND VIOLATED: {r.context} lower={r.lower} exact={r.exact} upper={r.upper}", file=sys.stderr)
    return EXIT_VIOLATION if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--oracle-limit", type=int, default=None,
                        help="brute-force vertex cap (default 26, env STRONGDOM_ORACLE_LIMIT)")

    parser = argparse.ArgumentParser(prog="strongdom", description="Strong domination of Hajos sums and vertex-sums.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma-st", parents=[common], help="strong domination number of a graph file")
    p.add_argument("file")
    p.add_argument("--method", choices=["brute", "bb"], default="bb")
    p.add_argument("--witness", action="store_true", help="also print a witness set (sorted ids)")
    p.set_defaults(func=cmd_gamma_st)

    p = sub.add_parser("hajos", parents=[common], help="Hajos sum of two graph files")
    p.add_argument("f1")
    p.add_argument("f2")
    for name in ("--x1", "--y1", "--x2", "--y2"):
        p.add_argument(name, type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_hajos)

    p = sub.add_parser("vsum", parents=[common], help="vertex-sum of graph files")
    p.add_argument("files", nargs="+")
    p.add_argument("--at", type=_id_list, required=True, help="comma-separated central ids, one per file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_vsum)

    p = sub.add_parser("vsum-copies", parents=[common], help="vertex-sum of t copies of a graph")
    p.add_argument("file")
    p.add_argument("--at", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_vsum_copies)

    p = sub.add_parser("check-bounds", parents=[common], help="evaluate a bound against the exact value")
    p.add_argument("theorem", choices=["hajos", "vsum", "copies"])
    p.add_argument("files", nargs="+")
    for name in ("--x1", "--y1", "--x2", "--y2"):
        p.add_argument(name, type=int)
    p.add_argument("--at", type=_id_list)
    p.add_argument("--t", type=int)
    p.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p.set_defaults(func=cmd_check_bounds)

    p = sub.add_parser("family", parents=[common], help="generate a tightness family instance")
    p.add_argument("name", choices=[f.value for f in Family])
    p.add_argument("--k", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("-o", "--output", help="directory for part<i>.g and fused.g")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("audit", parents=[common], help="randomized audit of both bounds")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--vsum-max-n", type=int, default=8)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["summary", "table", "csv", "json"], default="summary")
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HypothesisViolated as exc:
        print(f"HypothesisViolated: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (StrongDomError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run():
    sys.exit(main())
