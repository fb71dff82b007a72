"""Command-line entry point.

Exit codes: 0 success, 1 no result (e.g. sampling exhausted), 2 input or
validation failure, 3 internal postcondition failure, 4 environment problem
(no solver), 5 verdict mismatch.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import distsim, drawing, generators, graph, graphio, planarize
from .smt import (SolverNotFound, TASKS, emit_task, run_suite, task_ids)

EXIT_OK = 0
EXIT_NO_RESULT = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3
EXIT_ENVIRONMENT = 4
EXIT_MISMATCH = 5


def _load(path: str) -> graph.GeoGraph:
    try:
        return graphio.load_graph(path)
    except (OSError, graph.GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _parse_order(g, spec: str):
    if spec == "lex":
        return planarize.lex_order(g)
    if spec.startswith("seed:"):
        try:
            return planarize.seeded_order(g, int(spec[5:]))
        except ValueError:
            pass
    print(f"error: bad order {spec!r}; use lex or seed:<n>", file=sys.stderr)
    raise SystemExit(EXIT_INPUT)


def _report_line(name: str, rpt: graph.PropertyReport) -> None:
    status = "yes" if rpt.holds else "no"
    print(f"{name}: {status}")
    for witness in rpt.violations[:10]:
        print(f"  violation {witness}")
    if len(rpt.violations) > 10 or rpt.truncated:
        print(f"  ... {len(rpt.violations)} recorded violations")


def cmd_check(args) -> int:
    g = _load(args.graph)
    for warning in g.validate():
        print(f"warning: {warning}")
    red = graph.check_redundancy(g)
    coex = graph.check_coexistence(g, weak=args.weak_coexistence)
    closure = graph.check_collinear_closure(g)
    crossings = graph.crossing_pairs(g)
    connected = graph.is_connected(g)
    _report_line("redundancy", red)
    _report_line("coexistence" + (" (weak)" if args.weak_coexistence else ""), coex)
    _report_line("collinear-closure", closure)
    print(f"connected: {'yes' if connected else 'no'} "
          f"({len(graph.components(g))} components)")
    print(f"plane: {'yes' if not crossings else 'no'}")
    for e, f in crossings[:10]:
        print(f"  crossing {e} x {f}")
    if len(crossings) > 10:
        print(f"  ... {len(crossings)} crossings")
    ok = red.holds and coex.holds and closure.holds and connected
    return EXIT_OK if ok else EXIT_NO_RESULT


def cmd_planarize(args) -> int:
    g = _load(args.graph)
    order = _parse_order(g, args.order)
    trace = planarize.cp_global(g, order)
    print(f"kept {len(trace.kept)} of {g.num_edges()} edges")
    contract = planarize.verify_kept_contract(g, trace)
    coverage = planarize.verify_lemma1(g, trace)
    theorem = planarize.verify_theorem1(g, trace)
    _report_line("kept-contract", contract)
    _report_line("dropped-edge-coverage", coverage)
    _report_line("plane-and-connected", theorem)
    if args.trace:
        Path(args.trace).write_text(trace.to_text(), encoding="utf-8")
    if args.out:
        graphio.save_graph(planarize.kept_subgraph(g, trace), args.out)
    if args.svg:
        drawing.save_svg(g, args.svg, kept=trace.kept)
    if args.png:
        drawing.save_figure(g, args.png, kept=trace.kept,
                            title=Path(args.graph).stem)
    if not (contract.holds and coverage.holds):
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_simulate(args) -> int:
    g = _load(args.graph)
    priority = _parse_order(g, args.priority)
    result = distsim.cp_distributed(g, priority)
    reference = planarize.cp_global(g, priority)
    print(result.to_text(), end="")
    if result.kept != reference.kept:
        print("error: distributed run diverged from the global run",
              file=sys.stderr)
        return EXIT_INTERNAL
    print("matches global run: yes")
    return EXIT_OK


def cmd_prove(args) -> int:
    if args.tasks == "all":
        ids = task_ids()
    else:
        ids = [t.strip() for t in args.tasks.split(",") if t.strip()]
        unknown = [t for t in ids if t not in TASKS]
        if unknown:
            print(f"error: unknown tasks {unknown}", file=sys.stderr)
            return EXIT_INPUT
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    instantiate = False if args.quantified else None
    try:
        report = run_suite(ids, solver_path=args.solver, jobs=args.jobs,
                           out_dir=str(out), timeout_s=args.timeout,
                           instantiate=instantiate)
    except SolverNotFound as exc:
        for task_id in ids:  # still emit the documents
            (out / f"{task_id}.smt2").write_text(
                emit_task(task_id, instantiate=instantiate), encoding="utf-8")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ENVIRONMENT
    print(report.to_text(), end="")
    (out / "report.txt").write_text(report.to_text(), encoding="utf-8")
    (out / "report.csv").write_text(report.to_csv(), encoding="utf-8")
    for task_id, model in report.models.items():
        (out / f"{task_id}.model").write_text(model, encoding="utf-8")
    if args.plot:
        drawing.save_duration_chart(report.rows, args.plot)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_gen(args) -> int:
    params = {}
    for item in args.params:
        if "=" not in item:
            print(f"error: parameters look like key=value, got {item!r}",
                  file=sys.stderr)
            return EXIT_INPUT
        key, _, value = item.partition("=")
        try:
            params[key] = int(value)
        except ValueError:
            print(f"error: {key} must be an integer", file=sys.stderr)
            return EXIT_INPUT
    try:
        if args.model == "unit_disk":
            g = generators.unit_disk(params.pop("n"), params.pop("radius"),
                                     params.pop("extent"), args.seed)
        elif args.model == "quasi_unit_disk":
            g = generators.quasi_unit_disk(
                params.pop("n"), params.pop("r_min"), params.pop("r_max"),
                params.pop("extent"), args.seed)
        elif args.model == "rcg":
            g = generators.sample_rcg(
                params.pop("n"), params.pop("radius"), params.pop("extent"),
                args.seed, params.pop("max_attempts", 200))
            if g is None:
                print("exhausted: no valid sample within the attempt budget")
                return EXIT_NO_RESULT
        elif args.model == "fixture":
            g = generators.fixture(args.params[0])
            params = {}
        else:
            print(f"error: unknown model {args.model!r}", file=sys.stderr)
            return EXIT_INPUT
    except KeyError as exc:
        print(f"error: missing parameter {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, generators.UnknownFixture) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if params and args.model != "fixture":
        print(f"error: unused parameters {sorted(params)}", file=sys.stderr)
        return EXIT_INPUT
    graphio.save_graph(g, args.output)
    print(f"wrote {args.output} ({g.num_vertices()} vertices, "
          f"{g.num_edges()} edges)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cpplanar",
        description="planarize redundancy-coexistence graphs and reproduce "
                    "the solver verdict tables")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a graph and report properties")
    p.add_argument("graph")
    p.add_argument("--weak-coexistence", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("planarize", help="run the edge-selection algorithm")
    p.add_argument("graph")
    p.add_argument("--order", default="lex", help="lex or seed:<n>")
    p.add_argument("--trace", help="write the execution trace to this file")
    p.add_argument("-o", "--out", help="write the kept subgraph to this file")
    p.add_argument("--svg", help="write an SVG drawing (kept solid, removed dashed)")
    p.add_argument("--png", help="write a matplotlib rendering")
    p.set_defaults(func=cmd_planarize)

    p = sub.add_parser("simulate", help="run the distributed variant")
    p.add_argument("graph")
    p.add_argument("--priority", default="lex", help="lex or seed:<n>")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("prove", help="emit solver obligations and run them")
    p.add_argument("--tasks", default="all", help="all or comma-separated ids")
    p.add_argument("--solver", help="solver executable (default: "
                                    "$CP_SMT_SOLVER or z3 on PATH)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default="smt-out", help="directory for documents")
    p.add_argument("--timeout", type=float, default=600.0)
    p.add_argument("--plot", help="write a duration bar chart here")
    p.add_argument("--quantified", action="store_true",
                   help="emit quantified documents even for bounded searches")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("gen", help="generate a graph file")
    p.add_argument("model", help="unit_disk | quasi_unit_disk | rcg | fixture")
    p.add_argument("params", nargs="*", help="key=value (or fixture name)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
