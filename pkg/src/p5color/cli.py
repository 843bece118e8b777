"""Command-line front end: solve, check, gen, verify, bench.

Exit codes for ``solve``: 0 SAT, 1 UNSAT, 2 bad input or not P5-free,
3 instance budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from pathlib import Path

from .context import DEFAULT_MAX_INSTANCES, SolveConfig, trace_from_env
from .dimacs import DimacsError, load_dimacs, write_dimacs
from .errors import BudgetExceeded, NotP5Free
from .graph import Graph
from .instance import Instance, full_instance, make_instance, parse_lists, universe_mask
from .solver import k_colourable, solve_list_colouring, verify_colouring
from .structure import find_induced_p5
from .testkit import FAMILIES, GenSpec, generate, read_manifest

EXIT_SAT, EXIT_UNSAT, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def load_instance(graph_path: str, k: int | None, lists_path: str | None) -> tuple[Graph, Instance, int]:
    try:
        g = load_dimacs(graph_path)
    except (OSError, DimacsError) as exc:
        raise InputError(f"cannot read graph: {exc}") from exc
    if lists_path is None:
        if k is None:
            raise InputError("--k is required without --lists")
        return g, full_instance(g, k), k
    try:
        lists = parse_lists(Path(lists_path).read_text(), g.n)
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot read lists: {exc}") from exc
    if k is None:
        k = max((max(lst) for lst in lists if lst), default=0)
    full = tuple(range(1, k + 1))
    try:
        inst = make_instance(g, [full if lst is None else lst for lst in lists], k)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return g, inst, k


def format_colouring(colouring) -> str:
    return "".join(f"{v + 1} {c}\n" for v, c in enumerate(colouring))


def parse_colouring(text: str, n: int) -> list[int]:
    colours = [0] * n
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'v c'")
        v, c = int(fields[0]), int(fields[1])
        if not 1 <= v <= n:
            raise ValueError(f"line {lineno}: vertex {v} out of range")
        colours[v - 1] = c
    return colours


def _report(fields: list[tuple[str, object]]) -> str:
    return "".join(f"{key}: {value}\n" for key, value in fields)


def cmd_solve(args: argparse.Namespace) -> int:
    out = sys.stdout
    try:
        g, inst, k = load_instance(args.input, args.k, args.lists)
    except InputError as exc:
        out.write(_report([("decision", "error"), ("error", "input"), ("message", exc)]))
        return EXIT_INPUT
    cfg = SolveConfig(
        method=args.method,
        validate_input="full_p5_check" if args.validate == "full" else "off",
        max_instances=args.max_instances,
        parallelism=args.jobs,
    )
    trace = None
    if not args.quiet:
        trace = sys.stderr if args.trace else trace_from_env()
    head = [("input", args.input), ("n", g.n), ("m", g.m), ("k", k), ("method", args.method)]
    try:
        decision = solve_list_colouring(inst, cfg, trace)
    except NotP5Free as exc:
        cert = " ".join(str(v + 1) for v in exc.certificate) if exc.certificate else "none"
        out.write(_report(head + [
            ("decision", "error"),
            ("error", "not-p5-free"),
            ("reason", type(exc).__name__),
            ("certificate", cert),
        ]))
        return EXIT_INPUT
    except BudgetExceeded as exc:
        out.write(_report(head + [("decision", "budget-exceeded"), ("max_instances", exc.limit)]))
        return EXIT_BUDGET
    m = decision.metrics
    fields = head + [
        ("decision", decision.status),
        ("instances_created", m.instances_created),
        ("max_depth", m.max_depth),
        ("dominating_searches", m.dominating_searches),
    ]
    if args.timing:
        fields.append(("millis", f"{m.wall_time * 1000:.3f}"))
    if decision.sat:
        assert verify_colouring(inst, decision.colouring)
        if args.output:
            Path(args.output).write_text(format_colouring(decision.colouring))
            fields.append(("colouring", args.output))
            out.write(_report(fields))
        else:
            fields.append(("colouring", "inline"))
            out.write(_report(fields))
            out.write(format_colouring(decision.colouring))
        return EXIT_SAT
    out.write(_report(fields))
    return EXIT_UNSAT


def cmd_check(args: argparse.Namespace) -> int:
    try:
        g = load_dimacs(args.input)
    except (OSError, DimacsError) as exc:
        print(f"error: {exc}")
        return EXIT_INPUT
    cert = find_induced_p5(g)
    if cert is None:
        print("p5_free: yes")
        return 0
    print("p5_free: no")
    print("certificate: " + " ".join(str(v + 1) for v in cert.vertices))
    return 1


def cmd_gen(args: argparse.Namespace) -> int:
    params: dict = {}
    if args.parts:
        params["parts"] = tuple(int(x) for x in args.parts.split(","))
    if args.clique is not None:
        params["clique"] = args.clique
    if args.p is not None:
        params["p"] = args.p
    if args.p_join is not None:
        params["p_join"] = args.p_join
    n = args.n
    if n is None:
        if "parts" not in params:
            print("error: --n is required", file=sys.stderr)
            return EXIT_INPUT
        n = sum(params["parts"])
    spec = GenSpec(args.family, n, args.seed, params)
    text = write_dimacs(generate(spec), comment=spec.describe())
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        if args.lists is None and args.k is None:
            g = load_dimacs(args.graph)
            colours = parse_colouring(Path(args.colouring).read_text(), g.n)
            # no bound given: any positive colour is allowed
            u = universe_mask(max(colours, default=0))
            inst = Instance(g, (u,) * g.n, (0,) * g.n, u)
        else:
            g, inst, _ = load_instance(args.graph, args.k, args.lists)
            colours = parse_colouring(Path(args.colouring).read_text(), g.n)
    except (InputError, OSError, ValueError) as exc:
        print(f"error: {exc}")
        return EXIT_INPUT
    ok = verify_colouring(inst, colours)
    print("valid: yes" if ok else "valid: no")
    return 0 if ok else 1


BENCH_FIELDS = ["graph_id", "n", "m", "method", "decision", "instances_created", "max_depth", "millis"]


def cmd_bench(args: argparse.Namespace) -> int:
    entries = read_manifest(args.corpus)
    methods = ["one", "two"] if args.method == "both" else [args.method]
    sink = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(BENCH_FIELDS)
        for ident, spec in entries:
            g = generate(spec)
            for method in methods:
                cfg = SolveConfig(method=method, max_instances=args.max_instances)
                start = time.perf_counter()
                try:
                    result = k_colourable(g, args.k, cfg)
                    row = [result.status, result.metrics.instances_created, result.metrics.max_depth]
                except BudgetExceeded:
                    row = ["budget-exceeded", "", ""]
                millis = (time.perf_counter() - start) * 1000
                writer.writerow([ident, g.n, g.m, method, *row, f"{millis:.3f}"])
    finally:
        if sink is not sys.stdout:
            sink.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="p5color", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide k-colourability / list colourability")
    p.add_argument("input", help="DIMACS .col graph")
    p.add_argument("--k", type=int)
    p.add_argument("--lists", help="lists file, one 'v: c1 c2 ...' line per vertex")
    p.add_argument("--method", choices=["one", "two"], default="two")
    p.add_argument("--validate", choices=["off", "full"], default="off")
    p.add_argument("--max-instances", type=int, default=DEFAULT_MAX_INSTANCES)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--trace", action="store_true", help="branch trace on stderr")
    p.add_argument("--quiet", action="store_true", help="no trace, even if P5COLOR_TRACE is set")
    p.add_argument("--timing", action="store_true", help="add wall time to the report")
    p.add_argument("-o", "--output", help="write the colouring here instead of stdout")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="test a graph for an induced P5")
    p.add_argument("input")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="generate a P5-free graph")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--parts", help="multipartite part sizes, e.g. 2,2,2")
    p.add_argument("--clique", type=int, help="split: clique size")
    p.add_argument("--p", type=float, help="split / er_rejection edge probability")
    p.add_argument("--p-join", type=float, help="cograph join probability")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a colouring against a graph")
    p.add_argument("graph")
    p.add_argument("colouring", help="one 'v c' line per vertex")
    p.add_argument("--k", type=int)
    p.add_argument("--lists")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run a corpus manifest and emit CSV")
    p.add_argument("--corpus", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=["one", "two", "both"], default="both")
    p.add_argument("--max-instances", type=int, default=DEFAULT_MAX_INSTANCES)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
