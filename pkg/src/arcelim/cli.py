"""Command-line front end: generate graphs, run traversals, verify against
the sequential references, and emit cost-model benchmark tables.

Exit codes are fixed for scripting: 0 success, 1 verification mismatch,
2 bad input (unparsable file, invalid parameters, I/O failure).
"""
from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, TextIO

from . import generators
from .elim import ElimGraph
from .engine import SIMULATED, THREADED, CostReport, ParEngine
from .errors import GraphError
from .graph import Graph, parse_edge_list, serialize_edge_list
from .traverse import BFS, DFS, KINDS, bfs, dfs, verify_against_oracle

CSV_COLUMNS = (
    "family",
    "n",
    "m",
    "p",
    "mode",
    "kind",
    "time_steps",
    "sync_steps_build",
    "sync_steps_traverse",
    "work",
    "seq_steps",
    "wall_nanos",
    "speedup_model",
)


@dataclass(frozen=True)
class BenchRecord:
    """One benchmark measurement: one graph, one traversal, one p."""

    family: str
    n: int
    m: int
    p: int
    mode: str
    kind: str
    time_steps: int
    sync_steps_build: int
    sync_steps_traverse: int
    work: int
    seq_steps: int
    wall_nanos: Optional[int]  # threaded mode only
    speedup_model: float  # time_steps(p=1) / time_steps(p)

    def as_row(self) -> list[str]:
        row = []
        for name in CSV_COLUMNS:
            value = getattr(self, name)
            if name == "speedup_model":
                row.append("%.6f" % value)
            elif value is None:
                row.append("")
            else:
                row.append(str(value))
        return row


def _read_graph(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_edge_list(text)


def _out_stream(path: str) -> TextIO:
    return sys.stdout if path == "-" else open(path, "w")


def _parse_ints(text: str, flag: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"{flag} expects comma-separated integers, got {text!r}")
    if not values:
        raise ValueError(f"{flag} must name at least one value")
    return values


def _parse_kinds(text: str) -> list[str]:
    if text == "both":
        return list(KINDS)
    kinds = [tok for tok in text.split(",") if tok]
    for kind in kinds:
        if kind not in KINDS:
            raise ValueError(f"unknown traversal kind {kind!r} (use dfs, bfs, or both)")
    return kinds


# -- gen -----------------------------------------------------------------------


def _generate(args: argparse.Namespace) -> Graph:
    family = args.family
    if family == "sample9":
        return generators.sample9()
    if family == "gnm":
        if args.n is None or args.m is None:
            raise ValueError("gnm needs --n and --m")
        return generators.gnm(args.n, args.m, args.seed)
    if family == "layered_dag":
        if args.width is None or args.depth is None:
            raise ValueError("layered_dag needs --width and --depth")
        return generators.layered_dag(args.width, args.depth, args.seed)
    if args.n is None:
        raise ValueError(f"{family} needs --n")
    return getattr(generators, family)(args.n)


def cmd_gen(args: argparse.Namespace) -> int:
    g = _generate(args)
    out = _out_stream(args.out)
    try:
        out.write(serialize_edge_list(g))
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


# -- run -----------------------------------------------------------------------


def _run_traversal(
    g: Graph, kind: str, start: int, a0: int, procs: int, mode: str, trace=None
):
    """Build the search structure and run one traversal on one engine.

    Returns (result, build-phase report, total report, wall nanoseconds).
    """
    with ParEngine(procs, backend=mode) as engine:
        t0 = time.perf_counter_ns()
        eg = ElimGraph.build(g, engine)
        build = engine.report()
        run = dfs if kind == DFS else bfs
        result = run(eg, start, a0, engine, trace)
        wall = time.perf_counter_ns() - t0
        total = engine.report()
    return result, build, total, wall


def cmd_run(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    trace = (lambda line: print(line, file=sys.stderr)) if args.trace else None
    result, build, total, _ = _run_traversal(
        g, args.kind, args.start, args.a0, args.procs, args.mode, trace
    )
    sys.stdout.write(result.serialize())
    sys.stdout.write("\n")
    sys.stdout.write(total.as_kv_block())
    sys.stdout.write(f"\nsync_steps_build={build.sync_steps}")
    sys.stdout.write(f"\nsync_steps_traverse={total.sync_steps - build.sync_steps}\n")
    return 0


# -- verify --------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    if g.num_vertices == 0:
        print("empty graph: nothing to verify", file=sys.stderr)
        return 0
    starts = (
        range(g.num_vertices)
        if args.starts == "all"
        else _parse_ints(args.starts, "--starts")
    )
    kinds = _parse_kinds(args.kinds)
    checked = 0
    failed = 0
    for s in starts:
        for kind in kinds:
            report = verify_against_oracle(g, s, kind, args.procs, args.mode)
            checked += 1
            if not report.ok:
                failed += 1
                first = report.mismatches[0]
                print(f"MISMATCH kind={kind} start={s}: {first}")
    if failed:
        print(f"{failed} of {checked} runs disagreed with the sequential reference")
        return 1
    print(f"OK: {checked} runs match the sequential reference")
    return 0


# -- bench ---------------------------------------------------------------------


def _bench_graph(family: str, token: str, seed: int) -> Graph:
    if family == "gnm":
        n_text, _, m_text = token.partition(":")
        if not m_text:
            raise ValueError(f"gnm size {token!r} should look like n:m")
        return generators.gnm(int(n_text), int(m_text), seed)
    if family == "layered_dag":
        w_text, _, d_text = token.partition("x")
        if not d_text:
            raise ValueError(f"layered_dag size {token!r} should look like WIDTHxDEPTH")
        return generators.layered_dag(int(w_text), int(d_text), seed)
    return getattr(generators, family)(int(token))


def cmd_bench(args: argparse.Namespace) -> int:
    procs = _parse_ints(args.procs, "--procs")
    kinds = _parse_kinds(args.kinds)
    sizes = [tok for tok in args.sizes.split(",") if tok]
    if not sizes:
        raise ValueError("--sizes must name at least one size")
    records: list[BenchRecord] = []
    for token in sizes:
        g = _bench_graph(args.family, token, args.seed)
        for kind in kinds:
            runs: dict[int, tuple] = {}
            for p in {1, *procs}:
                runs[p] = _run_traversal(g, kind, args.start, 0, p, args.mode)
            base_time = runs[1][2].time_steps
            for p in procs:
                _, build, total, wall = runs[p]
                records.append(
                    BenchRecord(
                        family=args.family,
                        n=g.num_vertices,
                        m=g.num_arcs,
                        p=p,
                        mode=args.mode,
                        kind=kind,
                        time_steps=total.time_steps,
                        sync_steps_build=build.sync_steps,
                        sync_steps_traverse=total.sync_steps - build.sync_steps,
                        work=total.work,
                        seq_steps=total.seq_steps,
                        wall_nanos=wall if args.mode == THREADED else None,
                        speedup_model=base_time / total.time_steps,
                    )
                )
    out = _out_stream(args.out)
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for record in records:
            writer.writerow(record.as_row())
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arcelim",
        description="Ordered parallel DFS/BFS by arc elimination: generate, run, verify, bench.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a graph and write its edge list")
    gen.add_argument(
        "--family",
        required=True,
        choices=["gnm", "complete", "path", "star_out", "layered_dag", "sample9"],
    )
    gen.add_argument("--n", type=int)
    gen.add_argument("--m", type=int)
    gen.add_argument("--width", type=int)
    gen.add_argument("--depth", type=int)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", default="-", help="output path, - for stdout")
    gen.set_defaults(func=cmd_gen)

    run = sub.add_parser("run", help="run one traversal, print result and costs")
    run.add_argument("kind", choices=list(KINDS))
    run.add_argument("input", help="edge-list path, - for stdin")
    run.add_argument("--start", type=int, default=0)
    run.add_argument("--a0", type=int, default=0, help="first traversal number")
    run.add_argument("--procs", type=int, default=1)
    run.add_argument("--mode", choices=[SIMULATED, THREADED], default=SIMULATED)
    run.add_argument(
        "--trace", action="store_true", help="log each visit to stderr as it happens"
    )
    run.set_defaults(func=cmd_run)

    verify = sub.add_parser(
        "verify", help="check traversals against the sequential references"
    )
    verify.add_argument("input", help="edge-list path, - for stdin")
    verify.add_argument("--kinds", default="both", help="dfs, bfs, or both")
    verify.add_argument("--starts", default="all", help="comma-separated ids, or all")
    verify.add_argument("--procs", type=int, default=1)
    verify.add_argument("--mode", choices=[SIMULATED, THREADED], default=SIMULATED)
    verify.set_defaults(func=cmd_verify)

    bench = sub.add_parser("bench", help="emit a CSV of cost-model measurements")
    bench.add_argument(
        "--family",
        required=True,
        choices=["gnm", "complete", "path", "star_out", "layered_dag"],
    )
    bench.add_argument(
        "--sizes",
        required=True,
        help="comma-separated: n, n:m for gnm, WIDTHxDEPTH for layered_dag",
    )
    bench.add_argument("--procs", default="1,2,4,8", help="comma-separated p values")
    bench.add_argument("--kinds", default="both", help="dfs, bfs, or both")
    bench.add_argument("--mode", choices=[SIMULATED, THREADED], default=SIMULATED)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--start", type=int, default=0)
    bench.add_argument("--out", default="-", help="CSV path, - for stdout")
    bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits on --help and on bad flags
        return int(exc.code or 0)
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
