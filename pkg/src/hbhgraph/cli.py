"""Command-line front end.

Every command prints a block of ``key=value`` lines followed by its result
lines.  Exit codes: 0 verdict produced (HBH, or a biclique answer),
1 graph outside the class or a forbidden-structure witness, 2 bad input,
3 an internal cross-check failed.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Callable, Optional, Sequence, TextIO

from . import generators
from .baseline import (
    domination_matrix,
    find_induced_c5_slow,
    find_induced_c6_slow,
    find_non_dominated_c4_slow,
)
from .bicliques import PreconditionError, biclique_optimizations, enumerate_report
from .fast import build_sigma, build_u_digraph, find_induced_c5_fast, find_induced_c6_fast
from .graph import Biclique, Graph, GraphInputError
from .io import LabeledGraph, format_graph, read_graph
from .squares import find_triangle
from .witness import HBH, NotInClassError, Witness, WitnessKind, validate_witness

EXIT_OK = 0
EXIT_WITNESS = 1
EXIT_INPUT = 2
EXIT_CHECK = 3


class Stopwatch:
    def __init__(self):
        self.stages: list[tuple[str, float]] = []

    def run(self, name: str, fn: Callable):
        t0 = time.perf_counter()
        res = fn()
        self.stages.append((name, time.perf_counter() - t0))
        return res

    @property
    def total(self) -> float:
        return sum(t for _, t in self.stages)


def _recognize_fast(g: Graph, sw: Stopwatch, counters: dict):
    t = sw.run("triangle", lambda: find_triangle(g))
    if t is not None:
        return Witness(WitnessKind.TRIANGLE, t)
    scan = sw.run("squares", lambda: build_u_digraph(g))
    if isinstance(scan, Witness):
        return scan
    counters["triples"] = scan.stats.triples
    counters["sum_L"] = scan.stats.sum_l
    counters["unsafe"] = scan.stats.unsafe
    sig = sw.run("sigma", lambda: build_sigma(g, None, scan.u, scan.safe))
    w = sw.run("c5", lambda: find_induced_c5_fast(g, None, sig))
    if w is None:
        w = sw.run("c6", lambda: find_induced_c6_fast(g, None, sig))
    return HBH if w is None else w


def _recognize_slow(g: Graph, sw: Stopwatch, counters: dict):
    t = sw.run("triangle", lambda: find_triangle(g))
    if t is not None:
        return Witness(WitnessKind.TRIANGLE, t)
    d = sw.run("matrix", lambda: domination_matrix(g))
    w = sw.run("c4", lambda: find_non_dominated_c4_slow(g, None, d))
    if w is None:
        w = sw.run("c5", lambda: find_induced_c5_slow(g))
    if w is None:
        w = sw.run("c6", lambda: find_induced_c6_slow(g, None, d))
    return HBH if w is None else w


ENGINES = {"fast": _recognize_fast, "slow": _recognize_slow}


def _verdict_line(lg: LabeledGraph, verdict) -> str:
    if verdict == HBH:
        return "HBH"
    return f"NOT_HBH {verdict.kind} " + " ".join(lg.labels_of(verdict.vertices))


def _biclique_line(lg: LabeledGraph, b: Biclique) -> str:
    return " ".join(lg.labels_of(b.left)) + " | " + " ".join(lg.labels_of(b.right))


def _emit(out: TextIO, pairs: Sequence[tuple[str, object]]) -> None:
    for k, v in pairs:
        if isinstance(v, float):
            v = f"{v:.6f}"
        elif isinstance(v, bool):
            v = str(v).lower()
        out.write(f"{k}={v}\n")


def cmd_recognize(args, out: TextIO) -> int:
    lg = read_graph(args.input)
    g = lg.graph
    engines = ["fast", "slow"] if args.engine == "both" else [args.engine]
    verdicts = {}
    header: list[tuple[str, object]] = [("engine", args.engine), ("n", g.n), ("m", g.m)]
    for name in engines:
        sw = Stopwatch()
        counters: dict = {}
        verdicts[name] = ENGINES[name](g, sw, counters)
        for stage, t in sw.stages:
            header.append((f"time_{name}_{stage}", t))
        header.append((f"time_{name}", sw.total))
        header.extend(counters.items())
    _emit(out, header)
    for name, v in verdicts.items():
        if v != HBH and not validate_witness(g, v):
            out.write(f"CHECK_FAILED invalid witness from {name} engine: {_verdict_line(lg, v)}\n")
            return EXIT_CHECK
    if len(verdicts) == 2:
        a, b = verdicts["fast"], verdicts["slow"]
        kind_a = HBH if a == HBH else a.kind
        kind_b = HBH if b == HBH else b.kind
        if kind_a != kind_b:
            out.write(f"DISAGREE\n- fast: {_verdict_line(lg, a)}\n+ slow: {_verdict_line(lg, b)}\n")
            return EXIT_CHECK
    verdict = verdicts[engines[0]]
    out.write(_verdict_line(lg, verdict) + "\n")
    return EXIT_OK if verdict == HBH else EXIT_WITNESS


def _class_error(out: TextIO, lg: LabeledGraph, exc: NotInClassError) -> int:
    out.write("in_class=false\n")
    out.write(_verdict_line(lg, exc.witness) + "\n")
    return EXIT_WITNESS


def cmd_bicliques(args, out: TextIO) -> int:
    lg = read_graph(args.input)
    g = lg.graph
    t0 = time.perf_counter()
    try:
        rep = enumerate_report(g)
    except NotInClassError as exc:
        return _class_error(out, lg, exc)
    elapsed = time.perf_counter() - t0
    _emit(out, [
        ("n", g.n), ("m", g.m), ("in_class", True),
        ("isolated", len(rep.isolated)), ("twin_classes", rep.twin_classes),
        ("edges_S", rep.s_edges), ("edges_D", rep.d_edges),
        ("count", len(rep.bicliques)), ("o", rep.output_size),
        ("time_enumerate", elapsed),
    ])
    for b in rep.bicliques:
        out.write(_biclique_line(lg, b) + "\n")
    if args.check:
        if g.n > 16:
            out.write("check=skipped (more than 16 vertices)\n")
            return EXIT_OK
        from .oracle import oracle_max_bicliques

        want = oracle_max_bicliques(g)
        if want != rep.bicliques:
            missing = sorted(set(want) - set(rep.bicliques))
            extra = sorted(set(rep.bicliques) - set(want))
            out.write("check=failed\n")
            for b in missing:
                out.write("- " + _biclique_line(lg, b) + "\n")
            for b in extra:
                out.write("+ " + _biclique_line(lg, b) + "\n")
            return EXIT_CHECK
        out.write("check=ok\n")
    return EXIT_OK


def cmd_solve(args, out: TextIO) -> int:
    lg = read_graph(args.input)
    g = lg.graph
    try:
        rep = biclique_optimizations(g, args.k)
    except NotInClassError as exc:
        return _class_error(out, lg, exc)
    value = {"balanced": rep.balanced, "max-vertex": rep.max_vertex, "max-edge": rep.max_edge}[args.problem]
    _emit(out, [("n", g.n), ("m", g.m), ("problem", args.problem), ("k", args.k)])
    out.write((str(value).lower() if isinstance(value, bool) else str(value)) + "\n")
    return EXIT_OK


def cmd_gen(args, out: TextIO) -> int:
    g = generators.generate(args.family, args.params, args.seed)
    out.write(format_graph(g))
    return EXIT_OK


def _bench_graph(family: str, n: int, seed: int, pn: float) -> Graph:
    if family == "random-hbh":
        return generators.random_hbh(n, seed)
    if family == "random-bipartite":
        return generators.random_bipartite(n, min(1.0, pn / max(n, 1)), seed)
    if family == "tree":
        return generators.tree(n, seed)
    if family == "empty":
        return generators.path(0)
    raise ValueError(f"bench does not support family {family!r}")


def cmd_bench(args, out: TextIO) -> int:
    engines = ["fast", "slow"] if args.engine == "both" else [args.engine]
    out.write(f"family={args.family}\nengine={args.engine}\nrepeat={args.repeat}\n")
    cols = ["n", "m", "engine", "verdict", "time", "triangle", "squares_or_c4", "c5", "c6", "triples", "sum_L"]
    out.write("\t".join(cols) + "\n")
    for n in args.sizes:
        g = _bench_graph(args.family, n, args.seed, args.pn)
        for name in engines:
            best: Optional[Stopwatch] = None
            counters: dict = {}
            verdict = None
            for _ in range(args.repeat):
                sw = Stopwatch()
                verdict = ENGINES[name](g, sw, counters)
                if best is None or sw.total < best.total:
                    best = sw
            assert best is not None
            st = dict(best.stages)
            mid = st.get("squares", 0.0) + st.get("sigma", 0.0) if name == "fast" else \
                st.get("matrix", 0.0) + st.get("c4", 0.0)
            row = [str(g.n), str(g.m), name, "HBH" if verdict == HBH else str(verdict.kind),
                   f"{best.total:.4f}", f"{st.get('triangle', 0.0):.4f}", f"{mid:.4f}",
                   f"{st.get('c5', 0.0):.4f}", f"{st.get('c6', 0.0):.4f}",
                   str(counters.get("triples", "")), str(counters.get("sum_L", ""))]
            out.write("\t".join(row) + "\n")
            out.flush()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hbhgraph", description="Hereditary biclique-Helly graph tools.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("recognize", help="decide membership and print a witness if not HBH")
    r.add_argument("input", help="edge-list file, or - for stdin")
    r.add_argument("--engine", choices=["fast", "slow", "both"], default="fast")
    r.set_defaults(func=cmd_recognize)

    b = sub.add_parser("bicliques", help="list the maximal bicliques of an in-class graph")
    b.add_argument("input")
    b.add_argument("--check", action="store_true", help="compare with brute force (n <= 16)")
    b.set_defaults(func=cmd_bicliques)

    s = sub.add_parser("solve", help="balanced / maximum-vertex / maximum-edge biclique")
    s.add_argument("input")
    s.add_argument("--problem", choices=["balanced", "max-vertex", "max-edge"], required=True)
    s.add_argument("--k", type=int, default=1, help="side size for --problem balanced")
    s.set_defaults(func=cmd_solve)

    gp = sub.add_parser("gen", help="write a generated graph as an edge list")
    gp.add_argument("family", choices=generators.FAMILIES)
    gp.add_argument("params", nargs="*")
    gp.add_argument("--seed", type=int, default=0)
    gp.set_defaults(func=cmd_gen)

    bp = sub.add_parser("bench", help="time the recognition engines over a size sweep")
    bp.add_argument("--family", choices=["random-hbh", "random-bipartite", "tree", "empty"], default="random-hbh")
    bp.add_argument("--sizes", type=int, nargs="+", default=[1000, 2000, 4000])
    bp.add_argument("--engine", choices=["fast", "slow", "both"], default="fast")
    bp.add_argument("--seed", type=int, default=0)
    bp.add_argument("--repeat", type=int, default=3, help="keep the best of this many runs")
    bp.add_argument("--pn", type=float, default=8.0, help="p*n for random-bipartite (fixed average degree)")
    bp.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "k", 1) < 1:
        print("error: --k must be a positive integer", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args, out)
    except (GraphInputError, PreconditionError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
