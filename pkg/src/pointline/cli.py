"""Command-line interface.

Exit codes: 0 success, 2 bad input, 3 oracle size limit exceeded, 4 internal
invariant violation.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import numeric
from .graph import GraphFormatError, PointLineGraph, VertexKind, load_graph, serialize_graph, serialize_json
from .orient import InvariantViolation
from .rigidity import (LimitExceeded, greedy_basis, is_independent, rank_formula_oracle,
                       subset_count_oracle)

EXIT_INPUT, EXIT_LIMIT, EXIT_INVARIANT = 2, 3, 4


class InputError(ValueError):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _edge_list(text: str | None, g: PointLineGraph) -> list[int]:
    if text is None:
        return list(range(g.num_edges))
    try:
        edges = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InputError(f"bad edge list {text!r}") from exc
    for e in edges:
        if not 0 <= e < g.num_edges:
            raise InputError(f"edge {e} out of range")
    return edges


def _basis(g):
    st = greedy_basis(g)
    st.certificate.check()
    return st


def cmd_rank(args) -> None:
    g = load_graph(args.path)
    st = _basis(g)
    n = g.num_vertices
    r = len(st)
    rigid = n <= 1 or r == 2 * n - 3
    text = f"rank: {r}\nrigid: {'yes' if rigid else 'no'}\n"
    if args.certificate:
        text += st.certificate.dump()
    _emit(args, {"rank": r, "rigid": rigid, "certificate": st.certificate.to_dict()}, text)


def cmd_rigid(args) -> None:
    g = load_graph(args.path)
    n = g.num_vertices
    rigid = n <= 1 or len(_basis(g)) == 2 * n - 3
    _emit(args, {"rigid": rigid}, f"rigid: {'yes' if rigid else 'no'}")


def cmd_independent(args) -> None:
    g = load_graph(args.path)
    edges = _edge_list(args.edges, g)
    ok = is_independent(g, edges)
    _emit(args, {"independent": ok, "edges": sorted(edges)}, f"independent: {'yes' if ok else 'no'}")


def cmd_circuit(args) -> None:
    g = load_graph(args.path)
    e = args.edge
    if not 0 <= e < g.num_edges:
        raise InputError(f"edge {e} out of range")
    st = greedy_basis(g, [f for f in range(g.num_edges) if f != e])
    if st.test(e):
        _emit(args, {"edge": e, "circuit": None}, f"edge {e} is not spanned by the other edges: no circuit")
        return
    c = st.circuit(e)
    _emit(args, {"edge": e, "circuit": c}, "circuit: " + " ".join(map(str, c)))


def cmd_certificate(args) -> None:
    g = load_graph(args.path)
    st = _basis(g)
    payload = {"accepted": sorted(st.accepted), "certificate": st.certificate.to_dict()}
    text = "accepted: " + " ".join(map(str, sorted(st.accepted))) + "\n" + st.certificate.dump()
    if args.partition:
        value, parts = rank_formula_oracle(g, limit=args.limit, with_partition=True)
        payload["partition"] = parts
        payload["formula_rank"] = value
        text += "partition: " + " | ".join(" ".join(map(str, p)) for p in parts) + "\n"
    _emit(args, payload, text)


def cmd_oracle(args) -> None:
    g = load_graph(args.path)
    if args.method == "matrix":
        r = numeric.matrix_rank_oracle(g, trials=args.trials, seed=args.seed)
        _emit(args, {"method": "matrix", "rank": r}, f"rank: {r}")
    elif args.method == "formula":
        limit = args.limit if args.limit is not None else 10
        r, parts = rank_formula_oracle(g, limit=limit, with_partition=True)
        text = f"rank: {r}\npartition: " + " | ".join(" ".join(map(str, p)) for p in parts)
        _emit(args, {"method": "formula", "rank": r, "partition": parts}, text)
    else:
        limit = args.limit if args.limit is not None else 16
        ok = subset_count_oracle(g, limit=limit)
        _emit(args, {"method": "counts", "pass": ok}, f"necessary counts: {'pass' if ok else 'fail'}")


def cmd_dump_matrix(args) -> None:
    g = load_graph(args.path)
    kind = args.kind
    if kind in ("R", "J"):
        p = numeric.random_realization(g, args.seed)
        if kind == "R":
            out = numeric.rigidity_matrix_R(g, p).to_csv()
        else:
            out = numeric.jacobian_csv(g, numeric.jacobian_J(g, p))
    else:
        try:
            frame = numeric.random_frame(g, args.seed)
            A, B, C = numeric.frame_matrices(frame)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        out = {"A": A, "B": B, "C": C}[kind].to_csv()
    sys.stdout.write(out)


def cmd_dot(args) -> None:
    g = load_graph(args.path)
    if args.part == "graph":
        sys.stdout.write(graph_dot(g))
        return
    st = greedy_basis(g)
    part = st.certificate.T if args.part == "T" else st.certificate.S
    sys.stdout.write(part.dot())


def graph_dot(g: PointLineGraph) -> str:
    out = ["graph pointline {"]
    for v, name in enumerate(g.names):
        style = "filled" if g.is_point(v) else "solid"
        out.append(f"  {name} [shape=circle, style={style}, fillcolor=black, fontcolor=red];")
    for u, v in g.edges:
        out.append(f"  {g.names[u]} -- {g.names[v]};")
    out.append("}")
    return "\n".join(out) + "\n"


def generate(points: int, lines: int, edges: int, seed: int) -> PointLineGraph:
    if min(points, lines, edges) < 0:
        raise InputError("counts must be non-negative")
    n = points + lines
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    if edges > len(pairs):
        raise InputError(f"{edges} edges exceed the simple-graph capacity {len(pairs)}")
    names = tuple(f"u{i + 1}" for i in range(points)) + tuple(f"v{i + 1}" for i in range(lines))
    kinds = (VertexKind.POINT,) * points + (VertexKind.LINE,) * lines
    chosen = random.Random(seed).sample(pairs, edges)
    return PointLineGraph(names, kinds, tuple(chosen))


def cmd_gen(args) -> None:
    g = generate(args.points, args.lines, args.edges, args.seed)
    sys.stdout.write(serialize_json(g) + "\n" if args.json else serialize_graph(g))


def bench(sizes, seed: int, density: int = 5) -> list[dict]:
    rows = []
    for n in sizes:
        g = generate(n // 2, n - n // 2, min(density * n, n * (n - 1) // 2), seed)
        t0 = time.perf_counter()
        r = len(greedy_basis(g))
        ms = (time.perf_counter() - t0) * 1000
        rows.append({"vertices": n, "edges": g.num_edges, "rank": r, "ms": round(ms, 3)})
    return rows


def cmd_bench(args) -> None:
    try:
        sizes = [int(x) for x in args.sizes.split(",") if x.strip()]
    except ValueError as exc:
        raise InputError(f"bad size list {args.sizes!r}") from exc
    rows = bench(sizes, args.seed, args.density)
    if args.json:
        sys.stdout.write(json.dumps(rows) + "\n")
        return
    lines = ["|V|\t|E|\tms"] + [f"{r['vertices']}\t{r['edges']}\t{r['ms']:.1f}" for r in rows]
    sys.stdout.write("\n".join(lines) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pointline",
                                     description="Generic rigidity of 2D point-line frameworks.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, help_, path=True):
        p = sub.add_parser(name, help=help_)
        if path:
            p.add_argument("path")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = verb("rank", cmd_rank, "rank of the rigidity matroid and rigidity verdict")
    p.add_argument("--certificate", action="store_true", help="also print the T/S partition")
    verb("rigid", cmd_rigid, "generic rigidity verdict")
    p = verb("independent", cmd_independent, "independence of an edge set")
    p.add_argument("--edges", help="comma-separated edge indices (default: all)")
    p = verb("circuit", cmd_circuit, "circuit closed by an edge against the other edges")
    p.add_argument("edge", type=int)
    p = verb("certificate", cmd_certificate, "maximal independent set with its T/S certificate")
    p.add_argument("--partition", action="store_true", help="add a minimizing partition (small graphs)")
    p.add_argument("--limit", type=int, default=10)
    p = verb("oracle", cmd_oracle, "brute-force and linear-algebra oracles")
    p.add_argument("--method", choices=("matrix", "formula", "counts"), default="matrix")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--limit", type=int)
    p = verb("dump-matrix", cmd_dump_matrix, "write R, J, A, B or C as CSV")
    p.add_argument("--dump-matrix", "--kind", dest="kind", choices=("R", "J", "A", "B", "C"), default="R")
    p.add_argument("--seed", type=int, default=0)
    p = verb("dot", cmd_dot, "DOT export of the graph or of an orientation")
    p.add_argument("--part", choices=("graph", "T", "S"), default="graph")
    p = verb("gen", cmd_gen, "random graph file", path=False)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--lines", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p = verb("bench", cmd_bench, "time rank() on random graphs", path=False)
    p.add_argument("--sizes", default="")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", type=int, default=5, help="edges per vertex")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (GraphFormatError, InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    return 0


if __name__ == "__main__":
    sys.exit(main())
