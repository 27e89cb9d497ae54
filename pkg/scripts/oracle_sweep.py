"""Compare the algorithmic rank with the partition formula and the matrix oracle on random graphs.

    python3 scripts/oracle_sweep.py --graphs 500 --max-edges 8
"""
from __future__ import annotations

import argparse
import random
from dataclasses import dataclass

from pointline.graph import PointLineGraph, VertexKind
from pointline.numeric import matrix_rank_oracle
from pointline.rigidity import rank, rank_formula_oracle


@dataclass
class SweepConfig:
    graphs: int = 500
    max_edges: int = 8
    max_vertices: int = 7
    seed: int = 0
    trials: int = 5


def random_graph(rng: random.Random, cfg: SweepConfig) -> PointLineGraph:
    n = rng.randint(2, cfg.max_vertices)
    n_points = rng.randint(0, n)
    names = tuple(f"u{i + 1}" for i in range(n_points)) + tuple(f"v{i + 1}" for i in range(n - n_points))
    kinds = (VertexKind.POINT,) * n_points + (VertexKind.LINE,) * (n - n_points)
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    edges = rng.sample(pairs, min(len(pairs), rng.randint(0, cfg.max_edges)))
    return PointLineGraph(names, kinds, tuple(edges))


def sweep(cfg: SweepConfig) -> list[tuple[int, PointLineGraph, tuple[int, int, int]]]:
    rng = random.Random(cfg.seed)
    bad = []
    for s in range(cfg.graphs):
        g = random_graph(rng, cfg)
        values = (rank(g), rank_formula_oracle(g, limit=cfg.max_edges),
                  matrix_rank_oracle(g, trials=cfg.trials, seed=s))
        if len(set(values)) != 1:
            bad.append((s, g, values))
    return bad


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graphs", type=int, default=500)
    ap.add_argument("--max-edges", type=int, default=8)
    ap.add_argument("--max-vertices", type=int, default=7)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    cfg = SweepConfig(a.graphs, a.max_edges, a.max_vertices, a.seed)
    bad = sweep(cfg)
    for s, g, values in bad:
        print(f"sample {s}: algorithm/formula/matrix = {values}; edges {g.edges}")
    print(f"{cfg.graphs} graphs, {len(bad)} mismatches")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
