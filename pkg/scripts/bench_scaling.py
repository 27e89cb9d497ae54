"""Time rank() across graph sizes and fit the log-log scaling slope.

    python3 scripts/bench_scaling.py --sizes 50,100,200,400 --repeats 2
"""
from __future__ import annotations

import argparse
import math
from dataclasses import dataclass

import numpy as np

from pointline.cli import bench


@dataclass
class BenchConfig:
    sizes: tuple[int, ...] = (50, 100, 200, 400)
    density: int = 5
    seed: int = 0
    repeats: int = 2


def run(cfg: BenchConfig) -> tuple[list[dict], float]:
    rows = []
    for n in cfg.sizes:
        trials = [bench([n], cfg.seed, cfg.density)[0] for _ in range(cfg.repeats)]
        rows.append(min(trials, key=lambda r: r["ms"]))
    slope = float("nan")
    if len(rows) >= 2:
        slope = float(np.polyfit([math.log(r["vertices"]) for r in rows],
                                 [math.log(r["ms"]) for r in rows], 1)[0])
    return rows, slope


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="50,100,200,400")
    ap.add_argument("--density", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeats", type=int, default=2)
    a = ap.parse_args()
    cfg = BenchConfig(tuple(int(x) for x in a.sizes.split(",")), a.density, a.seed, a.repeats)
    rows, slope = run(cfg)
    print("|V|\t|E|\trank\tms")
    for r in rows:
        print(f"{r['vertices']}\t{r['edges']}\t{r['rank']}\t{r['ms']:.1f}")
    print(f"log-log slope: {slope:.2f}")


if __name__ == "__main__":
    main()
