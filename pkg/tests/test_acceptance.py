"""Acceptance gate: one check per criterion, each reporting a PASS/FAIL line.

Run directly with ``python3 tests/test_acceptance.py`` for the summary alone,
or through pytest, which prints the same lines in a terminal section.
"""
from __future__ import annotations

import contextlib
import io
import itertools
import math
import random
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES, FIXTURES, fixture_graph
from oracles import (count_independent, graph_components, random_graph, random_mixed_graph,
                     with_parallel_copies)
from pointline.cli import bench, main
from pointline.numeric import (Realization, frame_matrices, jacobian_J, matrix_rank_oracle, numeric_rank,
                               random_frame, random_realization, realization_from_vector,
                               realization_vector, rigidity_map, rigidity_matrix_R)
from pointline.orient import CountParams, OrientationState, count_rank
from pointline.rigidity import is_rigid, lovasz_yemini_rank, rank, rank_formula_oracle
from pointline.union import union_rank


def _cli(*argv) -> str:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main([str(a) for a in argv])
    assert code == 0
    return buf.getvalue()


def criterion_1():
    t0 = time.perf_counter()
    out = _cli("rank", FIXTURES / "three_blocks.txt")
    rigid = _cli("rigid", FIXTURES / "three_blocks.txt")
    elapsed = time.perf_counter() - t0
    r = int(out.splitlines()[0].split(": ")[1])
    oracle = matrix_rank_oracle(fixture_graph("three_blocks.txt"), trials=5)
    verdict = rigid.strip().split(": ")[1]
    ok = r <= 14 and verdict == "no" and r == oracle == 14 and elapsed < 1.0
    return ok, f"rank={r} oracle={oracle} rigid={verdict} time={elapsed:.3f}s"


def criterion_2():
    g = fixture_graph("k33.txt")
    t0 = time.perf_counter()
    r, rigid = rank(g), is_rigid(g)
    elapsed = time.perf_counter() - t0
    return r == 9 and rigid and elapsed < 1.0, f"rank={r} rigid={rigid} time={elapsed:.3f}s"


def criterion_3():
    rng = random.Random(3)
    bad_lines = bad_points = 0
    for _ in range(200):
        n = rng.randint(1, 12)
        g = random_graph(rng, 0, n, rng.randint(0, n * (n - 1) // 2))
        bad_lines += rank(g) != n - graph_components(n, g.edges)
    for _ in range(200):
        g = random_graph(rng, rng.randint(2, 7), 0, rng.randint(0, 8))
        bad_points += rank(g) != lovasz_yemini_rank(g)
    ok = bad_lines == 0 and bad_points == 0
    return ok, f"pure-line mismatches={bad_lines}/200 point-only mismatches={bad_points}/200"


def criterion_4():
    rng = random.Random(4)
    t0 = time.perf_counter()
    mismatches = 0
    classes = set()
    for s in range(1000):
        g = random_mixed_graph(rng, max_edges=8, max_vertices=7)
        classes.update(g.edge_class(e) for e in range(g.num_edges))
        a = rank(g)
        b = rank_formula_oracle(g)
        c = matrix_rank_oracle(g, trials=5, seed=s)
        mismatches += not (a == b == c)
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 300 and len(classes) == 3
    return ok, f"graphs=1000 mismatches={mismatches} time={elapsed:.1f}s"


def _fd_jacobian(g, vec, h=1e-6):
    out = np.zeros((g.num_edges, len(vec)))
    for col in range(len(vec)):
        up, down = vec.copy(), vec.copy()
        up[col] += h
        down[col] -= h
        out[:, col] = (rigidity_map(g, realization_from_vector(g, up))
                       - rigidity_map(g, realization_from_vector(g, down))) / (2 * h)
    return out


def criterion_5():
    rng = random.Random(5)
    rank_bad = fd_bad = 0
    worst = 0.0
    for s in range(100):
        g = random_mixed_graph(rng, max_edges=14, max_vertices=8)
        p = random_realization(g, s, bound=10**6, denominator=10**6)
        rank_bad += numeric_rank(jacobian_J(g, p)) != rigidity_matrix_R(g, p).rank()
        q = Realization(tuple((rng.uniform(1, 100), rng.uniform(1, 100)) for _ in range(g.num_vertices)))
        J, fd = jacobian_J(g, q), _fd_jacobian(g, realization_vector(g, q))
        for row_j, row_fd in zip(J, fd):
            err = np.linalg.norm(row_fd - row_j) / np.linalg.norm(row_j)
            worst = max(worst, err)
            fd_bad += err > 1e-4
    ok = rank_bad == 0 and fd_bad == 0
    return ok, f"rank mismatches={rank_bad}/100 fd rows over 1e-4={fd_bad} worst rel err={worst:.2e}"


def criterion_6():
    rng = random.Random(6)
    bad_c = bad_a = 0
    for s in range(200):
        g = random_graph(rng, rng.randint(1, 4), rng.randint(1, 4), rng.randint(1, 8), allowed=("PL",))
        if g.num_edges < 8 and rng.random() < 0.5:
            g = with_parallel_copies(rng, g, rng.randint(1, 8 - g.num_edges))
        A, _, C = frame_matrices(random_frame(g, s))
        bad_c += C.rank() != count_rank(g, CountParams(2, 1, 2))
        bad_a += A.rank() != union_rank(g)
    return bad_c == 0 and bad_a == 0, f"C mismatches={bad_c}/200 A mismatches={bad_a}/200"


CIRCUIT_PARAMS = [(2, 1, 2), (0, 1, 0), (2, 1, 1), (1, 1, 1), (2, 2, 3), (1, 1, 2), (3, 2, 4)]


def criterion_7():
    rng = random.Random(7)
    rejected = failures = 0
    for i, j, k in CIRCUIT_PARAMS:
        params = CountParams(i, j, k)
        for _ in range(12):
            g = random_mixed_graph(rng, max_edges=5, max_vertices=4)
            g = with_parallel_copies(rng, g, rng.randint(0, 6 - g.num_edges))
            m = g.num_edges
            for size in range(m + 1):
                for I in itertools.combinations(range(m), size):
                    if not count_independent(g, I, i, j, k):
                        continue
                    for e in set(range(m)) - set(I):
                        st = OrientationState(g, params)
                        for f in I:
                            assert st.try_insert(f) is None
                        report = st.try_insert(e)
                        dependent = not count_independent(g, I + (e,), i, j, k)
                        if report is None:
                            failures += dependent
                            continue
                        rejected += 1
                        c = report.circuit
                        n_p, n_l = g.induced_counts(c)
                        good = (dependent and e in c and set(c) - {e} <= set(I)
                                and len(c) == i * n_p + j * n_l - k + 1
                                and not count_independent(g, c, i, j, k)
                                and all(count_independent(g, sub, i, j, k)
                                        for r in range(len(c)) for sub in itertools.combinations(c, r)))
                        failures += not good
    return failures == 0 and rejected > 0, f"rejections checked={rejected} failures={failures}"


def criterion_8():
    rows = {}
    for n in (50, 100, 200, 400):
        rows[n] = min(bench([n], seed=8)[0]["ms"] for _ in range(2))
    big = bench([200], seed=8)[0]
    slope = np.polyfit([math.log(n) for n in rows], [math.log(t) for t in rows.values()], 1)[0]
    ok = big["edges"] == 1000 and big["ms"] < 10_000 and slope <= 3.2
    timings = " ".join(f"{n}:{t:.0f}ms" for n, t in rows.items())
    return ok, f"|V|=200,|E|=1000 in {big['ms'] / 1000:.2f}s; slope={slope:.2f}; {timings}"


CRITERIA = [
    (1, "three-block graph rank and rigidity", criterion_1),
    (2, "K3,3 rank and rigidity", criterion_2),
    (3, "pure-line and point-only specializations", criterion_3),
    (4, "three-way oracle equivalence", criterion_4),
    (5, "Jacobian rank and finite differences", criterion_5),
    (6, "frame-matrix representation", criterion_6),
    (7, "fundamental circuit identity", criterion_7),
    (8, "performance envelope", criterion_8),
]


def _run(number: int, title: str, check) -> tuple[bool, str]:
    ok, detail = check()
    line = f"criterion {number} ({title}): {'PASS' if ok else 'FAIL'} | {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok, line


@pytest.mark.parametrize("number, title, check", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check):
    ok, line = _run(number, title, check)
    assert ok, line


if __name__ == "__main__":
    results = [_run(*c)[0] for c in CRITERIA]
    raise SystemExit(0 if all(results) else 1)
