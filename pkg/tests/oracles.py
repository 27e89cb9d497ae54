"""Brute-force reference implementations used only by the test suite.

Everything here is deliberately naive (subset or partition enumeration,
plain Fraction elimination) and shares no code with the package internals
beyond the graph data model.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Sequence

from pointline.graph import PointLineGraph, VertexKind


# -- random graphs ------------------------------------------------------------

def random_graph(rng: random.Random, n_points: int, n_lines: int, n_edges: int,
                 allowed=("PP", "PL", "LL")) -> PointLineGraph:
    """Uniform simple graph over the vertex pairs whose class is in ``allowed``."""
    names = tuple(f"u{i + 1}" for i in range(n_points)) + tuple(f"v{i + 1}" for i in range(n_lines))
    kinds = (VertexKind.POINT,) * n_points + (VertexKind.LINE,) * n_lines
    n = n_points + n_lines
    pairs = []
    for a, b in itertools.combinations(range(n), 2):
        cls = ("LL", "PL", "PP")[(a < n_points) + (b < n_points)]
        if cls in allowed:
            pairs.append((a, b) if rng.random() < 0.5 else (b, a))
    n_edges = min(n_edges, len(pairs))
    return PointLineGraph(names, kinds, tuple(rng.sample(pairs, n_edges)))


def random_mixed_graph(rng: random.Random, max_edges: int = 8, max_vertices: int = 7) -> PointLineGraph:
    n = rng.randint(2, max_vertices)
    n_points = rng.randint(0, n)
    return random_graph(rng, n_points, n - n_points, rng.randint(0, max_edges))


def with_parallel_copies(rng: random.Random, g: PointLineGraph, copies: int) -> PointLineGraph:
    for _ in range(copies):
        if g.num_edges == 0:
            break
        g, _ = g.add_parallel_copy(rng.randrange(g.num_edges))
    return g


# -- count matroids -------------------------------------------------------------

def counts(g: PointLineGraph, edges) -> tuple[int, int]:
    vs = {v for e in edges for v in g.edges[e]}
    n_p = sum(1 for v in vs if g.kinds[v] is VertexKind.POINT)
    return n_p, len(vs) - n_p


def count_independent(g: PointLineGraph, edges: Sequence[int], i: int, j: int, k: int) -> bool:
    edges = list(edges)
    for size in range(1, len(edges) + 1):
        for sub in itertools.combinations(edges, size):
            n_p, n_l = counts(g, sub)
            if size > i * n_p + j * n_l - k:
                return False
    return True


def count_rank(g: PointLineGraph, edges: Sequence[int], i: int, j: int, k: int) -> int:
    edges = list(edges)
    for size in range(len(edges), 0, -1):
        if any(count_independent(g, sub, i, j, k) for sub in itertools.combinations(edges, size)):
            return size
    return 0


def union_rank(g: PointLineGraph, edges: Sequence[int]) -> int:
    """r(A) = min over B of r1(B) + r2(B) + |A - B| for M(2,1,2) and M(0,1,0)."""
    edges = list(edges)
    best = len(edges)
    for size in range(len(edges) + 1):
        for sub in itertools.combinations(edges, size):
            value = count_rank(g, sub, 2, 1, 2) + count_rank(g, sub, 0, 1, 0) + len(edges) - size
            best = min(best, value)
    return best


# -- partitions and the rigidity rank ------------------------------------------

def partitions(items: list):
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for p in partitions(rest):
        for idx in range(len(p)):
            yield p[:idx] + [[head] + p[idx]] + p[idx + 1:]
        yield [[head]] + p


def line_components(g: PointLineGraph, parts) -> int:
    """Components of the part graph where parts touching a common line-vertex are adjacent."""
    parent = list(range(len(parts)))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    line_sets = [{v for e in p for v in g.edges[e] if g.kinds[v] is VertexKind.LINE} for p in parts]
    for a, b in itertools.combinations(range(len(parts)), 2):
        if line_sets[a] & line_sets[b]:
            parent[find(a)] = find(b)
    return len({find(x) for x in range(len(parts))})


def formula_value(g: PointLineGraph, parts) -> int:
    every = [e for p in parts for e in p]
    total = counts(g, every)[1]
    for p in parts:
        n_p, n_l = counts(g, p)
        total += 2 * n_p + n_l - 2
    return total - line_components(g, parts)


def formula_rank(g: PointLineGraph, edges: Sequence[int]) -> int:
    edges = list(edges)
    if not edges:
        return 0
    return min(formula_value(g, p) for p in partitions(edges))


def rho(g: PointLineGraph, edges: Sequence[int]) -> int:
    def value(parts):
        return sum(2 * counts(g, p)[0] + counts(g, p)[1] - 2 for p in parts)

    return min(value(parts) for parts in partitions(list(edges)))


def sharp_independent(g: PointLineGraph, edges: Sequence[int]) -> bool:
    """|S| <= rho(S) + nu_L(S) - 1 for every nonempty subset S."""
    edges = list(edges)
    for size in range(1, len(edges) + 1):
        for sub in itertools.combinations(edges, size):
            if size > rho(g, sub) + counts(g, sub)[1] - 1:
                return False
    return True


def laman_rank(g: PointLineGraph, edges: Sequence[int]) -> int:
    """Largest subset with |S'| <= 2|V(S')| - 3 on all nonempty S' (point-only graphs)."""
    edges = list(edges)
    for size in range(len(edges), 0, -1):
        for sub in itertools.combinations(edges, size):
            if all(len(s) <= 2 * sum(counts(g, s)) - 3
                   for r in range(1, size + 1) for s in itertools.combinations(sub, r)):
                return size
    return 0


def graph_components(n: int, pairs) -> int:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for a, b in pairs:
        parent[find(a)] = find(b)
    return len({find(x) for x in range(n)})


# -- exact linear algebra --------------------------------------------------------

def fraction_rank(rows) -> int:
    """Textbook Gaussian elimination over Q."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    rank, n_cols = 0, len(m[0])
    for c in range(n_cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def block_restricted_minimum(g: PointLineGraph, blocks: list[list[int]]) -> tuple[int, list]:
    """Minimum of the rank formula over partitions built from ``blocks``.

    Candidates are every coarsening of the blocks, plus every partition that
    splits one block arbitrarily while the remaining blocks stay whole or are
    merged with each other.  Used where full enumeration is out of reach.
    """
    candidates = []
    for coarse in partitions(list(range(len(blocks)))):
        candidates.append([[e for b in group for e in blocks[b]] for group in coarse])
    for i, block in enumerate(blocks):
        others = [b for x, b in enumerate(blocks) if x != i]
        for split in partitions(list(block)):
            for coarse in partitions(list(range(len(others)))):
                merged = [[e for b in group for e in others[b]] for group in coarse]
                candidates.append(split + merged)
    best = min(candidates, key=lambda p: formula_value(g, p))
    return formula_value(g, best), best
