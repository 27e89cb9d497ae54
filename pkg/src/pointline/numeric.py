"""Linear-algebra oracles: rigidity matrix, Jacobian, rigidity map and frame matrices.

Columns are ordered points first (``<name>_x``, ``<name>_y``), then lines
(``<name>_a``, ``<name>_b``), each kind in vertex-id order.  A line ``(a, b)``
is ``x = a*y + b``.  Exact matrices hold :class:`fractions.Fraction` entries.
"""
from __future__ import annotations

import csv
import io
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graph import EdgeClass, PointLineGraph

SVD_RTOL = 1e-8


@dataclass(frozen=True)
class Realization:
    """Coordinates per vertex id: ``(x, y)`` for points, ``(a, b)`` for lines."""

    coords: tuple[tuple[Fraction, Fraction], ...]


@dataclass(frozen=True)
class Frame:
    graph: PointLineGraph
    t: dict[int, Fraction]
    c: tuple[Fraction, ...]


@dataclass
class RationalMatrix:
    rows: list[list[Fraction]]
    columns: list[str]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.columns)

    def rank(self) -> int:
        return rank_exact(self.rows)

    def to_csv(self) -> str:
        return _csv(self.columns, [[str(x) for x in r] for r in self.rows])


def _csv(columns, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    w.writerows(rows)
    return buf.getvalue()


def _columns(g: PointLineGraph, point_cols=("x", "y"), line_cols=("a", "b")) -> tuple[list[str], dict]:
    labels, offset = [], {}
    for v in g.points():
        offset[v] = len(labels)
        labels += [f"{g.names[v]}_{s}" for s in point_cols]
    for v in g.lines():
        offset[v] = len(labels)
        labels += [f"{g.names[v]}_{s}" for s in line_cols]
    return labels, offset


def random_realization(g: PointLineGraph, seed: int, bound: int | None = None,
                       denominator: int = 1) -> Realization:
    """Pairwise distinct random integers in ``[1, bound]``, each divided by ``denominator``.

    ``denominator=bound`` puts every coordinate in ``(0, 1]``, which keeps the
    float Jacobian well scaled without changing the sampled lattice.
    """
    n = g.num_vertices
    if bound is None:
        bound = max(4 * n * n, 10**6)
    if bound < max(4 * n * n, 2 * n):
        raise ValueError(f"bound {bound} below 4|V|^2 = {4 * n * n}")
    values = random.Random(seed).sample(range(1, bound + 1), 2 * n)
    return Realization(tuple((Fraction(values[2 * v], denominator), Fraction(values[2 * v + 1], denominator))
                             for v in range(n)))


def _pl_ends(g: PointLineGraph, e: int) -> tuple[int, int]:
    u, v = g.edges[e]
    return (u, v) if g.is_point(u) else (v, u)


def _ll_ends(g: PointLineGraph, e: int) -> tuple[int, int]:
    u, v = g.edges[e]
    return (u, v) if u < v else (v, u)


def rigidity_matrix_R(g: PointLineGraph, p: Realization) -> RationalMatrix:
    labels, off = _columns(g)
    rows = []
    zero = Fraction(0)
    for e in range(g.num_edges):
        row = [zero] * len(labels)
        cls = g.edge_class(e)
        if cls is EdgeClass.PP:
            j, k = g.edges[e]
            (xj, yj), (xk, yk) = p.coords[j], p.coords[k]
            row[off[j]:off[j] + 2] = [xj - xk, yj - yk]
            row[off[k]:off[k] + 2] = [xk - xj, yk - yj]
        elif cls is EdgeClass.PL:
            j, k = _pl_ends(g, e)
            xj, yj = p.coords[j]
            ak = p.coords[k][0]
            row[off[j]:off[j] + 2] = [Fraction(1), -ak]
            row[off[k]:off[k] + 2] = [-xj * ak - yj, Fraction(-1)]
        else:
            j, k = _ll_ends(g, e)
            row[off[j]] = Fraction(1)
            row[off[k]] = Fraction(-1)
        rows.append(row)
    return RationalMatrix(rows, labels)


def jacobian_J(g: PointLineGraph, p: Realization) -> np.ndarray:
    """Derivative of :func:`rigidity_map`, shape ``(|E|, 2|V|)``."""
    _, off = _columns(g)
    J = np.zeros((g.num_edges, 2 * g.num_vertices))
    for e in range(g.num_edges):
        cls = g.edge_class(e)
        if cls is EdgeClass.PP:
            j, k = g.edges[e]
            (xj, yj), (xk, yk) = map(lambda c: (float(c[0]), float(c[1])), (p.coords[j], p.coords[k]))
            J[e, off[j]:off[j] + 2] = [2 * (xj - xk), 2 * (yj - yk)]
            J[e, off[k]:off[k] + 2] = [2 * (xk - xj), 2 * (yk - yj)]
        elif cls is EdgeClass.PL:
            j, k = _pl_ends(g, e)
            xj, yj = float(p.coords[j][0]), float(p.coords[j][1])
            ak, bk = float(p.coords[k][0]), float(p.coords[k][1])
            s = 1.0 + ak * ak
            J[e, off[j]:off[j] + 2] = [s ** -0.5, -ak * s ** -0.5]
            J[e, off[k]:off[k] + 2] = [(-xj * ak - yj + ak * bk) * s ** -1.5, -s ** -0.5]
        else:
            j, k = _ll_ends(g, e)
            aj, ak = float(p.coords[j][0]), float(p.coords[k][0])
            # d/da arctan(a) = 1 / (1 + a^2)
            J[e, off[j]] = 1.0 / (1.0 + aj * aj)
            J[e, off[k]] = -1.0 / (1.0 + ak * ak)
    return J


def rigidity_map(g: PointLineGraph, p: Realization) -> np.ndarray:
    """Squared distances (PP), signed point-line distances (PL), angle differences (LL)."""
    out = np.zeros(g.num_edges)
    for e in range(g.num_edges):
        cls = g.edge_class(e)
        if cls is EdgeClass.PP:
            j, k = g.edges[e]
            (xj, yj), (xk, yk) = p.coords[j], p.coords[k]
            out[e] = float((xj - xk) ** 2 + (yj - yk) ** 2)
        elif cls is EdgeClass.PL:
            j, k = _pl_ends(g, e)
            xj, yj = map(float, p.coords[j])
            ak, bk = map(float, p.coords[k])
            out[e] = (xj - yj * ak - bk) / math.sqrt(1.0 + ak * ak)
        else:
            j, k = _ll_ends(g, e)
            out[e] = math.atan(float(p.coords[j][0])) - math.atan(float(p.coords[k][0]))
    return out


def realization_vector(g: PointLineGraph, p: Realization) -> np.ndarray:
    _, off = _columns(g)
    vec = np.zeros(2 * g.num_vertices)
    for v in range(g.num_vertices):
        vec[off[v]:off[v] + 2] = [float(c) for c in p.coords[v]]
    return vec


def realization_from_vector(g: PointLineGraph, vec: Sequence[float]) -> Realization:
    _, off = _columns(g)
    return Realization(tuple((vec[off[v]], vec[off[v] + 1]) for v in range(g.num_vertices)))


def numeric_rank(m: np.ndarray, rtol: float = SVD_RTOL) -> int:
    if m.size == 0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    if s[0] == 0:
        return 0
    return int(np.sum(s > rtol * s[0]))


def rank_exact(rows: Sequence[Sequence[Fraction | int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on integer-scaled rows."""
    mat = []
    for r in rows:
        den = 1
        for x in r:
            den = math.lcm(den, Fraction(x).denominator)
        ints = [int(Fraction(x) * den) for x in r]
        if any(ints):
            mat.append(ints)
    if not mat:
        return 0
    n_cols = len(mat[0])
    rank_ = 0
    prev = 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank_, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank_], mat[pivot] = mat[pivot], mat[rank_]
        pr = mat[rank_]
        pv = pr[col]
        for r in range(rank_ + 1, len(mat)):
            row = mat[r]
            a = row[col]
            for c in range(col + 1, n_cols):
                row[c] = (pv * row[c] - a * pr[c]) // prev
            row[col] = 0
        prev = pv
        rank_ += 1
        if rank_ == len(mat):
            break
    return rank_


def matrix_rank_oracle(g: PointLineGraph, trials: int = 5, seed: int = 0, bound: int | None = None) -> int:
    """Max exact rank of R(G, p) over ``trials`` random realizations (one-sided Monte Carlo)."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if g.num_edges == 0:
        return 0
    return max(rigidity_matrix_R(g, random_realization(g, seed + t, bound)).rank() for t in range(trials))


# -- frames on naturally bipartite multigraphs --------------------------------

def random_frame(g: PointLineGraph, seed: int, bound: int | None = None) -> Frame:
    n_l = len(g.lines())
    count = n_l + g.num_edges
    if bound is None:
        bound = max(4 * count * count, 10**6)
    values = random.Random(seed).sample(range(1, bound + 1), count)
    t = {v: Fraction(values[i]) for i, v in enumerate(g.lines())}
    return Frame(g, t, tuple(Fraction(x) for x in values[n_l:]))


def frame_matrices(f: Frame) -> tuple[RationalMatrix, RationalMatrix, RationalMatrix]:
    """The A, B and C matrices of a point-line frame."""
    g = f.graph
    for e in range(g.num_edges):
        if g.edge_class(e) is not EdgeClass.PL:
            raise ValueError(f"edge {e} is not point-line; frames need a naturally bipartite graph")
    a_labels, a_off = _columns(g, ("1", "2"), ("1", "2"))
    bc_labels, bc_off = [], {}
    for v in g.points():
        bc_off[v] = len(bc_labels)
        bc_labels += [f"{g.names[v]}_1", f"{g.names[v]}_2"]
    for v in g.lines():
        bc_off[v] = len(bc_labels)
        bc_labels.append(g.names[v])
    one, zero = Fraction(1), Fraction(0)
    A, B, C = [], [], []
    for e in range(g.num_edges):
        i, j = _pl_ends(g, e)
        tj, ce = f.t[j], f.c[e]
        a = [zero] * len(a_labels)
        a[a_off[i]:a_off[i] + 2] = [one, tj]
        a[a_off[j]:a_off[j] + 2] = [ce, -one]
        b = [zero] * len(bc_labels)
        b[bc_off[i]:bc_off[i] + 2] = [one, ce]
        b[bc_off[j]] = -one
        c = [zero] * len(bc_labels)
        c[bc_off[i]:bc_off[i] + 2] = [one, tj]
        c[bc_off[j]] = -one
        A.append(a)
        B.append(b)
        C.append(c)
    return (RationalMatrix(A, a_labels), RationalMatrix(B, list(bc_labels)),
            RationalMatrix(C, list(bc_labels)))


def jacobian_csv(g: PointLineGraph, J: np.ndarray) -> str:
    labels, _ = _columns(g)
    return _csv(labels, [[repr(float(x)) for x in row] for row in J])
