"""Generic point-line rigidity matroid: greedy rank, rigidity test, circuits and oracles.

An edge set ``I`` is independent in the rigidity matroid iff ``I + e + e'``
(``e'`` a parallel copy of the last added edge ``e``) is independent in the
union matroid M(2,1,2) v M(0,1,0).  :class:`SharpState` grows such a set edge
by edge using :class:`~pointline.union.UnionCertificate`.
"""
from __future__ import annotations

import enum
import itertools
from typing import Iterable, Iterator, Sequence

from .graph import PointLineGraph
from .union import UnionCertificate


class LimitExceeded(ValueError):
    """An exhaustive oracle was asked for more than its configured size limit."""


class Verdict(enum.Enum):
    INDEPENDENT = "independent"
    DEPENDENT = "dependent"

    def __bool__(self):
        return self is Verdict.INDEPENDENT


INDEPENDENT = Verdict.INDEPENDENT
DEPENDENT = Verdict.DEPENDENT


class SharpState:
    def __init__(self, graph: PointLineGraph):
        self.graph = graph
        self.certificate = UnionCertificate(graph)
        self.accepted: list[int] = []
        self._accepted_set: set[int] = set()

    def __contains__(self, e: int) -> bool:
        return e in self._accepted_set

    def __len__(self) -> int:
        return len(self.accepted)

    def test(self, e: int) -> Verdict:
        """Independence of ``accepted + e`` without modifying the state."""
        if e in self._accepted_set:
            raise ValueError(f"edge {e} already accepted")
        verdict, snap = self._probe(e)
        if verdict:
            self.certificate.rollback(snap)
        return verdict

    def test_and_add(self, e: int) -> Verdict:
        if e in self._accepted_set:
            raise ValueError(f"edge {e} already accepted")
        verdict, _snap = self._probe(e)
        if verdict:
            self.certificate.commit()
            self.accepted.append(e)
            self._accepted_set.add(e)
        return verdict

    def _probe(self, e: int):
        cert = self.certificate
        snap = cert.snapshot()
        if not cert.augment(e):
            return DEPENDENT, snap
        doubled, copy = self.graph.add_parallel_copy(e)
        cert.graph = doubled
        try:
            if not cert.augment(copy):
                cert.rollback(snap)
                return DEPENDENT, snap
            cert.parts[cert.part_of(copy)].remove(copy)
        finally:
            cert.graph = self.graph
        return INDEPENDENT, snap

    def circuit(self, e: int) -> list[int]:
        """The unique circuit in ``accepted + e`` (sorted edge ids).

        Shrinks ``accepted + e`` one element at a time, keeping each deletion
        that leaves the set dependent.
        """
        if e in self._accepted_set:
            raise ValueError(f"edge {e} already accepted")
        current = sorted(self.accepted) + [e]
        if is_independent(self.graph, current):
            raise ValueError(f"edge {e} is independent of the accepted set")
        for f in sorted(self.accepted):
            trial = [x for x in current if x != f]
            if not is_independent(self.graph, trial):
                current = trial
        return sorted(current)


def greedy_basis(g: PointLineGraph, edges: Iterable[int] | None = None) -> SharpState:
    st = SharpState(g)
    for e in range(g.num_edges) if edges is None else edges:
        st.test_and_add(e)
    return st


def rank(g: PointLineGraph, edges: Iterable[int] | None = None) -> int:
    return len(greedy_basis(g, edges))


def is_independent(g: PointLineGraph, edges: Sequence[int]) -> bool:
    st = SharpState(g)
    return all(st.test_and_add(e) for e in edges)


def is_rigid(g: PointLineGraph) -> bool:
    n = g.num_vertices
    return n <= 1 or rank(g) == 2 * n - 3


def circuit(st: SharpState, e: int) -> list[int]:
    return st.circuit(e)


# -- combinatorial oracles ----------------------------------------------------

def _masks(g: PointLineGraph, edges: Sequence[int]) -> tuple[list[int], list[int]]:
    pm, lm = [], []
    for e in edges:
        p = l = 0
        for v in g.edges[e]:
            if g.is_point(v):
                p |= 1 << v
            else:
                l |= 1 << v
        pm.append(p)
        lm.append(l)
    return pm, lm


def set_partitions(items: Sequence) -> Iterator[list[list]]:
    """All set partitions of ``items`` (restricted growth order)."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for sub in set_partitions(rest):
        yield [[first]] + sub
        for i in range(len(sub)):
            yield sub[:i] + [[first] + sub[i]] + sub[i + 1:]


def c_L(g: PointLineGraph, parts: Sequence[Iterable[int]]) -> int:
    """Components of the graph on ``parts`` where two parts touch iff they share a line-vertex."""
    parts = [list(p) for p in parts]
    seen = set()
    for p in parts:
        if not p:
            raise ValueError("parts must be nonempty")
        for e in p:
            if e in seen:
                raise ValueError(f"edge {e} appears in more than one part")
            seen.add(e)
    line_sets = [{v for e in p for v in g.edges[e] if not g.is_point(v)} for p in parts]
    return _components([_bits(s) for s in line_sets])


def _bits(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _components(line_masks: Sequence[int]) -> int:
    parent = list(range(len(line_masks)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    owner: dict[int, int] = {}
    for i, m in enumerate(line_masks):
        while m:
            low = m & -m
            m ^= low
            j = owner.setdefault(low, i)
            if j != i:
                parent[find(i)] = find(j)
    return sum(1 for i in range(len(line_masks)) if find(i) == i)


def partition_value(g: PointLineGraph, parts: Sequence[Sequence[int]]) -> int:
    """nu_L(A) + sum(2 nu_P(A_i) + nu_L(A_i) - 2) - c_L for a partition of A."""
    all_edges = [e for p in parts for e in p]
    total = g.induced_counts(all_edges)[1]
    for p in parts:
        n_p, n_l = g.induced_counts(p)
        total += 2 * n_p + n_l - 2
    return total - c_L(g, parts)


def rank_formula_oracle(g: PointLineGraph, edges: Sequence[int] | None = None,
                        limit: int = 10, with_partition: bool = False):
    """Minimum of :func:`partition_value` over all partitions, by enumeration.

    Returns the rank, or ``(rank, partition)`` when ``with_partition`` is set.
    """
    edges = list(range(g.num_edges)) if edges is None else list(edges)
    if len(edges) > limit:
        raise LimitExceeded(f"{len(edges)} edges exceeds the partition limit {limit}")
    if not edges:
        return (0, []) if with_partition else 0
    pm, lm = _masks(g, edges)
    n_lines_total = bin(_or(lm)).count("1")
    best, best_parts = None, None
    for blocks in set_partitions(range(len(edges))):
        value = n_lines_total
        line_masks = []
        for b in blocks:
            p = l = 0
            for x in b:
                p |= pm[x]
                l |= lm[x]
            value += 2 * bin(p).count("1") + bin(l).count("1") - 2
            line_masks.append(l)
        value -= _components(line_masks)
        if best is None or value < best:
            best, best_parts = value, blocks
    if with_partition:
        return best, [sorted(edges[x] for x in b) for b in best_parts]
    return best


def _or(ms: Iterable[int]) -> int:
    out = 0
    for m in ms:
        out |= m
    return out


def lovasz_yemini_rank(g: PointLineGraph, edges: Sequence[int] | None = None, limit: int = 10) -> int:
    """Bar-joint rank min over partitions of sum(2 nu(A_i) - 3); point-only graphs."""
    edges = list(range(g.num_edges)) if edges is None else list(edges)
    if len(edges) > limit:
        raise LimitExceeded(f"{len(edges)} edges exceeds the partition limit {limit}")
    if not edges:
        return 0
    best = None
    for blocks in set_partitions(edges):
        value = sum(2 * len({v for e in b for v in g.edges[e]}) - 3 for b in blocks)
        best = value if best is None else min(best, value)
    return best


def subset_count_oracle(g: PointLineGraph, edges: Sequence[int] | None = None, limit: int = 16) -> bool:
    """Every nonempty subset H has |H| <= 2|V(H)| - 3, and <= |V(H)| - 1 without points.

    Necessary but not sufficient for independence.
    """
    edges = list(range(g.num_edges)) if edges is None else list(edges)
    if len(edges) > limit:
        raise LimitExceeded(f"{len(edges)} edges exceeds the subset limit {limit}")
    pm, lm = _masks(g, edges)
    m = len(edges)
    for size in range(1, m + 1):
        for combo in itertools.combinations(range(m), size):
            p = l = 0
            for x in combo:
                p |= pm[x]
                l |= lm[x]
            n_p, n_l = bin(p).count("1"), bin(l).count("1")
            if size > 2 * (n_p + n_l) - 3:
                return False
            if n_p == 0 and size > n_l - 1:
                return False
    return True
