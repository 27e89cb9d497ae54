"""Independence oracle for count matroids M(i*nu_P + j*nu_L - k) via bounded orientations.

An independent edge set ``I`` is stored together with an orientation in which
every point-vertex has in-degree at most ``i`` and every line-vertex at most
``j``.  Testing a new edge ``e = wz`` means pushing in-degree away from
``{w, z}`` along reversed directed paths until the pair has room for ``e``
plus ``k`` spare units.  When no push is possible, the vertices that can reach
``{w, z}`` span the fundamental circuit of ``e``.
"""
from __future__ import annotations

from bisect import insort
from dataclasses import dataclass

from .graph import PointLineGraph


class InvariantViolation(RuntimeError):
    """Internal consistency check failed."""


@dataclass(frozen=True)
class CountParams:
    i: int
    j: int
    k: int

    def __post_init__(self):
        if min(self.i, self.j, self.k) < 0:
            raise ValueError(f"count parameters must be non-negative: {self}")
        if self.k > min(2 * self.i, 2 * self.j):
            raise ValueError(f"k={self.k} exceeds min(2i, 2j)={min(2 * self.i, 2 * self.j)}")

    def bound(self, n_points: int, n_lines: int) -> int:
        return self.i * n_points + self.j * n_lines - self.k

    def __str__(self):
        return f"({self.i},{self.j},{self.k})"


# The two constituents of the union M(rho + nu_L).
TRANSLATIONS = CountParams(2, 1, 2)
ROTATIONS = CountParams(0, 1, 0)


@dataclass(frozen=True)
class CircuitReport:
    circuit: tuple[int, ...]
    reachable: tuple[int, ...]


class OrientationState:
    """A capacity-bounded orientation of an independent set of ``graph``.

    ``head[e]`` is the vertex edge ``e`` points into.  Every head change is
    journalled so callers can :meth:`checkpoint` and :meth:`undo`.
    """

    def __init__(self, graph: PointLineGraph, params: CountParams):
        self.graph = graph
        self.params = params
        self.cap = [params.i if graph.is_point(v) else params.j for v in range(graph.num_vertices)]
        self.head: dict[int, int] = {}
        self.indeg = [0] * graph.num_vertices
        self.into: list[list[int]] = [[] for _ in range(graph.num_vertices)]
        self._journal: list[tuple] = []

    # -- low level mutation -------------------------------------------------

    def _attach(self, e: int, h: int) -> None:
        self.head[e] = h
        self.indeg[h] += 1
        insort(self.into[h], e)

    def _detach(self, e: int) -> int:
        h = self.head.pop(e)
        self.indeg[h] -= 1
        self.into[h].remove(e)
        return h

    def _flip(self, e: int, new_head: int) -> None:
        old = self._detach(e)
        self._attach(e, new_head)
        self._journal.append(("flip", e, old))

    def checkpoint(self) -> int:
        return len(self._journal)

    def undo(self, mark: int) -> None:
        while len(self._journal) > mark:
            op, e, h = self._journal.pop()
            if op == "add":
                self._detach(e)
            elif op == "remove":
                self._attach(e, h)
            else:
                self._detach(e)
                self._attach(e, h)

    def forget(self) -> None:
        """Drop the journal; earlier checkpoints become invalid."""
        self._journal.clear()

    # -- queries ------------------------------------------------------------

    @property
    def independent(self) -> frozenset[int]:
        return frozenset(self.head)

    def __contains__(self, e: int) -> bool:
        return e in self.head

    def __len__(self) -> int:
        return len(self.head)

    def _other(self, e: int, v: int) -> int:
        a, b = self.graph.edges[e]
        return b if a == v else a

    def _push_search(self, w: int, z: int) -> tuple[int | None, dict[int, int | None]]:
        """BFS against edge directions from {w, z} for a vertex with spare capacity.

        Returns the chosen vertex (lowest id in the first level that has one)
        and the parent-edge map of all vertices discovered so far.
        """
        parent: dict[int, int | None] = {w: None, z: None}
        level = [w, z]
        indeg, cap, into, edges = self.indeg, self.cap, self.into, self.graph.edges
        while level:
            nxt = []
            found = None
            for x in level:
                for f in into[x]:
                    a, b = edges[f]
                    t = b if a == x else a
                    if t not in parent:
                        parent[t] = f
                        nxt.append(t)
                        if indeg[t] < cap[t] and (found is None or t < found):
                            found = t
            if found is not None:
                return found, parent
            level = nxt
        return None, parent

    def _reverse_path(self, y: int, parent: dict[int, int | None]) -> None:
        x = y
        f = parent[x]
        while f is not None:
            nxt = self.head[f]
            self._flip(f, x)
            x = nxt
            f = parent[x]

    def try_insert(self, e: int) -> CircuitReport | None:
        """Add ``e`` if ``I + e`` stays independent.

        Returns None on success; otherwise the state keeps the same edge set
        (its orientation may change) and the fundamental circuit is returned.
        """
        if e in self.head:
            raise ValueError(f"edge {e} already in the independent set")
        w, z = self.graph.edges[e]
        target = self.cap[w] + self.cap[z] - (self.params.k + 1)
        if target < 0:
            return CircuitReport((e,), tuple(sorted((w, z))))
        while self.indeg[w] + self.indeg[z] > target:
            y, parent = self._push_search(w, z)
            if y is None:
                return self._circuit_from(e, parent)
            self._reverse_path(y, parent)
        h = self._choose_head(w, z)
        self._attach(e, h)
        self._journal.append(("add", e, h))
        return None

    def _choose_head(self, w: int, z: int) -> int:
        cap, indeg = self.cap, self.indeg
        options = [v for v in (w, z) if indeg[v] < cap[v]]
        if len(options) == 1:
            return options[0]
        # lower load ratio indeg/cap first, then lower id
        lw, lz = indeg[w] * cap[z], indeg[z] * cap[w]
        if lw != lz:
            return w if lw < lz else z
        return min(w, z)

    def _circuit_from(self, e: int, parent: dict[int, int | None]) -> CircuitReport:
        # the reached set is closed under incoming edges, so the edges it
        # induces are exactly the edges entering it
        found = [f for y in parent for f in self.into[y]]
        found.append(e)
        return CircuitReport(tuple(sorted(found)), tuple(sorted(parent)))

    def fundamental_circuit(self, e: int) -> CircuitReport:
        """Circuit of ``I + e``; raises if ``I + e`` is independent. Leaves ``I`` unchanged."""
        mark = self.checkpoint()
        report = self.try_insert(e)
        if report is None:
            self.undo(mark)
            raise ValueError(f"edge {e} is independent of the current set")
        return report

    def remove(self, e: int) -> None:
        if e not in self.head:
            raise KeyError(f"edge {e} not in the independent set")
        h = self._detach(e)
        self._journal.append(("remove", e, h))

    # -- diagnostics --------------------------------------------------------

    def check(self) -> None:
        """Raise InvariantViolation unless the orientation is consistent and capacity-bounded."""
        counts = [0] * self.graph.num_vertices
        for e, h in self.head.items():
            if h not in self.graph.edges[e]:
                raise InvariantViolation(f"edge {e} points into non-endpoint {h}")
            counts[h] += 1
        if counts != self.indeg:
            raise InvariantViolation("in-degree table out of sync")
        for v, d in enumerate(counts):
            if d > self.cap[v]:
                raise InvariantViolation(f"vertex {v} over capacity ({d} > {self.cap[v]})")
            if sorted(self.into[v]) != sorted(e for e, h in self.head.items() if h == v):
                raise InvariantViolation(f"incoming list of {v} out of sync")

    def copy(self) -> "OrientationState":
        other = OrientationState.__new__(OrientationState)
        other.graph = self.graph
        other.params = self.params
        other.cap = self.cap
        other.head = dict(self.head)
        other.indeg = list(self.indeg)
        other.into = [list(x) for x in self.into]
        other._journal = []
        return other

    def dot(self) -> str:
        """Orientation as a DOT digraph; arrows point at the head vertex."""
        g = self.graph
        out = [f"digraph orientation_{self.params.i}_{self.params.j}_{self.params.k} {{"]
        for v, name in enumerate(g.names):
            style = "filled" if g.is_point(v) else "solid"
            out.append(f'  {name} [shape=circle, style={style}, fillcolor=black, fontcolor=red];')
        for e in sorted(self.head):
            h = self.head[e]
            t = self._other(e, h)
            out.append(f'  {g.names[t]} -> {g.names[h]} [label="e{e}"];')
        out.append("}")
        return "\n".join(out) + "\n"


def new_state(g: PointLineGraph, params: CountParams) -> OrientationState:
    return OrientationState(g, params)


def count_rank(g: PointLineGraph, params: CountParams, edges=None) -> int:
    """Greedy rank of an edge set (default: all edges) in M(params)."""
    st = OrientationState(g, params)
    for e in range(g.num_edges) if edges is None else edges:
        st.try_insert(e)
    return len(st)
