"""Point-line multigraphs: data model, edge classes, vertex counts and file I/O.

A graph file is line oriented::

    # comment
    point u1
    line v1
    edge u1 v1

Files ending in ``.json`` use ``{"points": [...], "lines": [...], "edges": [[a, b], ...]}``.
Vertex names map to dense indices in declaration order (points and lines share
one index space), edges to indices in file order.
"""
from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class VertexKind(enum.Enum):
    POINT = "point"
    LINE = "line"


class EdgeClass(enum.Enum):
    PP = "PP"
    PL = "PL"
    LL = "LL"


class GraphFormatError(ValueError):
    """Raised for malformed graph input. ``lineno`` is 1-based, or None for JSON."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class PointLineGraph:
    """Immutable vertex-typed multigraph.

    ``edges[i]`` is the endpoint pair of edge ``i``; ``groups[i]`` is its
    parallel group (equal to ``i`` for edges read from input).
    """

    names: tuple[str, ...]
    kinds: tuple[VertexKind, ...]
    edges: tuple[tuple[int, int], ...]
    groups: tuple[int, ...] = ()
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.names) != len(self.kinds):
            raise ValueError("names and kinds differ in length")
        if not self.groups:
            object.__setattr__(self, "groups", tuple(range(len(self.edges))))
        if len(self.groups) != len(self.edges):
            raise ValueError("groups and edges differ in length")
        n = len(self.names)
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge endpoint out of range: {(u, v)}")
            if u == v:
                raise ValueError(f"loop at vertex {self.names[u]}")
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(self.names)})

    @classmethod
    def build(cls, points: Iterable[str], lines: Iterable[str],
              edges: Iterable[tuple[str, str]]) -> "PointLineGraph":
        """Convenience constructor: all points first, then lines, then named edges."""
        points, lines = list(points), list(lines)
        names = tuple(points + lines)
        kinds = (VertexKind.POINT,) * len(points) + (VertexKind.LINE,) * len(lines)
        idx = {name: i for i, name in enumerate(names)}
        return cls(names, kinds, tuple((idx[a], idx[b]) for a, b in edges))

    @property
    def num_vertices(self) -> int:
        return len(self.names)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def is_multigraph(self) -> bool:
        seen = set()
        for u, v in self.edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                return True
            seen.add(key)
        return False

    def vertex(self, name: str) -> int:
        return self._index[name]

    def is_point(self, v: int) -> bool:
        return self.kinds[v] is VertexKind.POINT

    def points(self) -> list[int]:
        return [v for v, k in enumerate(self.kinds) if k is VertexKind.POINT]

    def lines(self) -> list[int]:
        return [v for v, k in enumerate(self.kinds) if k is VertexKind.LINE]

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.edges[e]

    def edge_class(self, e: int) -> EdgeClass:
        if not 0 <= e < len(self.edges):
            raise KeyError(f"unknown edge {e}")
        u, v = self.edges[e]
        pu, pv = self.is_point(u), self.is_point(v)
        if pu and pv:
            return EdgeClass.PP
        if not pu and not pv:
            return EdgeClass.LL
        return EdgeClass.PL

    def induced_counts(self, edge_set: Iterable[int]) -> tuple[int, int]:
        """Numbers of distinct point- and line-vertices incident to the edges."""
        touched = set()
        for e in edge_set:
            touched.update(self.edges[e])
        n_points = sum(1 for v in touched if self.kinds[v] is VertexKind.POINT)
        return n_points, len(touched) - n_points

    def add_parallel_copy(self, e: int) -> tuple["PointLineGraph", int]:
        """Return a new graph with a copy of ``e`` appended, and the copy's id."""
        if not 0 <= e < len(self.edges):
            raise KeyError(f"unknown edge {e}")
        copy_id = len(self.edges)
        g = PointLineGraph(self.names, self.kinds, self.edges + (self.edges[e],),
                           self.groups + (self.groups[e],))
        return g, copy_id

    def without_edge(self, e: int) -> "PointLineGraph":
        """Undo of :meth:`add_parallel_copy` (only the last edge may be dropped)."""
        if e != len(self.edges) - 1:
            raise ValueError("only the most recently added edge can be dropped")
        return PointLineGraph(self.names, self.kinds, self.edges[:-1], self.groups[:-1])

    def subgraph(self, edge_set: Sequence[int]) -> "PointLineGraph":
        """Same vertex set, edges restricted (and renumbered) to ``edge_set``."""
        return PointLineGraph(self.names, self.kinds, tuple(self.edges[e] for e in edge_set))


def edge_class(g: PointLineGraph, e: int) -> EdgeClass:
    return g.edge_class(e)


def induced_counts(g: PointLineGraph, edge_set: Iterable[int]) -> tuple[int, int]:
    return g.induced_counts(edge_set)


def add_parallel_copy(g: PointLineGraph, e: int) -> tuple[PointLineGraph, int]:
    return g.add_parallel_copy(e)


def _check_name(name: str, lineno: int | None) -> None:
    if not NAME_RE.match(name):
        raise GraphFormatError(f"invalid vertex name {name!r}", lineno)


class _Builder:
    def __init__(self):
        self.names: list[str] = []
        self.kinds: list[VertexKind] = []
        self.index: dict[str, int] = {}
        self.edges: list[tuple[int, int]] = []
        self.pairs: set[tuple[int, int]] = set()

    def vertex(self, name, kind, lineno):
        _check_name(name, lineno)
        if name in self.index:
            raise GraphFormatError(f"duplicate vertex {name!r}", lineno)
        self.index[name] = len(self.names)
        self.names.append(name)
        self.kinds.append(kind)

    def edge(self, a, b, lineno):
        for name in (a, b):
            if name not in self.index:
                raise GraphFormatError(f"unknown vertex {name!r}", lineno)
        u, v = self.index[a], self.index[b]
        if u == v:
            raise GraphFormatError(f"loop at vertex {a!r}", lineno)
        key = (min(u, v), max(u, v))
        if key in self.pairs:
            raise GraphFormatError(f"parallel edge {a} {b}", lineno)
        self.pairs.add(key)
        self.edges.append((u, v))

    def graph(self) -> PointLineGraph:
        return PointLineGraph(tuple(self.names), tuple(self.kinds), tuple(self.edges))


def parse_graph(text: str) -> PointLineGraph:
    b = _Builder()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        word, args = tokens[0], tokens[1:]
        if word in ("point", "line"):
            if len(args) != 1:
                raise GraphFormatError(f"'{word}' takes one name", lineno)
            b.vertex(args[0], VertexKind(word), lineno)
        elif word == "edge":
            if len(args) != 2:
                raise GraphFormatError("'edge' takes two names", lineno)
            b.edge(args[0], args[1], lineno)
        else:
            raise GraphFormatError(f"unknown directive {word!r}", lineno)
    return b.graph()


def parse_json(text: str) -> PointLineGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc.msg}", exc.lineno) from exc
    if not isinstance(data, dict):
        raise GraphFormatError("top-level JSON value must be an object")
    b = _Builder()
    for key, kind in (("points", VertexKind.POINT), ("lines", VertexKind.LINE)):
        names = data.get(key, [])
        if not isinstance(names, list) or not all(isinstance(n, str) for n in names):
            raise GraphFormatError(f"'{key}' must be a list of names")
        for name in names:
            b.vertex(name, kind, None)
    edges = data.get("edges", [])
    if not isinstance(edges, list):
        raise GraphFormatError("'edges' must be a list")
    for pair in edges:
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(n, str) for n in pair)):
            raise GraphFormatError(f"bad edge entry {pair!r}")
        b.edge(pair[0], pair[1], None)
    return b.graph()


def serialize_graph(g: PointLineGraph) -> str:
    out = [f"{g.kinds[v].value} {name}" for v, name in enumerate(g.names)]
    out += [f"edge {g.names[u]} {g.names[v]}" for u, v in g.edges]
    return "\n".join(out) + "\n"


def serialize_json(g: PointLineGraph) -> str:
    return json.dumps({
        "points": [g.names[v] for v in g.points()],
        "lines": [g.names[v] for v in g.lines()],
        "edges": [[g.names[u], g.names[v]] for u, v in g.edges],
    })


def load_graph(path: str | Path) -> PointLineGraph:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".json":
        return parse_json(text)
    return parse_graph(text)
