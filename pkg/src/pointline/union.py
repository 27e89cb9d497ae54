"""Matroid union M(2,1,2) v M(0,1,0) by shortest augmenting paths.

The certificate keeps an independent set of the union split into a part ``T``
(independent in M(2 nu_P + nu_L - 2)) and a part ``S`` (independent in
M(nu_L)), each carried by its own orientation.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from .graph import EdgeClass, PointLineGraph
from .orient import ROTATIONS, TRANSLATIONS, InvariantViolation, OrientationState


@dataclass(frozen=True)
class AugmentResult:
    """``path`` lists ``(edge, part)`` pairs, part 0 = T and 1 = S; empty when blocked."""

    path: tuple[tuple[int, int], ...] = ()

    @property
    def augmented(self) -> bool:
        return bool(self.path)

    def __bool__(self) -> bool:
        return self.augmented


BLOCKED = AugmentResult()


@dataclass(frozen=True)
class Snapshot:
    owner: int
    epoch: int
    marks: tuple[int, int]


class UnionCertificate:
    def __init__(self, graph: PointLineGraph):
        self.parts = (OrientationState(graph, TRANSLATIONS), OrientationState(graph, ROTATIONS))
        self._epoch = 0

    @property
    def graph(self) -> PointLineGraph:
        return self.parts[0].graph

    @graph.setter
    def graph(self, g: PointLineGraph) -> None:
        for st in self.parts:
            st.graph = g

    @property
    def T(self) -> OrientationState:
        return self.parts[0]

    @property
    def S(self) -> OrientationState:
        return self.parts[1]

    @property
    def independent(self) -> frozenset[int]:
        return self.T.independent | self.S.independent

    def __contains__(self, e: int) -> bool:
        return e in self.parts[0] or e in self.parts[1]

    def __len__(self) -> int:
        return len(self.parts[0]) + len(self.parts[1])

    def part_of(self, e: int) -> int | None:
        for q, st in enumerate(self.parts):
            if e in st:
                return q
        return None

    # -- snapshots ----------------------------------------------------------

    def snapshot(self) -> Snapshot:
        return Snapshot(id(self), self._epoch, (self.parts[0].checkpoint(), self.parts[1].checkpoint()))

    def rollback(self, snap: Snapshot) -> None:
        if snap.owner != id(self) or snap.epoch != self._epoch:
            raise ValueError("snapshot does not belong to this certificate state")
        for st, mark in zip(self.parts, snap.marks):
            st.undo(mark)

    def commit(self) -> None:
        """Make the current state permanent; outstanding snapshots are invalidated."""
        for st in self.parts:
            st.forget()
        self._epoch += 1

    # -- augmentation -------------------------------------------------------

    def augment(self, e: int) -> AugmentResult:
        """Try to add ``e`` to the union, rearranging the parts along a shortest exchange path."""
        if e in self:
            raise ValueError(f"edge {e} already in the certificate")
        snap = self.snapshot()
        parent: dict[tuple[int, int], tuple[int, int] | None] = {(e, 0): None, (e, 1): None}
        queue = deque(parent)
        while queue:
            node = queue.popleft()
            f, q = node
            report = self.parts[q].try_insert(f)
            if report is None:
                path = [node]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                path.reverse()
                self._apply(path)
                return AugmentResult(tuple(path))
            for g in report.circuit:
                nxt = (g, 1 - q)
                if g != f and nxt not in parent:
                    parent[nxt] = node
                    queue.append(nxt)
        self.rollback(snap)
        return BLOCKED

    def _apply(self, path: list[tuple[int, int]]) -> None:
        # the last element was already inserted by the successful probe
        for (_, q), (g, _) in zip(path, path[1:]):
            self.parts[q].remove(g)
        for f, q in path[:-1]:
            if self.parts[q].try_insert(f) is not None:
                raise InvariantViolation(f"exchange along augmenting path failed at edge {f}")

    def check(self) -> None:
        t, s = self.T, self.S
        t.check()
        s.check()
        if t.independent & s.independent:
            raise InvariantViolation("parts overlap")
        g = self.graph
        for e in t.head:
            if g.edge_class(e) is EdgeClass.LL:
                raise InvariantViolation(f"LL edge {e} in T")
        for e in s.head:
            if g.edge_class(e) is EdgeClass.PP:
                raise InvariantViolation(f"PP edge {e} in S")

    # -- output -------------------------------------------------------------

    def to_dict(self) -> dict:
        names = self.graph.names
        out = {}
        for label, st in (("T", self.T), ("S", self.S)):
            out[label] = [[e, names[st.head[e]]] for e in sorted(st.head)]
        return out

    def dump(self) -> str:
        """Text form: ``T:`` and ``S:`` lines of ``edge>head`` items in edge order."""
        lines = []
        for label, items in self.to_dict().items():
            lines.append(f"{label}: " + " ".join(f"{e}>{h}" for e, h in items))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, graph: PointLineGraph, data: dict) -> "UnionCertificate":
        """Rebuild a certificate with the recorded heads (validated by :meth:`check`)."""
        cert = cls(graph)
        for label, st in (("T", cert.T), ("S", cert.S)):
            for e, head_name in data[label]:
                st._attach(e, graph.vertex(head_name))
        cert.check()
        return cert


def new_certificate(g: PointLineGraph) -> UnionCertificate:
    return UnionCertificate(g)


def union_rank(g: PointLineGraph, edges=None) -> int:
    cert = UnionCertificate(g)
    for e in range(g.num_edges) if edges is None else edges:
        cert.augment(e)
    return len(cert)
