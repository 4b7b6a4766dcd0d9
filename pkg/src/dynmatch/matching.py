"""Matching container: a set of vertex-disjoint weighted edges."""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Edge, VertexId, Weight


class Matching:
    """A set of vertex-disjoint canonical edges with size and total weight.

    Mutating helpers keep the no-shared-endpoint invariant; ``add`` raises
    if either endpoint is already matched.
    """

    __slots__ = ("_edges", "_mate")

    def __init__(self, edges: Iterable[Edge] = ()):
        self._edges: dict[tuple[VertexId, VertexId], Weight] = {}
        self._mate: dict[VertexId, VertexId] = {}
        for e in edges:
            self.add(e)

    def add(self, e: Edge) -> None:
        if e.u in self._mate or e.v in self._mate:
            raise ValueError(f"endpoint of {e.key} already matched")
        self._edges[e.key] = e.w
        self._mate[e.u] = e.v
        self._mate[e.v] = e.u

    def discard(self, u: VertexId, v: VertexId) -> bool:
        """Remove edge (u, v) if present; returns whether it was."""
        if u > v:
            u, v = v, u
        if (u, v) not in self._edges:
            return False
        del self._edges[(u, v)]
        del self._mate[u]
        del self._mate[v]
        return True

    def __contains__(self, key: tuple[VertexId, VertexId]) -> bool:
        u, v = key
        if u > v:
            u, v = v, u
        return (u, v) in self._edges

    def __iter__(self) -> Iterator[Edge]:
        for (u, v), w in self._edges.items():
            yield Edge(u, v, w)

    def __len__(self) -> int:
        return len(self._edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self._edges == other._edges

    def __repr__(self) -> str:
        inner = ", ".join(f"({u},{v})*{w}" for (u, v), w in sorted(self._edges.items()))
        return f"Matching[{inner}]"

    @property
    def size(self) -> int:
        return len(self._edges)

    @property
    def weight(self) -> Weight:
        return sum(self._edges.values(), 0)

    def is_matched(self, v: VertexId) -> bool:
        return v in self._mate

    def mate(self, v: VertexId) -> VertexId:
        return self._mate[v]

    def matched_vertices(self) -> frozenset[VertexId]:
        return frozenset(self._mate)

    def edge_keys(self) -> frozenset[tuple[VertexId, VertexId]]:
        return frozenset(self._edges)

    def copy(self) -> "Matching":
        m = Matching()
        m._edges = dict(self._edges)
        m._mate = dict(self._mate)
        return m

    def is_valid_in(self, g) -> bool:
        """True when every member edge is present in graph-view ``g``."""
        return all(g.has_edge(u, v) for (u, v) in self._edges)
