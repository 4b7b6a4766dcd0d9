"""Trimmed matching-preserving subgraph built from a vertex cover.

Given a valid vertex cover, the trimmed subgraph keeps every edge between
cover vertices plus, for each cover vertex, up to ``|cover| + 1`` edges to
vertices outside the cover: the maximum-weight ones in weighted mode
(ties to the smaller neighbor id), the smallest-id ones otherwise.  That
retains an optimum matching of the full graph while having at most
``|cover| * (2 |cover| + 1)`` edges.
"""

from __future__ import annotations

import heapq
from typing import Generator, Iterable, Iterator

from .errors import InvalidCover
from .graph import Edge, VertexId, Weight


class CoreSubgraph:
    """Read-only graph view over the trimmed edge set."""

    def __init__(self, edges: dict[tuple[VertexId, VertexId], Weight],
                 cover: frozenset, source_version: int):
        self._edges = edges
        self.cover = cover
        self.source_version = source_version
        self._adj: dict[VertexId, dict[VertexId, Weight]] = {}
        for (u, v), w in edges.items():
            self._adj.setdefault(u, {})[v] = w
            self._adj.setdefault(v, {})[u] = w

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edges

    def weight(self, u: VertexId, v: VertexId) -> Weight:
        if u > v:
            u, v = v, u
        return self._edges[(u, v)]

    def neighbors(self, u: VertexId) -> dict[VertexId, Weight]:
        return self._adj.get(u, {})

    def vertices(self) -> list[VertexId]:
        return sorted(self._adj)

    def edges(self) -> Iterator[Edge]:
        for (u, v), w in self._edges.items():
            yield Edge(u, v, w)


def _check_cover(g, cover: frozenset) -> None:
    for e in g.edges():
        if e.u not in cover and e.v not in cover:
            raise InvalidCover(f"edge {e.key} has no endpoint in the cover")


def build_core_task(
    g, cover: Iterable[VertexId], weighted: bool, checked: bool = False
) -> Generator[None, None, CoreSubgraph]:
    """Step-metered core construction; one step per adjacency entry read."""
    cover = cover if isinstance(cover, frozenset) else frozenset(cover)
    if checked:
        _check_cover(g, cover)
    keep = len(cover) + 1
    edges: dict[tuple[VertexId, VertexId], Weight] = {}
    for u in sorted(cover):
        nbrs = g.neighbors(u)
        outside: list[tuple[VertexId, Weight]] = []
        for v, w in nbrs.items():
            yield
            if v in cover:
                key = (u, v) if u < v else (v, u)
                edges[key] = w
            else:
                outside.append((v, w))
        if weighted:
            picked = heapq.nsmallest(keep, outside, key=lambda it: (-it[1], it[0]))
        else:
            picked = heapq.nsmallest(keep, outside, key=lambda it: it[0])
        for v, w in picked:
            key = (u, v) if u < v else (v, u)
            edges[key] = w
    return CoreSubgraph(edges, cover, getattr(g, "version", 0))


def build_core(
    g, cover: Iterable[VertexId], weighted: bool = False, checked: bool = False
) -> CoreSubgraph:
    gen = build_core_task(g, cover, weighted, checked)
    while True:
        try:
            next(gen)
        except StopIteration as stop:
            return stop.value
