"""Dynamic graph under an edge insert/delete stream.

The graph stores undirected edges in canonical ``(min(u, v), max(u, v))``
form together with a weight, keeps a symmetric adjacency map, and bumps a
version counter once per applied update.  Snapshots are full frozen copies;
the maintainers that need to look at an older state of the graph simply keep
one around.

Stream text format, one event per line::

    + u v [w]     insert, weight defaults to 1
    - u v         delete
    # ...         comment (blank lines are skipped too)

Vertex ids are non-negative decimal integers.  Weights are positive decimal
literals; they parse to ``int`` when integral and to ``Fraction`` otherwise,
so all downstream weight arithmetic is exact.
"""

from __future__ import annotations

import enum
import heapq
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Optional, Union

from .errors import (
    DuplicateInsert,
    MissingDelete,
    ParseError,
    WeightOutOfRange,
)

Weight = Union[int, Fraction]
VertexId = int


def _as_weight(value) -> Weight:
    """Normalize a numeric weight to int (when integral) or Fraction."""
    if isinstance(value, int):
        return value
    frac = Fraction(value)
    return int(frac) if frac.denominator == 1 else frac


class Edge(NamedTuple):
    """An undirected weighted edge in canonical (u < v) form."""

    u: VertexId
    v: VertexId
    w: Weight

    @classmethod
    def create(cls, u: VertexId, v: VertexId, w: Weight = 1) -> "Edge":
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if u < 0 or v < 0:
            raise ValueError("vertex ids must be non-negative")
        w = _as_weight(w)
        if w < 1:
            raise WeightOutOfRange(f"weight {w} < 1")
        if u > v:
            u, v = v, u
        return cls(u, v, w)

    @property
    def key(self) -> tuple[VertexId, VertexId]:
        return (self.u, self.v)


class UpdateKind(enum.Enum):
    INSERT = "+"
    DELETE = "-"


class UpdateEvent(NamedTuple):
    """One stream event: an edge insertion or deletion plus its 1-based index."""

    kind: UpdateKind
    edge: Edge
    seq: int

    @property
    def is_insert(self) -> bool:
        return self.kind is UpdateKind.INSERT


class DynamicGraph:
    """Current edge set with per-vertex adjacency and weight access.

    ``n_cap``, when given, is the configured upper bound N on edge weights,
    validated on insert.  ``reads`` counts read-API calls (adjacency, edge
    and weight queries); tests use it to assert that rebuild paths touch
    only the trimmed subgraph they were handed.
    """

    def __init__(self, n_cap: Optional[Weight] = None):
        self.n_cap = None if n_cap is None else _as_weight(n_cap)
        self._edges: dict[tuple[VertexId, VertexId], Weight] = {}
        self._adj: dict[VertexId, dict[VertexId, Weight]] = {}
        self.version = 0
        self.reads = 0
        self._last_seq: Optional[int] = None

    # -- mutation ----------------------------------------------------------

    def apply_update(self, ev: UpdateEvent) -> Edge:
        """Apply one event; returns the edge as stored (deletes carry the
        stored weight, whatever the event said)."""
        if self._last_seq is not None and ev.seq <= self._last_seq:
            raise ValueError(f"seq {ev.seq} not increasing (last {self._last_seq})")
        key = ev.edge.key
        if ev.kind is UpdateKind.INSERT:
            if key in self._edges:
                raise DuplicateInsert(f"edge {key} already present (seq {ev.seq})")
            w = ev.edge.w
            if self.n_cap is not None and w > self.n_cap:
                raise WeightOutOfRange(f"weight {w} > configured cap {self.n_cap}")
            self._edges[key] = w
            self._adj.setdefault(key[0], {})[key[1]] = w
            self._adj.setdefault(key[1], {})[key[0]] = w
            applied = Edge(key[0], key[1], w)
        else:
            if key not in self._edges:
                raise MissingDelete(f"edge {key} not present (seq {ev.seq})")
            w = self._edges.pop(key)
            del self._adj[key[0]][key[1]]
            del self._adj[key[1]][key[0]]
            applied = Edge(key[0], key[1], w)
        self.version += 1
        self._last_seq = ev.seq
        return applied

    # -- queries -----------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        self.reads += 1
        if u > v:
            u, v = v, u
        return (u, v) in self._edges

    def weight(self, u: VertexId, v: VertexId) -> Weight:
        self.reads += 1
        if u > v:
            u, v = v, u
        return self._edges[(u, v)]

    def neighbors(self, u: VertexId) -> dict[VertexId, Weight]:
        self.reads += 1
        return self._adj.get(u, {})

    def degree(self, u: VertexId) -> int:
        self.reads += 1
        return len(self._adj.get(u, ()))

    def vertices(self) -> list[VertexId]:
        """Vertices with at least one incident edge, ascending."""
        self.reads += 1
        return sorted(v for v, nbrs in self._adj.items() if nbrs)

    def edges(self) -> Iterator[Edge]:
        self.reads += 1
        for (u, v), w in self._edges.items():
            yield Edge(u, v, w)

    def top_weight_neighbors(
        self,
        u: VertexId,
        k: int,
        excluded: Iterable[VertexId] = (),
    ) -> list[Edge]:
        """Up to ``k`` incident edges of ``u`` with endpoints outside
        ``excluded``, of maximum weight; ties broken by smaller neighbor id.

        With unit weights this degenerates to the ``k`` smallest-id
        neighbors, which is the deterministic stand-in for an arbitrary
        choice.
        """
        if k < 0:
            raise ValueError("k must be >= 0")
        self.reads += 1
        excluded = excluded if isinstance(excluded, (set, frozenset)) else set(excluded)
        nbrs = self._adj.get(u, {})
        picked = heapq.nsmallest(
            k,
            ((v, w) for v, w in nbrs.items() if v not in excluded),
            key=lambda item: (-item[1], item[0]),
        )
        return [Edge.create(u, v, w) for v, w in picked]

    def snapshot(self) -> "GraphSnapshot":
        return GraphSnapshot(self)


class GraphSnapshot:
    """Frozen copy of a graph's edge set at a given version."""

    def __init__(self, g: DynamicGraph):
        self._edges = dict(g._edges)
        self._adj = {u: dict(nbrs) for u, nbrs in g._adj.items() if nbrs}
        self.version = g.version

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

    def degree(self, u: VertexId) -> int:
        return len(self._adj.get(u, ()))

    def vertices(self) -> list[VertexId]:
        return sorted(self._adj)

    def edges(self) -> Iterator[Edge]:
        for (u, v), w in self._edges.items():
            yield Edge(u, v, w)


# -- stream text format ------------------------------------------------------


def parse_weight(token: str) -> Weight:
    try:
        w = _as_weight(Fraction(token))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad weight {token!r}") from exc
    if w <= 0:
        raise ValueError(f"weight must be positive, got {token!r}")
    return w


def parse_stream(lines: Iterable[str]) -> Iterator[UpdateEvent]:
    """Parse stream text into events; raises ParseError with a line number."""
    seq = 0
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        op, args = parts[0], parts[1:]
        try:
            if op == "+":
                if len(args) not in (2, 3):
                    raise ValueError("insert takes 2 or 3 fields")
                u, v = int(args[0]), int(args[1])
                w = parse_weight(args[2]) if len(args) == 3 else 1
                seq += 1
                yield UpdateEvent(UpdateKind.INSERT, Edge.create(u, v, w), seq)
            elif op == "-":
                if len(args) != 2:
                    raise ValueError("delete takes 2 fields")
                u, v = int(args[0]), int(args[1])
                seq += 1
                yield UpdateEvent(UpdateKind.DELETE, Edge.create(u, v, 1), seq)
            else:
                raise ValueError(f"unknown op {op!r}")
        except (ValueError, WeightOutOfRange) as exc:
            raise ParseError(line_no, str(exc)) from exc


def format_event(ev: UpdateEvent) -> str:
    e = ev.edge
    if ev.kind is UpdateKind.DELETE:
        return f"- {e.u} {e.v}"
    if e.w == 1:
        return f"+ {e.u} {e.v}"
    w = e.w if isinstance(e.w, int) else float(e.w)
    return f"+ {e.u} {e.v} {w}"
