"""Greedy combination of per-level matchings into one matching.

Levels are processed from highest to lowest; an edge is accepted when
neither endpoint is already used by an accepted edge from a higher (or the
same) level.  The optional charge report records, for every accepted edge,
the lower-level matched edges sharing an endpoint with it (the edges its
acceptance displaced) together with their total charged weight; the
per-edge charge bounds of the rounding/bucketing analyses are asserted on
it by the tests.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, NamedTuple, Optional, Union

from .errors import InvalidLevelMatching
from .graph import Edge, VertexId, Weight
from .matching import Matching


class ChargeEntry(NamedTuple):
    """Charge set of one combined edge: members as (edge, level) plus the
    total of their charged weights (the edge itself included)."""

    edge: Edge
    level: int
    members: tuple[tuple[Edge, int], ...]
    phi: Weight


class ChargeReport(NamedTuple):
    entries: tuple[ChargeEntry, ...]

    def entry_for(self, u: VertexId, v: VertexId) -> ChargeEntry:
        if u > v:
            u, v = v, u
        for entry in self.entries:
            if entry.edge.key == (u, v):
                return entry
        raise KeyError((u, v))


LevelInput = Union[Matching, Iterable[Edge]]


def _as_matching(level: int, value: LevelInput) -> Matching:
    if isinstance(value, Matching):
        return value
    try:
        return Matching(value)
    except ValueError as exc:
        raise InvalidLevelMatching(f"level {level}: {exc}") from exc


def combine(
    levels: Mapping[int, LevelInput],
    charge_weight: Optional[Callable[[Edge, int], Weight]] = None,
) -> tuple[Matching, Optional[ChargeReport]]:
    """Combine per-level matchings greedily from the highest level down.

    ``charge_weight(edge, level)`` supplies the weight an edge contributes
    to charge sets (a rounded weight for the geometric scheme, the raw
    weight for the bucketed one); passing it enables the report, which is
    otherwise skipped.
    """
    by_level = {lvl: _as_matching(lvl, edges) for lvl, edges in levels.items()}
    combined = Matching()
    accepted: list[tuple[Edge, int]] = []
    for lvl in sorted(by_level, reverse=True):
        for e in sorted(by_level[lvl], key=lambda e: e.key):
            if not (combined.is_matched(e.u) or combined.is_matched(e.v)):
                combined.add(e)
                accepted.append((e, lvl))

    if charge_weight is None:
        return combined, None

    entries = []
    for e, lvl in accepted:
        members = [(e, lvl)]
        for lower in sorted(by_level, reverse=True):
            if lower >= lvl:
                continue
            for other in sorted(by_level[lower], key=lambda o: o.key):
                if {other.u, other.v} & {e.u, e.v}:
                    members.append((other, lower))
        phi = sum((charge_weight(m, ml) for m, ml in members), 0)
        entries.append(ChargeEntry(e, lvl, tuple(members), phi))
    return combined, ChargeReport(tuple(entries))
