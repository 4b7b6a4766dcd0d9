"""Lazy constant-approximate vertex cover under edge updates.

The maintainer keeps the endpoint cover of a maximal matching and lets it
age: every insertion adds both endpoints (so validity never breaks), no
vertex is removed between refreshes, and a counter of ``|M| / 4`` updates
decides when to recompute.  A refresh builds the trimmed subgraph from the
aged cover, finds a maximal matching on it (which is maximal on the whole
graph), and restarts from that matching's endpoints.  The aged cover stays
within 5x of the minimum; a fresh one is within 2x.
"""

from __future__ import annotations

from typing import Optional

from .core import build_core
from .graph import DynamicGraph, UpdateEvent, UpdateKind
from .matching import Matching
from .static_match import approx_cover


class CoverMaintainer:
    """Maintained vertex cover, its refresh counter, and the generating
    matching.

    With ``checked=True`` every update re-scans the graph to assert cover
    validity (test/diagnostic use only).
    """

    def __init__(self, checked: bool = False):
        self._cover: set[int] = set()
        self.base_matching = Matching()
        self.counter = 0
        self.refresh_version = -1
        self.checked = checked

    def current_cover(self) -> frozenset:
        return frozenset(self._cover)

    @property
    def size(self) -> int:
        return len(self._cover)

    def on_update(self, g: DynamicGraph, ev: UpdateEvent) -> None:
        """Process one update already applied to ``g``."""
        if ev.kind is UpdateKind.INSERT:
            self._cover.add(ev.edge.u)
            self._cover.add(ev.edge.v)
        self.counter -= 1
        if self.counter <= 0:
            self.refresh(g)
        if self.checked:
            self.assert_valid(g)

    def refresh(self, g: DynamicGraph) -> None:
        """Recompute the cover from a maximal matching on the trimmed
        subgraph of the aged cover."""
        core = build_core(g, frozenset(self._cover), weighted=False,
                          checked=self.checked)
        new_cover, witness = approx_cover(core)
        self._cover = set(new_cover)
        self.base_matching = witness
        # Floor of 1: with fewer than 4 matched edges the window would be
        # empty and the state could never advance past a refresh.
        self.counter = max(1, witness.size // 4)
        self.refresh_version = g.version

    def assert_valid(self, g: DynamicGraph) -> None:
        for e in g.edges():
            if e.u not in self._cover and e.v not in self._cover:
                raise AssertionError(
                    f"cover invalid: edge {e.key} uncovered at version {g.version}"
                )
