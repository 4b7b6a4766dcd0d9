"""Lazy maintainers: rebuild a near-optimal matching only when it has aged.

Both maintainers exploit stability: one update moves the optimum by at most
1 (cardinality) or by at most the weight cap (weighted).  A freshly
rebuilt matching therefore stays within tolerance for a window of updates;
during the window only deletions of matched edges are processed.  Rebuilds
run the static matcher on the trimmed subgraph of the current cover, never
on the full graph.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Optional

from .core import build_core
from .cover import CoverMaintainer
from .errors import WeightOutOfRange
from .graph import DynamicGraph, UpdateEvent, UpdateKind, Weight
from .matching import Matching
from .static_match import approx_mcm, approx_mwm


class RebuildRecord(NamedTuple):
    """One rebuild: when it ran, what it produced, and the window it earned."""

    version: int
    matching_size: int
    matching_weight: Weight
    updates_since_previous: int
    window: int


class LazyMcm:
    """(1 + eps)-approximate maximum cardinality matching under updates.

    The window after a rebuild producing matching M is
    ``max(1, floor(eps/4 * |M|))`` and the rebuild itself asks the static
    matcher for a (1 + eps/4) answer, which together keep the maintained
    matching within (1 + eps) between rebuilds.
    """

    def __init__(self, eps, cover: CoverMaintainer, checked: bool = False):
        eps = Fraction(eps)
        if not 0 < eps <= Fraction(1, 2):
            raise ValueError(f"eps must be in (0, 1/2], got {eps}")
        self.eps = eps
        self.cover = cover
        self.checked = checked
        self._matching = Matching()
        self.t = 0
        self.last_rebuild_version = -1
        self._updates_since_rebuild = 0
        self.rebuild_history: list[RebuildRecord] = []

    @property
    def matching(self) -> Matching:
        return self._matching

    def current_matching(self) -> Matching:
        return self._matching.copy()

    def on_update(self, g: DynamicGraph, ev: UpdateEvent) -> None:
        """Process one update, already applied to both ``g`` and the cover."""
        self._updates_since_rebuild += 1
        if ev.kind is UpdateKind.DELETE:
            self._matching.discard(ev.edge.u, ev.edge.v)
        self.t -= 1
        if self.t <= 0:
            self._rebuild(g)
        if self.checked:
            assert self._matching.is_valid_in(g), "stale edge in matching"

    def _rebuild(self, g: DynamicGraph) -> None:
        core = build_core(g, self.cover.current_cover(), weighted=False,
                          checked=self.checked)
        self._matching = approx_mcm(core, self.eps / 4)
        self.t = max(1, int(self.eps / 4 * self._matching.size))
        self.rebuild_history.append(RebuildRecord(
            version=g.version,
            matching_size=self._matching.size,
            matching_weight=self._matching.weight,
            updates_since_previous=self._updates_since_rebuild,
            window=self.t,
        ))
        self._updates_since_rebuild = 0
        self.last_rebuild_version = g.version


class WeightedLazy:
    """(1 + eps)-approximate maximum weight matching under updates.

    ``n_cap`` bounds the ratio of the largest to the smallest admissible
    edge weight and ``weight_floor`` is the smallest admissible weight, so
    admissible weights lie in ``[weight_floor, weight_floor * n_cap]``.
    Plain usage keeps ``weight_floor=1`` with ``n_cap = N``; the bucketing
    schemes instantiate slices with the level's floor and local ratio.

    The rebuild window divides the matching weight by the weight cap
    (``weight_floor * n_cap``): one update can move the optimum by the
    heaviest admissible edge, so the window is
    ``max(1, floor(eps/4 * w(M) / cap))``.
    """

    def __init__(self, eps, cover: CoverMaintainer, n_cap,
                 weight_floor: Weight = 1, checked: bool = False):
        eps = Fraction(eps)
        if not 0 < eps <= Fraction(1, 2):
            raise ValueError(f"eps must be in (0, 1/2], got {eps}")
        if n_cap < 1:
            raise ValueError("n_cap must be >= 1")
        self.eps = eps
        self.cover = cover
        self.n_cap = n_cap
        self.weight_floor = weight_floor
        self.checked = checked
        self._matching = Matching()
        self.t = 0
        self.last_rebuild_version = -1
        self._updates_since_rebuild = 0
        self.rebuild_history: list[RebuildRecord] = []

    @property
    def matching(self) -> Matching:
        return self._matching

    def current_matching(self) -> Matching:
        return self._matching.copy()

    @property
    def weight_cap(self) -> Weight:
        return self.weight_floor * self.n_cap

    def on_update(self, g: DynamicGraph, ev: UpdateEvent) -> None:
        w = ev.edge.w
        if ev.kind is UpdateKind.INSERT and not (
            self.weight_floor <= w <= self.weight_cap
        ):
            raise WeightOutOfRange(
                f"weight {w} outside [{self.weight_floor}, {self.weight_cap}]"
            )
        self._updates_since_rebuild += 1
        if ev.kind is UpdateKind.DELETE:
            self._matching.discard(ev.edge.u, ev.edge.v)
        self.t -= 1
        if self.t <= 0:
            self._rebuild(g)
        if self.checked:
            assert self._matching.is_valid_in(g), "stale edge in matching"

    def _rebuild(self, g: DynamicGraph) -> None:
        core = build_core(g, self.cover.current_cover(), weighted=True,
                          checked=self.checked)
        self._matching = approx_mwm(core, self.eps / 4)
        window = self.eps / 4 * Fraction(self._matching.weight) / Fraction(self.weight_cap)
        self.t = max(1, int(window))
        self.rebuild_history.append(RebuildRecord(
            version=g.version,
            matching_size=self._matching.size,
            matching_weight=self._matching.weight,
            updates_since_previous=self._updates_since_rebuild,
            window=self.t,
        ))
        self._updates_since_rebuild = 0
        self.last_rebuild_version = g.version
