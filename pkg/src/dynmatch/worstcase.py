"""Deamortized weighted matching: step-budgeted rounds over graph snapshots.

A round snapshots the graph, builds the trimmed subgraph from the cover
chain, runs the weighted matcher (tolerance eps/8) and then the cover
routine on it, all as resumable tasks driven a bounded number of steps per
update.  Deletions arriving mid-round are removed from the published
matching immediately and queued so they are also absent from the round's
eventual result; their endpoints, and all insertion endpoints, merge into
the cover chain when the round hands off.  Completing a round publishes its
matching and immediately starts the next round; within one update the
engine keeps spending its budget across round boundaries until either the
budget runs out or a round computed on the current graph version has been
published, so an oversized budget degenerates to rebuild-per-update.

The per-round budget is ``budget_const * N * ceil(sqrt(m0)) * eps^-2 *
max(1, ceil(log2(1/eps)))`` with ``m0`` the snapshot's edge count (floored
at 1).  ``steps_this_update()`` never exceeds the governing round's budget.

``budget_const=None`` selects the unbounded degenerate mode, which runs the
amortized maintainer (cover maintainer plus weighted lazy rebuilds)
outright: the two variants schedule their covers differently, so published
matchings can only be promised to coincide with the amortized ones by
sharing that code path.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

from .core import build_core_task
from .cover import CoverMaintainer
from .graph import DynamicGraph, GraphSnapshot, UpdateEvent, UpdateKind, Weight
from .lazy import WeightedLazy
from .matching import Matching
from .static_match import StepBudgetedTask, approx_cover_task, approx_mwm_task

PHASE_BUILD_CORE = "build-core"
PHASE_RUN_MATCHER = "run-matcher"
PHASE_RUN_COVER = "run-cover"
PHASE_IDLE = "idle"


def _ceil_log2(x: Fraction) -> int:
    """Smallest k >= 0 with 2^k >= x, exact."""
    k = 0
    p = Fraction(1)
    while p < x:
        p *= 2
        k += 1
    return k


class _Round:
    """One in-flight rebuild over a frozen snapshot."""

    def __init__(self, snapshot: GraphSnapshot, cover: frozenset,
                 eps: Fraction, budget: int):
        self.snapshot = snapshot
        self.cover = cover
        self.budget = budget
        self.deleted: set[tuple[int, int]] = set()
        self._core = None
        self._matcher_out: Optional[Matching] = None
        self._cover_out: Optional[frozenset] = None
        self._task = StepBudgetedTask(
            build_core_task(snapshot, cover, weighted=True)
        )
        self.phase = PHASE_BUILD_CORE
        self._eps = eps
        self.finished = False

    def notify_delete(self, u: int, v: int) -> None:
        if u > v:
            u, v = v, u
        self.deleted.add((u, v))

    def advance(self, allowance: int) -> int:
        spent = 0
        while spent < allowance and not self.finished:
            spent += self._task.process_steps(allowance - spent)
            if not self._task.finished:
                break
            if self.phase == PHASE_BUILD_CORE:
                self._core = self._task.result
                self._task = StepBudgetedTask(
                    approx_mwm_task(self._core, self._eps / 8)
                )
                self.phase = PHASE_RUN_MATCHER
            elif self.phase == PHASE_RUN_MATCHER:
                self._matcher_out = self._task.result
                self._task = StepBudgetedTask(approx_cover_task(self._core))
                self.phase = PHASE_RUN_COVER
            else:
                self._cover_out = self._task.result[0]
                self.finished = True
        return spent

    def matching_result(self) -> Matching:
        out = Matching()
        for e in self._matcher_out:
            if e.key not in self.deleted:
                out.add(e)
        return out

    def cover_result(self) -> frozenset:
        return self._cover_out


class WorstCaseMwm:
    """Weighted matching maintainer with a per-update step budget."""

    def __init__(self, eps, n_cap: Weight, budget_const: Optional[int] = 64,
                 checked: bool = False):
        eps = Fraction(eps)
        if not 0 < eps <= Fraction(1, 2):
            raise ValueError(f"eps must be in (0, 1/2], got {eps}")
        self.eps = eps
        self.n_cap = n_cap
        self.budget_const = budget_const
        self.checked = checked
        self.steps_last = 0
        self.budget_last: Optional[int] = None
        self._published = Matching()
        self._round: Optional[_Round] = None
        self._chain: set[int] = set()
        self._pending: set[int] = set()
        if budget_const is None:
            cover = CoverMaintainer(checked=checked)
            self._delegate = WeightedLazy(eps, cover, n_cap, checked=checked)
            self._delegate_cover = cover
        else:
            if budget_const < 1:
                raise ValueError("budget_const must be >= 1")
            self._delegate = None
            self._delegate_cover = None

    # -- public surface ------------------------------------------------------

    @property
    def matching(self) -> Matching:
        if self._delegate is not None:
            return self._delegate.matching
        return self._published

    def current_matching(self) -> Matching:
        return self.matching.copy()

    @property
    def phase(self) -> str:
        if self._round is None:
            return PHASE_IDLE
        return self._round.phase

    def steps_this_update(self) -> int:
        return self.steps_last

    def round_budget(self, m0: int) -> int:
        """Step allowance for a round whose snapshot has m0 edges."""
        root = max(1, math.isqrt(max(0, m0 - 1)) + 1)
        raw = (
            Fraction(self.budget_const)
            * Fraction(self.n_cap)
            * root
            * self.eps ** -2
            * max(1, _ceil_log2(1 / self.eps))
        )
        return math.ceil(raw)

    # -- update path ----------------------------------------------------------

    def on_update(self, g: DynamicGraph, ev: UpdateEvent) -> None:
        """Process one update already applied to ``g``."""
        if self._delegate is not None:
            self._delegate_cover.on_update(g, ev)
            self._delegate.on_update(g, ev)
            self.steps_last = 0
            return
        u, v = ev.edge.u, ev.edge.v
        self._pending.add(u)
        self._pending.add(v)
        if ev.kind is UpdateKind.DELETE:
            self._published.discard(u, v)
            if self._round is not None:
                self._round.notify_delete(u, v)

        if self._round is None:
            self._initiate(g)
        allowance = self._round.budget
        spent = 0
        while spent < allowance:
            spent += self._round.advance(allowance - spent)
            if not self._round.finished:
                break
            fresh = self._round.snapshot.version == g.version
            self._complete()
            if fresh:
                break
            self._initiate(g)
        self.steps_last = spent
        self.budget_last = allowance
        if self.checked:
            assert self._published.is_valid_in(g), "stale edge in published matching"
            assert spent <= allowance

    def _initiate(self, g: DynamicGraph) -> None:
        cover = frozenset(self._chain | self._pending)
        snapshot = g.snapshot()
        self._round = _Round(snapshot, cover, self.eps,
                             self.round_budget(snapshot.edge_count))

    def _complete(self) -> None:
        self._published = self._round.matching_result()
        self._chain = set(self._round.cover_result()) | self._pending
        self._pending = set()
        self._round = None
