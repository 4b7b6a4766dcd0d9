"""Weight-class ensembles: geometric rounding copies and bucket-dropping copies.

Two ways to turn the cardinality/weight maintainers into a weighted matcher
whose update cost depends on log N rather than N:

* :class:`GeometricMwmScheme` keeps ``k = ceil(ln(alpha) / ln(1+eps))``
  copies.  Copy ``j`` assigns an edge of weight ``w`` to the level ``l``
  with ``alpha^(l+r) <= w < alpha^(l+r+1)`` where ``r = (j-1)/k``, rounds
  its weight down to ``alpha^(l+r)``, and maintains a near-maximum
  *cardinality* matching per level (edges on a level share the same rounded
  weight).  The best copy's combined matching is within roughly
  ``(1+eps)(alpha+1) alpha ln(alpha) / (alpha-1)^2`` of the optimum, which
  at ``alpha = 5.704`` is about ``3 + O(eps)``.

* :class:`BucketedMwmScheme` puts weight ``w`` in bucket ``b`` when
  ``eps^-b <= w < eps^-(b+1)`` and runs ``C = ceil(1/eps)`` copies, copy
  ``c`` dropping every bucket congruent to ``c`` mod ``C``.  The surviving
  buckets split into levels of ``C - 1`` consecutive buckets each, so each
  level's max/min weight ratio is at most ``eps^-(C-1)`` and a weighted
  lazy maintainer runs per level.  The best copy is within
  ``(1+7 eps) / (1-1/C)`` of the optimum.

Level and bucket membership is decided by exact rational comparison
(boundaries are closed below, open above); a float-only rule could
misclassify an exact power and silently break the partition invariants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional

from .combine import ChargeReport, combine
from .cover import CoverMaintainer
from .errors import WeightOutOfRange
from .graph import DynamicGraph, Edge, UpdateEvent, Weight
from .lazy import LazyMcm, WeightedLazy
from .matching import Matching

DEFAULT_ALPHA = Fraction("5.704")


def _bounded_exponent_search(
    value: Fraction, base: Fraction, guess: int, power: Callable[[int], Fraction]
) -> int:
    """Largest e with power(e) <= value, starting from a float guess."""
    e = guess
    while power(e) > value:
        e -= 1
    while power(e + 1) <= value:
        e += 1
    return e


def assign_level(w: Weight, r, alpha=DEFAULT_ALPHA) -> tuple[int, float]:
    """Level l with alpha^(l+r) <= w < alpha^(l+r+1), plus the rounded-down
    weight alpha^(l+r) (as a float; membership itself is decided exactly).

    With r > 0 the level of a weight-1 edge is -1; negative levels are fine
    everywhere downstream.
    """
    r = Fraction(r)
    alpha = Fraction(alpha)
    if not 0 <= r < 1:
        raise ValueError(f"offset must be in [0, 1), got {r}")
    if alpha <= 1:
        raise ValueError("alpha must exceed 1")
    if w < 1:
        raise WeightOutOfRange(f"weight {w} < 1")
    q, p = r.denominator, r.numerator
    wq = Fraction(w) ** q
    guess = math.floor(math.log(float(w)) / math.log(float(alpha)) - float(r))
    e = _bounded_exponent_search(wq, alpha, guess * q + p, lambda exp: alpha ** exp)
    level = (e - p) // q
    return level, float(alpha) ** (level + float(r))


class GeometricRounding:
    """Level arithmetic for the alpha-power rounding copies."""

    def __init__(self, eps, alpha=DEFAULT_ALPHA):
        self.eps = Fraction(eps)
        self.alpha = Fraction(alpha)
        if not 0 < self.eps <= Fraction(1, 2):
            raise ValueError(f"eps must be in (0, 1/2], got {self.eps}")
        if self.alpha <= 1:
            raise ValueError("alpha must exceed 1")
        # Smallest integer k with (1+eps)^k >= alpha, found exactly.  The
        # analysis treats k = ln(alpha)/ln(1+eps) as exact; rounding up only
        # adds copies, and the per-copy guarantee degrades by at most the
        # ceiling slack (covered by the end-to-end bound the tests assert).
        k = max(1, math.ceil(math.log(self.alpha) / math.log(1 + self.eps)))
        while (1 + self.eps) ** k < self.alpha:
            k += 1
        while k > 1 and (1 + self.eps) ** (k - 1) >= self.alpha:
            k -= 1
        self.k = k
        self._pow_cache: dict[int, Fraction] = {}

    def copies(self) -> range:
        return range(1, self.k + 1)

    def offset(self, j: int) -> Fraction:
        return Fraction(j - 1, self.k)

    def alpha_pow(self, e: int) -> Fraction:
        got = self._pow_cache.get(e)
        if got is None:
            got = self.alpha ** e
            self._pow_cache[e] = got
        return got

    def level_of(self, w: Weight, j: int) -> int:
        """The unique l with alpha^(l+r) <= w < alpha^(l+r+1), r=(j-1)/k.

        Exact form: alpha^(l*k + j - 1) <= w^k < alpha^((l+1)*k + j - 1).
        """
        if w < 1:
            raise WeightOutOfRange(f"weight {w} < 1")
        wf = Fraction(w)
        wk = wf ** self.k
        guess = math.floor(math.log(float(wf)) / math.log(float(self.alpha))
                           - (j - 1) / self.k)
        e = _bounded_exponent_search(
            wk, self.alpha, guess * self.k + j - 1,
            lambda exp: self.alpha_pow(exp),
        )
        # e is the largest exponent with alpha^e <= w^k; solve l*k + j-1 <= e.
        return (e - (j - 1)) // self.k

    def rounded_weight(self, level: int, j: int) -> float:
        return float(self.alpha) ** (level + (j - 1) / self.k)

    def rounded_weights_of(self, edges, j: int) -> float:
        return sum(self.rounded_weight(self.level_of(e.w, j), j) for e in edges)

    def charge_bound(self) -> Fraction:
        return (self.alpha + 1) / (self.alpha - 1)


class BucketPlan:
    """Bucket arithmetic for the bucket-dropping copies."""

    def __init__(self, eps):
        self.eps = Fraction(eps)
        if not 0 < self.eps <= Fraction(1, 2):
            raise ValueError(f"eps must be in (0, 1/2], got {self.eps}")
        self.inv = 1 / self.eps
        self.C = math.ceil(self.inv)
        self._pow_cache: dict[int, Fraction] = {}

    def inv_pow(self, e: int) -> Fraction:
        got = self._pow_cache.get(e)
        if got is None:
            got = self.inv ** e
            self._pow_cache[e] = got
        return got

    def bucket_of(self, w: Weight) -> int:
        """The unique b >= 0 with eps^-b <= w < eps^-(b+1)."""
        if w < 1:
            raise WeightOutOfRange(f"weight {w} < 1")
        wf = Fraction(w)
        guess = math.floor(math.log(float(wf)) / math.log(float(self.inv)))
        return _bounded_exponent_search(wf, self.inv, guess, self.inv_pow)

    def removed_in_copy(self, b: int) -> int:
        return b % self.C

    def level_of(self, b: int, c: int) -> int:
        """Level holding bucket b in copy c (b must survive in c).

        Copy c's level l spans buckets lC+c+1 .. (l+1)C+c-1.
        """
        if b % self.C == c:
            raise ValueError(f"bucket {b} is removed in copy {c}")
        return (b - c - 1) // self.C

    def level_buckets(self, level: int, c: int) -> range:
        return range(level * self.C + c + 1, (level + 1) * self.C + c)

    def level_floor(self, level: int, c: int) -> Fraction:
        return self.inv_pow(level * self.C + c + 1)

    @property
    def ratio_cap(self) -> Fraction:
        return self.inv_pow(self.C - 1)

    def charge_bound(self) -> Fraction:
        return 1 + 3 * self.eps


@dataclass
class _Slice:
    """One (copy, level) cell: its own graph, cover, and matcher."""

    graph: DynamicGraph
    cover: CoverMaintainer
    matcher: object  # LazyMcm or WeightedLazy

    def apply(self, ev: UpdateEvent) -> None:
        self.graph.apply_update(ev)
        self.cover.on_update(self.graph, ev)
        self.matcher.on_update(self.graph, ev)


class GeometricMwmScheme:
    """k rounding copies over per-level cardinality maintainers."""

    def __init__(self, eps, alpha=DEFAULT_ALPHA, n_cap: Optional[Weight] = None,
                 checked: bool = False):
        self.plan = GeometricRounding(eps, alpha)
        self.eps = self.plan.eps
        self.n_cap = n_cap
        self.checked = checked
        self._copies: list[dict[int, _Slice]] = [dict() for _ in self.plan.copies()]

    def _slice(self, j: int, level: int) -> _Slice:
        slices = self._copies[j - 1]
        got = slices.get(level)
        if got is None:
            cover = CoverMaintainer(checked=self.checked)
            got = _Slice(DynamicGraph(), cover,
                         LazyMcm(self.eps, cover, checked=self.checked))
            slices[level] = got
        return got

    def on_update(self, ev: UpdateEvent) -> None:
        """Route one base-graph event (already applied there, so deletes
        carry the stored weight) to its level slice in every copy."""
        w = ev.edge.w
        if self.n_cap is not None and w > self.n_cap:
            raise WeightOutOfRange(f"weight {w} > configured cap {self.n_cap}")
        for j in self.plan.copies():
            level = self.plan.level_of(w, j)
            self._slice(j, level).apply(ev)

    def _levels(self, j: int) -> dict[int, Matching]:
        return {lvl: s.matcher.matching for lvl, s in self._copies[j - 1].items()}

    def combined(self, j: int, with_charges: bool = False):
        charge = None
        if with_charges:
            charge = lambda e, lvl: self.plan.alpha_pow(lvl)  # noqa: E731
        return combine(self._levels(j), charge)

    def best(self) -> Matching:
        """Combined matching of maximum true weight across copies."""
        best: Matching = Matching()
        best_w = -1
        for j in self.plan.copies():
            combined_j, report = self.combined(j, with_charges=self.checked)
            if self.checked:
                self.assert_charges(report)
            if combined_j.weight > best_w:
                best, best_w = combined_j, combined_j.weight
        return best

    def assert_charges(self, report: ChargeReport) -> None:
        """Per-edge displaced-weight bound, in exact alpha-power units."""
        bound = self.plan.charge_bound()
        for entry in report.entries:
            cap = bound * self.plan.alpha_pow(entry.level)
            if entry.phi > cap:
                raise AssertionError(
                    f"charge bound violated at {entry.edge.key}: "
                    f"{entry.phi} > {cap}"
                )


class BucketedMwmScheme:
    """C bucket-dropping copies over per-level weighted maintainers."""

    def __init__(self, eps, n_cap: Optional[Weight] = None, checked: bool = False):
        self.plan = BucketPlan(eps)
        self.eps = self.plan.eps
        self.n_cap = n_cap
        self.checked = checked
        self._copies: list[dict[int, _Slice]] = [dict() for _ in range(self.plan.C)]

    def _slice(self, c: int, level: int) -> _Slice:
        slices = self._copies[c]
        got = slices.get(level)
        if got is None:
            cover = CoverMaintainer(checked=self.checked)
            matcher = WeightedLazy(
                self.eps, cover,
                n_cap=self.plan.ratio_cap,
                weight_floor=self.plan.level_floor(level, c),
                checked=self.checked,
            )
            got = _Slice(DynamicGraph(), cover, matcher)
            slices[level] = got
        return got

    def on_update(self, ev: UpdateEvent) -> None:
        w = ev.edge.w
        if self.n_cap is not None and w > self.n_cap:
            raise WeightOutOfRange(f"weight {w} > configured cap {self.n_cap}")
        b = self.plan.bucket_of(w)
        for c in range(self.plan.C):
            if b % self.plan.C == c:
                continue
            level = self.plan.level_of(b, c)
            self._slice(c, level).apply(ev)

    def _levels(self, c: int) -> dict[int, Matching]:
        return {lvl: s.matcher.matching for lvl, s in self._copies[c].items()}

    def combined(self, c: int, with_charges: bool = False):
        charge = None
        if with_charges:
            charge = lambda e, lvl: e.w  # noqa: E731
        return combine(self._levels(c), charge)

    def best(self) -> Matching:
        best: Matching = Matching()
        best_w = -1
        for c in range(self.plan.C):
            combined_c, report = self.combined(c, with_charges=self.checked)
            if self.checked:
                self.assert_charges(report)
            if combined_c.weight > best_w:
                best, best_w = combined_c, combined_c.weight
        return best

    def assert_charges(self, report: ChargeReport) -> None:
        """Per-edge displaced-weight bound, exact in rational arithmetic."""
        bound = self.plan.charge_bound()
        for entry in report.entries:
            cap = bound * Fraction(entry.edge.w)
            if entry.phi > cap:
                raise AssertionError(
                    f"charge bound violated at {entry.edge.key}: "
                    f"{entry.phi} > {cap}"
                )
