"""Synthetic update-stream generators.

All generators are deterministic functions of their seed.  Streams are
valid by construction: inserts name absent edges, deletes name present
ones, weights are uniform integers in the configured range.

The ``delete-matched-adversary`` kind replays a deterministic maintainer
internally while generating, and its deletions always target an edge that
maintainer currently has matched; replaying the stream against the same
configuration reproduces the attack exactly.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Optional

from .cover import CoverMaintainer
from .errors import InvalidParams
from .graph import DynamicGraph, Edge, UpdateEvent, UpdateKind
from .lazy import LazyMcm, WeightedLazy

WORKLOAD_KINDS = (
    "uniform-churn",
    "insert-heavy",
    "sliding-window",
    "delete-matched-adversary",
)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidParams(message)


def _common(params: dict) -> tuple[int, int, int, int]:
    n = int(params.get("n", 12))
    length = int(params.get("length", 1000))
    w_min = int(params.get("w_min", 1))
    w_max = int(params.get("w_max", 1))
    _require(n >= 2, f"need n >= 2, got {n}")
    _require(length >= 0, f"need length >= 0, got {length}")
    _require(1 <= w_min <= w_max, f"need 1 <= w_min <= w_max, got [{w_min}, {w_max}]")
    return n, length, w_min, w_max


def _random_absent(rng: random.Random, n: int, present: set) -> Optional[tuple[int, int]]:
    total = n * (n - 1) // 2
    if len(present) >= total:
        return None
    if len(present) > 0.8 * total:
        absent = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if (u, v) not in present
        ]
        return rng.choice(absent)
    while True:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        key = (min(u, v), max(u, v))
        if key not in present:
            return key


def _churn(
    rng: random.Random, n: int, length: int, w_min: int, w_max: int,
    p_ins: float, m_cap: Optional[int],
) -> list[UpdateEvent]:
    present: set[tuple[int, int]] = set()
    events: list[UpdateEvent] = []
    for seq in range(1, length + 1):
        want_insert = rng.random() < p_ins
        if m_cap is not None and len(present) >= m_cap:
            want_insert = False
        if not present:
            want_insert = True
        key = _random_absent(rng, n, present) if want_insert else None
        if key is not None:
            present.add(key)
            w = rng.randint(w_min, w_max)
            events.append(UpdateEvent(UpdateKind.INSERT, Edge.create(*key, w), seq))
        else:
            key = rng.choice(sorted(present))
            present.remove(key)
            events.append(UpdateEvent(UpdateKind.DELETE, Edge.create(*key, 1), seq))
    return events


def _sliding_window(
    rng: random.Random, n: int, length: int, w_min: int, w_max: int, window: int
) -> list[UpdateEvent]:
    _require(window >= 1, f"need window >= 1, got {window}")
    present: set[tuple[int, int]] = set()
    fifo: list[tuple[int, int]] = []
    events: list[UpdateEvent] = []
    for seq in range(1, length + 1):
        key = None
        if len(fifo) < window:
            key = _random_absent(rng, n, present)
        if key is not None:
            present.add(key)
            fifo.append(key)
            w = rng.randint(w_min, w_max)
            events.append(UpdateEvent(UpdateKind.INSERT, Edge.create(*key, w), seq))
        else:
            key = fifo.pop(0)
            present.remove(key)
            events.append(UpdateEvent(UpdateKind.DELETE, Edge.create(*key, 1), seq))
    return events


def _adversary(
    rng: random.Random, n: int, length: int, w_min: int, w_max: int,
    p_ins: float, eps, n_cap: Optional[int],
) -> list[UpdateEvent]:
    """Deletions target an edge currently matched by a lazy maintainer run
    alongside generation (weighted when w_max > 1)."""
    g = DynamicGraph()
    cover = CoverMaintainer()
    if w_max > 1:
        algo = WeightedLazy(eps, cover, n_cap=n_cap if n_cap is not None else w_max)
    else:
        algo = LazyMcm(eps, cover)
    events: list[UpdateEvent] = []
    present: set[tuple[int, int]] = set()
    for seq in range(1, length + 1):
        matched = sorted(algo.matching.edge_keys())
        want_insert = rng.random() < p_ins or not matched
        key = _random_absent(rng, n, present) if want_insert else None
        if key is not None:
            w = rng.randint(w_min, w_max)
            ev = UpdateEvent(UpdateKind.INSERT, Edge.create(*key, w), seq)
            present.add(key)
        else:
            # Full graph with an empty matching is the one corner where no
            # matched target exists and nothing can be inserted.
            key = rng.choice(matched) if matched else sorted(present)[0]
            ev = UpdateEvent(UpdateKind.DELETE, Edge.create(*key, 1), seq)
            present.remove(key)
        applied = g.apply_update(ev)
        enriched = ev._replace(edge=applied)
        cover.on_update(g, enriched)
        algo.on_update(g, enriched)
        events.append(ev)
    return events


def generate_workload(kind: str, params: dict, seed: int) -> list[UpdateEvent]:
    """Produce a deterministic, valid update stream of the requested kind."""
    rng = random.Random(seed)
    n, length, w_min, w_max = _common(params)
    if kind == "uniform-churn":
        p_ins = float(params.get("p_ins", 0.5))
        _require(0 <= p_ins <= 1, f"need p_ins in [0, 1], got {p_ins}")
        m_cap = params.get("m_cap")
        return _churn(rng, n, length, w_min, w_max, p_ins,
                      None if m_cap is None else int(m_cap))
    if kind == "insert-heavy":
        p_ins = float(params.get("p_ins", 0.85))
        _require(0.5 <= p_ins <= 1, f"need p_ins in [0.5, 1], got {p_ins}")
        m_cap = params.get("m_cap")
        return _churn(rng, n, length, w_min, w_max, p_ins,
                      None if m_cap is None else int(m_cap))
    if kind == "sliding-window":
        window = int(params.get("window", 3 * n))
        return _sliding_window(rng, n, length, w_min, w_max, window)
    if kind == "delete-matched-adversary":
        p_ins = float(params.get("p_ins", 0.5))
        _require(0 <= p_ins <= 1, f"need p_ins in [0, 1], got {p_ins}")
        eps = Fraction(str(params.get("eps", "0.25")))
        n_cap = params.get("n_cap")
        return _adversary(rng, n, length, w_min, w_max, p_ins, eps,
                          None if n_cap is None else int(n_cap))
    raise InvalidParams(f"unknown workload kind {kind!r}")
