"""Static matching subroutines and exact verification oracles.

Two families live here and are kept algorithmically independent on purpose:

* The matchers the dynamic maintainers call: ``approx_mcm`` (augmenting-path
  search with blossom contraction, run to optimality) and ``approx_mwm``
  (exact vertex-subset dynamic program up to a size threshold, greedy with a
  post-hoc certificate beyond it), plus ``maximal_matching``/``approx_cover``.
* The brute-force oracles used only for verification:
  ``exact_mcm_oracle`` / ``exact_mwm_oracle`` branch on include/exclude per
  edge with pruning, ``exact_min_vc_oracle`` does pruned subset search.
  They never share search code with the matchers, so a bug in one side
  cannot silently cancel in a ratio check.

Every matcher-side operation also exists in a resumable, step-metered form
(``*_task``) driven by :class:`StepBudgetedTask`.  One step is one
adjacency-entry visit; a task driven to completion returns the same result
as the direct call, bit for bit.
"""

from __future__ import annotations

import math
from collections import deque
from fractions import Fraction
from typing import Callable, Generator, Iterable, Optional

from . import _kernels
from ._kernels import _pure
from .errors import ApproximationUnverified, OracleLimitExceeded
from .graph import Edge, VertexId, Weight
from .matching import Matching

ORACLE_EDGE_LIMIT = 32
ORACLE_VERTEX_LIMIT = 16
EXACT_MWM_VERTEX_LIMIT = 18


# -- plumbing -----------------------------------------------------------------


def _edge_list(view) -> list[Edge]:
    """Edges of a graph-view (or bare iterable of (u, v, w)), canonical order."""
    if hasattr(view, "edges"):
        items = view.edges()
    else:
        items = view
    edges = []
    for item in items:
        if isinstance(item, Edge):
            edges.append(item)
        else:
            u, v, w = item
            edges.append(Edge.create(u, v, w))
    edges.sort(key=lambda e: e.key)
    return edges


def _components(edges: list[Edge]) -> list[list[Edge]]:
    parent: dict[VertexId, VertexId] = {}

    def find(x: VertexId) -> VertexId:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        parent.setdefault(e.u, e.u)
        parent.setdefault(e.v, e.v)
        ru, rv = find(e.u), find(e.v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[VertexId, list[Edge]] = {}
    for e in edges:
        groups.setdefault(find(e.u), []).append(e)
    return [groups[r] for r in sorted(groups)]


def _compact(edges: list[Edge]) -> tuple[int, list[int], list[int], list[VertexId]]:
    ids = sorted({x for e in edges for x in (e.u, e.v)})
    index = {x: i for i, x in enumerate(ids)}
    us = [index[e.u] for e in edges]
    vs = [index[e.v] for e in edges]
    return len(ids), us, vs, ids


def _scale_weights(edges: list[Edge]) -> tuple[list[int], int]:
    """Rescale rational weights to integers by a common denominator."""
    denom = 1
    for e in edges:
        if not isinstance(e.w, int):
            denom = denom * e.w.denominator // math.gcd(denom, e.w.denominator)
    return [int(e.w * denom) for e in edges], denom


class StepBudgetedTask:
    """Resumable computation over a step generator.

    ``process_steps(n)`` advances by at most ``n`` steps (one step per
    generator yield) and is a no-op once finished.  The generator's return
    value becomes ``result``.
    """

    def __init__(self, gen: Generator):
        self._gen = gen
        self.steps_done = 0
        self._finished = False
        self._result = None

    @property
    def finished(self) -> bool:
        return self._finished

    @property
    def result(self):
        if not self._finished:
            raise RuntimeError("task still running")
        return self._result

    def process_steps(self, n: int) -> int:
        """Run up to ``n`` steps; returns how many were executed."""
        if self._finished:
            return 0
        executed = 0
        while executed < n:
            try:
                next(self._gen)
            except StopIteration as stop:
                self._result = stop.value
                self._finished = True
                break
            executed += 1
        self.steps_done += executed
        return executed

    def run_to_completion(self):
        while not self._finished:
            self.process_steps(1 << 20)
        return self._result


def _drain(gen: Generator):
    while True:
        try:
            next(gen)
        except StopIteration as stop:
            return stop.value


# -- maximal matching and 2-approximate cover --------------------------------


def maximal_matching_task(view) -> Generator[None, None, Matching]:
    """Greedy maximal matching over edges in canonical order."""
    out = Matching()
    for e in _edge_list(view):
        yield
        if not (out.is_matched(e.u) or out.is_matched(e.v)):
            out.add(e)
    return out


def maximal_matching(view) -> Matching:
    return _drain(maximal_matching_task(view))


def approx_cover_task(view) -> Generator[None, None, tuple[frozenset, Matching]]:
    witness = yield from maximal_matching_task(view)
    return witness.matched_vertices(), witness


def approx_cover(view) -> tuple[frozenset, Matching]:
    """Vertex cover from a maximal matching's endpoints (2-approximate)."""
    return _drain(approx_cover_task(view))


# -- approximate (here: exact) maximum cardinality matching ------------------


def _blossom_steps(
    n: int, adj: list[list[int]]
) -> Generator[None, None, list[int]]:
    """Maximum cardinality matching via augmenting paths with blossom
    contraction (O(V^3)); returns the mate array.

    Yields once per adjacency entry examined during the alternating-tree
    search.  Scanning roots in ascending order with sorted adjacency keeps
    the result deterministic.
    """
    match = [-1] * n
    p = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = p[match[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_path(root: int) -> Generator[None, None, int]:
        nonlocal p, base
        used = [False] * n
        p = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                yield
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    curbase = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, curbase, to, in_blossom)
                    mark_path(to, curbase, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        return to
                    used[match[to]] = True
                    queue.append(match[to])
        return -1

    for root in range(n):
        if match[root] != -1:
            continue
        endpoint = yield from find_path(root)
        v = endpoint
        while v != -1:
            pv = p[v]
            ppv = match[pv]
            match[v] = pv
            match[pv] = v
            v = ppv
    return match


def approx_mcm_task(view, eps) -> Generator[None, None, Matching]:
    if eps <= 0:
        raise ValueError("eps must be positive")
    edges = _edge_list(view)
    if not edges:
        return Matching()
    n, us, vs, ids = _compact(edges)
    adj: list[list[int]] = [[] for _ in range(n)]
    weights: dict[tuple[int, int], Weight] = {}
    for e, cu, cv in zip(edges, us, vs):
        adj[cu].append(cv)
        adj[cv].append(cu)
        weights[(min(cu, cv), max(cu, cv))] = e.w
    for lst in adj:
        lst.sort()
    match = yield from _blossom_steps(n, adj)
    out = Matching()
    for i, j in enumerate(match):
        if j > i:
            out.add(Edge.create(ids[i], ids[j], weights[(i, j)]))
    return out


def approx_mcm(view, eps) -> Matching:
    """A matching within factor (1 + eps) of maximum cardinality.

    The search runs to optimality (blossom contraction is polynomial and the
    inputs it sees here are trimmed subgraphs), so the contract holds for
    every positive eps; eps is validated for interface parity.
    """
    return _drain(approx_mcm_task(view, eps))


# -- approximate maximum weight matching --------------------------------------


def _mwm_upper_bound(edges: list[Edge]) -> Fraction:
    """Valid upper bound on the max matching weight: each matched edge (u,v)
    weighs at most (max_w(u) + max_w(v)) / 2 and matched edges are disjoint."""
    best_at: dict[VertexId, Weight] = {}
    for e in edges:
        if e.w > best_at.get(e.u, 0):
            best_at[e.u] = e.w
        if e.w > best_at.get(e.v, 0):
            best_at[e.v] = e.w
    return Fraction(sum(best_at.values(), 0), 2)


def _greedy_mwm(edges: list[Edge]) -> Matching:
    out = Matching()
    for e in sorted(edges, key=lambda e: (-e.w, e.key)):
        if not (out.is_matched(e.u) or out.is_matched(e.v)):
            out.add(e)
    return out


def approx_mwm_task(view, eps) -> Generator[None, None, Matching]:
    if eps <= 0:
        raise ValueError("eps must be positive")
    edges = _edge_list(view)
    if not edges:
        return Matching()
    comps = _components(edges)
    if max(len({x for e in c for x in (e.u, e.v)}) for c in comps) <= EXACT_MWM_VERTEX_LIMIT:
        out = Matching()
        for comp in comps:
            n, us, vs, ids = _compact(comp)
            ws, denom = _scale_weights(comp)
            lookup = {}
            for e, cu, cv in zip(comp, us, vs):
                lookup[(min(cu, cv), max(cu, cv))] = e.w
            _value, pairs = yield from _pure.mwm_dp_steps(n, us, vs, ws)
            for i, j in pairs:
                key = (min(i, j), max(i, j))
                out.add(Edge.create(ids[key[0]], ids[key[1]], lookup[key]))
        return out
    # Beyond the exact-search threshold: greedy by weight, certified post hoc
    # against the half-sum-of-max-incident-weights bound.  Greedy is a plain
    # 1/2-approximation, so certification can genuinely fail; the caller gets
    # an error rather than an uncertified matching.
    for _ in edges:
        yield
    out = _greedy_mwm(edges)
    bound = _mwm_upper_bound(edges)
    if (1 + eps) * out.weight < bound:
        raise ApproximationUnverified(
            f"greedy weight {out.weight} not certified within 1+{eps} "
            f"of upper bound {bound}"
        )
    return out


def approx_mwm(view, eps) -> Matching:
    """A matching within factor (1 + eps) of maximum weight.

    Inputs whose components fit the exact-search threshold (the trimmed
    subgraphs the maintainers pass always do) get an exact optimum from the
    compiled/pure kernel; the result is identical to the metered task form.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    edges = _edge_list(view)
    if not edges:
        return Matching()
    comps = _components(edges)
    if max(len({x for e in c for x in (e.u, e.v)}) for c in comps) <= EXACT_MWM_VERTEX_LIMIT:
        out = Matching()
        for comp in comps:
            n, us, vs, ids = _compact(comp)
            ws, _denom = _scale_weights(comp)
            lookup = {}
            for e, cu, cv in zip(comp, us, vs):
                lookup[(min(cu, cv), max(cu, cv))] = e.w
            _value, pairs = _kernels.mwm_dp(n, us, vs, ws)
            for i, j in pairs:
                key = (min(i, j), max(i, j))
                out.add(Edge.create(ids[key[0]], ids[key[1]], lookup[key]))
        return out
    out = _greedy_mwm(edges)
    bound = _mwm_upper_bound(edges)
    if (1 + eps) * out.weight < bound:
        raise ApproximationUnverified(
            f"greedy weight {out.weight} not certified within 1+{eps} "
            f"of upper bound {bound}"
        )
    return out


# -- exact brute-force oracles (verification only) ----------------------------


def exact_mcm_oracle(view, *, edge_limit: int = ORACLE_EDGE_LIMIT) -> int:
    """Exact maximum matching size by include/exclude branching per edge."""
    edges = _edge_list(view)
    if len(edges) > edge_limit:
        raise OracleLimitExceeded(f"{len(edges)} edges > limit {edge_limit}")
    total = 0
    for comp in _components(edges):
        n, us, vs, _ids = _compact(comp)
        total += _kernels.mcm_size(n, us, vs)
    return total


def exact_mwm_oracle(view, *, edge_limit: int = ORACLE_EDGE_LIMIT) -> Weight:
    """Exact maximum matching weight by include/exclude branching per edge."""
    edges = _edge_list(view)
    if len(edges) > edge_limit:
        raise OracleLimitExceeded(f"{len(edges)} edges > limit {edge_limit}")
    total = Fraction(0)
    for comp in _components(edges):
        n, us, vs, _ids = _compact(comp)
        ws, denom = _scale_weights(comp)
        total += Fraction(_kernels.mwm_value(n, us, vs, ws), denom)
    return int(total) if total.denominator == 1 else total


def exact_min_vc_oracle(view, *, vertex_limit: int = ORACLE_VERTEX_LIMIT) -> int:
    """Exact minimum vertex cover size by pruned subset search."""
    edges = _edge_list(view)
    vertex_count = len({x for e in edges for x in (e.u, e.v)})
    if vertex_count > vertex_limit:
        raise OracleLimitExceeded(f"{vertex_count} vertices > limit {vertex_limit}")
    total = 0
    for comp in _components(edges):
        n, us, vs, _ids = _compact(comp)
        total += _kernels.min_vc_size(n, us, vs)
    return total
