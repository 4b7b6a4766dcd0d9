"""Pure-Python exact matching/cover solvers (fallback backend).

All functions take a graph on compacted vertex indices ``0..n-1`` given as
parallel edge arrays.  Weights are positive integers (callers rescale
rational weights to a common denominator).  The branch-and-bound solvers
return optimal values only; ``mwm_dp`` also reconstructs one optimal
matching under a fixed canonical tie-break so that every backend produces
the same edge set.

Canonical DP tie-break, used by ``mwm_dp`` reconstruction: at each state,
let ``i`` be the lowest-index unprocessed vertex; prefer matching ``i`` to
its smallest eligible partner achieving the optimum, and skip ``i`` only if
no partner does.
"""

from __future__ import annotations

from typing import Generator


def _greedy_mcm(m: int, bu: list[int], bv: list[int]) -> int:
    used = 0
    size = 0
    for j in range(m):
        b = bu[j] | bv[j]
        if not used & b:
            used |= b
            size += 1
    return size


def mcm_size(n: int, us: list[int], vs: list[int]) -> int:
    """Exact maximum matching size via include/exclude branching on edges.

    Edges are expected in canonical sorted order.  Pruning: remaining-edge
    count, free-vertex pairing bound, and a greedy warm start.
    """
    m = len(us)
    if m == 0:
        return 0
    if n > 64:
        raise ValueError("edge-branching solver limited to 64 vertices")
    bu = [1 << u for u in us]
    bv = [1 << v for v in vs]
    best = _greedy_mcm(m, bu, bv)

    def rec(idx: int, used: int, size: int) -> None:
        nonlocal best
        free_pairs = (n - used.bit_count()) >> 1
        if size + free_pairs <= best:
            return
        for j in range(idx, m):
            if size + m - j <= best:
                break
            b = bu[j] | bv[j]
            if not used & b:
                if size + 1 > best:
                    best = size + 1
                rec(j + 1, used | b, size + 1)

    rec(0, 0, 0)
    return best


def mwm_value(n: int, us: list[int], vs: list[int], ws: list[int]) -> int:
    """Exact maximum matching weight via branch-and-bound on edges.

    Branches in decreasing weight order with suffix-sum and free-vertex
    upper bounds.
    """
    m = len(us)
    if m == 0:
        return 0
    if n > 64:
        raise ValueError("edge-branching solver limited to 64 vertices")
    order = sorted(range(m), key=lambda j: (-ws[j], us[j], vs[j]))
    bu = [1 << us[j] for j in order]
    bv = [1 << vs[j] for j in order]
    w = [ws[j] for j in order]
    suffix = [0] * (m + 1)
    for j in range(m - 1, -1, -1):
        suffix[j] = suffix[j + 1] + w[j]

    used0 = 0
    best = 0
    for j in range(m):
        b = bu[j] | bv[j]
        if not used0 & b:
            used0 |= b
            best += w[j]

    def rec(idx: int, used: int, cur: int) -> None:
        nonlocal best
        free_pairs = (n - used.bit_count()) >> 1
        for j in range(idx, m):
            if cur + suffix[j] <= best:
                break
            if cur + free_pairs * w[j] <= best:
                break
            b = bu[j] | bv[j]
            if not used & b:
                nxt = cur + w[j]
                if nxt > best:
                    best = nxt
                rec(j + 1, used | b, nxt)

    rec(0, 0, 0)
    return best


def min_vc_size(n: int, us: list[int], vs: list[int]) -> int:
    """Exact minimum vertex cover size via branching on an uncovered edge.

    Lower-bounds each node with a greedy maximal matching on the still
    uncovered edges (vertex-disjoint edges need distinct cover vertices).
    """
    m = len(us)
    if m == 0:
        return 0
    if n > 64:
        raise ValueError("subset-search solver limited to 64 vertices")
    bu = [1 << u for u in us]
    bv = [1 << v for v in vs]
    best = n

    def rec(cov: int, size: int) -> None:
        nonlocal best
        if size >= best:
            return
        first = -1
        lb_used = cov
        lb = 0
        for j in range(m):
            b = bu[j] | bv[j]
            if cov & b:
                continue
            if first < 0:
                first = j
            if not lb_used & b:
                lb_used |= b
                lb += 1
        if first < 0:
            best = size
            return
        if size + lb >= best:
            return
        rec(cov | bu[first], size + 1)
        rec(cov | bv[first], size + 1)

    rec(0, 0)
    return best


# -- exact MWM with matching reconstruction (vertex-subset DP) ---------------


def _dp_adjacency(
    n: int, us: list[int], vs: list[int], ws: list[int]
) -> list[list[tuple[int, int]]]:
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for u, v, w in zip(us, vs, ws):
        adj[u].append((v, w))
        adj[v].append((u, w))
    for lst in adj:
        lst.sort()
    return adj


def mwm_dp_steps(
    n: int, us: list[int], vs: list[int], ws: list[int]
) -> Generator[None, None, tuple[int, list[tuple[int, int]]]]:
    """Generator form of ``mwm_dp``; yields once per adjacency-entry visit.

    Step-budgeted callers drive this directly so the work a static call
    performs per scheduling slice is a pure, backend-independent count.
    """
    if n > 20:
        raise ValueError(f"vertex-subset DP limited to 20 vertices, got {n}")
    adj = _dp_adjacency(n, us, vs, ws)
    memo: dict[int, int] = {0: 0}

    def solve(mask: int) -> Generator[None, None, int]:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        i = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << i)
        best = yield from solve(rest)
        for j, w in adj[i]:
            yield
            if rest >> j & 1:
                cand = w + (yield from solve(rest ^ (1 << j)))
                if cand > best:
                    best = cand
        memo[mask] = best
        return best

    full = (1 << n) - 1
    value = yield from solve(full)

    pairs: list[tuple[int, int]] = []
    mask = full
    while mask:
        i = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << i)
        target = memo[mask]
        matched = False
        for j, w in adj[i]:
            yield
            if rest >> j & 1 and w + memo[rest ^ (1 << j)] == target:
                pairs.append((i, j))
                mask = rest ^ (1 << j)
                matched = True
                break
        if not matched:
            mask = rest
    return value, pairs


def mwm_dp(
    n: int, us: list[int], vs: list[int], ws: list[int]
) -> tuple[int, list[tuple[int, int]]]:
    """Exact maximum-weight matching value and one optimal edge set."""
    gen = mwm_dp_steps(n, us, vs, ws)
    while True:
        try:
            next(gen)
        except StopIteration as stop:
            return stop.value
