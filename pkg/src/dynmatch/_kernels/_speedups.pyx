# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the pure-Python exact solvers.

Same algorithms, same pruning, same canonical reconstruction tie-break as
``_pure``; the test suite asserts result equality between the backends.
"""

from libc.stdlib cimport free, malloc


cdef inline int _popcount(unsigned long long x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef inline int _lowest_bit(unsigned long long x) nogil:
    cdef int i = 0
    while not (x >> i) & 1:
        i += 1
    return i


# -- maximum cardinality matching (branch on edges) ---------------------------


cdef void _mcm_rec(int idx, unsigned long long used, int size, int m, int n,
                   unsigned long long* ebits, int* best) nogil:
    cdef int free_pairs = (n - _popcount(used)) >> 1
    cdef int j
    if size + free_pairs <= best[0]:
        return
    for j in range(idx, m):
        if size + m - j <= best[0]:
            break
        if not (used & ebits[j]):
            if size + 1 > best[0]:
                best[0] = size + 1
            _mcm_rec(j + 1, used | ebits[j], size + 1, m, n, ebits, best)


def mcm_size(int n, list us, list vs):
    cdef int m = len(us)
    if m == 0:
        return 0
    if n > 64:
        raise ValueError("edge-branching solver limited to 64 vertices")
    cdef unsigned long long* ebits = <unsigned long long*> malloc(
        m * sizeof(unsigned long long))
    if ebits == NULL:
        raise MemoryError()
    cdef int j, best
    cdef unsigned long long used = 0
    try:
        for j in range(m):
            ebits[j] = (1ULL << <int> us[j]) | (1ULL << <int> vs[j])
        best = 0
        for j in range(m):
            if not (used & ebits[j]):
                used |= ebits[j]
                best += 1
        _mcm_rec(0, 0, 0, m, n, ebits, &best)
        return best
    finally:
        free(ebits)


# -- maximum weight matching (branch on edges, heaviest first) ----------------


cdef void _mwm_rec(int idx, unsigned long long used, long long cur, int m,
                   int n, unsigned long long* ebits, long long* w,
                   long long* suffix, long long* best) nogil:
    cdef int free_pairs = (n - _popcount(used)) >> 1
    cdef int j
    cdef long long nxt
    for j in range(idx, m):
        if cur + suffix[j] <= best[0]:
            break
        if cur + free_pairs * w[j] <= best[0]:
            break
        if not (used & ebits[j]):
            nxt = cur + w[j]
            if nxt > best[0]:
                best[0] = nxt
            _mwm_rec(j + 1, used | ebits[j], nxt, m, n, ebits, w, suffix, best)


def mwm_value(int n, list us, list vs, list ws):
    cdef int m = len(us)
    if m == 0:
        return 0
    if n > 64:
        raise ValueError("edge-branching solver limited to 64 vertices")
    order = sorted(range(m), key=lambda j: (-ws[j], us[j], vs[j]))
    cdef unsigned long long* ebits = <unsigned long long*> malloc(
        m * sizeof(unsigned long long))
    cdef long long* w = <long long*> malloc(m * sizeof(long long))
    cdef long long* suffix = <long long*> malloc((m + 1) * sizeof(long long))
    if ebits == NULL or w == NULL or suffix == NULL:
        free(ebits); free(w); free(suffix)
        raise MemoryError()
    cdef int j, oj
    cdef long long best
    cdef unsigned long long used = 0
    try:
        for j in range(m):
            oj = order[j]
            ebits[j] = (1ULL << <int> us[oj]) | (1ULL << <int> vs[oj])
            w[j] = <long long> ws[oj]
        suffix[m] = 0
        for j in range(m - 1, -1, -1):
            suffix[j] = suffix[j + 1] + w[j]
        best = 0
        for j in range(m):
            if not (used & ebits[j]):
                used |= ebits[j]
                best += w[j]
        _mwm_rec(0, 0, 0, m, n, ebits, w, suffix, &best)
        return best
    finally:
        free(ebits); free(w); free(suffix)


# -- minimum vertex cover (branch on an uncovered edge) -----------------------


cdef void _vc_rec(unsigned long long cov, int size, int m,
                  unsigned long long* ebits, unsigned long long* bu,
                  unsigned long long* bv, int* best) nogil:
    cdef int first = -1
    cdef unsigned long long lb_used = cov
    cdef int lb = 0
    cdef int j
    if size >= best[0]:
        return
    for j in range(m):
        if cov & ebits[j]:
            continue
        if first < 0:
            first = j
        if not (lb_used & ebits[j]):
            lb_used |= ebits[j]
            lb += 1
    if first < 0:
        best[0] = size
        return
    if size + lb >= best[0]:
        return
    _vc_rec(cov | bu[first], size + 1, m, ebits, bu, bv, best)
    _vc_rec(cov | bv[first], size + 1, m, ebits, bu, bv, best)


def min_vc_size(int n, list us, list vs):
    cdef int m = len(us)
    if m == 0:
        return 0
    if n > 64:
        raise ValueError("subset-search solver limited to 64 vertices")
    cdef unsigned long long* ebits = <unsigned long long*> malloc(
        m * sizeof(unsigned long long))
    cdef unsigned long long* bu = <unsigned long long*> malloc(
        m * sizeof(unsigned long long))
    cdef unsigned long long* bv = <unsigned long long*> malloc(
        m * sizeof(unsigned long long))
    if ebits == NULL or bu == NULL or bv == NULL:
        free(ebits); free(bu); free(bv)
        raise MemoryError()
    cdef int j, best
    try:
        for j in range(m):
            bu[j] = 1ULL << <int> us[j]
            bv[j] = 1ULL << <int> vs[j]
            ebits[j] = bu[j] | bv[j]
        best = n
        _vc_rec(0, 0, m, ebits, bu, bv, &best)
        return best
    finally:
        free(ebits); free(bu); free(bv)


# -- exact MWM with matching reconstruction (vertex-subset DP) ----------------


cdef long long _dp_solve(unsigned int mask, long long* memo, int* nbr,
                         long long* nbr_w, int* start) nogil:
    cdef long long best, cand
    cdef int i, j, t
    cdef unsigned int rest
    if memo[mask] >= 0:
        return memo[mask]
    i = _lowest_bit(mask)
    rest = mask ^ (1u << i)
    best = _dp_solve(rest, memo, nbr, nbr_w, start)
    for t in range(start[i], start[i + 1]):
        j = nbr[t]
        if (rest >> j) & 1:
            cand = nbr_w[t] + _dp_solve(rest ^ (1u << j), memo, nbr, nbr_w, start)
            if cand > best:
                best = cand
    memo[mask] = best
    return best


def mwm_dp(int n, list us, list vs, list ws):
    """Exact max-weight matching value plus one optimal edge set, using the
    same canonical tie-break as the pure backend."""
    if n > 20:
        raise ValueError(f"vertex-subset DP limited to 20 vertices, got {n}")
    cdef int m = len(us)
    adj = [[] for _ in range(n)]
    cdef int j
    for j in range(m):
        adj[us[j]].append((vs[j], ws[j]))
        adj[vs[j]].append((us[j], ws[j]))
    for lst in adj:
        lst.sort()
    cdef int total = 2 * m
    cdef int* nbr = <int*> malloc((total if total else 1) * sizeof(int))
    cdef long long* nbr_w = <long long*> malloc(
        (total if total else 1) * sizeof(long long))
    cdef int* start = <int*> malloc((n + 1) * sizeof(int))
    cdef long long* memo = <long long*> malloc(
        (1ULL << n) * sizeof(long long))
    if nbr == NULL or nbr_w == NULL or start == NULL or memo == NULL:
        free(nbr); free(nbr_w); free(start); free(memo)
        raise MemoryError()
    cdef int i, t
    cdef unsigned int full, mask, rest
    cdef long long value, target
    try:
        t = 0
        for i in range(n):
            start[i] = t
            for item in adj[i]:
                nbr[t] = <int> item[0]
                nbr_w[t] = <long long> item[1]
                t += 1
        start[n] = t
        for mask in range(1u << n):
            memo[mask] = -1
        memo[0] = 0
        full = (1u << n) - 1
        value = _dp_solve(full, memo, nbr, nbr_w, start) if n else 0

        pairs = []
        mask = full
        while mask:
            i = _lowest_bit(mask)
            rest = mask ^ (1u << i)
            target = memo[mask]
            matched = False
            for t in range(start[i], start[i + 1]):
                j = nbr[t]
                if (rest >> j) & 1 and nbr_w[t] + memo[rest ^ (1u << j)] == target:
                    pairs.append((i, j))
                    mask = rest ^ (1u << j)
                    matched = True
                    break
            if not matched:
                mask = rest
        return value, pairs
    finally:
        free(nbr); free(nbr_w); free(start); free(memo)
