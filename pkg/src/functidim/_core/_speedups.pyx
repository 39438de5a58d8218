# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend: all-pairs BFS and the minimum-cover search.

Behaviour (tie-breaking, branching order, witnesses) matches
functidim._core.pure bit for bit; pair-coverage sets live in fixed-width
uint64 words instead of Python ints.
"""

from libc.stdlib cimport calloc, free, malloc

import numpy as np

SOLVED = 0
BUDGET_EXHAUSTED = 1

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static inline int fd_popcount64(unsigned long long x) { return __builtin_popcountll(x); }
    #else
    static inline int fd_popcount64(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; c++; }
        return c;
    }
    #endif
    """
    int fd_popcount64(unsigned long long x) nogil

ctypedef unsigned long long u64


def bfs_all_pairs(int n, const int[::1] indptr, const int[::1] indices):
    """Hop distances between all vertex pairs; -1 marks unreachable pairs."""
    out = np.full((n, n), -1, dtype=np.int32)
    cdef int[:, ::1] d = out
    cdef int *queue = <int *> malloc(n * sizeof(int))
    if queue == NULL:
        raise MemoryError()
    cdef int s, u, w, k, head, tail, du
    with nogil:
        for s in range(n):
            head = 0
            tail = 0
            queue[tail] = s
            tail += 1
            d[s, s] = 0
            while head < tail:
                u = queue[head]
                head += 1
                du = d[s, u] + 1
                for k in range(indptr[u], indptr[u + 1]):
                    w = indices[k]
                    if d[s, w] < 0:
                        d[s, w] = du
                        queue[tail] = w
                        tail += 1
    free(queue)
    return out


cdef struct Ctx:
    int n
    int n_pairs
    int words
    u64 *cand        # n * words: pairs covered by each candidate
    u64 *paircand    # n_pairs:   candidates covering each pair
    u64 *universe    # words
    u64 *covered     # (n + 2) * words, one row per search depth
    u64 *uncov       # words, scratch (fully consumed before recursing)
    int *chosen      # current partial solution
    int *best
    int best_size
    int *branch_buf  # (n + 2) * n
    int *gain_buf    # (n + 2) * n
    long long nodes
    long long budget
    bint budget_hit


cdef void _search(Ctx *ctx, int depth, u64 excluded) nogil:
    cdef int w = ctx.words
    cdef u64 *cov = ctx.covered + depth * w
    cdef u64 *child = ctx.covered + (depth + 1) * w
    cdef u64 allowed, bits, newly
    cdef int i, j, x, p, cnt, tmp, tmpg
    cdef int ucount, maxcov, gain, lb, best_p, best_cnt, n_branch

    ctx.nodes += 1
    if ctx.nodes > ctx.budget:
        ctx.budget_hit = True
        return

    ucount = 0
    for i in range(w):
        ctx.uncov[i] = ctx.universe[i] & ~cov[i]
        ucount += fd_popcount64(ctx.uncov[i])
    if ucount == 0:
        if depth < ctx.best_size:
            ctx.best_size = depth
            for i in range(depth):
                ctx.best[i] = ctx.chosen[i]
            for i in range(1, depth):
                tmp = ctx.best[i]
                j = i - 1
                while j >= 0 and ctx.best[j] > tmp:
                    ctx.best[j + 1] = ctx.best[j]
                    j -= 1
                ctx.best[j + 1] = tmp
        return
    if depth + 1 >= ctx.best_size:
        return

    allowed = ~excluded
    best_p = -1
    best_cnt = ctx.n + 1
    for p in range(ctx.n_pairs):
        if (ctx.uncov[p >> 6] >> (p & 63)) & 1ULL:
            cnt = fd_popcount64(ctx.paircand[p] & allowed)
            if cnt < best_cnt:
                best_cnt = cnt
                best_p = p
                if cnt == 0:
                    break
    if best_cnt == 0:
        return

    maxcov = 0
    for x in range(ctx.n):
        if (allowed >> x) & 1ULL:
            gain = 0
            for i in range(w):
                gain += fd_popcount64(ctx.cand[x * w + i] & ctx.uncov[i])
            if gain > maxcov:
                maxcov = gain
    lb = (ucount + maxcov - 1) / maxcov
    if depth + lb >= ctx.best_size:
        return

    # branch candidates covering best_p, by decreasing fresh gain, ties lowest index
    bits = ctx.paircand[best_p] & allowed
    n_branch = 0
    cdef int *bb = ctx.branch_buf + depth * ctx.n
    cdef int *gb = ctx.gain_buf + depth * ctx.n
    for x in range(ctx.n):
        if (bits >> x) & 1ULL:
            gain = 0
            for i in range(w):
                gain += fd_popcount64(ctx.cand[x * w + i] & ctx.uncov[i])
            bb[n_branch] = x
            gb[n_branch] = gain
            n_branch += 1
    for i in range(1, n_branch):
        tmp = bb[i]
        tmpg = gb[i]
        j = i - 1
        while j >= 0 and gb[j] < tmpg:
            bb[j + 1] = bb[j]
            gb[j + 1] = gb[j]
            j -= 1
        bb[j + 1] = tmp
        gb[j + 1] = tmpg

    newly = 0
    for i in range(n_branch):
        x = bb[i]
        for j in range(w):
            child[j] = cov[j] | ctx.cand[x * w + j]
        ctx.chosen[depth] = x
        _search(ctx, depth + 1, excluded | newly)
        if ctx.budget_hit:
            return
        newly = newly | (1ULL << x)


def min_cover_search(const int[:, ::1] dist, const int[::1] forced, long long budget):
    """Minimum set of candidate vertices whose coverage masks fill the pair universe.

    Same contract as functidim._core.pure.min_cover_search.
    """
    cdef int n = dist.shape[0]
    if dist.shape[1] != n:
        raise ValueError("distance matrix must be square")
    if n > 64:
        raise ValueError("compiled cover search supports at most 64 candidates")
    cdef int n_pairs = n * (n - 1) // 2
    cdef int words = (n_pairs + 63) // 64
    if words == 0:
        words = 1

    cdef Ctx ctx
    ctx.n = n
    ctx.n_pairs = n_pairs
    ctx.words = words
    ctx.cand = <u64 *> calloc(n * words, sizeof(u64))
    ctx.paircand = <u64 *> calloc(n_pairs if n_pairs else 1, sizeof(u64))
    ctx.universe = <u64 *> calloc(words, sizeof(u64))
    ctx.covered = <u64 *> calloc((n + 2) * words, sizeof(u64))
    ctx.uncov = <u64 *> calloc(words, sizeof(u64))
    ctx.chosen = <int *> calloc(n + 1, sizeof(int))
    ctx.best = <int *> calloc(n + 1, sizeof(int))
    ctx.branch_buf = <int *> calloc((n + 2) * n if n else 1, sizeof(int))
    ctx.gain_buf = <int *> calloc((n + 2) * n if n else 1, sizeof(int))
    if (ctx.cand == NULL or ctx.paircand == NULL or ctx.universe == NULL
            or ctx.covered == NULL or ctx.uncov == NULL or ctx.chosen == NULL
            or ctx.best == NULL or ctx.branch_buf == NULL or ctx.gain_buf == NULL):
        _free_ctx(&ctx)
        raise MemoryError()
    ctx.nodes = 0
    ctx.budget = budget
    ctx.budget_hit = False

    cdef int u, v, x, p, i, depth0, gain, best_x, best_gain, count, ucount
    p = 0
    for u in range(n):
        for v in range(u + 1, n):
            for x in range(n):
                if dist[u, x] != dist[v, x]:
                    ctx.cand[x * words + (p >> 6)] |= 1ULL << (p & 63)
                    ctx.paircand[p] |= 1ULL << x
            p += 1
    for p in range(n_pairs):
        ctx.universe[p >> 6] |= 1ULL << (p & 63)

    # forced candidates fill the first depth0 rows of the covered stack
    depth0 = 0
    seen = set()
    for i in range(forced.shape[0]):
        x = forced[i]
        if x in seen:
            continue
        seen.add(x)
        for u in range(words):
            ctx.covered[(depth0 + 1) * words + u] = (
                ctx.covered[depth0 * words + u] | ctx.cand[x * words + u]
            )
        ctx.chosen[depth0] = x
        depth0 += 1

    # greedy cover for the initial upper bound
    cdef u64 *greedy_cov = <u64 *> malloc(words * sizeof(u64))
    if greedy_cov == NULL:
        _free_ctx(&ctx)
        raise MemoryError()
    for i in range(words):
        greedy_cov[i] = ctx.covered[depth0 * words + i]
    count = depth0
    for i in range(depth0):
        ctx.best[i] = ctx.chosen[i]
    while True:
        ucount = 0
        for i in range(words):
            ucount += fd_popcount64(ctx.universe[i] & ~greedy_cov[i])
        if ucount == 0:
            break
        best_x = -1
        best_gain = 0
        for x in range(n):
            gain = 0
            for i in range(words):
                gain += fd_popcount64(ctx.cand[x * words + i] & ctx.universe[i] & ~greedy_cov[i])
            if gain > best_gain:
                best_gain = gain
                best_x = x
        if best_x < 0:
            free(greedy_cov)
            _free_ctx(&ctx)
            raise RuntimeError("pair universe is not coverable")
        ctx.best[count] = best_x
        count += 1
        for i in range(words):
            greedy_cov[i] |= ctx.cand[best_x * words + i]
    free(greedy_cov)
    ctx.best_size = count
    cdef int tmp, jj
    for i in range(1, count):
        tmp = ctx.best[i]
        jj = i - 1
        while jj >= 0 and ctx.best[jj] > tmp:
            ctx.best[jj + 1] = ctx.best[jj]
            jj -= 1
        ctx.best[jj + 1] = tmp

    with nogil:
        _search(&ctx, depth0, 0)

    result = tuple(ctx.best[i] for i in range(ctx.best_size))
    status = BUDGET_EXHAUSTED if ctx.budget_hit else SOLVED
    nodes = ctx.nodes
    best_size = ctx.best_size
    _free_ctx(&ctx)
    return status, best_size, result, nodes


cdef void _free_ctx(Ctx *ctx):
    free(ctx.cand)
    free(ctx.paircand)
    free(ctx.universe)
    free(ctx.covered)
    free(ctx.uncov)
    free(ctx.chosen)
    free(ctx.best)
    free(ctx.branch_buf)
    free(ctx.gain_buf)
