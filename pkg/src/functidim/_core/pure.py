"""Pure-Python kernel backend.

Mirrors the compiled extension exactly: same tie-breaking, same branching
order, same witnesses.  Pair-coverage sets are arbitrary-width Python ints
used as bit vectors.
"""

from collections import deque

import numpy as np

SOLVED = 0
BUDGET_EXHAUSTED = 1


def bfs_all_pairs(n, indptr, indices):
    """Hop distances between all vertex pairs; -1 marks unreachable pairs.

    The adjacency structure comes in CSR form: the neighbours of u are
    indices[indptr[u]:indptr[u+1]].
    """
    ptr = [int(x) for x in indptr]
    nbr = [int(x) for x in indices]
    dist = np.full((n, n), -1, dtype=np.int32)
    for s in range(n):
        row = dist[s]
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = row[u] + 1
            for k in range(ptr[u], ptr[u + 1]):
                w = nbr[k]
                if row[w] < 0:
                    row[w] = du
                    queue.append(w)
    return dist


def _build_masks(dist):
    """Per-candidate masks over pair indices and per-pair masks over candidates.

    Pair (u, v) with u < v gets index in row-major order of the strict upper
    triangle.  Candidate x covers the pair when dist[u, x] != dist[v, x].
    """
    n = dist.shape[0]
    iu, iv = np.triu_indices(n, k=1)
    n_pairs = len(iu)
    if n_pairs == 0:
        return [0] * n, [], 0
    diff = dist[iu, :] != dist[iv, :]
    cand = [
        int.from_bytes(np.packbits(diff[:, x], bitorder="little").tobytes(), "little")
        for x in range(n)
    ]
    pair = [
        int.from_bytes(np.packbits(diff[p, :], bitorder="little").tobytes(), "little")
        for p in range(n_pairs)
    ]
    return cand, pair, n_pairs


def min_cover_search(dist, forced, budget):
    """Minimum set of candidate vertices whose coverage masks fill the pair universe.

    forced candidates are unconditionally included.  Branch and bound on the
    uncovered pair with the fewest remaining covering candidates, trying
    candidates by decreasing fresh coverage (ties: lowest index).  Returns
    (status, best_size, sorted tuple of candidates, nodes_explored).
    """
    dist = np.asarray(dist)
    n = dist.shape[0]
    cand, pair, n_pairs = _build_masks(dist)
    universe = (1 << n_pairs) - 1

    chosen0 = sorted(set(int(c) for c in forced))
    covered0 = 0
    for c in chosen0:
        covered0 |= cand[c]

    # greedy cover for the initial upper bound
    chosen = list(chosen0)
    covered = covered0
    while covered != universe:
        best_x, best_gain = -1, 0
        for x in range(n):
            gain = (cand[x] & universe & ~covered).bit_count()
            if gain > best_gain:
                best_gain, best_x = gain, x
        if best_x < 0:
            raise RuntimeError("pair universe is not coverable")
        chosen.append(best_x)
        covered |= cand[best_x]

    best = sorted(chosen)
    best_size = len(best)
    nodes = 0
    budget_hit = False

    def search(stack, covered, excluded, depth):
        nonlocal best, best_size, nodes, budget_hit
        nodes += 1
        if nodes > budget:
            budget_hit = True
            return
        uncov = universe & ~covered
        if uncov == 0:
            if depth < best_size:
                best_size = depth
                best = sorted(stack)
            return
        if depth + 1 >= best_size:
            return
        allowed = ~excluded
        # most-constrained uncovered pair, lowest index on ties
        best_p, best_cnt = -1, n + 1
        m = uncov
        while m:
            p = (m & -m).bit_length() - 1
            m &= m - 1
            cnt = (pair[p] & allowed).bit_count()
            if cnt < best_cnt:
                best_cnt, best_p = cnt, p
                if cnt == 0:
                    break
        if best_cnt == 0:
            return
        # covering lower bound from the best single-candidate gain
        ucount = uncov.bit_count()
        maxcov = 0
        for x in range(n):
            if (allowed >> x) & 1:
                gain = (cand[x] & uncov).bit_count()
                if gain > maxcov:
                    maxcov = gain
        lb = -(-ucount // maxcov)
        if depth + lb >= best_size:
            return
        branches = [x for x in range(n) if (pair[best_p] & allowed) >> x & 1]
        branches.sort(key=lambda x: (-(cand[x] & uncov).bit_count(), x))
        newly = 0
        for x in branches:
            stack.append(x)
            search(stack, covered | cand[x], excluded | newly, depth + 1)
            stack.pop()
            if budget_hit:
                return
            newly |= 1 << x

    search(list(chosen0), covered0, 0, len(chosen0))
    status = BUDGET_EXHAUSTED if budget_hit else SOLVED
    return status, best_size, tuple(best), nodes
