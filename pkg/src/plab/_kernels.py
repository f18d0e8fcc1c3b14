"""Numba kernels for the backward (attractor) computation.

See ``plab.space`` for the state index layout.  Status is 1 for cop-win,
0 otherwise; capture times count individual moves.
"""

from __future__ import annotations

import numpy as np
from numba import njit

FREE_ALL, MUST_MOVE_ALL, AT_LEAST_ONE, AT_MOST_ONE = 0, 1, 2, 3


@njit(cache=True)
def _rank(a, s, binom):
    r = 0
    for i in range(s):
        r += binom[a[i] + i, i + 1]
    return r


@njit(cache=True)
def _legal(cop_rule, flag, stay, is_last):
    if cop_rule == MUST_MOVE_ALL:
        return not stay
    if cop_rule == AT_LEAST_ONE:
        return not (is_last and flag == 0 and stay)
    if cop_rule == AT_MOST_ONE:
        return not (flag == 1 and not stay)
    return True


@njit(cache=True)
def _contains(row, s, x):
    for i in range(s):
        if row[i] == x:
            return True
    return False


@njit(cache=True)
def solve_kernel(n, k, F, cop_rule, robber_free, indptr, indices, binom, mtab, moff, M, off):
    total = off[k] + M[k] * n
    status = np.zeros(total, dtype=np.uint8)
    ctime = np.full(total, -1, dtype=np.int32)
    counters = np.zeros(M[k] * n, dtype=np.uint8)
    queue = np.empty(total, dtype=np.int64)
    head = 0
    tail = 0

    # capture states and robber counters
    for j in range(k):
        Mp = M[k - j]
        for rm in range(M[j]):
            mrow = mtab[moff[j] + rm]
            for rp in range(Mp):
                prow = mtab[moff[k - j] + rp]
                base = off[j] + (rm * Mp + rp) * F * n
                for f in range(F):
                    for r in range(n):
                        if _contains(mrow, j, r) or _contains(prow, k - j, r):
                            idx = base + f * n + r
                            status[idx] = 1
                            ctime[idx] = 0
                            queue[tail] = idx
                            tail += 1
    for rc in range(M[k]):
        crow = mtab[moff[k] + rc]
        for r in range(n):
            idx = off[k] + rc * n + r
            if _contains(crow, k, r):
                status[idx] = 1
                ctime[idx] = 0
                queue[tail] = idx
                tail += 1
            else:
                cnt = indptr[r + 1] - indptr[r] + (1 if robber_free else 0)
                counters[rc * n + r] = cnt

    moved = np.empty(k + 1, dtype=np.int64)
    pend = np.empty(k + 1, dtype=np.int64)
    while head < tail:
        idx = queue[head]
        head += 1
        t = ctime[idx] + 1
        if idx >= off[k]:
            # robber-phase state reached by the last micro-move of a round
            local = idx - off[k]
            r = local % n
            rc = local // n
            crow = mtab[moff[k] + rc]
            for i in range(k):
                d = crow[i]
                if i > 0 and crow[i - 1] == d:
                    continue
                m = 0
                for q in range(k):
                    if q != i:
                        moved[m] = crow[q]
                        m += 1
                rm = _rank(moved, k - 1, binom)
                for e in range(indptr[d], indptr[d] + (indptr[d + 1] - indptr[d]) + 1):
                    p = d if e == indptr[d + 1] else indices[e]
                    stay = p == d
                    for fp in range(F):
                        if not _legal(cop_rule, fp, stay, True):
                            continue
                        pidx = off[k - 1] + ((rm * M[1] + p) * F + fp) * n + r
                        if status[pidx] == 0:
                            status[pidx] = 1
                            ctime[pidx] = t
                            queue[tail] = pidx
                            tail += 1
            continue

        j = 0
        while j + 1 < k and off[j + 1] <= idx:
            j += 1
        local = idx - off[j]
        r = local % n
        local //= n
        fs = local % F
        local //= F
        Mp = M[k - j]
        rp = local % Mp
        rm = local // Mp
        if j == 0:
            if fs != 0:
                continue
            # predecessors are robber-phase states with the same cops
            for e in range(indptr[r], indptr[r + 1] + 1):
                if e == indptr[r + 1]:
                    if not robber_free:
                        break
                    rprev = r
                else:
                    rprev = indices[e]
                ci = rp * n + rprev
                pidx = off[k] + ci
                if status[pidx] == 0:
                    counters[ci] -= 1
                    if counters[ci] == 0:
                        status[pidx] = 1
                        ctime[pidx] = t
                        queue[tail] = pidx
                        tail += 1
            continue

        mrow = mtab[moff[j] + rm]
        prow = mtab[moff[k - j] + rp]
        for i in range(j):
            d = mrow[i]
            if i > 0 and mrow[i - 1] == d:
                continue
            m = 0
            for q in range(j):
                if q != i:
                    moved[m] = mrow[q]
                    m += 1
            rmp = _rank(moved, j - 1, binom)
            for e in range(indptr[d], indptr[d + 1] + 1):
                p = d if e == indptr[d + 1] else indices[e]
                stay = p == d
                # insert p into pending
                s = k - j
                w = 0
                placed = False
                for q in range(s):
                    if not placed and p <= prow[q]:
                        pend[w] = p
                        w += 1
                        placed = True
                    pend[w] = prow[q]
                    w += 1
                if not placed:
                    pend[w] = p
                rpp = _rank(pend, s + 1, binom)
                for fp in range(F):
                    if not _legal(cop_rule, fp, stay, False):
                        continue
                    nf = 0
                    if F == 2:
                        nf = 1 if (fp == 1 or not stay) else 0
                    if nf != fs:
                        continue
                    pidx = off[j - 1] + ((rmp * M[k - j + 1] + rpp) * F + fp) * n + r
                    if status[pidx] == 0:
                        status[pidx] = 1
                        ctime[pidx] = t
                        queue[tail] = pidx
                        tail += 1
    return status, ctime
