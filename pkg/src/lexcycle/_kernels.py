"""Compiled sweep kernels over compressed adjacency.

Every kernel takes ``prio``: the vertices listed from highest to lowest
tie-break priority, i.e. the previous ordering read right to left.  Ties are
always resolved in favour of the smaller priority index.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def priority_adjacency(n, indptr, indices, prio):
    """Re-sort each adjacency row so neighbours appear in priority order."""
    out = np.empty_like(indices)
    fill = indptr[:-1].copy()
    for k in range(n):
        u = prio[k]
        for e in range(indptr[u], indptr[u + 1]):
            w = indices[e]
            out[fill[w]] = u
            fill[w] += 1
    return out


@njit(cache=True)
def lexbfs_plus(n, ptr, sadj, prio):
    """LexBFS by stable partition refinement, O(n + m).

    Tie classes are doubly linked lists kept in priority order; the class
    list itself is ordered by decreasing label.  Pulling a neighbour out of
    its class appends it to a fresh class placed just ahead, and because
    ``sadj`` rows are in priority order each class stays sorted.
    """
    out = np.empty(n, np.int64)
    if n == 0:
        return out
    cap = n + 1
    nxt = np.full(n, -1, np.int64)
    prv = np.full(n, -1, np.int64)
    cls = np.zeros(n, np.int64)
    head = np.full(cap, -1, np.int64)
    tail = np.full(cap, -1, np.int64)
    cnext = np.full(cap, -1, np.int64)
    cprev = np.full(cap, -1, np.int64)
    stamp = np.full(cap, -1, np.int64)
    split = np.full(cap, -1, np.int64)
    free = np.empty(cap, np.int64)
    nfree = 0
    for c in range(cap - 1, 0, -1):
        free[nfree] = c
        nfree += 1
    for k in range(n):
        v = prio[k]
        if k > 0:
            prv[v] = prio[k - 1]
        if k < n - 1:
            nxt[v] = prio[k + 1]
    head[0] = prio[0]
    tail[0] = prio[n - 1]
    first = 0
    visited = np.zeros(n, np.bool_)

    for step in range(n):
        c = first
        v = head[c]
        out[step] = v
        visited[v] = True
        h = nxt[v]
        head[c] = h
        if h == -1:
            tail[c] = -1
            first = cnext[c]
            if first != -1:
                cprev[first] = -1
            free[nfree] = c
            nfree += 1
        else:
            prv[h] = -1

        for e in range(ptr[v], ptr[v + 1]):
            w = sadj[e]
            if visited[w]:
                continue
            c = cls[w]
            if stamp[c] != step:
                stamp[c] = step
                nfree -= 1
                nc = free[nfree]
                head[nc] = -1
                tail[nc] = -1
                stamp[nc] = -1
                p = cprev[c]
                cprev[nc] = p
                cnext[nc] = c
                cprev[c] = nc
                if p == -1:
                    first = nc
                else:
                    cnext[p] = nc
                split[c] = nc
            nc = split[c]
            a = prv[w]
            b = nxt[w]
            if a == -1:
                head[c] = b
            else:
                nxt[a] = b
            if b == -1:
                tail[c] = a
            else:
                prv[b] = a
            t = tail[nc]
            prv[w] = t
            nxt[w] = -1
            if t == -1:
                head[nc] = w
            else:
                nxt[t] = w
            tail[nc] = w
            cls[w] = nc
            if head[c] == -1:
                p = cprev[c]
                q = cnext[c]
                if p == -1:
                    first = q
                else:
                    cnext[p] = q
                if q != -1:
                    cprev[q] = p
                free[nfree] = c
                nfree += 1
    return out


@njit(cache=True)
def bfs_plus(n, ptr, sadj, prio):
    """Queue BFS; siblings are enqueued in priority order, restarts take the top priority."""
    out = np.empty(n, np.int64)
    queued = np.zeros(n, np.bool_)
    queue = np.empty(n, np.int64)
    qh = 0
    qt = 0
    k = 0
    for step in range(n):
        if qh == qt:
            while queued[prio[k]]:
                k += 1
            s = prio[k]
            queued[s] = True
            queue[qt] = s
            qt += 1
        v = queue[qh]
        qh += 1
        out[step] = v
        for e in range(ptr[v], ptr[v + 1]):
            w = sadj[e]
            if not queued[w]:
                queued[w] = True
                queue[qt] = w
                qt += 1
    return out


@njit(cache=True)
def lexdfs_plus(n, indptr, indices, prio):
    """LexDFS: after each visit, stably move the visited vertex's neighbours to the front.

    O(n^2); the most recent neighbour dominates a prepended label, so the
    whole candidate list stays totally ordered by (label, priority).
    """
    out = np.empty(n, np.int64)
    cur = prio.copy()
    nxt_buf = np.empty(n, np.int64)
    mark = np.zeros(n, np.bool_)
    size = n
    for step in range(n):
        v = cur[0]
        out[step] = v
        for e in range(indptr[v], indptr[v + 1]):
            mark[indices[e]] = True
        j = 0
        for i in range(1, size):
            if mark[cur[i]]:
                nxt_buf[j] = cur[i]
                j += 1
        for i in range(1, size):
            if not mark[cur[i]]:
                nxt_buf[j] = cur[i]
                j += 1
        for e in range(indptr[v], indptr[v + 1]):
            mark[indices[e]] = False
        size -= 1
        for i in range(size):
            cur[i] = nxt_buf[i]
    return out
