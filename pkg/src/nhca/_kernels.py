"""Compiled linear-time graph sweeps over CSR arrays.

Every routine takes ``indptr``/``indices`` (int64) and works in O(n + m).
"""

import numpy as np
from numba import njit


@njit(cache=True)
def mcs_order(n, indptr, indices):
    """Maximum cardinality search; returns vertices in visit order."""
    weight = np.zeros(n, np.int64)
    visited = np.zeros(n, np.bool_)
    head = np.full(n + 1, -1, np.int64)
    nxt = np.full(n, -1, np.int64)
    prv = np.full(n, -1, np.int64)
    for v in range(n - 1, -1, -1):
        nxt[v] = head[0]
        if head[0] != -1:
            prv[head[0]] = v
        head[0] = v
    order = np.empty(n, np.int64)
    maxw = 0
    for i in range(n):
        while maxw > 0 and head[maxw] == -1:
            maxw -= 1
        v = head[maxw]
        # unlink v
        head[maxw] = nxt[v]
        if nxt[v] != -1:
            prv[nxt[v]] = -1
        visited[v] = True
        order[i] = v
        for k in range(indptr[v], indptr[v + 1]):
            u = indices[k]
            if visited[u]:
                continue
            w = weight[u]
            if prv[u] != -1:
                nxt[prv[u]] = nxt[u]
            else:
                head[w] = nxt[u]
            if nxt[u] != -1:
                prv[nxt[u]] = prv[u]
            w += 1
            weight[u] = w
            prv[u] = -1
            nxt[u] = head[w]
            if head[w] != -1:
                prv[head[w]] = u
            head[w] = u
            if w > maxw:
                maxw = w
    return order


@njit(cache=True)
def peo_failure(n, indptr, indices, order):
    """Zero fill-in test for the reverse of a visit order.

    For each vertex v let p be its earlier-visited neighbor visited last.
    The order is perfect iff every other earlier neighbor of v is adjacent
    to p.  Returns (v, p, b) for a violation with b !~ p, else (-1, -1, -1).
    """
    pos = np.empty(n, np.int64)
    for i in range(n):
        pos[order[i]] = i
    parent = np.full(n, -1, np.int64)
    for v in range(n):
        best = -1
        for k in range(indptr[v], indptr[v + 1]):
            u = indices[k]
            if pos[u] < pos[v] and (best == -1 or pos[u] > pos[best]):
                best = u
        parent[v] = best
    # group children by parent
    cnt = np.zeros(n + 1, np.int64)
    for v in range(n):
        if parent[v] != -1:
            cnt[parent[v] + 1] += 1
    for i in range(n):
        cnt[i + 1] += cnt[i]
    kids = np.empty(cnt[n], np.int64)
    fill = cnt[:n].copy()
    for v in range(n):
        p = parent[v]
        if p != -1:
            kids[fill[p]] = v
            fill[p] += 1
    mark = np.full(n, -1, np.int64)
    for p in range(n):
        if cnt[p] == cnt[p + 1]:
            continue
        for k in range(indptr[p], indptr[p + 1]):
            mark[indices[k]] = p
        for j in range(cnt[p], cnt[p + 1]):
            v = kids[j]
            for k in range(indptr[v], indptr[v + 1]):
                b = indices[k]
                if b != p and pos[b] < pos[v] and mark[b] != p:
                    return v, p, b
    return -1, -1, -1


@njit(cache=True)
def bfs_path(n, indptr, indices, src, dst, allowed):
    """Shortest src-dst path inside the vertices flagged ``allowed``."""
    prev = np.full(n, -2, np.int64)
    queue = np.empty(n, np.int64)
    prev[src] = -1
    queue[0] = src
    lo, hi = 0, 1
    while lo < hi:
        x = queue[lo]
        lo += 1
        if x == dst:
            break
        for k in range(indptr[x], indptr[x + 1]):
            y = indices[k]
            if prev[y] == -2 and allowed[y]:
                prev[y] = x
                queue[hi] = y
                hi += 1
    if prev[dst] == -2:
        return np.empty(0, np.int64)
    length = 0
    x = dst
    while x != -1:
        length += 1
        x = prev[x]
    path = np.empty(length, np.int64)
    x = dst
    for i in range(length - 1, -1, -1):
        path[i] = x
        x = prev[x]
    return path


@njit(cache=True)
def bfs_dist(n, indptr, indices, src):
    dist = np.full(n, -1, np.int64)
    queue = np.empty(n, np.int64)
    dist[src] = 0
    queue[0] = src
    lo, hi = 0, 1
    while lo < hi:
        x = queue[lo]
        lo += 1
        for k in range(indptr[x], indptr[x + 1]):
            y = indices[k]
            if dist[y] == -1:
                dist[y] = dist[x] + 1
                queue[hi] = y
                hi += 1
    return dist


@njit(cache=True)
def lbfs_order(n, indptr, indices, init):
    """Lexicographic BFS by stable partition refinement.

    Ties are broken in favour of the vertex appearing first in ``init``;
    passing the reverse of a previous sweep gives an LBFS+ sweep.
    """
    order = np.empty(n, np.int64)
    if n == 0:
        return order
    rank = np.empty(n, np.int64)
    for i in range(n):
        rank[init[i]] = i
    # adjacency re-sorted by rank so that moved vertices keep their order
    sadj = np.empty(len(indices), np.int64)
    fill = indptr[:n].copy()
    for i in range(n):
        x = init[i]
        for k in range(indptr[x], indptr[x + 1]):
            u = indices[k]
            sadj[fill[u]] = x
            fill[u] += 1
    nxt = np.full(n, -1, np.int64)
    prv = np.full(n, -1, np.int64)
    for i in range(n):
        x = init[i]
        if i > 0:
            prv[x] = init[i - 1]
        if i < n - 1:
            nxt[x] = init[i + 1]
    head = init[0]
    maxc = n + len(indices) + 2
    cfirst = np.full(maxc, -1, np.int64)
    clast = np.full(maxc, -1, np.int64)
    ccount = np.zeros(maxc, np.int64)
    split = np.full(maxc, -1, np.int64)
    stamp = np.full(maxc, -1, np.int64)
    cls = np.zeros(n, np.int64)
    cfirst[0] = init[0]
    clast[0] = init[n - 1]
    ccount[0] = n
    ncls = 1
    visited = np.zeros(n, np.bool_)
    for step in range(n):
        v = head
        order[step] = v
        visited[v] = True
        c = cls[v]
        if ccount[c] > 1:
            cfirst[c] = nxt[v]
        else:
            cfirst[c] = -1
            clast[c] = -1
        ccount[c] -= 1
        head = nxt[v]
        if head != -1:
            prv[head] = -1
        for k in range(indptr[v], indptr[v + 1]):
            u = sadj[k]
            if visited[u]:
                continue
            c = cls[u]
            if stamp[c] != step:
                stamp[c] = step
                split[c] = ncls
                ncls += 1
            nc = split[c]
            if ccount[nc] == 0:
                after = prv[cfirst[c]]
            else:
                after = clast[nc]
            # detach u from class c
            if ccount[c] == 1:
                cfirst[c] = -1
                clast[c] = -1
            elif cfirst[c] == u:
                cfirst[c] = nxt[u]
            elif clast[c] == u:
                clast[c] = prv[u]
            ccount[c] -= 1
            if prv[u] != -1:
                nxt[prv[u]] = nxt[u]
            else:
                head = nxt[u]
            if nxt[u] != -1:
                prv[nxt[u]] = prv[u]
            # re-insert u after `after`
            if after == -1:
                prv[u] = -1
                nxt[u] = head
                if head != -1:
                    prv[head] = u
                head = u
            else:
                nx = nxt[after]
                prv[u] = after
                nxt[u] = nx
                nxt[after] = u
                if nx != -1:
                    prv[nx] = u
            if ccount[nc] == 0:
                cfirst[nc] = u
            clast[nc] = u
            ccount[nc] += 1
            cls[u] = nc
    return order


@njit(cache=True)
def umbrella_reach(n, indptr, indices, order):
    """Check that ``order`` is an interval ordering.

    An ordering is an interval ordering when for a < b < c, ac in E implies
    ab in E, i.e. the later neighbors of each vertex immediately follow it.
    Returns ``reach`` (position of the last later neighbor, or own position)
    indexed by position, or an empty array on failure.
    """
    pos = np.empty(n, np.int64)
    for i in range(n):
        pos[order[i]] = i
    reach = np.empty(n, np.int64)
    for i in range(n):
        v = order[i]
        cnt = 0
        far = i
        for k in range(indptr[v], indptr[v + 1]):
            p = pos[indices[k]]
            if p > i:
                cnt += 1
                if p > far:
                    far = p
        if far - i != cnt:
            return np.empty(0, np.int64)
        reach[i] = far
    return reach
