# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels mirroring graphpow._pykernels.

power_chunk runs one capped BFS per source over CSR arrays with the GIL
released, so callers may fan chunks out across threads.
"""

from itertools import chain

import numpy as np

from libc.stdint cimport int32_t, int64_t, uint32_t, uint64_t
from libc.stdlib cimport free, malloc

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil
    int __builtin_ctz(unsigned int) nogil

NAME = "native"


def prepare(g):
    """CSR ``(indptr, indices)`` int32 arrays for ``g``."""
    n = g.n
    deg = np.fromiter((len(g.neighbors(v)) for v in range(n)), dtype=np.int32, count=n)
    indptr = np.zeros(n + 1, dtype=np.int32)
    np.cumsum(deg, out=indptr[1:])
    indices = np.fromiter(chain.from_iterable(g.neighbors(v) for v in range(n)),
                          dtype=np.int32, count=int(indptr[n]))
    return indptr, indices


def power_chunk(prepared, Py_ssize_t n, int k, Py_ssize_t start, Py_ssize_t stop):
    cdef const int32_t[::1] indptr = prepared[0]
    cdef const int32_t[::1] indices = prepared[1]
    cdef Py_ssize_t words = (n + 63) // 64
    out = np.zeros((stop - start, words), dtype=np.uint64)
    cdef uint64_t[:, ::1] ov = out
    cdef int32_t* dist = <int32_t*> malloc(n * sizeof(int32_t))
    cdef int32_t* queue = <int32_t*> malloc(n * sizeof(int32_t))
    if dist == NULL or queue == NULL:
        free(dist)
        free(queue)
        raise MemoryError()
    cdef Py_ssize_t s, i, head, tail, row
    cdef int32_t v, u, dv, e
    with nogil:
        for i in range(n):
            dist[i] = -1
        for s in range(start, stop):
            row = s - start
            head = 0
            tail = 1
            queue[0] = <int32_t> s
            dist[s] = 0
            while head < tail:
                v = queue[head]
                head += 1
                dv = dist[v]
                if dv >= k:
                    break
                for e in range(indptr[v], indptr[v + 1]):
                    u = indices[e]
                    if dist[u] < 0:
                        dist[u] = dv + 1
                        queue[tail] = u
                        tail += 1
            for i in range(tail):
                u = queue[i]
                dist[u] = -1
                if u != s:
                    ov[row, u >> 6] |= (<uint64_t> 1) << (u & 63)
    free(dist)
    free(queue)
    raw = out.astype("<u8", copy=False).tobytes()
    nb = words * 8
    return [int.from_bytes(raw[i * nb:(i + 1) * nb], "little") for i in range(stop - start)]


cdef inline void _ball_sums(uint32_t* adj, int n, int kmax, int64_t* sums) noexcept nogil:
    cdef uint32_t balls[32]
    cdef uint32_t nb[32]
    cdef uint32_t b, acc
    cdef int v, j, w
    cdef int64_t tot = 0
    for v in range(n):
        balls[v] = adj[v] | (1u << v)
        tot += __builtin_popcount(balls[v])
    sums[0] = tot
    for j in range(1, kmax):
        tot = 0
        for v in range(n):
            acc = balls[v]
            b = balls[v]
            while b:
                w = __builtin_ctz(b)
                acc |= adj[w]
                b &= b - 1
            nb[v] = acc
            tot += __builtin_popcount(acc)
        for v in range(n):
            balls[v] = nb[v]
        sums[j] = tot


def edge_subset_profile(int n, int k):
    """Per edge-subset mask of K_n: (connected, min degree, max degree, diameter, degree sum of G^k).

    Diameter is 0 for disconnected masks.
    """
    if n < 1 or n > 8:
        raise ValueError("edge_subset_profile supports 1 <= n <= 8")
    if k < 1:
        raise ValueError("k must be >= 1")
    cdef int m = n * (n - 1) // 2
    cdef int64_t total = (<int64_t> 1) << m
    conn = np.zeros(total, dtype=np.uint8)
    mind = np.zeros(total, dtype=np.uint8)
    maxd = np.zeros(total, dtype=np.uint8)
    diam = np.zeros(total, dtype=np.uint8)
    psum = np.zeros(total, dtype=np.int32)
    cdef unsigned char[::1] cv = conn
    cdef unsigned char[::1] mv = mind
    cdef unsigned char[::1] xv = maxd
    cdef unsigned char[::1] dv = diam
    cdef int32_t[::1] pv = psum
    cdef int pu_[28]
    cdef int pw_[28]
    cdef uint32_t adj[32]
    cdef uint32_t balls[32]
    cdef uint32_t nb[32]
    cdef int e = 0, u, w, v, md, xd, dg, j, allfull
    cdef int64_t mask, tot
    cdef uint32_t full = (1u << n) - 1, reach, frontier, nxt, b, acc
    for u in range(n):
        for w in range(u + 1, n):
            pu_[e] = u
            pw_[e] = w
            e += 1
    with nogil:
        for mask in range(total):
            for v in range(n):
                adj[v] = 0
            for e in range(m):
                if (mask >> e) & 1:
                    adj[pu_[e]] |= 1u << pw_[e]
                    adj[pw_[e]] |= 1u << pu_[e]
            md = 64
            xd = 0
            for v in range(n):
                dg = __builtin_popcount(adj[v])
                if dg < md:
                    md = dg
                if dg > xd:
                    xd = dg
            reach = 1
            frontier = 1
            while frontier:
                nxt = 0
                b = frontier
                while b:
                    nxt |= adj[__builtin_ctz(b)]
                    b &= b - 1
                frontier = nxt & ~reach
                reach |= frontier
            cv[mask] = reach == full
            mv[mask] = md
            xv[mask] = xd
            dv[mask] = 0
            for v in range(n):
                balls[v] = 1u << v
            allfull = n == 1
            j = 0
            while j < k or (cv[mask] and not allfull):
                j += 1
                allfull = 1
                tot = 0
                for v in range(n):
                    acc = balls[v]
                    b = balls[v]
                    while b:
                        acc |= adj[__builtin_ctz(b)]
                        b &= b - 1
                    nb[v] = acc
                    tot += __builtin_popcount(acc)
                    if acc != full:
                        allfull = 0
                for v in range(n):
                    balls[v] = nb[v]
                if j == k:
                    pv[mask] = <int32_t> (tot - n)
                if allfull and cv[mask] and dv[mask] == 0 and n > 1:
                    dv[mask] = j
    return conn, mind, maxd, diam, psum


def tree_power_minima(int n, int kmax):
    if n < 1 or n > 12:
        raise ValueError("tree_power_minima supports 1 <= n <= 12")
    if kmax < 1 or kmax > 64:
        raise ValueError("kmax must be in [1, 64]")
    minima = np.zeros(kmax + 1, dtype=np.int64)
    if n <= 2:
        minima[1:] = n - 1
        return 1, minima
    cdef int64_t[::1] mn = minima
    cdef int L = n - 2
    cdef int seq[16]
    cdef int degree[16]
    cdef uint32_t adj[32]
    cdef int64_t sums[64]
    cdef int i, j, a, leaf, u, v
    cdef int64_t count = 0, ev
    cdef bint first = True
    for i in range(L):
        seq[i] = 0
    with nogil:
        while True:
            for i in range(n):
                degree[i] = 1
                adj[i] = 0
            for i in range(L):
                degree[seq[i]] += 1
            for i in range(L):
                a = seq[i]
                leaf = 0
                while degree[leaf] != 1:
                    leaf += 1
                adj[leaf] |= 1u << a
                adj[a] |= 1u << leaf
                degree[leaf] -= 1
                degree[a] -= 1
            u = 0
            while degree[u] != 1:
                u += 1
            v = u + 1
            while degree[v] != 1:
                v += 1
            adj[u] |= 1u << v
            adj[v] |= 1u << u
            _ball_sums(adj, n, kmax, sums)
            for j in range(1, kmax + 1):
                ev = (sums[j - 1] - n) // 2
                if first or ev < mn[j]:
                    mn[j] = ev
            first = False
            count += 1
            # odometer over sequences, last position fastest
            i = L - 1
            while i >= 0:
                seq[i] += 1
                if seq[i] < n:
                    break
                seq[i] = 0
                i -= 1
            if i < 0:
                break
    return count, minima
