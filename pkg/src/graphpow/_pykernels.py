"""Pure-Python kernels; the reference the compiled module must agree with."""

from __future__ import annotations

from itertools import combinations, product

import numpy as np

from graphpow._bits import iter_bits

NAME = "python"


def prepare(g):
    return g.rows


def power_chunk(rows, n: int, k: int, start: int, stop: int) -> list[int]:
    """Rows ``start..stop-1`` of the k-th power by frontier expansion over bitsets."""
    out = []
    for s in range(start, stop):
        seen = 1 << s
        frontier = seen
        for _ in range(k):
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= rows[v]
            nxt &= ~seen
            if not nxt:
                break
            seen |= nxt
            frontier = nxt
        out.append(seen ^ (1 << s))
    return out


def _ball_sums(adj: list[int], n: int, kmax: int) -> list[int]:
    """``sum_v |B_j(v)|`` for ``j = 1..kmax`` on a small graph."""
    balls = [adj[v] | (1 << v) for v in range(n)]
    sums = [sum(b.bit_count() for b in balls)]
    for _ in range(kmax - 1):
        nb = []
        for v in range(n):
            acc = balls[v]
            b = balls[v]
            while b:
                low = b & -b
                acc |= adj[low.bit_length() - 1]
                b ^= low
            nb.append(acc)
        balls = nb
        sums.append(sum(b.bit_count() for b in balls))
    return sums


def edge_subset_profile(n: int, k: int):
    """Per edge-subset mask of K_n (bit e = e-th pair in lexicographic order):
    connected flag, min degree, max degree, diameter (0 if disconnected) and
    the degree sum of the k-th power."""
    pairs = list(combinations(range(n), 2))
    total = 1 << len(pairs)
    full = (1 << n) - 1
    conn = np.zeros(total, dtype=np.uint8)
    mind = np.zeros(total, dtype=np.uint8)
    maxd = np.zeros(total, dtype=np.uint8)
    diam = np.zeros(total, dtype=np.uint8)
    psum = np.zeros(total, dtype=np.int32)
    for mask in range(total):
        adj = [0] * n
        for e, (u, v) in enumerate(pairs):
            if mask >> e & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        degs = [a.bit_count() for a in adj]
        balls = [1 << v for v in range(n)]
        j = 0
        ecc = 0
        while True:
            j += 1
            balls = [_expand(b, adj) for b in balls]
            if j == k:
                psum[mask] = sum(b.bit_count() for b in balls) - n
            if not ecc and all(b == full for b in balls):
                ecc = j
            if j >= k and (ecc or j >= n):
                break
        conn[mask] = bool(ecc) or n == 1
        mind[mask] = min(degs)
        maxd[mask] = max(degs)
        diam[mask] = ecc if n > 1 else 0
    return conn, mind, maxd, diam, psum


def _expand(b: int, adj: list[int]) -> int:
    acc = b
    while b:
        low = b & -b
        acc |= adj[low.bit_length() - 1]
        b ^= low
    return acc


def _prufer_adj(seq, n: int) -> list[int]:
    degree = [1] * n
    for a in seq:
        degree[a] += 1
    adj = [0] * n
    for a in seq:
        leaf = degree.index(1)
        adj[leaf] |= 1 << a
        adj[a] |= 1 << leaf
        degree[leaf] -= 1
        degree[a] -= 1
    u = degree.index(1)
    v = degree.index(1, u + 1)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return adj


def tree_power_minima(n: int, kmax: int):
    """Sweep all labelled trees on ``n`` vertices (Prüfer order).

    Returns ``(count, minima)`` where ``minima[k]`` is the least ``e(T^k)``
    over all trees, for ``k = 1..kmax`` (index 0 unused, set to 0).
    """
    minima = [0] + [None] * kmax
    if n <= 2:
        e = n - 1
        return 1, np.array([0] + [max(e, 0)] * kmax, dtype=np.int64)
    count = 0
    for seq in product(range(n), repeat=n - 2):
        count += 1
        sums = _ball_sums(_prufer_adj(seq, n), n, kmax)
        for j in range(1, kmax + 1):
            e = (sums[j - 1] - n) // 2
            if minima[j] is None or e < minima[j]:
                minima[j] = e
    return count, np.array(minima, dtype=np.int64)
