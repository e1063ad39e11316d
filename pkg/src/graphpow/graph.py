"""Simple undirected graphs with bitset adjacency, plus distance and power primitives."""

from __future__ import annotations

import enum
import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from graphpow._bits import iter_bits


class GraphError(ValueError):
    """Invalid graph input (bad vertex id, self-loop, asymmetric rows)."""


class DisconnectedGraphError(GraphError):
    """Raised where an operation is undefined on a disconnected graph."""


class Unreachable(enum.Enum):
    UNREACHABLE = "unreachable"

    def __repr__(self) -> str:
        return "UNREACHABLE"


UNREACHABLE = Unreachable.UNREACHABLE

Distance = Union[int, Unreachable]


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``rows[v]`` is an integer bitmask whose bit ``u`` is set iff ``uv`` is an
    edge. Use :func:`from_edges` or :meth:`Graph.from_rows` to construct.
    """

    __slots__ = ("n", "rows", "_nbrs", "_hash")

    def __init__(self, n: int, rows: Sequence[int], *, _trusted: bool = False):
        rows = tuple(rows)
        if not _trusted:
            _validate_rows(n, rows)
        self.n = n
        self.rows = rows
        self._nbrs: Optional[list[Optional[tuple[int, ...]]]] = None
        self._hash: Optional[int] = None

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[int]) -> "Graph":
        return cls(n, rows)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return from_edges(n, edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted neighbours of ``v``."""
        if self._nbrs is None:
            self._nbrs = [None] * self.n
        nb = self._nbrs[v]
        if nb is None:
            nb = tuple(iter_bits(self.rows[v]))
            self._nbrs[v] = nb
        return nb

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(self.neighbors(v)) for v in range(self.n))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    @property
    def degree_sum(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    @property
    def num_edges(self) -> int:
        return self.degree_sum // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v``, lexicographically sorted."""
        out = []
        for u in range(self.n):
            hi = self.rows[u] >> (u + 1)
            out.extend((u, u + 1 + j) for j in iter_bits(hi))
        return out

    def induced_edges(self, vertices: Iterable[int]) -> int:
        mask = 0
        for v in vertices:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} out of range for n={self.n}")
            mask |= 1 << v
        return sum((self.rows[v] & mask).bit_count() for v in _bits_of(mask)) // 2


def _bits_of(mask: int) -> list[int]:
    return list(iter_bits(mask))


def _validate_rows(n: int, rows: tuple[int, ...]) -> None:
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    if len(rows) != n:
        raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
    full = (1 << n) - 1
    for v, r in enumerate(rows):
        if r < 0 or r & ~full:
            raise GraphError(f"row {v} references a vertex outside [0, {n})")
        if r >> v & 1:
            raise GraphError(f"self-loop at vertex {v}")
        for u in iter_bits(r):
            if not rows[u] >> v & 1:
                raise GraphError(f"asymmetric adjacency: {v}->{u} without {u}->{v}")


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from vertex pairs; duplicates (in either orientation) collapse."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    rows = [0] * n
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {pair!r} has a vertex outside [0, {n})")
        if u == v:
            raise GraphError(f"edge {pair!r} is a self-loop")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        nbrs[u].add(v)
        nbrs[v].add(u)
    g = Graph(n, rows, _trusted=True)
    g._nbrs = [tuple(sorted(s)) for s in nbrs]
    return g


@dataclass(frozen=True)
class DistanceField:
    """BFS distances from ``source``; entries past ``cap`` are UNREACHABLE."""

    source: int
    dist: tuple[Distance, ...]
    cap: Optional[int] = None

    def level(self, i: int) -> list[int]:
        """Vertices at distance exactly ``i``."""
        return [v for v, d in enumerate(self.dist) if d is not UNREACHABLE and d == i]

    def reachable(self) -> list[int]:
        return [v for v, d in enumerate(self.dist) if d is not UNREACHABLE]

    def eccentricity(self) -> int:
        if any(d is UNREACHABLE for d in self.dist):
            raise DisconnectedGraphError("eccentricity undefined: unreachable vertices")
        return max(self.dist)  # type: ignore[type-var]


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range [0, {g.n})")


def _bfs_raw(g: Graph, source: int, cap: Optional[int] = None) -> list[int]:
    """Distances as plain ints with -1 for unreachable (internal use)."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v]
        if cap is not None and dv >= cap:
            continue
        for u in g.neighbors(v):
            if dist[u] < 0:
                dist[u] = dv + 1
                queue.append(u)
    return dist


def bfs_distances(g: Graph, source: int, cap: Optional[int] = None) -> DistanceField:
    _check_vertex(g, source)
    if cap is not None and cap < 0:
        raise ValueError(f"cap must be non-negative, got {cap}")
    raw = _bfs_raw(g, source, cap)
    dist = tuple(UNREACHABLE if d < 0 else d for d in raw)
    return DistanceField(source, dist, cap)


def all_distances(g: Graph) -> list[list[int]]:
    """All-pairs distance matrix with -1 marking unreachable pairs."""
    return [_bfs_raw(g, s) for s in range(g.n)]


def ball(g: Graph, v: int, k: int) -> frozenset[int]:
    _check_vertex(g, v)
    if k < 0:
        raise ValueError(f"radius must be non-negative, got {k}")
    seen = 1 << v
    frontier = seen
    for _ in range(k):
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= g.rows[u]
        nxt &= ~seen
        if not nxt:
            break
        seen |= nxt
        frontier = nxt
    return frozenset(iter_bits(seen))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return all(d >= 0 for d in _bfs_raw(g, 0))


def regularity(g: Graph) -> Optional[int]:
    """The common degree if ``g`` is regular, else ``None``."""
    degs = set(g.degrees())
    if len(degs) == 1:
        return degs.pop()
    if g.n == 0:
        return 0
    return None


def degree_stats(g: Graph) -> tuple[int, int, int, Fraction]:
    """``(min degree, max degree, degree sum, exact average degree)``."""
    if g.n < 1:
        raise GraphError("degree statistics need at least one vertex")
    degs = g.degrees()
    total = sum(degs)
    return min(degs), max(degs), total, Fraction(total, g.n)


def min_degree(g: Graph) -> int:
    return min(g.degrees()) if g.n else 0


def diameter(g: Graph) -> int:
    best = 0
    for s in range(g.n):
        dist = _bfs_raw(g, s)
        if -1 in dist:
            raise DisconnectedGraphError("diameter undefined for a disconnected graph")
        best = max(best, max(dist))
    return best


def geodesic_path(g: Graph, u: int, v: int) -> list[int]:
    """Shortest ``u``-``v`` path; walking back from ``v`` the lowest-index predecessor wins."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    dist = _bfs_raw(g, u)
    if dist[v] < 0:
        raise DisconnectedGraphError(f"no path between {u} and {v}")
    path = [v]
    cur = v
    while cur != u:
        want = dist[cur] - 1
        cur = next(w for w in g.neighbors(cur) if dist[w] == want)
        path.append(cur)
    path.reverse()
    return path


def resolve_threads(threads: Optional[int] = None) -> int:
    """Worker count: explicit value, else ``GRAPHPOW_THREADS``, else CPU count (0 = auto)."""
    if threads is None:
        env = os.environ.get("GRAPHPOW_THREADS", "").strip()
        threads = int(env) if env else 0
    if threads < 0:
        raise ValueError(f"thread count must be non-negative, got {threads}")
    if threads == 0:
        threads = os.cpu_count() or 1
    return threads


_CHUNK = 2048


def power(g: Graph, k: int, *, threads: Optional[int] = None, backend: Optional[str] = None) -> Graph:
    """The ``k``-th power: ``u ~ v`` iff ``1 <= dist(u, v) <= k``.

    Rows are computed per source in chunks; with several workers the chunks
    are fanned out but assembled in source order, so the result does not
    depend on ``threads``.
    """
    from graphpow._backend import get_backend

    if k < 1:
        raise ValueError(f"power exponent must be >= 1, got {k}")
    if k == 1 or g.n == 0:
        return g
    kern = get_backend(backend)
    prepared = kern.prepare(g)
    bounds = [(s, min(s + _CHUNK, g.n)) for s in range(0, g.n, _CHUNK)]
    workers = min(resolve_threads(threads), len(bounds))
    if workers <= 1:
        chunks = [kern.power_chunk(prepared, g.n, k, a, b) for a, b in bounds]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(lambda ab: kern.power_chunk(prepared, g.n, k, *ab), bounds))
    rows = [r for chunk in chunks for r in chunk]
    return Graph(g.n, rows, _trusted=True)


def power_degree_sum(g: Graph, k: int, **kwargs) -> int:
    return power(g, k, **kwargs).degree_sum


def level_sizes(g: Graph, x: int) -> list[int]:
    """``|N^i(x)|`` for ``i = 0..eccentricity(x)``."""
    dist = _bfs_raw(g, x)
    if -1 in dist:
        raise DisconnectedGraphError("level sets need a connected graph")
    sizes = [0] * (max(dist) + 1)
    for d in dist:
        sizes[d] += 1
    return sizes
