"""Edge counts of tree and path powers, and the leaf-rewiring reduction of a tree to a path."""

from __future__ import annotations

from dataclasses import dataclass, field

from graphpow.graph import Graph, GraphError, _bfs_raw, is_connected, power


def path_power_edges(n: int, k: int) -> int:
    """Exact ``e(P_n^k)``."""
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    if n > k:
        return k * n - k * (k + 1) // 2
    return n * (n - 1) // 2


def tree_bound(n: int, k: int) -> int:
    """``kn - k(k+1)/2``, the lower bound on ``e(T^k)`` for any tree on n vertices."""
    return k * n - k * (k + 1) // 2


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.num_edges == g.n - 1 and is_connected(g)


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise GraphError(f"expected a tree, got {t!r}")


def tree_power_edges(t: Graph, k: int) -> int:
    _require_tree(t)
    return power(t, k).num_edges


def degree_excess(t: Graph) -> int:
    """Sum over vertices of ``max(0, deg - 2)``; zero exactly for paths."""
    return sum(max(0, d - 2) for d in t.degrees())


@dataclass(frozen=True)
class RewireStep:
    tree: Graph
    deleted: tuple[int, int]
    added: tuple[int, int]
    edges: int  # e(U^k) after this step


@dataclass(frozen=True)
class RewireTrace:
    k: int
    initial: Graph
    initial_edges: int
    steps: tuple[RewireStep, ...] = field(default=())

    @property
    def final(self) -> Graph:
        return self.steps[-1].tree if self.steps else self.initial

    @property
    def edge_values(self) -> list[int]:
        return [self.initial_edges] + [s.edges for s in self.steps]

    def is_monotone(self) -> bool:
        vals = self.edge_values
        return all(a >= b for a, b in zip(vals, vals[1:]))


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def rewire_step(t: Graph, root: int = 0, k: int = 1) -> tuple[Graph, RewireStep]:
    """One rewiring move that strictly lowers the degree excess without raising ``e(T^k)``.

    Take the deepest vertex ``v`` of degree >= 3 (lowest id on ties). Every
    branch below ``v`` is a bare path ending in a leaf; take the two branches
    whose leaves ``u < u'`` have the smallest ids, delete the edge from ``v``
    toward ``u'`` and join ``u`` to ``u'``.
    """
    _require_tree(t)
    dist = _bfs_raw(t, root)
    heavy = [v for v in range(t.n) if t.degree(v) >= 3]
    if not heavy:
        raise GraphError("tree is already a path; nothing to rewire")
    v = min(heavy, key=lambda x: (-dist[x], x))
    branches = []  # (leaf, first vertex after v)
    for c in t.neighbors(v):
        if dist[c] < dist[v]:
            continue  # parent side
        prev, cur = v, c
        while t.degree(cur) == 2:
            prev, cur = cur, next(w for w in t.neighbors(cur) if w != prev)
        if t.degree(cur) != 1:
            raise AssertionError(f"vertex {v} is not the deepest branching vertex")
        branches.append((cur, c))
    branches.sort()
    (u, _), (u2, c2) = branches[0], branches[1]
    rows = list(t.rows)
    rows[v] &= ~(1 << c2)
    rows[c2] &= ~(1 << v)
    rows[u] |= 1 << u2
    rows[u2] |= 1 << u
    new = Graph(t.n, rows, _trusted=True)
    step = RewireStep(new, _edge(v, c2), _edge(u, u2), power(new, k).num_edges)
    return new, step


def reduce_to_path(t: Graph, k: int, root: int = 0) -> RewireTrace:
    """Rewire until a path remains, recording ``e(T^k)`` after each move."""
    _require_tree(t)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    steps = []
    cur = t
    while degree_excess(cur) > 0:
        cur, step = rewire_step(cur, root, k)
        steps.append(step)
    return RewireTrace(k, t, power(t, k).num_edges, tuple(steps))
