"""Graph families: paths, cycles, the H_t extremal family and its auxiliary H'_t,
clique rings, circulants, seeded random graphs, and exhaustive small-graph streams."""

from __future__ import annotations

import enum
import heapq
import random
import warnings
from dataclasses import dataclass, field
from itertools import combinations, product
from math import gcd
from typing import Iterator, Optional

from graphpow.graph import Graph, GraphError, from_edges, is_connected

MAX_ENUM_CONNECTED = 7
MAX_ENUM_TREES = 9
DEFAULT_REGULAR_ATTEMPTS = 1000


class GenerationError(RuntimeError):
    """A randomized generator exhausted its retry budget."""


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return from_edges(n, combinations(range(n), 2))


def star(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# --- H_t ------------------------------------------------------------------

def _check_h_params(d: int, t: int) -> None:
    if d < 3 or d % 2 == 0:
        raise GraphError(f"h_family needs odd d >= 3, got d={d}")
    if t < 1:
        raise GraphError(f"h_family needs t >= 1, got t={t}")


def h_family_order(d: int, t: int) -> int:
    return 4 + (t + 1) * (d - 1) + 2 * t


def h_family_clusters(d: int, t: int) -> list[list[int]]:
    """Vertex ids of X_{-1}, X_0, ..., X_{3t+1}; entry ``i + 1`` holds X_i."""
    _check_h_params(d, t)
    clusters = []
    nxt = 0
    for i in range(-1, 3 * t + 2):
        if i in (-1, 3 * t + 1):
            size = 2
        elif i % 3 == 0:
            size = d - 1
        else:
            size = 1
        clusters.append(list(range(nxt, nxt + size)))
        nxt += size
    return clusters


def h_family(d: int, t: int) -> Graph:
    """The d-regular graph H_t of diameter 3t+2 (a chain of t+1 large clusters).

    Consecutive clusters are completely joined. The end pairs are edges, the two
    outer large clusters are K_{d-1} minus the matching (0,1),(2,3),...; inner
    large clusters are complete.
    """
    clusters = h_family_clusters(d, t)
    edges = []
    for a, b in zip(clusters, clusters[1:]):
        edges.extend((u, v) for u in a for v in b)
    last = 3 * t + 1
    for idx, members in enumerate(clusters):
        i = idx - 1
        if i in (-1, last):
            edges.append((members[0], members[1]))
        elif i % 3 == 0:
            matched = set()
            if i in (0, 3 * t):
                matched = {(members[j], members[j + 1]) for j in range(0, len(members) - 1, 2)}
            edges.extend(p for p in combinations(members, 2) if p not in matched)
    return from_edges(sum(len(c) for c in clusters), edges)


def _check_hprime_params(d: int, t: int, k: int) -> None:
    _check_h_params(d, t)
    if k % 3 != 2 or k < 5 or k >= 3 * t:
        raise GraphError(f"H'_t needs k = 2 (mod 3) with 5 <= k < 3t, got k={k}, t={t}")


def h_prime_partition(d: int, t: int) -> list[list[int]]:
    """The parts Y_0..Y_t as H_t vertex ids.

    Y_i is X_{3i} plus the lowest-id vertex of X_{3i-1} and of X_{3i+1}.
    """
    clusters = h_family_clusters(d, t)
    return [sorted([clusters[3 * i][0], *clusters[3 * i + 1], clusters[3 * i + 2][0]])
            for i in range(t + 1)]


def h_prime(d: int, t: int, k: int) -> Graph:
    """Auxiliary graph H'_t: t+1 cliques of size d+1 in a row, Y_i and Y_j
    completely joined when 0 < j - i <= (k-2)/3.

    Vertex ``i*(d+1) + r`` is the r-th member of Y_i in :func:`h_prime_partition`.
    """
    _check_hprime_params(d, t, k)
    size = d + 1
    window = (k - 2) // 3
    edges = []
    for i in range(t + 1):
        block = range(i * size, (i + 1) * size)
        edges.extend(combinations(block, 2))
        for j in range(i + 1, min(t, i + window) + 1):
            edges.extend((u, v) for u in block for v in range(j * size, (j + 1) * size))
    return from_edges((t + 1) * size, edges)


# --- vertex-transitive families -----------------------------------------

def clique_ring(d: int, m: int) -> Graph:
    """m cliques of size (d+1)/3 in cyclic order, neighbouring cliques completely joined."""
    if d < 2 or (d + 1) % 3:
        raise GraphError(f"clique_ring needs d+1 divisible by 3, got d={d}")
    if m < 4:
        raise GraphError(f"clique_ring needs ring length m >= 4, got m={m}")
    s = (d + 1) // 3
    edges = []
    for c in range(m):
        block = range(c * s, (c + 1) * s)
        nxt = ((c + 1) % m) * s
        edges.extend(combinations(block, 2))
        edges.extend((u, nxt + j) for u in block for j in range(s))
    return from_edges(m * s, edges)


def is_generating(n: int, connection_set) -> bool:
    g = n
    for s in connection_set:
        g = gcd(g, s % n)
    return g == 1


def normalize_connection_set(n: int, connection_set) -> frozenset[int]:
    if n < 1:
        raise GraphError(f"modulus must be >= 1, got {n}")
    s = frozenset(x % n for x in connection_set)
    if 0 in s:
        raise GraphError("connection set must not contain 0")
    asym = sorted(x for x in s if (-x) % n not in s)
    if asym:
        raise GraphError(f"connection set is not symmetric: missing inverses of {asym}")
    return s


class DisconnectedCirculantWarning(UserWarning):
    pass


def circulant(n: int, connection_set) -> Graph:
    """Cayley graph of Z_n: ``i ~ i + s`` for ``s`` in the connection set."""
    s = normalize_connection_set(n, connection_set)
    if not is_generating(n, s):
        warnings.warn(f"connection set {sorted(s)} does not generate Z_{n}; circulant is disconnected",
                      DisconnectedCirculantWarning, stacklevel=2)
    return from_edges(n, [(i, (i + x) % n) for i in range(n) for x in s])


def symmetric_closure(n: int, residues) -> frozenset[int]:
    return frozenset(x % n for r in residues for x in (r, -r))


def symmetric_subsets(n: int) -> Iterator[frozenset[int]]:
    """Every symmetric subset of Z_n minus {0}, including the empty set."""
    classes = []
    for s in range(1, n // 2 + 1):
        classes.append(frozenset({s, (n - s) % n}))
    for picks in product((False, True), repeat=len(classes)):
        yield frozenset().union(*[c for c, p in zip(classes, picks) if p])


# --- random ---------------------------------------------------------------

def random_regular(n: int, d: int, seed: int, max_attempts: int = DEFAULT_REGULAR_ATTEMPTS) -> Graph:
    """Seeded simple connected d-regular graph from the pairing model.

    Stubs are shuffled and paired; pairs that would form a loop or a repeated
    edge are set aside and re-paired in the next round. An attempt restarts when
    the leftover stubs cannot be paired at all, or when the final graph is
    disconnected.
    """
    if n < 1 or d < 0 or d >= n or (n * d) % 2:
        raise GraphError(f"no simple {d}-regular graph on {n} vertices")
    rng = random.Random(seed)
    for _ in range(max_attempts):
        edges = _pairing_attempt(n, d, rng)
        if edges is None:
            continue
        g = from_edges(n, edges)
        if is_connected(g):
            return g
    raise GenerationError(f"random_regular({n}, {d}, seed={seed}) failed after {max_attempts} attempts")


def _pairing_attempt(n: int, d: int, rng: random.Random) -> Optional[set[tuple[int, int]]]:
    edges: set[tuple[int, int]] = set()
    stubs = [v for v in range(n) for _ in range(d)]
    while stubs:
        rng.shuffle(stubs)
        leftover: list[int] = []
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u > v:
                u, v = v, u
            if u != v and (u, v) not in edges:
                edges.add((u, v))
            else:
                leftover.extend((u, v))
        if len(leftover) == len(stubs):
            # no progress possible unless some pair of leftovers is still legal
            pending = sorted(set(leftover))
            if not any((a, b) not in edges for a, b in combinations(pending, 2)):
                return None
        stubs = leftover
    return edges


def prufer_decode(seq, n: Optional[int] = None) -> Graph:
    """Labelled tree on ``len(seq) + 2`` vertices from its Prüfer sequence."""
    seq = list(seq)
    if n is None:
        n = len(seq) + 2
    if n < 1 or (n >= 2 and len(seq) != n - 2) or (n == 1 and seq):
        raise GraphError(f"Prüfer sequence of length {len(seq)} does not fit n={n}")
    if any(not 0 <= a < n for a in seq):
        raise GraphError("Prüfer entries must lie in [0, n)")
    if n == 1:
        return from_edges(1, [])
    degree = [1] * n
    for a in seq:
        degree[a] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for a in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, a))
        degree[a] -= 1
        if degree[a] == 1:
            heapq.heappush(leaves, a)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return from_edges(n, edges)


def prufer_encode(tree: Graph) -> list[int]:
    n = tree.n
    if tree.num_edges != n - 1 or not is_connected(tree):
        raise GraphError("Prüfer encoding needs a tree")
    if n <= 2:
        return []
    degree = tree.degrees()
    rows = list(tree.rows)
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        parent = rows[leaf].bit_length() - 1
        seq.append(parent)
        rows[parent] &= ~(1 << leaf)
        rows[leaf] = 0
        degree[parent] -= 1
        if degree[parent] == 1:
            heapq.heappush(leaves, parent)
    return seq


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree via a uniform random Prüfer sequence."""
    if n < 1:
        raise GraphError(f"tree needs n >= 1, got {n}")
    rng = random.Random(seed)
    return prufer_decode([rng.randrange(n) for _ in range(max(n - 2, 0))], n)


# --- exhaustive -----------------------------------------------------------

def edge_pairs(n: int) -> list[tuple[int, int]]:
    """Pair order shared by edge-subset masks (bit e = e-th pair)."""
    return list(combinations(range(n), 2))


def graph_from_mask(n: int, mask: int, pairs: Optional[list[tuple[int, int]]] = None) -> Graph:
    pairs = pairs if pairs is not None else edge_pairs(n)
    return from_edges(n, [p for e, p in enumerate(pairs) if mask >> e & 1])


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Every labelled connected simple graph on n vertices, in edge-mask order."""
    if not 1 <= n <= MAX_ENUM_CONNECTED:
        raise ValueError(f"enumerate_connected supports 1 <= n <= {MAX_ENUM_CONNECTED}, got {n}")
    pairs = edge_pairs(n)
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for e, (u, v) in enumerate(pairs):
            if mask >> e & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        reach = frontier = 1
        while frontier:
            nxt = 0
            for v in range(n):
                if frontier >> v & 1:
                    nxt |= rows[v]
            frontier = nxt & ~reach
            reach |= frontier
        if reach == full:
            yield Graph(n, rows, _trusted=True)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labelled trees, in lexicographic Prüfer order."""
    if not 1 <= n <= MAX_ENUM_TREES:
        raise ValueError(f"enumerate_trees supports 1 <= n <= {MAX_ENUM_TREES}, got {n}")
    if n <= 2:
        yield prufer_decode([], n)
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


# --- family specs -----------------------------------------------------------

class Family(str, enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    H_FAMILY = "h_family"
    H_PRIME = "h_prime"
    CLIQUE_RING = "clique_ring"
    CIRCULANT = "circulant"
    RANDOM_REGULAR = "random_regular"
    RANDOM_TREE = "random_tree"


_REQUIRED = {
    Family.PATH: {"n"},
    Family.CYCLE: {"n"},
    Family.H_FAMILY: {"d", "t"},
    Family.H_PRIME: {"d", "t", "k"},
    Family.CLIQUE_RING: {"d", "m"},
    Family.CIRCULANT: {"n", "connection_set"},
    Family.RANDOM_REGULAR: {"n", "d", "seed"},
    Family.RANDOM_TREE: {"n", "seed"},
}

@dataclass(frozen=True)
class FamilySpec:
    family: Family
    d: Optional[int] = None
    t: Optional[int] = None
    k: Optional[int] = None
    n: Optional[int] = None
    m: Optional[int] = None
    connection_set: Optional[frozenset[int]] = field(default=None)
    seed: Optional[int] = None

    def __post_init__(self):
        fam = Family(self.family)
        object.__setattr__(self, "family", fam)
        if self.connection_set is not None:
            object.__setattr__(self, "connection_set", frozenset(self.connection_set))
        present = {name for name in ("d", "t", "k", "n", "m", "connection_set", "seed")
                   if getattr(self, name) is not None}
        need = _REQUIRED[fam]
        if present != need:
            missing, extra = sorted(need - present), sorted(present - need)
            raise ValueError(f"{fam.value}: missing {missing}, unexpected {extra}")

    @property
    def transitive_by_construction(self) -> bool:
        return self.family in (Family.CLIQUE_RING, Family.CIRCULANT, Family.CYCLE)

    def build(self) -> Graph:
        f = self.family
        if f == Family.PATH:
            return path(self.n)
        if f == Family.CYCLE:
            return cycle(self.n)
        if f == Family.H_FAMILY:
            return h_family(self.d, self.t)
        if f == Family.H_PRIME:
            return h_prime(self.d, self.t, self.k)
        if f == Family.CLIQUE_RING:
            return clique_ring(self.d, self.m)
        if f == Family.CIRCULANT:
            return circulant(self.n, self.connection_set)
        if f == Family.RANDOM_REGULAR:
            return random_regular(self.n, self.d, self.seed)
        return random_tree(self.n, self.seed)

    def to_dict(self) -> dict:
        out = {"family": self.family.value}
        for name in ("d", "t", "k", "n", "m", "seed"):
            v = getattr(self, name)
            if v is not None:
                out[name] = v
        if self.connection_set is not None:
            out["connection_set"] = sorted(self.connection_set)
        return out
