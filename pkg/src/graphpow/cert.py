"""Constructive certificate for the ``G^{3k+2}`` bound on regular graphs, and the
upper-bound calculation for the H_t family.

:func:`build_net` grows a 3-net from a long geodesic and records the claim
quantities using the power kernel. :func:`verify_certificate` re-derives every
invariant and claim from the host graph with its own capped BFS runs, so the
two sides share no bookkeeping.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from graphpow._bits import iter_bits
from graphpow.bounds import thm_1_2_rhs
from graphpow.generators import (
    _check_hprime_params,
    h_family,
    h_family_clusters,
    h_family_order,
    h_prime,
    h_prime_partition,
)
from graphpow.graph import (
    Graph,
    _bfs_raw,
    diameter,
    from_edges,
    geodesic_path,
    is_connected,
    power,
    regularity,
)
from graphpow.treepower import tree_bound


class HypothesesUnmet(ValueError):
    def __init__(self, hypotheses):
        self.hypotheses = tuple(hypotheses)
        failed = [name for name, ok in self.hypotheses if not ok]
        super().__init__(f"hypotheses unmet: {', '.join(failed)}")


@dataclass(frozen=True)
class NetCertificate:
    k_prime: int
    d: int
    n: int
    seed_geodesic: tuple[int, ...]
    X0: frozenset[int]
    X: tuple[int, ...]  # in insertion order
    H: Graph  # vertex i of H is sorted(X)[i]
    Z: frozenset[int]
    Y: frozenset[int]
    claim1: tuple[int, int]  # (e(Z,Z), rhs doubled): holds iff 2*lhs >= rhs
    claim2: tuple[int, int]
    claim3_min_degree: int
    claim3_rhs: int
    final: tuple[int, int]
    h_connected: bool

    @property
    def exponent(self) -> int:
        return 3 * self.k_prime + 2

    @property
    def net_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.X))

    def to_dict(self) -> dict:
        return {
            "k_prime": self.k_prime,
            "exponent": self.exponent,
            "d": self.d,
            "n": self.n,
            "seed_geodesic": list(self.seed_geodesic),
            "X0": sorted(self.X0),
            "X": list(self.X),
            "H_edges": [[self.net_vertices[a], self.net_vertices[b]] for a, b in self.H.edges()],
            "z": len(self.Z),
            "y": len(self.Y),
            "claim1": {"e_ZZ": self.claim1[0], "rhs_doubled": self.claim1[1]},
            "claim2": {"e_ZY": self.claim2[0], "rhs": self.claim2[1]},
            "claim3": {"min_degree": self.claim3_min_degree, "rhs": self.claim3_rhs},
            "final": {"degree_sum": self.final[0], "rhs": self.final[1]},
            "h_connected": self.h_connected,
        }


def claim_bounds(d: int, kp: int, n: int, z: int, y: int) -> dict[str, int]:
    """Integer right-hand sides of the three claims and the final chain."""
    return {
        "claim1_doubled": (2 * kp + 1) * (d + 1) * z - z - kp * (kp + 1) * (d + 1) ** 2,
        "claim2": kp * (d + 1) * y,
        "claim3": (kp + 1) * (d + 1) - 1,
        "final": (2 * kp + 1) * (d + 1) * n - kp * (kp + 1) * (d + 1) ** 2 - n,
    }


def _seed_pair(g: Graph, need: int) -> tuple[int, int]:
    """Double sweep from vertex 0; exact diametral search if it falls short."""
    d0 = _bfs_raw(g, 0)
    a = max(range(g.n), key=lambda v: (d0[v], -v))
    da = _bfs_raw(g, a)
    b = max(range(g.n), key=lambda v: (da[v], -v))
    if da[b] >= need:
        return a, b
    best = (-1, 0, 0)
    for u in range(g.n):
        du = _bfs_raw(g, u)
        for v in range(u + 1, g.n):
            if du[v] > best[0]:
                best = (du[v], u, v)
    return best[1], best[2]


def _multi_source(g: Graph, sources) -> list[int]:
    dist = [-1] * g.n
    queue = deque()
    for s in sources:
        dist[s] = 0
        queue.append(s)
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def _distance3_graph(g: Graph, net: tuple[int, ...]) -> Graph:
    index = {v: i for i, v in enumerate(net)}
    edges = []
    for i, u in enumerate(net):
        dist = _bfs_raw(g, u, 3)
        edges.extend((i, index[v]) for v in net if dist[v] == 3 and index[v] > i)
    return from_edges(len(net), edges)


def build_net(g: Graph, k_prime: int) -> NetCertificate:
    """Greedy 3-net certificate for ``G^{3k'+2}``; raises :class:`HypothesesUnmet`."""
    if k_prime < 1:
        raise ValueError(f"k' must be >= 1, got {k_prime}")
    exp = 3 * k_prime + 2
    connected = g.n > 0 and is_connected(g)
    d = regularity(g)
    diam = diameter(g) if connected else None
    hyps = [("connected", connected), ("regular", d is not None),
            (f"diam>{exp}", diam is not None and diam > exp)]
    if not all(ok for _, ok in hyps):
        raise HypothesesUnmet(hyps)

    a, b = _seed_pair(g, exp + 1)
    seed = tuple(geodesic_path(g, a, b))
    x0 = seed[::3]
    net = list(x0)
    while True:
        dist = _multi_source(g, net)
        cand = next((v for v in range(g.n) if dist[v] == 3), None)
        if cand is None:
            break
        net.append(cand)

    ordered = tuple(sorted(net))
    h = _distance3_graph(g, ordered)
    zmask = 0
    for x in net:
        zmask |= g.rows[x] | (1 << x)
    z = frozenset(iter_bits(zmask))
    y = frozenset(range(g.n)) - z

    p = power(g, exp)
    e_zz = sum((p.rows[v] & zmask).bit_count() for v in z) // 2
    e_zy = sum((p.rows[w] & zmask).bit_count() for w in y)
    degs = p.degrees()
    rhs = claim_bounds(d, k_prime, g.n, len(z), len(y))
    return NetCertificate(
        k_prime=k_prime, d=d, n=g.n, seed_geodesic=seed, X0=frozenset(x0), X=tuple(net),
        H=h, Z=z, Y=y,
        claim1=(e_zz, rhs["claim1_doubled"]),
        claim2=(e_zy, rhs["claim2"]),
        claim3_min_degree=min(degs), claim3_rhs=rhs["claim3"],
        final=(sum(degs), rhs["final"]),
        h_connected=is_connected(h),
    )


@dataclass
class CertificateReport:
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append((name, bool(passed), detail))

    @property
    def ok(self) -> bool:
        return all(p for _, p, _ in self.checks)

    @property
    def failures(self) -> list[tuple[str, str]]:
        return [(n, d) for n, p, d in self.checks if not p]

    def __getitem__(self, name: str) -> bool:
        return next(p for n, p, _ in self.checks if n == name)

    def to_dict(self) -> dict:
        return {"ok": self.ok,
                "checks": [{"name": n, "passed": p, "detail": d} for n, p, d in self.checks]}


def _witnesses(items, limit: int = 10) -> str:
    items = list(items)
    head = ", ".join(map(str, items[:limit]))
    return head + (f" ... ({len(items)} total)" if len(items) > limit else "")


def verify_certificate(g: Graph, cert: NetCertificate) -> CertificateReport:
    """Audit ``cert`` against ``g`` from scratch; failures carry vertex or edge witnesses."""
    rep = CertificateReport()
    kp, d, n = cert.k_prime, cert.d, g.n
    exp = 3 * kp + 2
    connected = n > 0 and is_connected(g)
    rep.add("host_connected", connected)
    rep.add("host_regular", regularity(g) == d, f"expected {d}-regular")
    if not connected:
        return rep
    rep.add("host_diameter", diameter(g) > exp, f"need diam > {exp}")
    rep.add("vertex_count", cert.n == n)

    seed = cert.seed_geodesic
    steps_ok = all(g.has_edge(u, v) for u, v in zip(seed, seed[1:]))
    length = len(seed) - 1
    is_geo = steps_ok and _bfs_raw(g, seed[0])[seed[-1]] == length
    rep.add("seed_is_geodesic", is_geo, f"length {length}")
    rep.add("seed_length", length >= 3 * kp + 3, f"{length} >= {3 * kp + 3}")
    rep.add("X0_every_third", cert.X0 == frozenset(seed[::3]))
    xs = set(cert.X)
    rep.add("X0_in_X", cert.X0 <= xs, _witnesses(sorted(cert.X0 - xs)))
    rep.add("X_distinct", len(xs) == len(cert.X))
    rep.add("X_size", len(xs) >= kp + 1, f"|X|={len(xs)} vs k'+1={kp + 1}")

    close = []
    for x in sorted(xs):
        dist = _bfs_raw(g, x, 2)
        close.extend((x, v) for v in sorted(xs) if v != x and dist[v] >= 0)
    rep.add("X_pairwise_distance_ge_3", not close, _witnesses(close))
    far = [v for v, dv in enumerate(_multi_source(g, sorted(xs))) if dv > 2] if xs else list(range(n))
    rep.add("X_within_2_of_all", not far, _witnesses(far))

    net = tuple(sorted(xs))
    index = {v: i for i, v in enumerate(net)}
    h_pairs = []
    for i, u in enumerate(net):
        dist = _bfs_raw(g, u, 3)
        h_pairs.extend((u, v) for v in net if v > u and dist[v] == 3)
    recorded = sorted((cert.net_vertices[a], cert.net_vertices[b]) for a, b in cert.H.edges()) \
        if cert.H.n == len(cert.net_vertices) else None
    rep.add("H_is_distance_3_graph", recorded == sorted(h_pairs))
    h = from_edges(len(net), [(index[u], index[v]) for u, v in h_pairs])
    h_conn = len(net) > 0 and is_connected(h)
    rep.add("H_connected", h_conn, "" if h_conn else "auxiliary graph H is disconnected")

    closed = {x: frozenset([x, *g.neighbors(x)]) for x in net}
    z = frozenset().union(*closed.values()) if closed else frozenset()
    y = frozenset(range(n)) - z
    rep.add("Z_is_union_of_balls", cert.Z == z, _witnesses(sorted(cert.Z ^ z)))
    rep.add("Y_is_complement", cert.Y == y and not (cert.Z & cert.Y))
    rep.add("Z_size", len(z) == (d + 1) * len(net), f"{len(z)} vs {(d + 1) * len(net)}")

    if h_conn:
        tree_edges = []
        seen = {0}
        queue = deque([0])
        while queue:
            a = queue.popleft()
            for b in h.neighbors(a):
                if b not in seen:
                    seen.add(b)
                    tree_edges.append((a, b))
                    queue.append(b)
        tree = from_edges(len(net), tree_edges)
        e_tree = _power_edges_bfs(tree, kp)
        e_h = _power_edges_bfs(h, kp)
        bound = tree_bound(len(net), kp)
        rep.add("tree_bound_on_H", e_tree >= bound and e_h >= e_tree,
                f"e(H^k')={e_h} >= e(T^k')={e_tree} >= {bound}")

    # independent reach sets: one capped BFS per vertex
    reach = []
    for w in range(n):
        dist = _bfs_raw(g, w, exp)
        reach.append(frozenset(v for v in range(n) if dist[v] > 0))

    if h_conn:
        bad_joins = []
        hk = _power_pairs_bfs(h, kp)
        for a, b in hk:
            u, v = net[a], net[b]
            joined = sum(1 for p in closed[u] for q in closed[v] if q in reach[p])
            if joined != (d + 1) ** 2:
                bad_joins.append((u, v, joined))
        rep.add("complete_joins", not bad_joins, _witnesses(bad_joins))

    rhs = claim_bounds(d, kp, n, len(z), len(y))
    e_zz = sum(len(reach[v] & z) for v in z) // 2
    e_zy = sum(len(reach[w] & z) for w in y)
    degs = [len(r) for r in reach]
    rep.add("claim1", 2 * e_zz >= rhs["claim1_doubled"], f"2*{e_zz} >= {rhs['claim1_doubled']}")
    rep.add("claim2", e_zy >= rhs["claim2"], f"{e_zy} >= {rhs['claim2']}")
    low = [(w, dg) for w, dg in enumerate(degs) if dg < rhs["claim3"]]
    rep.add("claim3", not low, f"min {min(degs)} >= {rhs['claim3']}; " + _witnesses(low))
    rep.add("final", sum(degs) >= rhs["final"], f"{sum(degs)} >= {rhs['final']}")
    rep.add("recorded_values_match",
            (cert.claim1, cert.claim2, cert.claim3_min_degree, cert.claim3_rhs, cert.final)
            == ((e_zz, rhs["claim1_doubled"]), (e_zy, rhs["claim2"]), min(degs), rhs["claim3"],
                (sum(degs), rhs["final"])))
    rep.add("recorded_h_connected", cert.h_connected == h_conn)
    return rep


def _power_pairs_bfs(g: Graph, k: int) -> list[tuple[int, int]]:
    out = []
    for u in range(g.n):
        dist = _bfs_raw(g, u, k)
        out.extend((u, v) for v in range(u + 1, g.n) if dist[v] > 0)
    return out


def _power_edges_bfs(g: Graph, k: int) -> int:
    return len(_power_pairs_bfs(g, k))


# --- H_t upper bound -----------------------------------------------------------

def e_hprime_formula(d: int, t: int, k: int) -> int:
    """Closed-form edge count of H'_t."""
    _check_hprime_params(d, t, k)
    j = (k - 2) // 3
    return (t + 1) * d * (d + 1) // 2 + (j * (t + 1) - j * (j + 1) // 2) * (d + 1) ** 2


def appendix_upper_bound(d: int, t: int, k: int) -> Fraction:
    """Upper bound on ``a(H_t^k)`` with ``n = |V(H_t)|``."""
    _check_hprime_params(d, t, k)
    n = h_family_order(d, t)
    return Fraction(2 * k - 1, 3) * (d + 1) - Fraction((k - 2) * (k + 1) * (d + 1) ** 2, 9 * n) + 3


@dataclass(frozen=True)
class ChainLink:
    name: str
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs


def appendix_chain(d: int, t: int, k: int) -> list[ChainLink]:
    """Evaluate each step of the ``a(H_t^k)`` upper-bound chain on the built graphs.

    Every link is ``lhs <= rhs``; per-vertex links report the worst vertex.
    """
    _check_hprime_params(d, t, k)
    g = h_family(d, t)
    n = g.n
    pk = power(g, k)
    hp = h_prime(d, t, k)
    parts = h_prime_partition(d, t)
    members = [v for part in parts for v in part]
    pos = {v: i for i, v in enumerate(members)}
    clusters = h_family_clusters(d, t)
    cluster_of = {v: idx - 1 for idx, c in enumerate(clusters) for v in c}
    others = sorted(set(range(n)) - set(members))

    missing = sum(1 for a, b in hp.edges() if not pk.has_edge(members[a], members[b]))
    excess_big = max(pk.degree(v) - hp.degree(pos[v]) for v in members if cluster_of[v] % 3 == 0)
    excess_small = max(pk.degree(v) - hp.degree(pos[v]) for v in members if cluster_of[v] % 3)
    y_sum = sum(pk.degree(v) for v in members)
    hp_sum = sum(hp.degree(pos[v]) for v in members)
    size_y = (t + 1) * (d + 1)
    j = (k - 2) // 3
    closed = Fraction(2 * k - 1, 3) * (d + 1) - Fraction((k - 2) * (k + 1) * (d + 1), 9 * (t + 1)) + 3
    return [
        ChainLink("H'_t edges inside H_t^k (missing count)", Fraction(missing), Fraction(0)),
        ChainLink("degree excess, large clusters", Fraction(excess_big), Fraction(2)),
        ChainLink("degree excess, single vertices", Fraction(excess_small), Fraction(d + 1)),
        ChainLink("u, u' have minimum degree",
                  Fraction(max(pk.degree(v) for v in others)), Fraction(min(pk.degrees()))),
        ChainLink("a(H_t^k) <= mean degree over Y", Fraction(pk.degree_sum, n), Fraction(y_sum, size_y)),
        ChainLink("Y degree sum vs H'_t plus excess", Fraction(y_sum),
                  Fraction(hp_sum + 2 * (t + 1) * (d - 1) + 2 * (t + 1) * (d + 1))),
        ChainLink("excess absorbed into +4", Fraction(hp_sum + 2 * (t + 1) * (d - 1) + 2 * (t + 1) * (d + 1), size_y),
                  Fraction(2 * e_hprime_formula(d, t, k), size_y) + 4),
        ChainLink("closed form (equality)", Fraction(2 * e_hprime_formula(d, t, k), size_y) + 4, closed),
        ChainLink("closed form (equality, reversed)", closed, Fraction(2 * hp.num_edges, size_y) + 4),
        ChainLink("(t+1) replaced by n/(d+1)", closed, appendix_upper_bound(d, t, k)),
        ChainLink("j consistency", Fraction(3 * j + 2), Fraction(k)),
    ]


def sandwich(d: int, t: int, k: int) -> tuple[Fraction, Fraction, Fraction]:
    """``(thm_1_2_rhs, a(H_t^k), appendix_upper_bound)`` for one parameter triple."""
    _check_hprime_params(d, t, k)
    g = h_family(d, t)
    avg = Fraction(power(g, k).degree_sum, g.n)
    return thm_1_2_rhs(d, k, g.n), avg, appendix_upper_bound(d, t, k)
