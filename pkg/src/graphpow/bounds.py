"""Hypothesis-gated checkers for the average-degree lower bounds on graph powers.

Every checker is total: it evaluates the hypotheses itself and returns
HYPOTHESES_UNMET instead of raising. Inequalities are compared as integer
cross-products at a stated scale; ``slack`` is ``(lhs - rhs) / scale`` in
units of average degree (or sumset size for the Cayley check).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from graphpow.generators import is_generating
from graphpow.graph import (
    Graph,
    _bfs_raw,
    diameter,
    is_connected,
    level_sizes,
    min_degree,
    power,
    regularity,
)


class TheoremId(str, enum.Enum):
    THM_1_1 = "thm_1_1"
    THM_1_2 = "thm_1_2"
    COR_1_3 = "cor_1_3"
    COR_1_4 = "cor_1_4"
    VT_BOUND = "vt_bound"
    CAYLEY_GROWTH = "cayley_growth"
    G3_BOUND = "g3_bound"


class Verdict(str, enum.Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    HYPOTHESES_UNMET = "HYPOTHESES_UNMET"


@dataclass(frozen=True)
class BoundReport:
    theorem_id: TheoremId
    params: dict
    hypotheses: tuple[tuple[str, bool], ...]
    lhs_times_scale: Optional[int]
    rhs_times_scale: Optional[int]
    scale: int
    scale_description: str
    verdict: Verdict
    slack: Optional[Fraction]

    @property
    def hypotheses_met(self) -> bool:
        return all(ok for _, ok in self.hypotheses)

    @property
    def lhs(self) -> Optional[Fraction]:
        return None if self.lhs_times_scale is None else Fraction(self.lhs_times_scale, self.scale)

    @property
    def rhs(self) -> Optional[Fraction]:
        return None if self.rhs_times_scale is None else Fraction(self.rhs_times_scale, self.scale)

    def to_dict(self) -> dict:
        slack = self.slack
        return {
            "theorem": self.theorem_id.value,
            "params": self.params,
            "hypotheses": [{"name": n, "satisfied": ok} for n, ok in self.hypotheses],
            "lhs_times_scale": self.lhs_times_scale,
            "rhs_times_scale": self.rhs_times_scale,
            "scale": self.scale,
            "scale_description": self.scale_description,
            "verdict": self.verdict.value,
            "slack": None if slack is None else [slack.numerator, slack.denominator],
            "slack_display": None if slack is None else f"{float(slack):.6g}",
        }


def _report(theorem, params, hypotheses, lhs, rhs, scale, description) -> BoundReport:
    hyps = tuple(hypotheses)
    if not all(ok for _, ok in hyps):
        verdict = Verdict.HYPOTHESES_UNMET
    elif lhs >= rhs:
        verdict = Verdict.HOLDS
    else:
        verdict = Verdict.FAILS
    slack = None if lhs is None or rhs is None else Fraction(lhs - rhs, scale)
    return BoundReport(TheoremId(theorem), params, hyps, lhs, rhs, scale, description, verdict, slack)


# exact right-hand sides, used for auditing the integer forms

def thm_1_1_rhs(d: int) -> Fraction:
    return Fraction(7 * d, 3)


def thm_1_2_rhs(d: int, k: int, n: int) -> Fraction:
    return Fraction(2 * k - 1, 3) * (d + 1) - Fraction((k - 2) * (k + 1) * (d + 1) ** 2, 9 * n) - 1


def cor_1_3_rhs(d: int, k: int, n: int) -> Fraction:
    half = Fraction(2 * k - 1, 2)
    return Fraction(2 * k - 1, 3) * (d + 1) - half ** 2 * (d + 1) ** 2 / (9 * n) - 1


def cor_1_4_rhs(d: int, k: int, diam: int) -> Fraction:
    return Fraction(2 * k - 1, 3) * (d + 1) * (1 - Fraction(2 * k - 1, 4 * diam)) - 1


def vt_rhs(d: int, k: int) -> Fraction:
    return Fraction((2 * k + 1) * (d + 1), 3) - 1


def g3_rhs(d: int) -> Fraction:
    return Fraction(7 * d, 4)


def _diam_or_none(g: Graph, connected: bool) -> Optional[int]:
    return diameter(g) if connected and g.n > 0 else None


def check_thm_1_1(g: Graph, d: Optional[int] = None) -> BoundReport:
    """``a(G^4) >= 7d/3`` for connected G with ``delta >= d >= 2`` and ``3n >= 8d``."""
    n = g.n
    delta = min_degree(g)
    d = delta if d is None else d
    connected = is_connected(g) and n > 0
    hyps = [
        ("connected", connected),
        ("min_degree>=d", delta >= d),
        ("d>=2", d >= 2),
        ("3n>=8d", 3 * n >= 8 * d),
    ]
    lhs = rhs = None
    if connected:
        lhs = 3 * power(g, 4).degree_sum
        rhs = 7 * d * n
    return _report(TheoremId.THM_1_1, {"d": d, "n": n}, hyps, lhs, rhs, 3 * n,
                   "3n * a(G^4) vs 7dn")


def _regular_power_check(theorem, g: Graph, k: int, need_diam: bool):
    n = g.n
    connected = is_connected(g) and n > 0
    d = regularity(g)
    diam = _diam_or_none(g, connected)
    hyps = [("connected", connected), ("regular", d is not None), ("k=2(mod 3)", k % 3 == 2)]
    if need_diam:
        hyps.append(("diam>k", diam is not None and diam > k))
    degsum = power(g, k).degree_sum if connected and d is not None else None
    params = {"d": d, "k": k, "n": n, "diameter": diam}
    return hyps, params, d, diam, degsum


def check_thm_1_2(g: Graph, k: int) -> BoundReport:
    hyps, params, d, _, degsum = _regular_power_check(TheoremId.THM_1_2, g, k, True)
    n = g.n
    lhs = rhs = None
    if degsum is not None:
        lhs = 9 * degsum
        rhs = 3 * (2 * k - 1) * (d + 1) * n - (k - 2) * (k + 1) * (d + 1) ** 2 - 9 * n
    return _report(TheoremId.THM_1_2, params, hyps, lhs, rhs, 9 * n, "9n * a(G^k)")


def check_cor_1_3(g: Graph, k: int) -> BoundReport:
    hyps, params, d, _, degsum = _regular_power_check(TheoremId.COR_1_3, g, k, False)
    n = g.n
    lhs = rhs = None
    if degsum is not None:
        lhs = 36 * degsum
        rhs = 12 * (2 * k - 1) * (d + 1) * n - (2 * k - 1) ** 2 * (d + 1) ** 2 - 36 * n
    return _report(TheoremId.COR_1_3, params, hyps, lhs, rhs, 36 * n, "36n * a(G^k)")


def check_cor_1_4(g: Graph, k: int) -> BoundReport:
    hyps, params, d, diam, degsum = _regular_power_check(TheoremId.COR_1_4, g, k, False)
    n = g.n
    lhs = rhs = None
    scale = 12 * n * (diam or 1)
    if degsum is not None and diam:
        lhs = 12 * diam * degsum
        rhs = n * (4 * (2 * k - 1) * (d + 1) * diam - (2 * k - 1) ** 2 * (d + 1) - 12 * diam)
    return _report(TheoremId.COR_1_4, params, hyps, lhs, rhs, scale, "12 n D * a(G^k), D = diam(G)")


def check_vt_bound(g: Graph, k: int, transitive_by_construction: bool) -> BoundReport:
    """``a(G^k) >= (2k+1)(d+1)/3 - 1`` for vertex-transitive G with ``k < diam``.

    Vertex-transitivity is taken on trust from the flag.
    """
    n = g.n
    connected = is_connected(g) and n > 0
    d = regularity(g)
    diam = _diam_or_none(g, connected)
    hyps = [
        ("vertex_transitive", bool(transitive_by_construction)),
        ("connected", connected),
        ("regular", d is not None),
        ("k<diam", diam is not None and k < diam),
    ]
    lhs = rhs = None
    if connected and d is not None:
        lhs = 3 * power(g, k).degree_sum
        rhs = n * (2 * k + 1) * (d + 1) - 3 * n
    return _report(TheoremId.VT_BOUND, {"d": d, "k": k, "n": n, "diameter": diam}, hyps,
                   lhs, rhs, 3 * n, "3n * a(G^k)")


def check_g3_bound(g: Graph, d: Optional[int] = None) -> BoundReport:
    """``a(G^3) >= 7d/4`` for connected G with ``delta >= d`` and ``diam >= 3``."""
    n = g.n
    delta = min_degree(g)
    d = delta if d is None else d
    connected = is_connected(g) and n > 0
    diam = _diam_or_none(g, connected)
    hyps = [("connected", connected), ("min_degree>=d", delta >= d),
            ("diam>=3", diam is not None and diam >= 3)]
    lhs = rhs = None
    if connected:
        lhs = 4 * power(g, 3).degree_sum
        rhs = 7 * d * n
    return _report(TheoremId.G3_BOUND, {"d": d, "n": n, "diameter": diam}, hyps, lhs, rhs,
                   4 * n, "4n * a(G^3)")


# --- sumsets in Z_n -----------------------------------------------------------

def _rotate(x: int, a: int, n: int, full: int) -> int:
    a %= n
    if a == 0:
        return x
    return ((x << a) | (x >> (n - a))) & full


def sumset_power(n: int, a_set, k: int) -> frozenset[int]:
    """The k-fold sumset ``A + ... + A`` in Z_n (``A^0 = {0}``)."""
    full = (1 << n) - 1
    elems = sorted({x % n for x in a_set})
    cur = 1
    for _ in range(k):
        nxt = 0
        for a in elems:
            nxt |= _rotate(cur, a, n, full)
        if nxt == cur:
            break
        cur = nxt
    return frozenset(i for i in range(n) if cur >> i & 1)


def check_cayley_growth(n: int, connection_set, k: int) -> BoundReport:
    """``3|A^k| >= (2k+1)|A|`` for ``A = S + {0}`` whenever ``A^k`` is a proper subset of Z_n."""
    s = frozenset(x % n for x in connection_set)
    symmetric = all((-x) % n in s for x in s)
    a_set = s | {0}
    ak = sumset_power(n, a_set, k)
    hyps = [
        ("zero_free", 0 not in s),
        ("symmetric", symmetric),
        ("generating", is_generating(n, s)),
        ("A^k!=Z_n", len(ak) < n),
    ]
    lhs = 3 * len(ak)
    rhs = (2 * k + 1) * len(a_set)
    params = {"n": n, "connection_set": sorted(s), "k": k, "|A|": len(a_set), "|A^k|": len(ak)}
    return _report(TheoremId.CAYLEY_GROWTH, params, hyps, lhs, rhs, 3, "3|A^k| vs (2k+1)|A|")


# --- per-vertex claims --------------------------------------------------------

@dataclass(frozen=True)
class SubClaim:
    name: str
    hypotheses: tuple[tuple[str, bool], ...]
    checked: int = 0
    violations: tuple[tuple[int, int, int], ...] = field(default=())  # (vertex, degree, needed)

    @property
    def applicable(self) -> bool:
        return all(ok for _, ok in self.hypotheses)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "claim": self.name,
            "applicable": self.applicable,
            "hypotheses": [{"name": n, "satisfied": ok} for n, ok in self.hypotheses],
            "checked": self.checked,
            "violations": [list(v) for v in self.violations],
        }


@dataclass(frozen=True)
class PerVertexReport:
    d: int
    k_prime: int
    claims: tuple[SubClaim, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.claims)

    def __getitem__(self, name: str) -> SubClaim:
        return next(c for c in self.claims if c.name == name)

    def to_dict(self) -> dict:
        return {"d": self.d, "k_prime": self.k_prime, "ok": self.ok,
                "claims": [c.to_dict() for c in self.claims]}


def per_vertex_claims(g: Graph, d: int, k_prime: int) -> PerVertexReport:
    """Per-vertex degree claims in powers of G.

    (a) d-regular with ``diam > 3k'+2``: every degree in ``G^{3k'+2}`` is at
        least ``(k'+1)(d+1) - 1``.
    (b) ``delta >= d`` and ``n > 3d``: every degree in ``G^4`` is at least ``2d``.
    (c) ``delta >= d``: a vertex with two vertices at distance exactly 3 from it
        and at distance >= 3 from each other has degree at least ``3d`` in ``G^4``.
    """
    if not is_connected(g):
        raise ValueError("per-vertex claims need a connected graph")
    n = g.n
    delta = min_degree(g)
    diam = diameter(g)
    exp = 3 * k_prime + 2

    hyps_a = (("d-regular", regularity(g) == d), (f"diam>{exp}", diam > exp))
    viol_a: list[tuple[int, int, int]] = []
    checked_a = 0
    if all(ok for _, ok in hyps_a):
        need = (k_prime + 1) * (d + 1) - 1
        for v, deg in enumerate(power(g, exp).degrees()):
            checked_a += 1
            if deg < need:
                viol_a.append((v, deg, need))

    g4 = power(g, 4)
    hyps_b = (("min_degree>=d", delta >= d), ("n>3d", n > 3 * d))
    viol_b: list[tuple[int, int, int]] = []
    checked_b = 0
    if all(ok for _, ok in hyps_b):
        for v, deg in enumerate(g4.degrees()):
            checked_b += 1
            if deg < 2 * d:
                viol_b.append((v, deg, 2 * d))

    hyps_c = (("min_degree>=d", delta >= d),)
    viol_c: list[tuple[int, int, int]] = []
    checked_c = 0
    if hyps_c[0][1]:
        g2 = power(g, 2)
        ball2 = [g2.rows[v] | (1 << v) for v in range(n)]
        for u in range(n):
            dist = _bfs_raw(g, u, 3)
            at3 = [v for v in range(n) if dist[v] == 3]
            mask3 = sum(1 << v for v in at3)
            if any(mask3 & ~ball2[v] for v in at3):
                checked_c += 1
                deg = g4.degree(u)
                if deg < 3 * d:
                    viol_c.append((u, deg, 3 * d))

    claims = (
        SubClaim("a", hyps_a, checked_a, tuple(viol_a)),
        SubClaim("b", hyps_b, checked_b, tuple(viol_b)),
        SubClaim("c", hyps_c, checked_c, tuple(viol_c)),
    )
    return PerVertexReport(d, k_prime, claims)


def level_set_violations(g: Graph, d: Optional[int] = None) -> list[tuple[int, int, int]]:
    """``(x, i, |N^i(x)|)`` wherever a level ``1 <= i < diam`` has fewer than
    ``ceil(2(d+1)/3)`` vertices. Meaningful for vertex-transitive graphs."""
    d = regularity(g) if d is None else d
    if d is None:
        raise ValueError("level-set check needs a regular graph or an explicit d")
    need = -(-2 * (d + 1) // 3)
    diam = diameter(g)
    out = []
    for x in range(g.n):
        sizes = level_sizes(g, x)
        for i in range(1, diam):
            size = sizes[i] if i < len(sizes) else 0
            if size < need:
                out.append((x, i, size))
    return out


CHECKERS = {
    TheoremId.THM_1_1: check_thm_1_1,
    TheoremId.THM_1_2: check_thm_1_2,
    TheoremId.COR_1_3: check_cor_1_3,
    TheoremId.COR_1_4: check_cor_1_4,
    TheoremId.VT_BOUND: check_vt_bound,
    TheoremId.CAYLEY_GROWTH: check_cayley_growth,
    TheoremId.G3_BOUND: check_g3_bound,
}
