"""Exhaustive sweeps over small labelled graphs and trees.

The fast path reads per-mask profiles from the kernel backend; ``generic=True``
instead builds every graph and calls the ordinary checker, which is slower but
shares no code with the kernels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from graphpow._backend import get_backend
from graphpow.bounds import (
    TheoremId,
    Verdict,
    check_cor_1_3,
    check_cor_1_4,
    check_g3_bound,
    check_thm_1_1,
    check_thm_1_2,
)
from graphpow.generators import (
    MAX_ENUM_CONNECTED,
    MAX_ENUM_TREES,
    edge_pairs,
    enumerate_connected,
    graph_from_mask,
)
from graphpow.graph import min_degree
from graphpow.treepower import tree_bound

ENUM_THEOREMS = (TheoremId.THM_1_1, TheoremId.G3_BOUND, TheoremId.THM_1_2,
                 TheoremId.COR_1_3, TheoremId.COR_1_4)

_REGULAR_CHECKERS = {
    TheoremId.THM_1_2: check_thm_1_2,
    TheoremId.COR_1_3: check_cor_1_3,
    TheoremId.COR_1_4: check_cor_1_4,
}


@dataclass
class SweepResult:
    instances: int = 0
    holds: int = 0
    hypotheses_unmet: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return len(self.failures)

    def counts(self) -> dict:
        return {"instances": self.instances, "holds": self.holds,
                "hypotheses_unmet": self.hypotheses_unmet, "failures": self.failed}


def _thm_1_1_ds(n: int, delta: int) -> list[int]:
    return [d for d in range(2, delta + 1) if 3 * n >= 8 * d]


def enum_verify(n: int, theorem, k: Optional[int] = None, *, generic: bool = False,
                backend: Optional[str] = None) -> SweepResult:
    """Check ``theorem`` on every labelled connected graph on ``n`` vertices.

    Each connected graph is one instance. For ``thm_1_1`` every admissible
    ``d`` (``2 <= d <= delta``, ``3n >= 8d``) is checked and the graph fails
    if any of them does.
    """
    theorem = TheoremId(theorem)
    if theorem not in ENUM_THEOREMS:
        raise ValueError(f"enum-verify does not support {theorem.value}")
    if not 1 <= n <= MAX_ENUM_CONNECTED:
        raise ValueError(f"enum-verify supports 1 <= n <= {MAX_ENUM_CONNECTED}, got {n}")
    if theorem in _REGULAR_CHECKERS and k is None:
        raise ValueError(f"{theorem.value} needs a power exponent k")
    if generic:
        return _enum_generic(n, theorem, k)
    return _enum_profile(n, theorem, k, backend)


def _enum_generic(n: int, theorem: TheoremId, k: Optional[int]) -> SweepResult:
    res = SweepResult()
    for mask_graph in enumerate_connected(n):
        res.instances += 1
        if theorem == TheoremId.THM_1_1:
            reports = [check_thm_1_1(mask_graph, d) for d in _thm_1_1_ds(n, min_degree(mask_graph))]
        elif theorem == TheoremId.G3_BOUND:
            reports = [check_g3_bound(mask_graph)]
        else:
            reports = [_REGULAR_CHECKERS[theorem](mask_graph, k)]
        applicable = [r for r in reports if r.verdict != Verdict.HYPOTHESES_UNMET]
        bad = [r for r in applicable if r.verdict == Verdict.FAILS]
        if bad:
            res.failures.extend({"edges": mask_graph.edges(), **r.to_dict()} for r in bad)
        elif applicable:
            res.holds += 1
        else:
            res.hypotheses_unmet += 1
    return res


def _enum_profile(n: int, theorem: TheoremId, k: Optional[int], backend: Optional[str]) -> SweepResult:
    kern = get_backend(backend)
    power_k = {TheoremId.THM_1_1: 4, TheoremId.G3_BOUND: 3}.get(theorem, k)
    conn, mind, maxd, diam, psum = kern.edge_subset_profile(n, power_k)
    conn = conn.astype(bool)
    mind = mind.astype(np.int64)
    psum = psum.astype(np.int64)
    res = SweepResult(instances=int(conn.sum()))
    pairs = edge_pairs(n)

    if theorem == TheoremId.THM_1_1:
        applicable = np.zeros_like(conn)
        bad = np.zeros_like(conn)
        for d in _thm_1_1_ds(n, n - 1):
            sel = conn & (mind >= d)
            applicable |= sel
            bad |= sel & (3 * psum < 7 * d * n)
        holds = applicable & ~bad
        for mask in np.flatnonzero(bad):
            g = graph_from_mask(n, int(mask), pairs)
            res.failures.extend({"edges": g.edges(), **check_thm_1_1(g, d).to_dict()}
                                for d in _thm_1_1_ds(n, min_degree(g))
                                if check_thm_1_1(g, d).verdict == Verdict.FAILS)
    elif theorem == TheoremId.G3_BOUND:
        applicable = conn & (diam >= 3)
        bad = applicable & (4 * psum < 7 * mind * n)
        holds = applicable & ~bad
        for mask in np.flatnonzero(bad):
            g = graph_from_mask(n, int(mask), pairs)
            res.failures.append({"edges": g.edges(), **check_g3_bound(g).to_dict()})
    else:
        regular = conn & (mind == maxd)
        holds = np.zeros_like(conn)
        applicable = np.zeros_like(conn)
        checker = _REGULAR_CHECKERS[theorem]
        for mask in np.flatnonzero(regular):
            g = graph_from_mask(n, int(mask), pairs)
            rep = checker(g, k)
            if rep.verdict == Verdict.FAILS:
                res.failures.append({"edges": g.edges(), **rep.to_dict()})
            if rep.verdict != Verdict.HYPOTHESES_UNMET:
                applicable[mask] = True
                holds[mask] = rep.verdict == Verdict.HOLDS
    res.holds = int(holds.sum())
    res.hypotheses_unmet = res.instances - int(applicable.sum())
    return res


def trees_verify(n: int, k: int, *, backend: Optional[str] = None) -> SweepResult:
    """``e(T^j) >= jn - j(j+1)/2`` for every labelled tree on ``n`` vertices and ``1 <= j <= k``.

    Only the per-``j`` minimum over all trees is needed, so each tree counts as
    holding once the minima clear every bound.
    """
    if not 1 <= n <= MAX_ENUM_TREES:
        raise ValueError(f"trees-verify supports 1 <= n <= {MAX_ENUM_TREES}, got {n}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    count, minima = get_backend(backend).tree_power_minima(n, k)
    res = SweepResult(instances=int(count))
    for j in range(1, k + 1):
        if int(minima[j]) < tree_bound(n, j):
            res.failures.append({"k": j, "min_edges": int(minima[j]), "bound": tree_bound(n, j)})
    res.holds = 0 if res.failures else res.instances
    return res


def tree_minima(n: int, k: int, *, backend: Optional[str] = None) -> list[int]:
    """``[min over trees of e(T^j) for j in 1..k]``."""
    _, minima = get_backend(backend).tree_power_minima(n, k)
    return [int(x) for x in minima[1:]]
