from __future__ import annotations

from fractions import Fraction

import pytest

from graphpow.bounds import (
    TheoremId,
    Verdict,
    check_cayley_growth,
    check_cor_1_3,
    check_cor_1_4,
    check_g3_bound,
    check_thm_1_1,
    check_thm_1_2,
    check_vt_bound,
    level_set_violations,
    per_vertex_claims,
    sumset_power,
    thm_1_2_rhs,
)
from graphpow.generators import circulant, clique_ring, complete, cycle, h_family, path
from graphpow.graph import from_edges


def test_thm_1_1():
    r = check_thm_1_1(cycle(8), 2)
    assert r.verdict == Verdict.HOLDS and r.lhs == 7 and r.rhs == Fraction(14, 3)
    r = check_thm_1_1(h_family(3, 2), 3)
    assert r.verdict == Verdict.HOLDS and r.slack > 0
    assert check_thm_1_1(path(3), 2).verdict == Verdict.HYPOTHESES_UNMET


def test_thm_1_1_size_gate():
    # 3n >= 8d fails for K_4 with d=3
    assert check_thm_1_1(complete(4), 3).verdict == Verdict.HYPOTHESES_UNMET


def test_thm_1_2():
    r = check_thm_1_2(cycle(12), 5)
    assert r.verdict == Verdict.HOLDS
    assert (r.lhs, r.rhs) == (10, Fraction(13, 2))
    assert check_thm_1_2(cycle(12), 4).verdict == Verdict.HYPOTHESES_UNMET
    assert check_thm_1_2(h_family(3, 4), 11).verdict == Verdict.HOLDS


def test_cor_1_3():
    assert check_cor_1_3(complete(4), 2).verdict == Verdict.HOLDS
    r = check_cor_1_3(cycle(12), 5)
    assert r.verdict == Verdict.HOLDS and r.rhs <= thm_1_2_rhs(2, 5, 12)
    assert check_cor_1_3(path(4), 2).verdict == Verdict.HYPOTHESES_UNMET


def test_cor_1_4():
    r = check_cor_1_4(cycle(12), 5)
    assert r.verdict == Verdict.HOLDS and r.rhs == Fraction(37, 8)
    assert check_cor_1_4(clique_ring(5, 12), 5).verdict == Verdict.HOLDS
    assert check_cor_1_4(cycle(12), 3).verdict == Verdict.HYPOTHESES_UNMET


def test_vt_bound():
    r = check_vt_bound(clique_ring(5, 10), 3, True)
    assert r.verdict == Verdict.HOLDS and r.slack == 0 and r.lhs == 13
    assert check_vt_bound(circulant(20, {1, 2, 18, 19}), 3, True).verdict == Verdict.HOLDS
    assert check_vt_bound(clique_ring(5, 10), 5, True).verdict == Verdict.HYPOTHESES_UNMET
    assert check_vt_bound(clique_ring(5, 10), 3, False).verdict == Verdict.HYPOTHESES_UNMET


def test_cayley_growth():
    assert sumset_power(30, {0, 1, 29}, 4) == frozenset(x % 30 for x in range(-4, 5))
    r = check_cayley_growth(30, {1, 29}, 4)
    assert r.verdict == Verdict.HOLDS and r.slack == 0
    assert r.lhs_times_scale == r.rhs_times_scale == 27
    assert check_cayley_growth(10, {1, 9}, 5).verdict == Verdict.HYPOTHESES_UNMET
    assert check_cayley_growth(30, {1, 29, 15}, 3).verdict == Verdict.HOLDS


def test_g3_bound():
    r = check_g3_bound(cycle(10), 2)
    assert r.verdict == Verdict.HOLDS and r.lhs == 6
    assert check_g3_bound(complete(4), 3).verdict == Verdict.HYPOTHESES_UNMET
    assert check_g3_bound(h_family(5, 2), 5).verdict == Verdict.HOLDS


def test_disconnected_is_unmet():
    g = from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    for r in (check_thm_1_1(g, 2), check_thm_1_2(g, 5), check_g3_bound(g, 2)):
        assert r.verdict == Verdict.HYPOTHESES_UNMET
        assert r.slack is None


def test_report_serialises_integers():
    d = check_thm_1_2(cycle(12), 5).to_dict()
    assert d["theorem"] == TheoremId.THM_1_2.value
    assert isinstance(d["lhs_times_scale"], int) and isinstance(d["rhs_times_scale"], int)
    assert d["slack"] == [7, 2]


def test_per_vertex_examples():
    rep = per_vertex_claims(cycle(12), 2, 1)
    assert rep["a"].applicable and rep["a"].passed
    rep = per_vertex_claims(cycle(7), 2, 1)
    assert rep["b"].applicable and rep["b"].passed
    rep = per_vertex_claims(h_family(3, 3), 3, 1)
    assert rep.ok and all(c.applicable for c in rep.claims)


def test_level_sets():
    assert level_set_violations(clique_ring(8, 9)) == []
    assert level_set_violations(circulant(15, {1, 2, 13, 14})) == []
    # the path has level sizes 1, well below ceil(2*2/3)=2; it is not vertex-transitive
    assert level_set_violations(path(6), 2)
