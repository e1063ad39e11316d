from __future__ import annotations

import dataclasses
from fractions import Fraction

import pytest

from graphpow.bounds import thm_1_2_rhs
from graphpow.cert import (
    HypothesesUnmet,
    appendix_chain,
    appendix_upper_bound,
    build_net,
    e_hprime_formula,
    sandwich,
    verify_certificate,
)
from graphpow.generators import clique_ring, cycle, h_family, h_prime, path, random_regular


def test_cycle_certificate():
    g = cycle(12)
    cert = build_net(g, 1)
    assert set(cert.X) == {0, 3, 6, 9}
    assert len(cert.X0) >= 3
    assert sorted(cert.H.degrees()) == [2, 2, 2, 2]
    assert cert.Z == frozenset(range(12)) and cert.Y == frozenset()
    assert cert.final == (120, 78)
    rep = verify_certificate(g, cert)
    assert rep.ok, rep.failures


def test_gate():
    with pytest.raises(HypothesesUnmet) as info:
        build_net(cycle(12), 2)
    assert not all(ok for _, ok in info.value.hypotheses)
    with pytest.raises(HypothesesUnmet):
        build_net(path(20), 1)


@pytest.mark.parametrize("g", [clique_ring(5, 14), h_family(3, 4), random_regular(40, 3, 2)])
def test_certificates_pass(g):
    cert = build_net(g, 1)
    rep = verify_certificate(g, cert)
    assert rep.ok, rep.failures
    assert cert.h_connected


def test_tampered_certificate():
    g = cycle(15)
    cert = build_net(g, 1)
    bad = dataclasses.replace(cert, X=cert.X[:-1])
    rep = verify_certificate(g, bad)
    assert not rep.ok
    names = {name for name, _ in rep.failures}
    assert "X_within_2_of_all" in names or "X_size" in names


def test_tampered_claim_values():
    g = clique_ring(5, 14)
    cert = build_net(g, 1)
    bad = dataclasses.replace(cert, final=(cert.final[0] + 2, cert.final[1]))
    assert not verify_certificate(g, bad).ok


def test_e_hprime():
    assert e_hprime_formula(3, 2, 5) == 50 == h_prime(3, 2, 5).num_edges
    assert e_hprime_formula(5, 3, 5) == 168 == h_prime(5, 3, 5).num_edges


def test_appendix_upper_bound():
    assert appendix_upper_bound(3, 4, 11) == 31 - Fraction(96, 11)
    lo, mid, hi = sandwich(3, 4, 11)
    assert lo == thm_1_2_rhs(3, 11, 22)
    assert lo <= mid <= hi and hi - lo == 4


@pytest.mark.parametrize("d,t,k", [(3, 2, 5), (5, 3, 8), (7, 4, 11)])
def test_chain_links_hold(d, t, k):
    links = appendix_chain(d, t, k)
    assert links and all(link.holds for link in links)
