import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from folcalc.covers import (
    brieskorn_invariants,
    brieskorn_report,
    ceiling_equation_lhs,
    component_lower_bound,
    fiberwise_branched_cover,
    twisting_candidates,
)
from folcalc.seifert import SeifertError, SeifertInvariants, euler_number, normalize
from strategies import normalized_invariants, raw_invariants

F = Fraction
SIGMA = SeifertInvariants.of(0, -2, [F(1, 2), F(2, 3), F(9, 11)])


def brute_candidates(inv, n_max):
    # direct evaluation with float-free ceilings via math.ceil on Fractions
    target = 2 - 2 * inv.g
    return [n for n in range(1, n_max + 1)
            if n * inv.b + sum(math.ceil(n * s) for s in inv.slopes) == target]


def test_cover_example():
    res = fiberwise_branched_cover(SIGMA, 5)
    assert res.quotient == SeifertInvariants.of(0, -10, [F(5, 2), F(10, 3), F(45, 11)], normalized=False)
    assert res.branch_orders == (1, 1, 1)


def test_identity_cover():
    res = fiberwise_branched_cover(SIGMA, 1)
    assert res.quotient == SIGMA and res.branch_orders == (1, 1, 1)


def test_cover_normalization_example():
    res = fiberwise_branched_cover(SeifertInvariants.of(0, 0, [F(1, 2)]), 2)
    assert res.quotient.slopes == (F(1),)
    assert normalize(res.quotient) == SeifertInvariants.of(0, 1, [])
    assert res.branch_orders == (2,)


def test_cover_rejects_bad_degree():
    with pytest.raises(SeifertError):
        fiberwise_branched_cover(SIGMA, 0)


def test_twisting_examples():
    assert twisting_candidates(SIGMA, 60) == [5]
    assert twisting_candidates(SeifertInvariants.of(0, -2, [F(1, 2), F(2, 3), F(29, 35)]), 60) == [5, 11, 17, 23, 29]
    assert twisting_candidates(SeifertInvariants.of(1, -1, []), 100) == []


@settings(max_examples=200, deadline=None)
@given(normalized_invariants(max_r=4), st.integers(1, 40))
def test_twisting_matches_brute_force(inv, n_max):
    assert twisting_candidates(inv, n_max) == brute_candidates(inv, n_max)


def test_brieskorn_k2():
    rep = brieskorn_report(2)
    assert rep.candidates == [5]
    assert rep.covers[5] == SeifertInvariants.of(0, -1, [F(1, 11), F(1, 3), F(1, 2)])
    assert rep.vertical_twisting == -5
    # 6k - 7 = 5 shares the factor 5 with the only candidate
    assert rep.coprime_candidates == []
    assert rep.class_lower_bound == 1


def test_brieskorn_k3():
    rep = brieskorn_report(3)
    assert rep.candidates == [5, 11]
    assert rep.coprime_candidates == [5]
    assert rep.class_lower_bound == 2


def test_brieskorn_k1_degenerate():
    rep = brieskorn_report(1)
    assert rep.candidates == [] and rep.covers == {} and rep.vertical_twisting is None
    assert rep.to_json()["necessary_only"] is True


def test_brieskorn_rejects_small_search_range():
    with pytest.raises(SeifertError):
        brieskorn_report(3, n_max=10)


def test_brieskorn_ceiling_equation_direct():
    inv = brieskorn_invariants(4)
    assert [ceiling_equation_lhs(inv, n) == 2 for n in (5, 11, 17)] == [True] * 3
    assert ceiling_equation_lhs(inv, 23) != 2


@pytest.mark.parametrize("g,e,want", [(2, 1, 17), (2, 2, 2), (3, 2, 65), (3, -4, 2), (4, 3, 257)])
def test_component_lower_bound(g, e, want):
    assert component_lower_bound(g, e) == want


@pytest.mark.parametrize("g,e,msg", [(2, 3, "divide"), (1, 1, "genus"), (2, 0, "non-zero")])
def test_component_lower_bound_errors(g, e, msg):
    with pytest.raises(SeifertError, match=msg):
        component_lower_bound(g, e)


@settings(max_examples=300, deadline=None)
@given(raw_invariants(), st.integers(1, 12), st.integers(1, 12))
def test_cover_composition_and_euler_multiplicativity(inv, n, m):
    two_step = fiberwise_branched_cover(fiberwise_branched_cover(inv, n).quotient, m).quotient
    assert two_step == fiberwise_branched_cover(inv, n * m).quotient
    assert euler_number(fiberwise_branched_cover(inv, n).quotient) == n * euler_number(inv)
