import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from folcalc.seifert import (
    EUCLIDEAN,
    HYPERBOLIC,
    SPHERICAL,
    SeifertError,
    SeifertInvariants,
    as_rational,
    base_orbifold_type,
    euler_number,
    frac_ceil,
    frac_floor,
    normalize,
    normalized_slopes,
    orbifold_euler_characteristic,
    reverse_orientation,
)
from oracles import ceil_by_bisection, floor_by_bisection
from strategies import normalized_invariants, raw_invariants

F = Fraction


def inv(g, b, *slopes):
    return SeifertInvariants.of(g, b, sorted(F(s) for s in slopes))


def test_normalize_moves_integer_parts():
    raw = SeifertInvariants.of(0, 0, [F(3, 2), F(-1, 3), F(2, 1)], normalized=False)
    n = normalize(raw)
    assert n == inv(0, 2, "1/2", "2/3")
    assert n.normalized


def test_normalize_sorts_and_keeps_fixed_tuple():
    raw = SeifertInvariants.of(1, -1, [F(2, 3), F(1, 5)], normalized=False)
    assert normalize(raw) == inv(1, -1, "1/5", "2/3")
    fixed = inv(0, -2, "1/2", "2/3", "9/11")
    assert normalize(fixed) == fixed


def test_reverse_orientation_example():
    m = inv(0, -2, "1/2", "2/3", "9/11")
    assert reverse_orientation(m) == inv(0, -1, "2/11", "1/3", "1/2")
    assert reverse_orientation(reverse_orientation(m)) == m


def test_reverse_requires_normalized():
    raw = SeifertInvariants.of(0, 0, [F(3, 2)], normalized=False)
    with pytest.raises(SeifertError):
        reverse_orientation(raw)


def test_euler_number_values():
    assert euler_number(inv(0, -2, "1/2", "2/3", "9/11")) == -(-2 + F(1, 2) + F(2, 3) + F(9, 11))
    assert euler_number(inv(2, 3)) == -3


@pytest.mark.parametrize("slopes,kind", [
    (["1/2", "1/2"], SPHERICAL),
    (["1/2", "1/3", "1/5"], SPHERICAL),
    (["1/2", "1/3", "1/6"], EUCLIDEAN),
    (["1/3", "1/3", "1/3"], EUCLIDEAN),
    (["1/2", "1/2", "1/2", "1/2"], EUCLIDEAN),
    (["1/2", "1/3", "1/7"], HYPERBOLIC),
])
def test_base_orbifold_type(slopes, kind):
    assert base_orbifold_type(inv(0, -1, *slopes)) == kind


def test_orbifold_characteristic_value():
    assert orbifold_euler_characteristic(inv(0, -2, "1/2", "2/3", "9/11")) == F(1, 2) + F(1, 3) + F(1, 11) - 1


def test_normalized_flag_is_checked():
    with pytest.raises(SeifertError):
        SeifertInvariants(0, 0, (F(2, 3), F(1, 3)), True)
    with pytest.raises(SeifertError):
        SeifertInvariants(0, 0, (F(1),), True)
    with pytest.raises(SeifertError):
        SeifertInvariants(-1, 0, ())


def test_as_rational_rejects_floats_and_bools():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)
    assert as_rational("3/6") == F(1, 2)
    assert as_rational({"num": 2, "den": -4}) == F(-1, 2)


def test_json_round_trip_and_unknown_fields():
    m = inv(0, -2, "1/2", "2/3", "9/11")
    assert SeifertInvariants.from_json(m.to_json()) == m
    with pytest.raises(TypeError):
        SeifertInvariants.from_json({"g": 0, "b": 0, "slopes": [], "extra": 1})


def test_normalized_slopes_listing():
    assert normalized_slopes(3) == [F(1, 3), F(1, 2), F(2, 3)]


def test_floor_ceil_against_bisection():
    rnd = random.Random(7)
    for _ in range(10_000):
        q = F(rnd.randint(-10**6, 10**6), rnd.randint(1, 10**4))
        assert frac_floor(q) == floor_by_bisection(q)
        assert frac_ceil(q) == ceil_by_bisection(q)


@settings(max_examples=300, deadline=None)
@given(raw_invariants())
def test_normalize_idempotent_and_preserves_euler(raw):
    n = normalize(raw)
    assert normalize(n) == n
    assert euler_number(n) == euler_number(raw)
    assert all(0 < s < 1 for s in n.slopes)


@settings(max_examples=300, deadline=None)
@given(normalized_invariants())
def test_reversal_involution_negates_euler(m):
    rev = reverse_orientation(m)
    assert reverse_orientation(rev) == m
    assert euler_number(rev) == -euler_number(m)
    assert orbifold_euler_characteristic(rev) == orbifold_euler_characteristic(m)
