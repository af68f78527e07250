import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from folcalc.forms import (
    FOLIATION,
    INDEFINITE,
    POSITIVE_CONFOLIATION,
    POSITIVE_CONTACT,
    FormError,
    OneFormField,
    build_model,
    check_derivatives,
    check_nonvanishing,
    classify,
    deformation_model,
    dz_form,
    helix_form,
    pairing,
    perturbation_form,
    scale,
    smooth_step,
    twist_profile,
    wedge_self,
)

THETA = (-3 * math.pi / 4, -math.pi / 4)


def bump(x, y, z):
    """A positive scalar field with its gradient."""
    v = 1.5 + np.sin(2 * np.pi * x) * np.cos(2 * np.pi * y) + 0.3 * z ** 2
    grad = (2 * np.pi * np.cos(2 * np.pi * x) * np.cos(2 * np.pi * y),
            -2 * np.pi * np.sin(2 * np.pi * x) * np.sin(2 * np.pi * y),
            0.6 * z)
    return v, grad


def test_dz_and_helix_values():
    pts = np.random.default_rng(0).random((50, 3))
    assert np.all(wedge_self(dz_form((0.0, 1.0)), pts) == 0)
    assert np.allclose(wedge_self(helix_form(), pts), 1.0, atol=1e-14)


def test_scalar_point_returns_float():
    assert wedge_self(helix_form(), [0.1, 0.2, 0.3]) == pytest.approx(1.0)


def test_point_outside_domain():
    with pytest.raises(FormError):
        wedge_self(helix_form(), [0.1, 0.2, 1.5])


def test_reeb_integrable_on_grid():
    reeb = build_model("reeb")
    assert np.max(np.abs(wedge_self(reeb, reeb.grid(64)))) < 1e-9


@pytest.mark.parametrize("t", [0.0, 0.1, 1.0])
def test_deformation_wedge_is_t_squared_fprime(t):
    form = deformation_model(t, *THETA)
    pts = form.grid(64)
    _, fprime = twist_profile(*THETA)(pts[:, 2])
    err = np.max(np.abs(wedge_self(form, pts) - t * t * fprime))
    assert err < (1e-12 if t == 0 else 1e-6)


def test_linearization_consistency():
    rng = np.random.default_rng(1)
    base = deformation_model(0.0, *THETA)
    pts = base.random_points(1000, rng)
    _, fprime = twist_profile(*THETA)(pts[:, 2])
    for t in (1e-2, 1e-3):
        lin = (wedge_self(deformation_model(t, *THETA), pts) - wedge_self(base, pts)) * 2 / t ** 2
        assert np.max(np.abs(lin - 2 * fprime)) < 1e-4


def test_spiral_is_integrable():
    for ap, am in [((1, 0), (1, 0)), ((1, 2), (-1, -2)), ((0.3, -1), (2, 0.5))]:
        sp = build_model("spiral", alpha_plus=ap, alpha_minus=am)
        assert np.max(np.abs(wedge_self(sp, sp.grid(32)))) < 1e-9


def test_normal_form_contact_constant():
    nf = build_model("normal_form", n=2, lam=(0.5, 1.0))
    w = wedge_self(nf, nf.grid(16))
    assert np.allclose(w, 2 * math.pi * 2 * 1.25)


def test_pairing_identities():
    rng = np.random.default_rng(2)
    a = deformation_model(0.7, *THETA)
    b = build_model("spiral", alpha_plus=(1, 1), alpha_minus=(2, -1))
    pts = a.random_points(200, rng)
    assert np.allclose(pairing(a, a, pts), 2 * wedge_self(a, pts), atol=1e-13)
    assert np.array_equal(pairing(a, b, pts), pairing(b, a, pts))
    two = lambda x, y, z: (2.0 + 0 * z, (0 * z, 0 * z, 0 * z))
    assert np.allclose(pairing(scale(a, two), scale(b, two), pts), 4 * pairing(a, b, pts), atol=1e-12)


def test_pairing_dz_with_twist():
    # dz ^ d(beta) = 0 because d(beta) only has dz-terms; f' sits in beta ^ d(beta)
    rng = np.random.default_rng(3)
    tw = perturbation_form(*THETA)
    pts = tw.random_points(300, rng)
    _, fprime = twist_profile(*THETA)(pts[:, 2])
    assert np.allclose(pairing(dz_form(), tw, pts), 0.0, atol=1e-14)
    assert np.allclose(wedge_self(tw, pts), fprime, atol=1e-12)


def test_pairing_domain_mismatch():
    with pytest.raises(FormError):
        pairing(helix_form(), dz_form(), [0.1, 0.1, 0.5])


def test_scaling_laws():
    rng = np.random.default_rng(4)
    a = deformation_model(0.4, *THETA)
    b = build_model("spiral", alpha_plus=(1, 0.5), alpha_minus=(-0.2, 1))
    pts = a.random_points(1000, rng)
    g, _ = bump(pts[:, 0], pts[:, 1], pts[:, 2])
    assert np.max(np.abs(wedge_self(scale(a, bump), pts) - g ** 2 * wedge_self(a, pts))) < 1e-8
    assert np.max(np.abs(pairing(scale(a, bump), scale(b, bump), pts) - g ** 2 * pairing(a, b, pts))) < 1e-8


@pytest.mark.parametrize("name,params,want", [
    ("helix", {}, POSITIVE_CONTACT),
    ("reeb", {}, FOLIATION),
    ("deformation", {"t": 0.1}, POSITIVE_CONFOLIATION),
    ("deformation", {"t": 0.0}, FOLIATION),
    ("normal_form", {"n": 1}, POSITIVE_CONTACT),
    ("spiral", {}, FOLIATION),
])
def test_classify_table(name, params, want):
    assert classify(build_model(name, **params), 16)["classification"] == want


def test_classify_indefinite_and_negative():
    nf = build_model("normal_form", n=-1)
    assert classify(nf, 16)["classification"] == INDEFINITE
    out = classify(build_model("helix"), 16)
    assert set(out) >= {"classification", "min", "max", "argmin", "argmax"}


def test_classify_resolution_floor():
    with pytest.raises(FormError):
        classify(helix_form(), 8)


@pytest.mark.parametrize("name,params", [
    ("reeb", {}), ("spiral", {"alpha_plus": (1, 2), "alpha_minus": (-1, 0.5)}),
    ("deformation", {"t": 0.3}), ("deformation", {"t": 0.2, "base": "spiral"}),
    ("normal_form", {"n": 3, "lam": (1, -2)}), ("helix", {}), ("dz", {}),
])
def test_derivative_self_test(name, params):
    assert check_derivatives(build_model(name, **params)) < 1e-6


def test_derivative_self_test_catches_wrong_jacobian():
    def func(x, y, z):
        o = 0 * z
        return (np.cos(z), -np.sin(z), o + 1), ((o, o, o), (o, o, o), (o, o, o))

    with pytest.raises(FormError):
        check_derivatives(OneFormField("wrong", (0.0, 1.0), func))


def test_parameter_validation():
    with pytest.raises(FormError):
        deformation_model(0.1, -0.1, -0.5)
    with pytest.raises(FormError):
        deformation_model(0.1, -4.0, -0.5, base="spiral")
    with pytest.raises(FormError):
        build_model("spiral", alpha_plus=(0, 0))
    with pytest.raises(FormError):
        build_model("torus")
    with pytest.raises(FormError):
        build_model("reeb", z_range=(0.0, 1.0))


def test_vanishing_form_rejected():
    def func(x, y, z):
        o = 0 * z
        return (z - 0.5, o, o), ((o, o, o + 1), (o, o, o), (o, o, o))

    with pytest.raises(FormError):
        check_nonvanishing(OneFormField("zero", (0.0, 1.0), func), resolution=17)


def test_smooth_step_flat_ends():
    assert smooth_step(np.array([-1.0, 0.0]))[1] == 0
    assert smooth_step(np.array([1.0, 2.0]))[0] == 1
    assert smooth_step(np.array([1e-3]))[0] < 1e-300


@settings(max_examples=50, deadline=None)
@given(st.floats(-2, 2), st.floats(-math.pi + 0.01, -0.6), st.floats(0.05, 0.5))
def test_deformation_law_random_parameters(t, lo, gap):
    hi = min(lo + gap, -0.01)
    form = deformation_model(t, lo, hi)
    pts = form.random_points(200, np.random.default_rng(0))
    _, fprime = twist_profile(lo, hi)(pts[:, 2])
    assert np.max(np.abs(wedge_self(form, pts) - t * t * fprime)) < 1e-9 * max(1, t * t)
