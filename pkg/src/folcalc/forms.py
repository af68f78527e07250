"""Explicit 1-forms on box domains and their integrability/contact sign.

A :class:`OneFormField` ``P dx + Q dy + R dz`` lives on
``[0,1] x [0,1] x [z0, z1]``, periodic in ``x`` and ``y``.  It is evaluated by a
vectorized function returning the coefficients together with their analytic
Jacobian ``J[..., i, j] = d(coefficient i)/d(coordinate j)``.

The coefficient of ``alpha ^ d alpha`` against ``dx ^ dy ^ dz`` is
``P (R_y - Q_z) + Q (P_z - R_x) + R (Q_x - P_y)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

FOLIATION = "foliation"
POSITIVE_CONTACT = "positive_contact"
POSITIVE_CONFOLIATION = "positive_confoliation"
INDEFINITE = "indefinite"

MODELS = ("reeb", "spiral", "deformation", "normal_form", "helix", "dz")


class FormError(ValueError):
    pass


# --- smooth profiles -----------------------------------------------------------

def _psi(t):
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    pos = t > 0
    out[pos] = np.exp(-1.0 / t[pos])
    return out


def _dpsi(t):
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    pos = t > 0
    out[pos] = np.exp(-1.0 / t[pos]) / t[pos] ** 2
    return out


def smooth_step(t):
    """``S(t)``: 0 for ``t <= 0``, 1 for ``t >= 1``, flat to all orders at both ends."""
    a, b = _psi(t), _psi(1.0 - np.asarray(t, dtype=float))
    return a / (a + b)


def smooth_step_derivative(t):
    t = np.asarray(t, dtype=float)
    a, b = _psi(t), _psi(1.0 - t)
    da, db = _dpsi(t), _dpsi(1.0 - t)
    return (da * b + a * db) / (a + b) ** 2


def ramp(lo: float, hi: float):
    """Profile rising smoothly from 0 at ``lo`` to 1 at ``hi``; returns (value, derivative)."""
    w = hi - lo

    def f(z):
        u = (np.asarray(z, dtype=float) - lo) / w
        return smooth_step(u), smooth_step_derivative(u) / w

    return f


# --- the field type --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class OneFormField:
    name: str
    z_range: tuple
    func: Callable
    params: dict = field(default_factory=dict)

    def evaluate(self, points):
        """Coefficients ``(n, 3)`` and Jacobian ``(n, 3, 3)`` at points ``(n, 3)``."""
        p = np.atleast_2d(np.asarray(points, dtype=float))
        self._check_domain(p)
        coeffs, jac = self.func(p[:, 0], p[:, 1], p[:, 2])
        n = p.shape[0]
        coeffs = np.stack([np.broadcast_to(c, (n,)) for c in coeffs], axis=-1)
        jac = np.stack([np.stack([np.broadcast_to(v, (n,)) for v in row], axis=-1) for row in jac], axis=-2)
        return coeffs, jac

    def _check_domain(self, p):
        z0, z1 = self.z_range
        slack = 1e-12
        ok = ((p[:, 0] >= -slack) & (p[:, 0] <= 1 + slack) & (p[:, 1] >= -slack)
              & (p[:, 1] <= 1 + slack) & (p[:, 2] >= z0 - slack) & (p[:, 2] <= z1 + slack))
        if not np.all(ok):
            raise FormError(f"point outside the domain [0,1]x[0,1]x[{z0},{z1}]")

    def grid(self, resolution: int):
        x = np.arange(resolution) / resolution
        z = np.linspace(self.z_range[0], self.z_range[1], resolution)
        X, Y, Z = np.meshgrid(x, x, z, indexing="ij")
        return np.stack([X.ravel(), Y.ravel(), Z.ravel()], axis=-1)

    def random_points(self, n: int, rng, margin: float = 0.0):
        z0, z1 = self.z_range
        lo = np.array([margin, margin, z0 + margin])
        hi = np.array([1 - margin, 1 - margin, z1 - margin])
        return lo + (hi - lo) * rng.random((n, 3))


def _wedge_from(F, J):
    P, Q, R = F[:, 0], F[:, 1], F[:, 2]
    curl = np.stack([J[:, 2, 1] - J[:, 1, 2], J[:, 0, 2] - J[:, 2, 0], J[:, 1, 0] - J[:, 0, 1]], axis=-1)
    return P * curl[:, 0] + Q * curl[:, 1] + R * curl[:, 2], curl


def wedge_self(alpha: OneFormField, points):
    """Coefficient of ``alpha ^ d alpha``; scalar for one point, array otherwise."""
    F, J = alpha.evaluate(points)
    w, _ = _wedge_from(F, J)
    return float(w[0]) if np.ndim(points) == 1 else w


def pairing(alpha: OneFormField, beta: OneFormField, points):
    """Coefficient of ``alpha ^ d beta + beta ^ d alpha``."""
    if tuple(alpha.z_range) != tuple(beta.z_range):
        raise FormError("forms live on different domains")
    Fa, Ja = alpha.evaluate(points)
    Fb, Jb = beta.evaluate(points)
    _, ca = _wedge_from(Fa, Ja)
    _, cb = _wedge_from(Fb, Jb)
    v = np.sum(Fa * cb, axis=-1) + np.sum(Fb * ca, axis=-1)
    return float(v[0]) if np.ndim(points) == 1 else v


def scale(alpha: OneFormField, g: Callable, name: str | None = None) -> OneFormField:
    """``g alpha`` for a scalar field ``g(x, y, z) -> (value, (gx, gy, gz))``."""

    def func(x, y, z):
        (P, Q, R), J = alpha.func(x, y, z)
        gv, grad = g(x, y, z)
        coeffs = (gv * P, gv * Q, gv * R)
        jac = tuple(tuple(grad[j] * c + gv * J[i][j] for j in range(3)) for i, c in enumerate((P, Q, R)))
        return coeffs, jac

    return OneFormField(name or f"scaled {alpha.name}", alpha.z_range, func, dict(alpha.params))


def combine(alpha: OneFormField, beta: OneFormField, t: float, name: str | None = None) -> OneFormField:
    """``alpha + t beta``."""
    if tuple(alpha.z_range) != tuple(beta.z_range):
        raise FormError("forms live on different domains")

    def func(x, y, z):
        Fa, Ja = alpha.func(x, y, z)
        Fb, Jb = beta.func(x, y, z)
        coeffs = tuple(a + t * b for a, b in zip(Fa, Fb))
        jac = tuple(tuple(Ja[i][j] + t * Jb[i][j] for j in range(3)) for i in range(3))
        return coeffs, jac

    return OneFormField(name or f"{alpha.name} + t {beta.name}", alpha.z_range, func, {"t": t})


# --- models ----------------------------------------------------------------------

def _zero(z):
    return np.zeros_like(np.asarray(z, dtype=float))


def _zjac(dP, dQ, dR, z):
    o = _zero(z)
    return ((o, o, dP), (o, o, dQ), (o, o, dR))


def dz_form(z_range=(-1.0, 1.0)) -> OneFormField:
    def func(x, y, z):
        o = _zero(z)
        return (o, o, o + 1.0), _zjac(o, o, o, z)

    return OneFormField("dz", tuple(z_range), func)


def helix_form(z_range=(0.0, 1.0)) -> OneFormField:
    """``cos z dx - sin z dy``; ``alpha ^ d alpha = 1``."""

    def func(x, y, z):
        c, s = np.cos(z), np.sin(z)
        o = _zero(z)
        return (c, -s, o), _zjac(-s, -c, o, z)

    return OneFormField("helix", tuple(z_range), func)


def reeb_model(z_range=(0.05, 1.0)) -> OneFormField:
    """``gamma(r) d phi + (1 - gamma(r)) dr`` with ``r = z``, ``phi = 2 pi y``.

    The core ``r < z0`` is cut out to avoid the polar singularity; there the
    leaves are meridian discs.  ``gamma`` is 1 near the core and 0 at the
    boundary torus, which is therefore a leaf.
    """
    z0, z1 = z_range
    if not 0 < z0 < z1:
        raise FormError("reeb model needs 0 < z0 < z1")
    step = ramp(0.0, z1)

    def func(x, y, z):
        s, ds = step(z)
        gamma, dgamma = 1.0 - s, -ds
        o = _zero(z)
        return (o, 2 * np.pi * gamma, 1.0 - gamma), _zjac(o, 2 * np.pi * dgamma, -dgamma, z)

    return OneFormField("reeb", (float(z0), float(z1)), func)


def _slopes(v, label):
    if len(v) != 2 or not all(math.isfinite(float(c)) for c in v):
        raise FormError(f"{label} must be a pair of finite numbers")
    a, b = float(v[0]), float(v[1])
    if a == 0 and b == 0:
        raise FormError(f"{label} must be non-zero")
    return a, b


def spiral_model(alpha_plus=(1.0, 0.0), alpha_minus=(1.0, 0.0)) -> OneFormField:
    """``rho(-z) alpha_- + rho(z) alpha_+ + (1 - rho(|z|)) dz`` on ``z in [-1, 1]``.

    ``alpha_+-`` are the constant forms ``a dx + b dy`` given as ``(a, b)``;
    ``rho`` vanishes for ``z <= 1/4`` and equals 1 for ``z >= 3/4``.
    """
    ap = _slopes(alpha_plus, "alpha_plus")
    am = _slopes(alpha_minus, "alpha_minus")
    rho = ramp(0.25, 0.75)

    def func(x, y, z):
        rp, drp = rho(z)
        rm, drm = rho(-z)
        # rho(|z|) = rho(z) + rho(-z) since the supports are disjoint
        P = ap[0] * rp + am[0] * rm
        Q = ap[1] * rp + am[1] * rm
        R = 1.0 - rp - rm
        dP = ap[0] * drp - am[0] * drm
        dQ = ap[1] * drp - am[1] * drm
        dR = -drp + drm
        return (P, Q, R), _zjac(dP, dQ, dR, z)

    return OneFormField("spiral", (-1.0, 1.0), func, {"alpha_plus": list(ap), "alpha_minus": list(am)})


def twist_profile(theta_minus: float, theta_plus: float):
    """``f`` rising from ``theta_minus`` to ``theta_plus`` across ``[-1/4, 1/4]``."""
    if not theta_minus < theta_plus:
        raise FormError("twist profile needs theta_minus < theta_plus")
    step = ramp(-0.25, 0.25)
    span = theta_plus - theta_minus

    def f(z):
        s, ds = step(z)
        return theta_minus + span * s, span * ds

    return f


def perturbation_form(theta_minus: float, theta_plus: float) -> OneFormField:
    """``cos f(z) dx - sin f(z) dy`` on ``z in [-1, 1]``."""
    f = twist_profile(theta_minus, theta_plus)

    def func(x, y, z):
        v, dv = f(z)
        c, s = np.cos(v), np.sin(v)
        o = _zero(z)
        return (c, -s, o), _zjac(-s * dv, -c * dv, o, z)

    return OneFormField("twist", (-1.0, 1.0), func, {"theta_minus": theta_minus, "theta_plus": theta_plus})


def deformation_model(t: float, theta_minus: float = -3 * math.pi / 4, theta_plus: float = -math.pi / 4,
                      base: str = "dz", alpha_plus=(1.0, 0.0), alpha_minus=(1.0, 0.0)) -> OneFormField:
    """``alpha_0 + t (cos f dx - sin f dy)`` with ``alpha_0`` either ``dz`` or the spiral.

    Over ``dz`` the contact sign is exactly ``t^2 f'(z)``.  The spiral base
    additionally requires ``-pi < theta_minus < theta_plus < 0``.
    """
    if not math.isfinite(t):
        raise FormError("t must be finite")
    if base == "dz":
        alpha0 = dz_form()
    elif base == "spiral":
        if not -math.pi < theta_minus < theta_plus < 0:
            raise FormError("spiral base needs -pi < theta_minus < theta_plus < 0")
        alpha0 = spiral_model(alpha_plus, alpha_minus)
    else:
        raise FormError(f"unknown deformation base {base!r}")
    form = combine(alpha0, perturbation_form(theta_minus, theta_plus), t, f"deformation/{base}")
    form.params.update({"theta_minus": theta_minus, "theta_plus": theta_plus, "base": base})
    if base != "dz":
        check_nonvanishing(form)
    return form


def normal_form_model(n: int = 1, lam=(1.0, 0.0)) -> OneFormField:
    """``cos(n theta) lambda + sin(n theta) lambda o J`` with ``theta = 2 pi z``.

    ``lambda = lx dx + ly dy`` is constant and ``J`` the quarter turn, so
    ``lambda o J = ly dx - lx dy``; the contact sign is ``2 pi n |lambda|^2``.
    """
    lx, ly = _slopes(lam, "lambda")
    if isinstance(n, bool) or not isinstance(n, int):
        raise FormError("n must be an integer")

    def func(x, y, z):
        th = 2 * np.pi * n * np.asarray(z, dtype=float)
        c, s = np.cos(th), np.sin(th)
        P = c * lx + s * ly
        Q = c * ly - s * lx
        w = 2 * np.pi * n
        o = _zero(z)
        return (P, Q, o), _zjac(w * Q, -w * P, o, z)

    return OneFormField("normal_form", (0.0, 1.0), func, {"n": n, "lambda": [lx, ly]})


def build_model(name: str, **params) -> OneFormField:
    name = name.replace("-", "_")
    builders = {
        "reeb": reeb_model,
        "spiral": spiral_model,
        "deformation": deformation_model,
        "normal_form": normal_form_model,
        "helix": helix_form,
        "dz": dz_form,
    }
    if name not in builders:
        raise FormError(f"unknown model {name!r}")
    try:
        form = builders[name](**params)
    except TypeError as exc:
        raise FormError(str(exc)) from exc
    check_nonvanishing(form)
    return form


def deformation_family(ts, **params):
    return {t: deformation_model(t, **params) for t in ts}


# --- checks ---------------------------------------------------------------------

def check_nonvanishing(alpha: OneFormField, resolution: int = 24, tol: float = 1e-12) -> float:
    F, _ = alpha.evaluate(alpha.grid(resolution))
    m = float(np.min(np.linalg.norm(F, axis=-1)))
    if m <= tol:
        raise FormError(f"{alpha.name}: form vanishes on the grid (min norm {m:.3e})")
    return m


def check_derivatives(alpha: OneFormField, n: int = 1000, h: float = 1e-5, tol: float = 1e-6,
                      seed: int = 0) -> float:
    """Compare the analytic Jacobian with central differences at random points."""
    rng = np.random.default_rng(seed)
    pts = alpha.random_points(n, rng, margin=2 * h)
    _, J = alpha.evaluate(pts)
    err = 0.0
    for j in range(3):
        e = np.zeros(3)
        e[j] = h
        Fp, _ = alpha.evaluate(pts + e)
        Fm, _ = alpha.evaluate(pts - e)
        fd = (Fp - Fm) / (2 * h)
        err = max(err, float(np.max(np.abs(fd - J[:, :, j]) / np.maximum(1.0, np.abs(J[:, :, j])))))
    if err > tol:
        raise FormError(f"{alpha.name}: analytic derivatives disagree with finite differences ({err:.3e})")
    return err


def classify(alpha: OneFormField, resolution: int = 64, tol: float = 1e-9) -> dict:
    """Sign of ``alpha ^ d alpha`` on a grid.

    This only certifies the sign condition at sampled points: a "foliation"
    verdict means every sampled value was below ``tol`` in absolute value.
    """
    if resolution < 16:
        raise FormError("grid resolution must be at least 16")
    pts = alpha.grid(resolution)
    w = wedge_self(alpha, pts)
    if np.all(np.abs(w) < tol):
        verdict = FOLIATION
    elif np.all(w > tol):
        verdict = POSITIVE_CONTACT
    elif np.all(w > -tol):
        verdict = POSITIVE_CONFOLIATION
    else:
        verdict = INDEFINITE
    i, j = int(np.argmin(w)), int(np.argmax(w))
    return {
        "classification": verdict,
        "min": float(w[i]),
        "max": float(w[j]),
        "argmin": [float(v) for v in pts[i]],
        "argmax": [float(v) for v in pts[j]],
        "grid": resolution,
        "tol": tol,
        "exact": False,
    }
