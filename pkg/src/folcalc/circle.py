"""Lifted circle maps, translation numbers and surface group representations.

Elements of the universal cover of Diff+(S^1) are modelled as maps of the
real line with ``F(x + 1) = F(x) + 1``.  The circle is ``R/Z``; PSL(2,R) acts
on it through the boundary chart ``p(x) = tan(pi (x - 1/2))`` of the upper
half-plane, so ``x = 0`` is the point at infinity and ``x = 1/2`` is ``p = 0``.

Composition follows function notation: ``compose(f, g)`` is ``f(g(x))`` and a
:class:`CompositeMap` applies its last entry first.  Commutators are
``[f, g] = f g f^-1 g^-1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

LIFT_TOL = 1e-10
RELATION_TOL = 1e-6


class CircleMapError(ValueError):
    """A map is not a lift of an orientation-preserving circle diffeomorphism."""


class RepresentationError(ValueError):
    """Generators do not satisfy the surface group relation."""


def _is_scalar(x) -> bool:
    return np.ndim(x) == 0


class LiftedCircleMap:
    """Base class.  Subclasses implement ``_eval_scalar`` and ``_eval_array``."""

    kind = "abstract"

    def __call__(self, x):
        if _is_scalar(x):
            return self._eval_scalar(float(x))
        return self._eval_array(np.asarray(x, dtype=float))

    def _eval_scalar(self, x: float) -> float:
        return float(self._eval_array(np.array([x]))[0])

    def _eval_array(self, x: np.ndarray) -> np.ndarray:
        return np.array([self._eval_scalar(v) for v in x.ravel()]).reshape(x.shape)

    def inverse(self) -> "LiftedCircleMap":
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError

    def __matmul__(self, other: "LiftedCircleMap") -> "LiftedCircleMap":
        return compose(self, other)

    def power(self, q: int) -> "LiftedCircleMap":
        if q == 0:
            return IDENTITY
        base = self if q > 0 else self.inverse()
        return compose(*([base] * abs(q)))


@dataclass(frozen=True, eq=False)
class RigidTranslation(LiftedCircleMap):
    """``x -> x + c``; ``c`` is held exactly as a Fraction."""

    c: Fraction = Fraction(0)
    kind = "rigid"

    def __post_init__(self):
        c = self.c
        if isinstance(c, float):
            if not math.isfinite(c):
                raise CircleMapError("translation amount must be finite")
            c = Fraction(c)
        object.__setattr__(self, "c", Fraction(c))
        object.__setattr__(self, "_cf", float(self.c))

    def _eval_scalar(self, x):
        return x + self._cf

    def _eval_array(self, x):
        return x + self._cf

    def inverse(self):
        return RigidTranslation(-self.c)

    def to_json(self):
        cf = float(self.c)
        if Fraction(cf) == self.c:
            return {"kind": "rigid", "c": cf}
        return {"kind": "rigid", "c": {"num": self.c.numerator, "den": self.c.denominator}}


IDENTITY = RigidTranslation(Fraction(0))


@dataclass(frozen=True, eq=False)
class MobiusLift(LiftedCircleMap):
    """Lift of a Moebius transformation ``p -> (a p + b)/(c p + d)``.

    The matrix is scaled to determinant one (it must have positive
    determinant; matrices already within 1e-12 of that are kept verbatim so
    JSON round trips are exact).  ``winding = 0`` is the canonical lift, the
    one with ``F(0)`` in ``[0, 1)``; other windings add that integer.

    Evaluation uses the Iwasawa decomposition ``M' = K(phi) B`` of the
    matrix acting on angles (``B`` upper triangular with positive diagonal).
    ``B`` preserves the upper half of the plane of directions, so its lift is
    read off from ``atan2`` without any branch choice.
    """

    matrix: tuple = ((1.0, 0.0), (0.0, 1.0))
    winding: int = 0
    kind = "mobius"

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        if m.shape != (2, 2) or not np.all(np.isfinite(m)):
            raise CircleMapError("mobius matrix must be a finite 2x2 array")
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if not det > 0:
            raise CircleMapError("mobius matrix must have positive determinant")
        if abs(det - 1.0) > 1e-12:
            m = m / math.sqrt(det)
        object.__setattr__(self, "matrix", tuple(tuple(float(v) for v in row) for row in m))
        object.__setattr__(self, "winding", int(self.winding))
        a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
        # conjugating by diag(-1, 1) turns the chart direction (p, 1) into the
        # unit vector at angle pi x
        a2, b2, c2, d2 = a, -b, -c, d
        r11 = math.hypot(a2, c2)
        phi = math.atan2(c2, a2)
        cs, sn = a2 / r11, c2 / r11
        lam = r11
        mu = cs * b2 + sn * d2
        object.__setattr__(self, "_phi", phi)
        object.__setattr__(self, "_lam", lam)
        object.__setattr__(self, "_mu", mu)
        object.__setattr__(self, "_shift", self.winding - math.floor(phi / math.pi))

    @property
    def trace(self) -> float:
        return self.matrix[0][0] + self.matrix[1][1]

    def np_matrix(self) -> np.ndarray:
        return np.array(self.matrix)

    def _eval_scalar(self, x):
        k = math.floor(x)
        t = math.pi * (x - k)
        ang = math.atan2(math.sin(t) / self._lam, self._lam * math.cos(t) + self._mu * math.sin(t))
        return k + (self._phi + ang) / math.pi + self._shift

    def _eval_array(self, x):
        k = np.floor(x)
        t = np.pi * (x - k)
        ang = np.arctan2(np.sin(t) / self._lam, self._lam * np.cos(t) + self._mu * np.sin(t))
        return k + (self._phi + ang) / np.pi + self._shift

    def inverse(self):
        m = self.np_matrix()
        inv = ((m[1, 1], -m[0, 1]), (-m[1, 0], m[0, 0]))
        g = MobiusLift(inv, 0)
        offset = g(self(0.0))
        return MobiusLift(inv, -int(round(offset)))

    def to_json(self):
        return {"kind": "mobius", "m": [list(r) for r in self.matrix], "winding": self.winding}


@dataclass(frozen=True, eq=False)
class SmoothClosure(LiftedCircleMap):
    """``x -> x + d(x)`` with ``d`` a finite Fourier series.

    ``d(x) = shift + sum_k sin_coeffs[k-1] sin(2 pi k x) + cos_coeffs[k-1] cos(2 pi k x)``.
    Construction rejects series with ``1 + d'(x) <= 0`` somewhere.
    """

    sin_coeffs: tuple = ()
    cos_coeffs: tuple = ()
    shift: float = 0.0
    kind = "smooth"

    def __post_init__(self):
        s = tuple(float(v) for v in self.sin_coeffs)
        c = tuple(float(v) for v in self.cos_coeffs)
        if not all(math.isfinite(v) for v in s + c + (float(self.shift),)):
            raise CircleMapError("Fourier coefficients must be finite")
        n = max(len(s), len(c))
        s += (0.0,) * (n - len(s))
        c += (0.0,) * (n - len(c))
        object.__setattr__(self, "sin_coeffs", s)
        object.__setattr__(self, "cos_coeffs", c)
        object.__setattr__(self, "shift", float(self.shift))
        ks = np.arange(1, n + 1)
        object.__setattr__(self, "_k", ks)
        object.__setattr__(self, "_s", np.array(s))
        object.__setattr__(self, "_c", np.array(c))
        object.__setattr__(self, "_amp", abs(self.shift) + float(np.sum(np.abs(s) + np.abs(c))))
        if n:
            self._check_monotone()

    def _check_monotone(self):
        n = len(self._k)
        grid = np.arange(4096 * n) / (4096 * n)
        slope = 1.0 + self.derivative_displacement(grid)
        # min over [0,1] >= grid min - (h/2) sup|d''|
        d2 = float(np.sum((2 * np.pi * self._k) ** 2 * (np.abs(self._s) + np.abs(self._c))))
        if slope.min() - d2 / (2 * 4096 * n) <= 0:
            raise CircleMapError("Fourier displacement violates 1 + d' > 0")

    def displacement(self, x):
        x = np.asarray(x, dtype=float)
        ang = 2 * np.pi * np.multiply.outer(x, self._k)
        return self.shift + np.sin(ang) @ self._s + np.cos(ang) @ self._c

    def derivative_displacement(self, x):
        x = np.asarray(x, dtype=float)
        ang = 2 * np.pi * np.multiply.outer(x, self._k)
        w = 2 * np.pi * self._k
        return np.cos(ang) @ (w * self._s) - np.sin(ang) @ (w * self._c)

    def _d_scalar(self, x):
        out = self.shift
        for k, (a, b) in enumerate(zip(self.sin_coeffs, self.cos_coeffs), start=1):
            t = 2 * math.pi * k * x
            out += a * math.sin(t) + b * math.cos(t)
        return out

    def _dprime_scalar(self, x):
        out = 0.0
        for k, (a, b) in enumerate(zip(self.sin_coeffs, self.cos_coeffs), start=1):
            w = 2 * math.pi * k
            out += w * (a * math.cos(w * x) - b * math.sin(w * x))
        return out

    def _eval_scalar(self, x):
        return x + self._d_scalar(x)

    def _eval_array(self, x):
        return x + self.displacement(x)

    def solve(self, y):
        """Inverse map ``y -> x`` with ``x + d(x) = y`` (safeguarded Newton)."""
        if _is_scalar(y):
            return self._solve_scalar(float(y))
        y = np.asarray(y, dtype=float)
        lo = y - self._amp - 1e-12
        hi = y + self._amp + 1e-12
        x = np.clip(y - self.displacement(y), lo, hi)
        for _ in range(100):
            f = x + self.displacement(x) - y
            lo = np.where(f < 0, x, lo)
            hi = np.where(f > 0, x, hi)
            xn = x - f / (1.0 + self.derivative_displacement(x))
            bad = (xn <= lo) | (xn >= hi)
            xn = np.where(bad, 0.5 * (lo + hi), xn)
            done = np.max(np.abs(xn - x), initial=0.0) <= 1e-15 * max(1.0, float(np.max(np.abs(x), initial=0.0)))
            x = xn
            if done:
                break
        return x

    def _solve_scalar(self, y):
        lo, hi = y - self._amp - 1e-12, y + self._amp + 1e-12
        x = min(max(y - self._d_scalar(y), lo), hi)
        for _ in range(100):
            f = x + self._d_scalar(x) - y
            if f == 0:
                return x
            if f < 0:
                lo = x
            else:
                hi = x
            xn = x - f / (1.0 + self._dprime_scalar(x))
            if not lo < xn < hi:
                xn = 0.5 * (lo + hi)
            if abs(xn - x) <= 1e-15 * max(1.0, abs(x)):
                return xn
            x = xn
        return x

    def inverse(self):
        return InverseMap(self)

    def to_json(self):
        out = {"kind": "smooth", "fourier_sin": list(self.sin_coeffs), "fourier_cos": list(self.cos_coeffs)}
        if self.shift:
            out["shift"] = self.shift
        return out


@dataclass(frozen=True, eq=False)
class InverseMap(LiftedCircleMap):
    """Numerical inverse of a :class:`SmoothClosure`."""

    base: SmoothClosure = None
    kind = "inverse"

    def _eval_scalar(self, x):
        return self.base._solve_scalar(x)

    def _eval_array(self, x):
        return self.base.solve(x)

    def inverse(self):
        return self.base

    def to_json(self):
        return {"kind": "inverse", "map": self.base.to_json()}


@dataclass(frozen=True, eq=False)
class CompositeMap(LiftedCircleMap):
    """``maps[0] o maps[1] o ... o maps[-1]``."""

    maps: tuple = ()
    kind = "composite"

    def __post_init__(self):
        object.__setattr__(self, "maps", tuple(self.maps))

    def _eval_scalar(self, x):
        for f in reversed(self.maps):
            x = f._eval_scalar(x)
        return x

    def _eval_array(self, x):
        for f in reversed(self.maps):
            x = f._eval_array(x)
        return x

    def inverse(self):
        return CompositeMap(tuple(f.inverse() for f in reversed(self.maps)))

    def to_json(self):
        return {"kind": "composite", "maps": [f.to_json() for f in self.maps]}


@dataclass(frozen=True, eq=False)
class CoverLift(LiftedCircleMap):
    """``x -> F(n x)/n``; commutes with ``x -> x + 1/n``."""

    base: LiftedCircleMap = None
    n: int = 1
    kind = "cover"

    def _eval_scalar(self, x):
        return self.base._eval_scalar(self.n * x) / self.n

    def _eval_array(self, x):
        return self.base._eval_array(self.n * x) / self.n

    def inverse(self):
        return CoverLift(self.base.inverse(), self.n)

    def to_json(self):
        return {"kind": "cover", "n": self.n, "map": self.base.to_json()}


@dataclass(frozen=True, eq=False)
class CallableLift(LiftedCircleMap):
    """Wrap an arbitrary vectorized function; no JSON form, not validated on build."""

    func: object = None
    inverse_func: object = None
    kind = "callable"

    def _eval_array(self, x):
        return np.asarray(self.func(x), dtype=float)

    def _eval_scalar(self, x):
        return float(self.func(x))

    def inverse(self):
        if self.inverse_func is None:
            raise CircleMapError("callable lift has no inverse")
        return CallableLift(self.inverse_func, self.func)


def _mutually_inverse(f, g) -> bool:
    return ((isinstance(f, InverseMap) and f.base is g)
            or (isinstance(g, InverseMap) and g.base is f))


def compose(*maps: LiftedCircleMap) -> LiftedCircleMap:
    """Function composition; consecutive rigid translations are merged exactly."""
    flat = []
    for f in maps:
        flat.extend(f.maps if isinstance(f, CompositeMap) else [f])
    merged = []
    for f in flat:
        if isinstance(f, RigidTranslation) and merged and isinstance(merged[-1], RigidTranslation):
            merged[-1] = RigidTranslation(merged[-1].c + f.c)
        elif merged and _mutually_inverse(merged[-1], f):
            merged.pop()
        else:
            merged.append(f)
    merged = [f for f in merged if not (isinstance(f, RigidTranslation) and f.c == 0)] or [IDENTITY]
    if len(merged) == 1:
        return merged[0]
    return CompositeMap(tuple(merged))


def commutator(f: LiftedCircleMap, g: LiftedCircleMap) -> LiftedCircleMap:
    return compose(f, g, f.inverse(), g.inverse())


def conjugate(h: LiftedCircleMap, f: LiftedCircleMap) -> LiftedCircleMap:
    """``h f h^-1``."""
    return compose(h, f, h.inverse())


def map_from_json(data) -> LiftedCircleMap:
    if not isinstance(data, dict) or "kind" not in data:
        raise TypeError("circle map must be a JSON object with a 'kind'")
    kind = data["kind"]
    allowed = {
        "rigid": {"kind", "c"},
        "mobius": {"kind", "m", "winding"},
        "smooth": {"kind", "fourier_sin", "fourier_cos", "shift"},
        "composite": {"kind", "maps"},
        "cover": {"kind", "n", "map"},
        "inverse": {"kind", "map"},
    }
    if kind not in allowed:
        raise TypeError(f"unknown circle map kind {kind!r}")
    extra = set(data) - allowed[kind]
    if extra:
        raise TypeError(f"unknown fields for {kind} map: {sorted(extra)}")
    if kind == "rigid":
        c = data["c"]
        if isinstance(c, dict):
            return RigidTranslation(Fraction(int(c["num"]), int(c["den"])))
        if isinstance(c, bool) or not isinstance(c, (int, float)):
            raise TypeError("rigid translation amount must be a number")
        return RigidTranslation(Fraction(c))
    if kind == "mobius":
        m = data["m"]
        if not (isinstance(m, list) and len(m) == 2 and all(isinstance(r, list) and len(r) == 2 for r in m)):
            raise TypeError("mobius 'm' must be a 2x2 nested list")
        w = data.get("winding", 0)
        if isinstance(w, bool) or not isinstance(w, int):
            raise TypeError("winding must be an integer")
        return MobiusLift(tuple(tuple(r) for r in m), w)
    if kind == "smooth":
        return SmoothClosure(tuple(data.get("fourier_sin", [])), tuple(data.get("fourier_cos", [])),
                             data.get("shift", 0.0))
    if kind == "composite":
        return CompositeMap(tuple(map_from_json(m) for m in data["maps"]))
    if kind == "cover":
        n = data["n"]
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise TypeError("cover degree must be a positive integer")
        return CoverLift(map_from_json(data["map"]), n)
    base = map_from_json(data["map"])
    if not isinstance(base, SmoothClosure):
        return base.inverse()
    return InverseMap(base)


def check_lift(f: LiftedCircleMap, samples: int = 1000, tol: float = LIFT_TOL) -> float:
    """Check periodicity and monotonicity on a grid; return the periodicity defect."""
    x = np.linspace(0.0, 1.0, samples, endpoint=False)
    fx = f(x)
    fx1 = f(x + 1.0)
    if not np.all(np.isfinite(fx)) or not np.all(np.isfinite(fx1)):
        raise CircleMapError("map produced non-finite values")
    defect = float(np.max(np.abs(fx1 - fx - 1.0)))
    if defect > tol:
        raise CircleMapError(f"map is not 1-periodic: defect {defect:.3e}")
    seq = np.append(fx, fx1[0])
    if np.any(np.diff(seq) <= 0):
        raise CircleMapError("map is not strictly increasing")
    return defect


@dataclass(frozen=True)
class Estimate:
    estimate: float
    error_bound: float
    exact: bool = False

    def to_json(self):
        return {"estimate": float(self.estimate), "error_bound": float(self.error_bound),
                "exact": self.exact}


def translation_number(f: LiftedCircleMap, n_iter: int = 10_000, iterate: bool = False) -> Estimate:
    """``F^N(0)/N`` with the deterministic bound ``1/N``.

    Rigid translations return their exact amount unless ``iterate`` is set.
    """
    if isinstance(n_iter, bool) or not isinstance(n_iter, int) or n_iter < 1:
        raise ValueError("iteration count must be a positive integer")
    if isinstance(f, RigidTranslation) and not iterate:
        return Estimate(f.c, 0.0, True)
    check_lift(f)
    x = 0.0
    step = f._eval_scalar
    for _ in range(n_iter):
        x = step(x)
    return Estimate(x / n_iter, 1.0 / n_iter, False)


def rotation_number(f: LiftedCircleMap, n_iter: int = 10_000, iterate: bool = False) -> Estimate:
    """Translation number reduced to ``[0, 1)``."""
    tr = translation_number(f, n_iter, iterate)
    if tr.exact:
        return Estimate(tr.estimate % 1, 0.0, True)
    return Estimate(float(tr.estimate) % 1.0, tr.error_bound, False)


def circular_distance(a: float, b: float) -> float:
    d = (float(a) - float(b)) % 1.0
    return min(d, 1.0 - d)


def fiberwise_cover_lift(f: LiftedCircleMap, n: int) -> LiftedCircleMap:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError("cover degree must be a positive integer")
    if n == 1:
        return f
    return CoverLift(f, n)


def matsumoto_defect(f1: LiftedCircleMap, f2: LiftedCircleMap, n_iter: int = 10_000) -> Estimate:
    """``tr(f1 f2) - tr(f1) - tr(f2)`` with error bound ``3/N``."""
    t12 = translation_number(compose(f1, f2), n_iter)
    t1 = translation_number(f1, n_iter)
    t2 = translation_number(f2, n_iter)
    value = t12.estimate - t1.estimate - t2.estimate
    exact = t12.exact and t1.exact and t2.exact
    bound = t12.error_bound + t1.error_bound + t2.error_bound
    return Estimate(value, 0.0 if exact else bound, exact)


def random_smooth_map(rng: np.random.Generator, modes: int = 3, max_slope: float = 0.5,
                      shift: bool = False) -> SmoothClosure:
    """A random Fourier displacement with ``sup|d'| <= max_slope < 1``."""
    if not 0 < max_slope < 1:
        raise ValueError("max_slope must lie in (0, 1)")
    a = rng.normal(size=modes)
    b = rng.normal(size=modes)
    k = np.arange(1, modes + 1)
    scale = max_slope / float(np.sum(2 * np.pi * k * (np.abs(a) + np.abs(b))))
    c = float(rng.uniform(-0.5, 0.5)) if shift else 0.0
    return SmoothClosure(tuple(a * scale), tuple(b * scale), c)


# --- surface group representations -------------------------------------------

def relator(generators: Sequence[LiftedCircleMap]) -> LiftedCircleMap:
    """``[a_1, b_1] ... [a_g, b_g]``."""
    if len(generators) % 2:
        raise RepresentationError("need an even number of generators")
    parts = [commutator(generators[i], generators[i + 1]) for i in range(0, len(generators), 2)]
    return compose(*parts)


def _relator_displacement(generators, samples: int) -> np.ndarray:
    x = np.linspace(0.0, 1.0, samples, endpoint=False)
    return relator(generators)(x) - x


@dataclass(frozen=True, eq=False)
class SurfaceGroupRep:
    genus: int
    generators: tuple
    relation_residual: float = field(default=float("nan"))

    @classmethod
    def build(cls, generators: Sequence[LiftedCircleMap], samples: int = 256) -> "SurfaceGroupRep":
        generators = tuple(generators)
        if len(generators) < 4 or len(generators) % 2:
            raise RepresentationError("a surface group of genus g >= 2 needs 2g generators")
        disp = _relator_displacement(generators, samples)
        residual = float(np.max(np.abs(disp - np.round(np.median(disp)))))
        return cls(len(generators) // 2, generators, residual)

    def conjugate(self, h: LiftedCircleMap) -> "SurfaceGroupRep":
        return SurfaceGroupRep.build([conjugate(h, f) for f in self.generators])

    def word(self, word) -> LiftedCircleMap:
        """Evaluate a word such as ``"a1 b1 A1 B1"`` (capitals are inverses)."""
        return compose(*[self._letter(tok) for tok in parse_word(word, self.genus)]) if word else IDENTITY

    def _letter(self, tok):
        idx, inv = tok
        f = self.generators[idx]
        return f.inverse() if inv else f

    def to_json(self):
        return {"genus": self.genus, "generators": [f.to_json() for f in self.generators],
                "relation_residual": self.relation_residual}

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict) or "generators" not in data:
            raise TypeError("representation must be an object with 'generators'")
        extra = set(data) - {"genus", "generators", "relation_residual"}
        if extra:
            raise TypeError(f"unknown fields in representation: {sorted(extra)}")
        rep = cls.build([map_from_json(m) for m in data["generators"]])
        if "genus" in data and data["genus"] != rep.genus:
            raise TypeError("genus does not match the number of generators")
        return rep


def parse_word(word, genus: int):
    """Tokens ``a<i>``/``b<i>`` (``i`` from 1), capital letter or ``^-1`` for inverses."""
    tokens = word.split() if isinstance(word, str) else list(word)
    out = []
    for tok in tokens:
        inv = False
        if tok.endswith("^-1"):
            tok, inv = tok[:-3], True
        letter, num = tok[:1], tok[1:]
        if letter in "AB" and letter:
            inv = not inv
        letter = letter.lower()
        if letter not in ("a", "b") or not num.isdigit() or not 1 <= int(num) <= genus:
            raise ValueError(f"bad word token {tok!r}")
        idx = 2 * (int(num) - 1) + (0 if letter == "a" else 1)
        out.append((idx, inv))
    return out


def default_words(genus: int) -> list[str]:
    words = []
    for i in range(1, genus + 1):
        words += [f"a{i} b{i}", f"a{i} B{i}", f"a{i} b{i} A{i} B{i}", f"b{i} a{i} B{i} A{i}"]
    words.append("a1 a2")
    words.append("a1 b2 A1 B2")
    return words


def _rotation_about_i(angle: float) -> np.ndarray:
    c, s = math.cos(angle / 2), math.sin(angle / 2)
    return np.array([[c, s], [-s, c]])


def _axis_translation(length: float) -> np.ndarray:
    return np.diag([math.exp(length / 2), math.exp(-length / 2)])


def fuchsian_generators(g: int) -> SurfaceGroupRep:
    """Side pairings of the regular hyperbolic 4g-gon with vertex angles 2 pi/4g.

    The polygon is centred at ``i`` with edge midpoints at angles ``2 pi k/4g``
    and boundary word ``a1 b1 a1^-1 b1^-1 ...``.  The pairing taking edge
    ``i`` to edge ``j`` is ``K(phi_j) T(2d) K(pi - phi_i)`` with ``K`` a rotation
    about ``i``, ``T`` translation along the imaginary axis and
    ``cosh d = cot(pi/4g)`` the inradius.  ``a_j`` sends edge ``4j+2`` to edge
    ``4j`` and ``b_j`` sends edge ``4j+1`` to edge ``4j+3``.
    """
    if isinstance(g, bool) or not isinstance(g, int) or g < 2:
        raise ValueError("genus must be an integer >= 2")
    n = 4 * g
    d = math.acosh(1.0 / math.tan(math.pi / n))
    phis = [2 * math.pi * k / n for k in range(n)]

    def pairing(i, j):
        return _rotation_about_i(phis[j]) @ _axis_translation(2 * d) @ _rotation_about_i(math.pi - phis[i])

    gens = []
    for j in range(g):
        s = 4 * j
        gens.append(MobiusLift(tuple(map(tuple, pairing(s + 2, s)))))
        gens.append(MobiusLift(tuple(map(tuple, pairing(s + 1, s + 3)))))
    return SurfaceGroupRep.build(gens)


def euler_class(rep: SurfaceGroupRep, samples: int = 256, spread_tol: float = RELATION_TOL,
                integer_tol: float = 1e-3) -> int:
    """The integer ``e`` with ``[a_1, b_1] ... [a_g, b_g] = x + e``."""
    if not rep.relation_residual < RELATION_TOL:
        raise RepresentationError(
            f"not a representation: relation residual {rep.relation_residual:.3e}")
    disp = _relator_displacement(rep.generators, samples)
    spread = float(disp.max() - disp.min())
    if spread > spread_tol:
        raise RepresentationError(f"relator is not a translation (spread {spread:.3e})")
    mean = float(disp.mean())
    e = int(round(mean))
    if abs(mean - e) > integer_tol:
        raise RepresentationError(f"relator translates by non-integer amount {mean:.6f}")
    return e


@dataclass
class StabilityReport:
    labels: list
    rotation: list
    rotation_conjugated: list
    discrepancies: list
    max_discrepancy: float
    tolerance: float
    n_iter: int

    @property
    def passed(self) -> bool:
        return self.max_discrepancy <= self.tolerance

    def to_json(self):
        return {
            "entries": [
                {"word": w, "rotation": r, "rotation_conjugated": rc, "discrepancy": d}
                for w, r, rc, d in zip(self.labels, self.rotation, self.rotation_conjugated, self.discrepancies)
            ],
            "max_discrepancy": self.max_discrepancy,
            "error_bound": self.tolerance,
            "n_iter": self.n_iter,
            "status": "PASS" if self.passed else "FAIL",
            "exact": False,
        }


def stability_experiment(rep: SurfaceGroupRep, h: LiftedCircleMap, n_iter: int = 10_000,
                         words: Sequence[str] | None = None) -> StabilityReport:
    """Rotation numbers of generators and words before and after conjugating by ``h``."""
    if not rep.relation_residual < RELATION_TOL:
        raise RepresentationError("not a representation")
    check_lift(h)
    labels = [f"{'ab'[i % 2]}{i // 2 + 1}" for i in range(2 * rep.genus)]
    labels += list(words if words is not None else default_words(rep.genus))
    rot, rot_c, disc = [], [], []
    for w in labels:
        f = rep.word(w)
        r0 = rotation_number(f, n_iter, iterate=True).estimate
        r1 = rotation_number(conjugate(h, f), n_iter, iterate=True).estimate
        rot.append(float(r0))
        rot_c.append(float(r1))
        disc.append(circular_distance(r0, r1))
    return StabilityReport(labels, rot, rot_c, disc, max(disc), 2.0 / n_iter, n_iter)
