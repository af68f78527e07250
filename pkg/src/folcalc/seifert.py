"""Seifert invariants and exact rational arithmetic.

A closed orientable Seifert fibered space over an orientable base is encoded
by the base genus ``g``, an integer section class ``b`` and a list of
exceptional-fiber slopes ``beta_i/alpha_i``.  All arithmetic is exact: slopes
are :class:`fractions.Fraction` values, which are kept in lowest terms with a
positive denominator.

Conventions: normalized invariants have ``0 < s_1 <= ... <= s_r < 1`` and the
rational Euler number is ``e(M) = -(b + sum(s_i))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

ExactRational = Fraction

SPHERICAL = "spherical"
EUCLIDEAN = "euclidean"
HYPERBOLIC = "hyperbolic"


class SeifertError(ValueError):
    """Raised when invariants violate the precondition of an operation."""


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions, ``"p/q"`` strings and (num, den) pairs.

    Floats are rejected: they would silently leak rounding into exact code.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, (tuple, list)) and len(value) == 2:
        num, den = value
        if not isinstance(num, int) or not isinstance(den, int):
            raise TypeError(f"non-integer fraction parts: {value!r}")
        return Fraction(num, den)
    if isinstance(value, dict) and set(value) == {"num", "den"}:
        return as_rational((value["num"], value["den"]))
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def frac_floor(q: Fraction) -> int:
    return q.numerator // q.denominator


def frac_ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def frac_part(q: Fraction) -> Fraction:
    return q - frac_floor(q)


@dataclass(frozen=True)
class SeifertInvariants:
    """Seifert invariants ``(g, b, s_1, ..., s_r)``.

    Unnormalized tuples (arbitrary rational slopes) are allowed and are what
    fiberwise covers produce; ``normalized`` records whether the normal-form
    invariant holds and is checked on construction.

    Equality is equality of tuples.  Two normalized tuples that differ
    describe different manifolds except for a short list of small Seifert
    spaces with several fibrations, which is not handled here.
    """

    g: int
    b: int
    slopes: tuple[Fraction, ...] = ()
    normalized: bool = False

    def __post_init__(self):
        if isinstance(self.g, bool) or not isinstance(self.g, int) or self.g < 0:
            raise SeifertError(f"genus must be a non-negative integer, got {self.g!r}")
        if isinstance(self.b, bool) or not isinstance(self.b, int):
            raise SeifertError(f"b must be an integer, got {self.b!r}")
        object.__setattr__(self, "slopes", tuple(as_rational(s) for s in self.slopes))
        if self.normalized and not _is_normal_form(self.slopes):
            raise SeifertError(
                "slopes flagged normalized must lie in (0, 1) in non-decreasing order"
            )

    @classmethod
    def of(cls, g: int, b: int, slopes: Iterable = (), normalized: bool | None = None):
        """Build invariants, inferring the ``normalized`` flag when not given."""
        slopes = tuple(as_rational(s) for s in slopes)
        if normalized is None:
            normalized = _is_normal_form(slopes)
        return cls(g, b, slopes, normalized)

    @property
    def r(self) -> int:
        return len(self.slopes)

    @property
    def alphas(self) -> tuple[int, ...]:
        return tuple(s.denominator for s in self.slopes)

    @property
    def betas(self) -> tuple[int, ...]:
        return tuple(s.numerator for s in self.slopes)

    def slope_sum(self) -> Fraction:
        return sum(self.slopes, Fraction(0))

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "b": self.b,
            "slopes": [{"num": s.numerator, "den": s.denominator} for s in self.slopes],
            "normalized": self.normalized,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SeifertInvariants":
        if not isinstance(data, dict):
            raise TypeError("Seifert invariants must be a JSON object")
        unknown = set(data) - {"g", "b", "slopes", "normalized"}
        if unknown:
            raise TypeError(f"unknown fields in Seifert invariants: {sorted(unknown)}")
        slopes = []
        for item in data.get("slopes", []):
            if not isinstance(item, dict) or set(item) != {"num", "den"}:
                raise TypeError(f"slope must be {{'num': int, 'den': int}}, got {item!r}")
            if item["den"] == 0:
                raise TypeError("slope denominator must be non-zero")
            slopes.append(as_rational(item))
        normalized = data.get("normalized")
        if normalized is not None and not isinstance(normalized, bool):
            raise TypeError("'normalized' must be a boolean")
        return cls.of(data["g"], data["b"], slopes, normalized)

    def __str__(self):
        inner = ", ".join(str(s) for s in self.slopes)
        return f"({self.g}, {self.b}; {inner})" if inner else f"({self.g}, {self.b})"


def _is_normal_form(slopes: Sequence[Fraction]) -> bool:
    if any(not (0 < s < 1) for s in slopes):
        return False
    return all(slopes[i] <= slopes[i + 1] for i in range(len(slopes) - 1))


def require_normalized(inv: SeifertInvariants) -> None:
    if not inv.normalized:
        raise SeifertError("operation requires normalized Seifert invariants")


def normalize(raw: SeifertInvariants) -> SeifertInvariants:
    """Return the normal form of ``raw``.

    Integer parts of slopes are moved into ``b``; slopes that become zero are
    dropped; the rest are sorted.  ``b + sum(slopes)`` is unchanged.
    """
    b = raw.b
    kept = []
    for s in raw.slopes:
        n = frac_floor(s)
        b += n
        if s != n:
            kept.append(s - n)
    return SeifertInvariants(raw.g, b, tuple(sorted(kept)), True)


def reverse_orientation(inv: SeifertInvariants) -> SeifertInvariants:
    """Normalized invariants of the same manifold with the opposite orientation."""
    require_normalized(inv)
    flipped = sorted(1 - s for s in inv.slopes)
    return SeifertInvariants(inv.g, -inv.b - inv.r, tuple(flipped), True)


def euler_number(inv: SeifertInvariants) -> Fraction:
    return -(inv.b + inv.slope_sum())


def orbifold_euler_characteristic(inv: SeifertInvariants) -> Fraction:
    chi = Fraction(2 - 2 * inv.g)
    for alpha in inv.alphas:
        chi -= 1 - Fraction(1, alpha)
    return chi


def base_orbifold_type(inv: SeifertInvariants) -> str:
    require_normalized(inv)
    chi = orbifold_euler_characteristic(inv)
    if chi > 0:
        return SPHERICAL
    if chi == 0:
        return EUCLIDEAN
    return HYPERBOLIC


def normalized_slopes(max_den: int) -> list[Fraction]:
    """All fractions ``p/q`` in (0, 1) with ``2 <= q <= max_den``, ascending."""
    out = {Fraction(p, q) for q in range(2, max_den + 1) for p in range(1, q)
           if math.gcd(p, q) == 1}
    return sorted(out)
