"""Fiberwise branched covers, twisting-number candidates and the Brieskorn family.

The family ``-Sigma(2, 3, 6k-1)`` has normalized invariants
``(0, -2, 1/2, 2/3, (5k-1)/(6k-1))``.  Its ceiling equation has solutions
exactly ``n = 6l - 1`` for ``1 <= l <= k - 1``, and the ``(6l-1)``-fold
quotient normalizes to ``(0, -1, 1/2, 1/3, (k-l)/(6k-1))``; the report below
recomputes both facts by brute force and refuses to return if either fails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .seifert import (
    SeifertError,
    SeifertInvariants,
    frac_ceil,
    normalize,
    require_normalized,
)


class BrieskornConsistencyError(RuntimeError):
    """A recomputed Brieskorn-family fact did not match its closed form."""

    def __init__(self, k, what, expected, got):
        self.k, self.what, self.expected, self.got = k, what, expected, got
        super().__init__(f"k={k}: {what} expected {expected}, got {got}")

    def to_json(self):
        return {"error": "brieskorn consistency failure", "k": self.k, "what": self.what,
                "expected": str(self.expected), "got": str(self.got)}


@dataclass(frozen=True)
class BranchedCoverResult:
    quotient: SeifertInvariants
    branch_orders: tuple[int, ...]
    degree: int

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "quotient": self.quotient.to_json(),
            "quotient_normalized": normalize(self.quotient).to_json(),
            "branch_orders": list(self.branch_orders),
            "exact": True,
        }


def fiberwise_branched_cover(inv: SeifertInvariants, n: int) -> BranchedCoverResult:
    """Quotient by the n-th roots of unity in the circle action.

    The quotient has unnormalized invariants ``(g, n b, n s_1, ..., n s_r)``;
    the branching order over the i-th exceptional fiber is ``gcd(n, alpha_i)``.
    Unnormalized input is accepted (this makes covers composable); the
    branching orders then refer to the slopes as given.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise SeifertError(f"cover degree must be a positive integer, got {n!r}")
    quotient = SeifertInvariants.of(inv.g, n * inv.b, [n * s for s in inv.slopes])
    orders = tuple(math.gcd(n, alpha) for alpha in inv.alphas)
    return BranchedCoverResult(quotient, orders, n)


def ceiling_equation_lhs(inv: SeifertInvariants, n: int) -> int:
    return n * inv.b + sum(frac_ceil(n * s) for s in inv.slopes)


def twisting_candidates(inv: SeifertInvariants, n_max: int) -> list[int]:
    """All ``1 <= n <= n_max`` with ``n b + sum ceil(n s_i) = 2 - 2g``.

    Only a necessary condition for twisting number ``-n`` (``n > 1``); never
    an existence certificate.
    """
    require_normalized(inv)
    target = 2 - 2 * inv.g
    return [n for n in range(1, n_max + 1) if ceiling_equation_lhs(inv, n) == target]


def brieskorn_invariants(k: int) -> SeifertInvariants:
    return SeifertInvariants.of(0, -2, [Fraction(1, 2), Fraction(2, 3), Fraction(5 * k - 1, 6 * k - 1)])


def brieskorn_quotient(k: int, l: int) -> SeifertInvariants:
    """Normalized ``(0, -1, 1/2, 1/3, (k-l)/(6k-1))``, slopes sorted."""
    raw = SeifertInvariants.of(0, -1, [Fraction(1, 2), Fraction(1, 3), Fraction(k - l, 6 * k - 1)],
                               normalized=False)
    return normalize(raw)


@dataclass
class BrieskornReport:
    k: int
    invariants: SeifertInvariants
    vertical_twisting: int | None
    candidates: list[int]
    covers: dict[int, SeifertInvariants]
    coprime_candidates: list[int]
    class_lower_bound: int
    heuristic_bound: int
    n_max: int
    necessary_only: bool = field(default=True)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "invariants": self.invariants.to_json(),
            "vertical_twisting": self.vertical_twisting,
            "n_max": self.n_max,
            "candidates": self.candidates,
            "necessary_only": self.necessary_only,
            "covers": {str(n): c.to_json() for n, c in self.covers.items()},
            "coprime_candidates": self.coprime_candidates,
            "coprime_count": len(self.coprime_candidates),
            "class_lower_bound": self.class_lower_bound,
            "heuristic_bound": self.heuristic_bound,
            # relies on an external contact classification, reported only
            "external_classification_bound": max(self.k - 1, 0),
            "exact": True,
        }


def brieskorn_report(k: int, n_max: int | None = None) -> BrieskornReport:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise SeifertError(f"k must be a positive integer, got {k!r}")
    if n_max is None:
        n_max = 12 * k
    if n_max < 6 * k:
        raise SeifertError(f"n_max must be at least 6k = {6 * k}")
    inv = brieskorn_invariants(k)
    candidates = twisting_candidates(inv, n_max)
    expected = [6 * l - 1 for l in range(1, k)]
    if candidates != expected:
        raise BrieskornConsistencyError(k, "ceiling-equation solutions", expected, candidates)

    covers = {}
    for l, n in enumerate(candidates, start=1):
        quotient = normalize(fiberwise_branched_cover(inv, n).quotient)
        want = brieskorn_quotient(k, l)
        if quotient != want:
            raise BrieskornConsistencyError(k, f"normalized {n}-fold quotient", want, quotient)
        covers[n] = quotient

    vertical = -(6 * k - 7) if k > 1 else None
    coprime = [n for n in candidates if math.gcd(n, 6 * k - 7) == 1]
    return BrieskornReport(
        k=k,
        invariants=inv,
        vertical_twisting=vertical,
        candidates=candidates,
        covers=covers,
        coprime_candidates=coprime,
        class_lower_bound=1 + (1 if coprime else 0),
        heuristic_bound=1 + len(coprime),
        n_max=n_max,
    )


def component_lower_bound(g: int, e: int) -> int:
    """Lower bound ``n^(2g) + 1`` on path components of Euler class ``e``, ``2g-2 = n e``."""
    if g < 2:
        raise SeifertError("genus must be at least 2")
    if e == 0:
        raise SeifertError("euler class must be non-zero")
    if (2 * g - 2) % e != 0:
        raise SeifertError("euler class must divide 2g-2")
    n = (2 * g - 2) // e
    return n ** (2 * g) + 1
