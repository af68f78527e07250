"""Existence criteria for horizontal foliations and horizontal contact structures.

Every test here is an exact comparison of rationals (done by integer
cross-multiplication); there are no tolerances.

Realizability
-------------
For genus zero, the slope condition

    s_1 > (m - a)/m,   s_2 > a/m,   s_i > (m - 1)/m  (i >= 3)

for coprime ``0 < a < m`` is searched with roles 1 and 2 given to the two
smallest slopes.  This loses nothing: swapping the two roles is ``a -> m - a``,
and the threshold ``(m - 1)/m`` for the remaining slopes dominates both role
thresholds, so any witness for another role assignment can be moved onto the
two smallest slopes.  The condition ``s > (m-1)/m`` is ``m (1 - s) < 1``, so
``m`` ranges over ``2 <= m < min den/(den - num)`` taken over non-role slopes.

The slope condition is the contact criterion only in the borderline case
``-b - r = -1`` (for ``-b - r <= -2`` the first clause already applies, and for
``-b - r >= 0`` there is no horizontal contact structure once ``r >= 3``).
Horizontal-foliation realizability of ``M`` is the slope condition evaluated
in whichever orientation is borderline: on ``M`` itself when ``b = 1 - r``, on
``-M`` when ``b = -1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .seifert import (
    HYPERBOLIC,
    SeifertError,
    SeifertInvariants,
    base_orbifold_type,
    require_normalized,
    reverse_orientation,
)

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class RealizabilityWitness:
    a: int
    m: int
    role_indices: tuple[int, int] = (0, 1)

    def to_json(self) -> dict:
        return {"a": self.a, "m": self.m, "role_indices": list(self.role_indices)}


@dataclass(frozen=True)
class Decision:
    verdict: str
    rule: str
    witness: Optional[RealizabilityWitness] = None

    def __bool__(self):
        return self.verdict == YES

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "rule": self.rule,
            "witness": self.witness.to_json() if self.witness else None,
        }


def _gt(s: Fraction, num: int, den: int) -> bool:
    # s > num/den with den > 0
    return s.numerator * den > num * s.denominator


def check_witness(slopes, witness: RealizabilityWitness) -> bool:
    """Verify a witness against a slope list, independently of the search."""
    a, m = witness.a, witness.m
    if not (0 < a < m) or math.gcd(a, m) != 1:
        return False
    i1, i2 = witness.role_indices
    if i1 == i2:
        return False
    for i, s in enumerate(slopes):
        if i == i1:
            ok = _gt(s, m - a, m)
        elif i == i2:
            ok = _gt(s, a, m)
        else:
            ok = _gt(s, m - 1, m)
        if not ok:
            return False
    return True


def find_witness(slopes) -> Optional[RealizabilityWitness]:
    """Search coprime ``0 < a < m`` for sorted slopes (needs ``r >= 3``)."""
    slopes = list(slopes)
    if len(slopes) < 3:
        raise SeifertError("realizability search needs at least three slopes")
    rest = slopes[2:]
    # m < den/(den - num) for every non-role slope
    bound = min(Fraction(s.denominator, s.denominator - s.numerator) for s in rest)
    s1, s2 = slopes[0], slopes[1]
    m = 2
    while m < bound:
        for a in range(1, m):
            if math.gcd(a, m) != 1:
                continue
            if _gt(s1, m - a, m) and _gt(s2, a, m):
                return RealizabilityWitness(a, m, (0, 1))
        m += 1
    return None


def has_psl2r_horizontal_foliation(inv: SeifertInvariants, strict_sum: bool = False) -> Decision:
    """Horizontal foliation with PSL(2,R) holonomy.

    For ``g > 0`` this is the double inequality ``2-2g-r <= -b-r <= 2g-2``.
    For ``g = 0`` either ``2 - r <= -b - r <= -2``, or ``b = -1`` with
    ``sum <= 1``, or ``b = 1 - r`` with ``sum >= r - 1``.  ``strict_sum``
    switches the sum comparisons to strict inequalities.
    """
    require_normalized(inv)
    g, b, r = inv.g, inv.b, inv.r
    e0 = -b - r
    if g > 0:
        if 2 - 2 * g - r <= e0 <= 2 * g - 2:
            return Decision(YES, "double_inequality")
        return Decision(NO, "double_inequality")
    if 2 - r <= e0 <= -2:
        return Decision(YES, "genus_zero_range")
    total = inv.slope_sum()
    if b == -1 and (total < 1 if strict_sum else total <= 1):
        return Decision(YES, "b_minus_one_small_sum")
    if b == 1 - r and (total > r - 1 if strict_sum else total >= r - 1):
        return Decision(YES, "b_one_minus_r_large_sum")
    if r <= 2:
        return Decision(UNKNOWN, "few_exceptional_fibers")
    return Decision(NO, "genus_zero_clauses")


def has_horizontal_contact(inv: SeifertInvariants) -> Decision:
    """Positive contact structure transverse to the Seifert fibration."""
    require_normalized(inv)
    g, b, r = inv.g, inv.b, inv.r
    e0 = -b - r
    if e0 <= 2 * g - 2:
        return Decision(YES, "euler_bound")
    if g > 0:
        return Decision(NO, "euler_bound")
    if r <= 2:
        if -b - inv.slope_sum() < 0:
            return Decision(YES, "negative_euler_few_fibers")
        return Decision(NO, "negative_euler_few_fibers")
    if e0 == -1:
        witness = find_witness(inv.slopes)
        if witness is not None:
            return Decision(YES, "realizable_witness", witness)
    return Decision(NO, "realizable_witness")


def is_realizable(inv: SeifertInvariants) -> Decision:
    """Genus-zero horizontal-foliation criterion via realizability.

    Requires ``g = 0`` and ``r >= 3``.  The witness, when present, refers to
    the slopes of the borderline orientation (see the module docstring);
    ``rule`` says which orientation that was.
    """
    require_normalized(inv)
    if inv.g != 0:
        raise SeifertError("realizability criterion applies to genus zero only")
    if inv.r < 3:
        raise SeifertError("realizability criterion needs at least three exceptional fibers")
    b, r = inv.b, inv.r
    if 2 - r <= b <= -2:
        return Decision(YES, "genus_zero_range")
    if b == 1 - r:
        witness = find_witness(inv.slopes)
        if witness is not None:
            return Decision(YES, "realizable_witness", witness)
        return Decision(NO, "realizable_witness")
    if b == -1:
        witness = find_witness(reverse_orientation(inv).slopes)
        if witness is not None:
            return Decision(YES, "realizable_witness_reversed", witness)
        return Decision(NO, "realizable_witness_reversed")
    return Decision(NO, "b_out_of_range")


@dataclass(frozen=True)
class ConsistencyReport:
    invariants: SeifertInvariants
    contact_positive: bool
    contact_negative: bool
    realizable: bool
    decisions: dict = field(default_factory=dict, compare=False)

    @property
    def passed(self) -> bool:
        return (self.contact_positive and self.contact_negative) == self.realizable

    def to_json(self) -> dict:
        return {
            "invariants": self.invariants.to_json(),
            "contact_positive": self.contact_positive,
            "contact_negative": self.contact_negative,
            "realizable": self.realizable,
            "status": "PASS" if self.passed else "FAIL",
            "decisions": {k: v.to_json() for k, v in self.decisions.items()},
        }


def cross_check_existence(inv: SeifertInvariants, require_hyperbolic: bool = True) -> ConsistencyReport:
    """Contact in both orientations versus realizability, for small Seifert spaces.

    The equivalence is only claimed over a hyperbolic base; pass
    ``require_hyperbolic=False`` to evaluate the three booleans anyway.
    """
    require_normalized(inv)
    if inv.g != 0 or inv.r != 3:
        raise SeifertError("cross check needs genus zero and exactly three exceptional fibers")
    if require_hyperbolic and base_orbifold_type(inv) != HYPERBOLIC:
        raise SeifertError("cross check needs a hyperbolic base orbifold")
    plus = has_horizontal_contact(inv)
    minus = has_horizontal_contact(reverse_orientation(inv))
    real = is_realizable(inv)
    return ConsistencyReport(
        inv, bool(plus), bool(minus), bool(real),
        {"contact_positive": plus, "contact_negative": minus, "realizable": real},
    )
