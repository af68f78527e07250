"""Seifert fibered space invariants, horizontal-structure existence tests,
circle-map dynamics and explicit 1-form checks."""

from .seifert import (
    ExactRational,
    SeifertError,
    SeifertInvariants,
    base_orbifold_type,
    euler_number,
    normalize,
    orbifold_euler_characteristic,
    reverse_orientation,
)

__version__ = "0.1.0"
