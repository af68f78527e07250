from fractions import Fraction

from hypothesis import strategies as st

from folcalc.seifert import SeifertInvariants

rationals = st.builds(Fraction, st.integers(-60, 60), st.integers(1, 30))
unit_slopes = st.builds(lambda q, p: Fraction(p % (q - 1) + 1, q), st.integers(2, 30), st.integers(0, 1000))


@st.composite
def raw_invariants(draw, max_r=5):
    g = draw(st.integers(0, 3))
    b = draw(st.integers(-8, 8))
    slopes = draw(st.lists(rationals, max_size=max_r))
    return SeifertInvariants.of(g, b, slopes, normalized=False)


@st.composite
def normalized_invariants(draw, max_r=5, g=None):
    g = draw(st.integers(0, 3)) if g is None else g
    b = draw(st.integers(-8, 8))
    slopes = sorted(draw(st.lists(unit_slopes, max_size=max_r)))
    return SeifertInvariants.of(g, b, slopes)
