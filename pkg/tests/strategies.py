"""Hypothesis strategies shared by the test modules."""
from fractions import Fraction

from hypothesis import strategies as st

from wonderlie.polyalg import Polynomial

small_int = st.integers(min_value=-6, max_value=6)
rationals = st.builds(Fraction, small_int, st.integers(min_value=1, max_value=4))


def exponents(n, max_deg=3):
    return st.tuples(*[st.integers(min_value=0, max_value=max_deg)] * n)


@st.composite
def polynomials(draw, n=3, max_deg=3, max_terms=5, coeffs=rationals):
    terms = draw(st.dictionaries(exponents(n, max_deg), coeffs, max_size=max_terms))
    return Polynomial(n, terms)


@st.composite
def int_matrices(draw, max_rows=6, max_cols=6, lo=-4, hi=4):
    r = draw(st.integers(min_value=1, max_value=max_rows))
    c = draw(st.integers(min_value=1, max_value=max_cols))
    return draw(st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r))


def points(n):
    return st.lists(small_int, min_size=n, max_size=n)
