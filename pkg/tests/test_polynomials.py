"""Ring laws and specialization identities for the polynomial types."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ribbonpoly import (
    DELTA,
    LaurentA,
    LaurentT,
    MultiPoly,
    NegativeDeltaExponent,
    specialize_brt,
    substitute_t,
)
from ribbonpoly.polynomials import delta_power

# -- strategies ---------------------------------------------------------

coeffs = st.integers(min_value=-50, max_value=50)

multi_polys = st.dictionaries(
    st.tuples(
        st.integers(0, 4), st.integers(0, 4), st.integers(0, 2)
    ),
    coeffs,
    max_size=6,
).map(MultiPoly)

laurent_as = st.dictionaries(
    st.integers(-8, 8), coeffs, max_size=6
).map(LaurentA)


# -- MultiPoly ----------------------------------------------------------


@given(multi_polys, multi_polys, multi_polys)
@settings(max_examples=60, deadline=None)
def test_multipoly_ring_laws(p, q, r):
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + MultiPoly.zero() == p
    assert p * MultiPoly.one() == p
    assert p - p == MultiPoly.zero()


def test_multipoly_sorted_terms_graded_lex():
    p = MultiPoly({(0, 2, 0): 1, (1, 0, 0): 2, (0, 0, 0): 3, (0, 1, 1): 4})
    keys = [k for k, _ in p.sorted_terms()]
    assert keys == [(0, 0, 0), (1, 0, 0), (0, 1, 1), (0, 2, 0)]


def test_multipoly_json_coeffs_are_strings():
    p = MultiPoly({(1, 0, 0): 10**30})
    (term,) = p.to_json_obj()
    assert term == {"exp": [1, 0, 0], "coeff": str(10**30)}


# -- LaurentA -----------------------------------------------------------


@given(laurent_as, laurent_as, laurent_as)
@settings(max_examples=60, deadline=None)
def test_laurent_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p * LaurentA.one() == p
    assert (-p) + p == LaurentA.zero()


@given(laurent_as, laurent_as)
@settings(max_examples=60, deadline=None)
def test_laurent_span_additive_under_product(p, q):
    if p and q:
        assert (p * q).span == p.span + q.span
        assert (p * q).max_degree == p.max_degree + q.max_degree


@given(laurent_as)
@settings(max_examples=60, deadline=None)
def test_laurent_invert_variable_involution(p):
    assert p.invert_variable().invert_variable() == p


def test_laurent_shift_and_pow():
    a = LaurentA.monomial(1)
    assert a ** 5 == LaurentA.monomial(5)
    assert DELTA.shift(2) == LaurentA({4: -1, 0: -1})
    with pytest.raises(ValueError):
        DELTA ** -1
    with pytest.raises(ValueError):
        LaurentA.zero().min_degree


def test_delta_power_cached_values():
    assert delta_power(0) == LaurentA.one()
    assert delta_power(1) == DELTA
    assert delta_power(3) == DELTA * DELTA * DELTA


# -- specialization -----------------------------------------------------


def test_specialize_examples():
    # Positive kink: all-A graph is one bridge, C = X, e = 1, v = 2; the
    # bracket is -A^3.
    assert specialize_brt(MultiPoly.monomial(1, 0, 0), 1, 2) == LaurentA(
        {3: -1}
    )
    # Negative kink: one planar loop, C = 1 + Y, e = 1, v = 1; bracket -A^-3.
    assert specialize_brt(
        MultiPoly({(0, 0, 0): 1, (0, 1, 0): 1}), 1, 1
    ) == LaurentA({-3: -1})
    # Empty graph: C = 1, e = 0, v = 1 gives bracket 1.
    assert specialize_brt(MultiPoly.one(), 0, 1) == LaurentA.one()


@given(multi_polys, multi_polys)
@settings(max_examples=40, deadline=None)
def test_specialize_is_linear(p, q):
    def safe(c):
        try:
            return specialize_brt(c, 3, 2)
        except NegativeDeltaExponent:
            return None

    sp, sq, spq = safe(p), safe(q), safe(p + q)
    if sp is not None and sq is not None and spq is not None:
        assert spq == sp + sq


def test_specialize_rejects_negative_delta_exponent():
    with pytest.raises(NegativeDeltaExponent):
        specialize_brt(MultiPoly.monomial(0, 1, 1), 1, 1)


# -- LaurentT / Jones substitution -------------------------------------


def test_substitute_t_examples():
    # Bracket -A^3 with writhe 1 normalizes to 1.
    assert substitute_t(LaurentA({3: -1}), 1) == LaurentT.one()
    # Bracket -A^-3 with writhe -1 normalizes to 1.
    assert substitute_t(LaurentA({-3: -1}), -1) == LaurentT.one()
    # A term A^k maps to t^((3w-k)/4) with sign (-1)^w.
    out = substitute_t(LaurentA({4: 2}), 2)
    assert out == LaurentT({2: 2})
    assert not out.has_integer_exponents()


def test_laurent_t_span():
    p = LaurentT({-16: -1, -12: 1, -4: 1})
    assert p.span_numerator == 12
    assert p.span_t() == 3
    assert p.has_integer_exponents()


@given(laurent_as, st.integers(-3, 3))
@settings(max_examples=60, deadline=None)
def test_substitute_t_preserves_term_count(b, w):
    assert len(substitute_t(b, w).terms) == len(b.terms)


def test_random_products_match_direct_expansion():
    rng = random.Random(5)
    for _ in range(50):
        p = LaurentA({rng.randint(-5, 5): rng.randint(-9, 9) for _ in range(3)})
        q = LaurentA({rng.randint(-5, 5): rng.randint(-9, 9) for _ in range(3)})
        direct = LaurentA.zero()
        for k, c in p.terms.items():
            direct = direct + q.shift(k) * c
        assert p * q == direct
