from fractions import Fraction as Q

import pytest
import sympy
from hypothesis import given, strategies as st

from yangtwist.exact import (U, PoleError, SpectralPoly, entry_to_json, format_rational,
                             gamma_product, gamma_quotient, gamma_ratio, parse_rational, poly_equal)

rationals = st.builds(Q, st.integers(-60, 60), st.integers(1, 12))
polys = st.lists(rationals, max_size=5).map(SpectralPoly)


def to_sympy(p: SpectralPoly):
    u = sympy.Symbol("u")
    return sympy.expand(sum(sympy.Rational(c.numerator, c.denominator) * u ** i
                            for i, c in enumerate(p.coeffs)))


# gamma ratio -----------------------------------------------------------------


@pytest.mark.parametrize("z,m,expected", [
    (Q(3, 2), 0, Q(1)),
    (Q(3, 2), 2, Q(15, 4)),
    (Q(3, 2), -1, Q(2)),
])
def test_gamma_ratio_examples(z, m, expected):
    assert gamma_ratio(z, m) == expected


def test_gamma_ratio_zero_factor_gives_zero():
    assert gamma_ratio(Q(-1), 3) == 0


def test_gamma_ratio_negative_offset_pole():
    with pytest.raises(PoleError) as info:
        gamma_ratio(Q(2), -3)
    # reported argument is that of Gamma(z + m) in the numerator
    assert info.value.argument == -1


def test_gamma_ratio_matches_sympy_rising_factorial():
    for z in (Q(1, 3), Q(-5, 2), Q(7, 4)):
        for m in range(6):
            ref = sympy.rf(sympy.Rational(z.numerator, z.denominator), m)
            assert gamma_ratio(z, m) == Q(int(ref.p), int(ref.q))


def test_gamma_quotient_requires_integer_offset():
    assert gamma_quotient(Q(7, 2), Q(3, 2)) == Q(3, 2) * Q(5, 2)
    with pytest.raises(ValueError):
        gamma_quotient(Q(1, 3), Q(1, 2))


def test_gamma_product_cancels_across_quotients():
    # Gamma(0)/Gamma(1) alone is a pole; times Gamma(2)/Gamma(0) it is finite
    with pytest.raises(PoleError):
        gamma_quotient(0, 1)
    assert gamma_product([(0, 1), (2, 0)]) == 1
    with pytest.raises(PoleError):
        gamma_product([(0, 1), (Q(1, 2), Q(3, 2))])
    assert gamma_product([(3, -1)]) == 0
    assert gamma_product([]) == 1


@given(st.lists(st.tuples(rationals, st.integers(-4, 4)), max_size=4))
def test_gamma_product_matches_quotients_off_poles(pairs):
    pairs = [(z + m, z) for z, m in pairs]
    try:
        ref = Q(1)
        for a, b in pairs:
            ref *= gamma_quotient(a, b)
    except PoleError:
        return
    assert gamma_product(pairs) == ref


@given(rationals, st.integers(0, 5), st.integers(0, 5))
def test_gamma_ratio_composes(z, a, b):
    assert gamma_ratio(z, a + b) == gamma_ratio(z, a) * gamma_ratio(z + a, b)


@given(rationals, st.integers(-5, 5))
def test_gamma_ratio_inverse_pair(z, m):
    try:
        prod = gamma_ratio(z, m) * gamma_ratio(z + m, -m)
    except PoleError:
        return
    if gamma_ratio(z, m) != 0 and gamma_ratio(z + m, -m) != 0:
        assert prod == 1


# polynomials -----------------------------------------------------------------


def test_poly_equal_examples():
    assert poly_equal(U * U - 1, U * U - 1)
    assert not poly_equal(U * U - 1, U * U)
    assert poly_equal((U - Q(5, 2)) * (U + Q(1, 2)), U * U - 2 * U - Q(5, 4))


def test_canonical_form_strips_trailing_zeros():
    assert SpectralPoly([1, 0, 0]).coeffs == (Q(1),)
    assert SpectralPoly([0, 0]).coeffs == ()
    assert SpectralPoly([]).degree < 0
    assert SpectralPoly.constant(3) == 3


@given(polys, polys)
def test_ring_ops_against_sympy(p, q):
    assert to_sympy(p * q) == sympy.expand(to_sympy(p) * to_sympy(q))
    assert to_sympy(p + q) == sympy.expand(to_sympy(p) + to_sympy(q))
    assert to_sympy(p - q) == sympy.expand(to_sympy(p) - to_sympy(q))


@given(polys, polys, polys)
def test_multiplication_commutative_associative(p, q, r):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)


@given(polys, polys)
def test_degree_additive(p, q):
    if p and q:
        assert (p * q).degree == p.degree + q.degree


@given(polys, rationals, rationals)
def test_shift_and_evaluation(p, c, x):
    assert p.shift(c)(x) == p(x + c)


@given(polys)
def test_json_round_trip(p):
    assert SpectralPoly.from_json(p.to_json()) == p
    assert entry_to_json(p) == p.to_json()


# rational literals --------------------------------------------------------------


@pytest.mark.parametrize("text,value", [("3", Q(3)), ("-1/2", Q(-1, 2)), ("4/6", Q(2, 3)),
                                        ("0", Q(0))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["1.5", "1/0", "a", "", "1/-2", "+3"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


@given(rationals)
def test_format_parse_round_trip(x):
    text = format_rational(x)
    assert parse_rational(text) == x
    assert "/" not in text or x.denominator != 1
