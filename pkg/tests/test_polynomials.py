"""Exact polynomial and rational-function algebra."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from krall6.polynomials import (
    Poly,
    RationalFn,
    format_rational,
    parse_rational,
    poly_gcd,
)

rationals = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 8))
polys = st.lists(rationals, min_size=0, max_size=11).map(Poly)


def test_construction_strips_trailing_zeros():
    assert Poly([1, 2, 0, 0]).coeffs == (Fraction(1), Fraction(2))
    assert Poly([0, 0]).is_zero()
    assert Poly().degree is None
    assert Poly([0, 0, 5]).degree == 2


def test_parse_and_format_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-7") == Fraction(-7)
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_rational(Fraction(8, 2)) == "4"
    with pytest.raises(ValueError):
        parse_rational("1/-2")


def test_poly_text_roundtrip():
    p = Poly([0, 0, 1])
    assert p.format_coeffs() == "0,0,1"
    assert Poly.parse("0,0,1") == p
    assert Poly.parse("1/2,-3") == Poly([Fraction(1, 2), -3])
    assert Poly().format_coeffs() == "0"


def test_derivative_power_rule():
    # derive(x^3, 2) -> 6x
    assert Poly.monomial(3).derivative(2) == Poly([0, 6])
    assert Poly([5]).derivative() == Poly()


def test_eval_at_double_root():
    w2 = Poly([1, 0, -1]) ** 2
    assert w2(1) == 0
    assert w2(Fraction(1, 2)) == Fraction(9, 16)


def test_difference_of_squares():
    assert Poly([1, 0, -1]) * Poly([1, 0, 1]) == Poly([1, 0, 0, 0, -1])


def test_integral_examples():
    assert Poly([1]).integrate_unit_interval() == 2
    assert Poly.x().integrate_unit_interval() == 0
    assert Poly.monomial(2).integrate_unit_interval() == Fraction(2, 3)


@pytest.mark.parametrize("m", range(11))
def test_integral_even_powers(m):
    assert Poly.monomial(2 * m).integrate_unit_interval() == Fraction(2, 2 * m + 1)


@given(polys, polys)
@settings(max_examples=60, deadline=None)
def test_product_rule(p, q):
    lhs = (p * q).derivative()
    rhs = p.derivative() * q + p * q.derivative()
    assert lhs == rhs


@given(polys, polys, rationals)
@settings(max_examples=60, deadline=None)
def test_integration_linearity(p, q, c):
    lhs = (p + q * c).integrate_unit_interval()
    rhs = p.integrate_unit_interval() + c * q.integrate_unit_interval()
    assert lhs == rhs


@given(polys, polys)
@settings(max_examples=40, deadline=None)
def test_divmod_reconstructs(p, q):
    if q.is_zero():
        return
    quot, rem = p.divmod(q)
    assert quot * q + rem == p
    assert rem.is_zero() or rem.degree < q.degree


def test_compose():
    p = Poly([0, 0, 1])  # x^2 composed with (x+1) -> (x+1)^2
    assert p.compose(Poly([1, 1])) == Poly([1, 2, 1])


def test_root_multiplicity_and_deflate():
    p = Poly([1, 0, -1]) ** 3 * Poly([0, 1])
    assert p.root_multiplicity(1) == 3
    assert p.root_multiplicity(-1) == 3
    assert p.root_multiplicity(0) == 1
    assert p.root_multiplicity(2) == 0
    assert p.deflate(0) == Poly([1, 0, -1]) ** 3
    assert p.deflate(1, 3).root_multiplicity(1) == 0
    with pytest.raises(ValueError):
        p.deflate(2)


def test_gcd_monic_and_divides():
    w = Poly([1, 0, -1])
    a = w * Poly([2, 2])
    b = w * Poly([0, 6])
    g = poly_gcd(a, b)
    assert g.leading_coefficient() == 1
    assert g == w.monic()  # common factor 1-x^2, normalized monic
    assert a.divmod(g)[1].is_zero() and b.divmod(g)[1].is_zero()


def test_rationalfn_normal_form():
    r = RationalFn(Poly([0, 2, 2]), Poly([0, 0, 4]))  # (2x+2x^2)/(4x^2) = (1+x)/(2x)
    assert r.num == Poly([Fraction(1, 2), Fraction(1, 2)])
    assert r.den == Poly([0, 1])
    assert r.den.leading_coefficient() == 1


def test_rationalfn_arithmetic_and_derivative():
    one_over = RationalFn(Poly([1]), Poly([0, 1]))
    assert one_over + one_over == RationalFn(Poly([2]), Poly([0, 1]))
    # d/dx (1/x) = -1/x^2
    assert one_over.derivative() == RationalFn(Poly([-1]), Poly([0, 0, 1]))


def test_rationalfn_valuation_and_evaluate():
    w = Poly([1, 0, -1])
    r = RationalFn(w**2, w)
    assert r.valuation_at(1) == 1
    assert r.evaluate(1) == 0
    s = RationalFn(Poly([0, 1]), w)
    assert s.valuation_at(1) == -1
    with pytest.raises(ZeroDivisionError):
        s.evaluate(1)
