"""Log-germ algebra: derivatives, valuation limits, endpoint functions."""

from fractions import Fraction

import pytest

from krall6.germs import (
    DivergentLimitError,
    EndpointFn,
    LogGerm,
    UnspecifiedInteriorError,
)
from krall6.polynomials import Poly, RationalFn

W = Poly([1, 0, -1])


def test_log_derivative_chain_rule():
    # d/dx ln(1-x^2) = -2x/(1-x^2)
    g = LogGerm.from_log_poly(Poly.one(), 1)
    d = g.derivative()
    assert d.terms == {0: RationalFn(Poly([0, -2]), Poly([1, 0, -1]))}


def test_product_rule_weight_times_log():
    # ((1-x^2) L)' = -2x L + (1-x^2)(-2x/(1-x^2)) = -2x L - 2x
    g = LogGerm.from_log_poly(W, 1)
    d = g.derivative()
    assert d.terms[1] == RationalFn(Poly([0, -2]))
    assert d.terms[0] == RationalFn(Poly([0, -2]))


def test_constant_derivative_vanishes():
    g = LogGerm.from_poly(Poly([7]), -1)
    assert g.derivative().is_zero()


def test_limit_weight_log_vanishes():
    g = LogGerm.from_log_poly(W, 1)
    assert g.limit() == 0


def test_limit_constant_plus_weight():
    g = LogGerm.from_poly(Poly([3]) + W, 1)
    assert g.limit() == 3


def test_limit_bare_log_diverges():
    g = LogGerm.from_log_poly(Poly.one(), 1)
    with pytest.raises(DivergentLimitError):
        g.limit()
    assert not g.has_limit()


def test_limit_pole_diverges():
    g = LogGerm(1, {0: RationalFn(Poly.one(), W)})
    with pytest.raises(DivergentLimitError):
        g.limit()


def test_embedding_consistency():
    # germ limit of a global polynomial equals polynomial evaluation
    p = Poly([2, -3, 5, 1])
    f = EndpointFn.from_poly(p)
    for e in (-1, 1):
        assert f.germ_at(e).limit() == p(e)
        assert f.value_at(e) == p(e)


def test_derivative_of_convergent_germ_times_weight_vanishes():
    # u * d/du of a convergent germ term -> 0; checked on the log-probe shapes
    for e in (-1, 1):
        g = LogGerm.from_log_poly(Fraction(3, 8) * W**2 + Fraction(1, 2) * W, e)
        assert g.limit() == 0
        assert (g.derivative() * W).limit() == 0


def test_germ_multiplication_collects_log_powers():
    g = LogGerm.from_log_poly(Poly.one(), 1)
    sq = g * g
    assert set(sq.terms) == {2}
    h = LogGerm.from_poly(W, 1)
    assert (g * h).terms == {1: RationalFn(W)}


def test_piecewise_interior_is_off_limits():
    f = EndpointFn.poly_near(1, W)
    with pytest.raises(UnspecifiedInteriorError):
        f.require_global("integration")
    assert f.value_at(1) == 0
    assert f.value_at(-1) == 0
    assert EndpointFn.from_poly(W).require_global("integration") == W


def test_endpointfn_algebra_mixes_classes():
    f = EndpointFn.poly_near(1, Poly.one())
    g = EndpointFn.from_poly(Poly.x())
    s = f + g
    assert not s.is_global()
    assert s.value_at(1) == 2  # 1 + x at x=1
    assert s.value_at(-1) == -1
    assert (g * W).is_global()
    assert (f * 3).value_at(1) == 3


def test_derivative_order_on_endpointfn():
    f = EndpointFn.from_poly(Poly.monomial(3))
    assert f.derivative(2).poly == Poly([0, 6])
    p = EndpointFn.poly_near(-1, Poly.monomial(2))
    assert p.derivative(2).value_at(-1) == 2
    assert p.derivative(2).value_at(1) == 0


def test_endpoint_validation():
    with pytest.raises(ValueError):
        LogGerm.zero(0)
    with pytest.raises(ValueError):
        EndpointFn.piecewise(LogGerm.zero(1), LogGerm.zero(1))
