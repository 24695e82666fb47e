from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from oracle import X, to_poly
from zagier.exact_arith import (
    NotExpandable,
    Poly,
    RationalFunction,
    binom,
    poly_arith,
    poly_compose,
    poly_derivative,
    poly_eval,
    rat_make,
    series_expand,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)
polys = st.lists(rationals, max_size=8).map(Poly)


def to_sympy(p: Poly):
    return sum(sp.Rational(c.numerator, c.denominator) * X**k for k, c in enumerate(p.coeffs))


def test_rat_make_lowest_terms():
    q = rat_make(6, -4)
    assert (q.numerator, q.denominator) == (-3, 2)


def test_rat_make_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rat_make(1, 0)


def test_binom_edges():
    assert binom(5, -1) == 0
    assert binom(3, 5) == 0
    assert binom(-1, 3) == -1  # (-1)^3 C(3, 3)
    assert binom(-2, 2) == 3


def test_zero_poly():
    z = Poly([0, 0])
    assert z.is_zero() and z.degree is None and z == 0
    assert Poly([1, 2, 0]).degree == 1


def test_eval_and_compose_small():
    p = Poly([1, 0, 1])  # 1 + x^2
    assert poly_eval(p, Fraction(1, 2)) == Fraction(5, 4)
    assert poly_compose(p, Poly.linear(2, 1)) == Poly([2, 4, 4])
    assert p.shift(1) == Poly([2, 2, 1])
    assert poly_derivative(p) == Poly([0, 2])


def test_poly_arith_dispatch():
    a, b = Poly([1, 1]), Poly([0, 1])
    assert poly_arith(a, b, "add") == Poly([1, 2])
    assert poly_arith(a, b, "sub") == Poly([1])
    assert poly_arith(a, b, "mul") == Poly([0, 1, 1])
    assert poly_arith(a, None, "scale", Fraction(1, 2)) == Poly([Fraction(1, 2), Fraction(1, 2)])
    with pytest.raises(ValueError):
        poly_arith(a, b, "pow")


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_mul_matches_sympy(a, b):
    assert a * b == to_poly(to_sympy(a) * to_sympy(b))


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Poly()
    assert a * Poly([1]) == a


@settings(max_examples=60, deadline=None)
@given(polys, polys, rationals)
def test_compose_is_evaluation_homomorphism(p, q, x):
    assert p.compose(q)(x) == p(q(x))


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_chain_rule(p, q):
    lhs = p.compose(q).derivative()
    rhs = p.derivative().compose(q) * q.derivative()
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(polys, st.lists(rationals, min_size=1, max_size=5).filter(lambda c: c[0] != 0).map(Poly))
def test_series_reconvolves(num, den):
    n_terms = 15
    a = series_expand(RationalFunction(num, den), n_terms)
    prod = (Poly(a) * den).coeffs
    for k in range(n_terms):
        got = prod[k] if k < len(prod) else 0
        assert got == num[k]


def test_series_geometric():
    # 1/(1 - z) = 1 + z + z^2 + ...
    assert series_expand(RationalFunction(Poly([1]), Poly([1, -1])), 5) == [1] * 5


def test_series_pole_at_origin():
    with pytest.raises(NotExpandable):
        series_expand(RationalFunction(Poly([1]), Poly([0, 1])), 3)


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        RationalFunction(Poly([1]), Poly())
