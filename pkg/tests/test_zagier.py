from fractions import Fraction

import pytest

import oracle
from zagier.exact_arith import Poly
from zagier.families import bernoulli_number, chebyshev_U, gegenbauer
from zagier.zagier import (
    UndefinedIndex,
    bernoulli_from_zagier,
    bernoulli_poly_from_zagier,
    binomial_sum_S1,
    binomial_sum_u,
    duplication_defect,
    modified_euler_number,
    modified_euler_poly,
    zagier_derivative_rhs,
    zagier_difference,
    zagier_even_alt_sum,
    zagier_even_cheb_rep,
    zagier_number,
    zagier_odd_cheb_rep,
    zagier_poly,
    zagier_poly_via_chebyshev,
    zagier_shifted_gegenbauer,
    zagier_symmetry_defect,
)

F = Fraction
X = Poly.monomial(1)


@pytest.mark.parametrize("n", range(1, 16))
def test_definition_against_sympy(n):
    assert zagier_poly(n) == oracle.zagier_poly(n)
    assert zagier_number(n) == oracle.zagier_poly(n)(0)


def test_small_cases():
    assert zagier_poly(1) == Poly([F(3, 4), F(1, 2)])
    # B*_2(x) = x^2/4 + 3x/4 + 1/24
    assert zagier_poly(2) == Poly([F(1, 24), F(3, 4), F(1, 4)])


@pytest.mark.parametrize("n", [0, -1])
def test_index_zero_undefined(n):
    for f in (zagier_poly, zagier_number, modified_euler_poly, modified_euler_number):
        with pytest.raises(UndefinedIndex):
            f(n)


@pytest.mark.parametrize("n", range(1, 15))
def test_chebyshev_umbral_form(n):
    assert zagier_poly_via_chebyshev(n) == oracle.zagier_poly(n)


def test_inversion_round_trip():
    for n in range(1, 21):
        assert bernoulli_from_zagier(n) == oracle.bernoulli_number(n)
        assert bernoulli_poly_from_zagier(n) == oracle.bernoulli_poly(n)


def test_derivative_rule():
    for n in range(1, 21):
        assert oracle.zagier_poly(n).derivative() == zagier_derivative_rhs(n)


def test_binomial_sums():
    assert [binomial_sum_S1(n) for n in range(1, 9)] == [-(n // 2) for n in range(1, 9)]
    assert binomial_sum_u(4, 1) == -1
    assert binomial_sum_u(4, 2) == 0
    assert binomial_sum_u(5, 2) == 2
    with pytest.raises(IndexError):
        binomial_sum_u(4, 4)
    with pytest.raises(IndexError):
        binomial_sum_u(4, 0)


@pytest.mark.parametrize("n", range(1, 11))
def test_chebyshev_representations(n):
    assert zagier_even_cheb_rep(n) == oracle.zagier_poly(2 * n)
    assert zagier_odd_cheb_rep(n) == oracle.zagier_poly(2 * n + 1)
    assert zagier_even_alt_sum(n) == oracle.zagier_poly(2 * n).compose(X - 2).scale(2)


def test_odd_representation_at_zero():
    assert zagier_odd_cheb_rep(0) == oracle.zagier_poly(1)


@pytest.mark.parametrize("k", range(1, 5))
def test_difference_formula(k):
    for n in range(1, 12):
        p = oracle.zagier_poly(n)
        assert zagier_difference(n, k) == p - p.compose(X - k)


def test_symmetry():
    for n in range(1, 20):
        assert zagier_symmetry_defect(n).is_zero()


def test_shifted_gegenbauer():
    for n in range(1, 16):
        assert zagier_shifted_gegenbauer(n) == oracle.zagier_poly(n).shift(F(-3, 2))
    assert zagier_shifted_gegenbauer(1) == Poly([0, F(1, 2)])
    # x^2/4 - 25/48: the n = 2 case carries the B_2(1/2)/4 = -1/48 correction
    assert zagier_shifted_gegenbauer(2) == Poly([F(-25, 48), 0, F(1, 4)])


def test_shifted_gegenbauer_terms_have_parity_of_n():
    for n in range(1, 12):
        p = zagier_shifted_gegenbauer(n)
        assert all(c == 0 for k, c in enumerate(p.coeffs) if (k - n) % 2)


def test_modified_euler_against_sympy():
    for n in range(1, 12):
        assert modified_euler_poly(n) == oracle.modified_euler_poly(n)


def test_modified_euler_numbers():
    assert [modified_euler_number(2 * n + 1) for n in range(9)] == [1, -2, 1] * 3
    for n in range(1, 13):
        p = modified_euler_poly(n)
        assert p.compose(Poly.linear(-1, -3)) == p.scale((-1) ** n)


def test_duplication():
    for n in range(1, 13):
        assert duplication_defect(n).is_zero()


def test_gegenbauer_helper_consistency():
    assert gegenbauer(4, 1) == chebyshev_U(4)
    assert bernoulli_number(0) == 1
