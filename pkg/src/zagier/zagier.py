"""Zagier polynomials, modified Euler polynomials and the identities linking them
to the classical families.

Identity checks return a *defect* polynomial (left side minus right side), so
a failing check carries the whole discrepancy.
"""

from __future__ import annotations

from fractions import Fraction

from .exact_arith import Poly, binom
from .families import (
    FamilyCache,
    bernoulli_number,
    bernoulli_poly,
    chebyshev_T,
    chebyshev_U,
    euler_number,
    euler_poly,
    gegenbauer,
)
from .umbral import BERNOULLI, umbral_compose, umbral_eval_poly

__all__ = [
    "UndefinedIndex",
    "bernoulli_from_zagier",
    "bernoulli_poly_from_zagier",
    "binomial_sum_S1",
    "binomial_sum_u",
    "duplication_defect",
    "modified_euler_number",
    "modified_euler_poly",
    "zagier_derivative_rhs",
    "zagier_difference",
    "zagier_even_alt_sum",
    "zagier_even_cheb_rep",
    "zagier_number",
    "zagier_odd_cheb_rep",
    "zagier_poly",
    "zagier_poly_via_chebyshev",
    "zagier_shifted_gegenbauer",
    "zagier_symmetry_defect",
]

HALF = Fraction(1, 2)
X = Poly.monomial(1)


class UndefinedIndex(ValueError):
    """The starred families are only defined for n >= 1."""


def _check_index(n: int) -> None:
    if n < 1:
        raise UndefinedIndex(f"starred families need n >= 1, got n = {n}")


def _zagier_weight(n: int, r: int) -> Fraction:
    return Fraction(binom(n + r, 2 * r), n + r)


def _zagier_poly_step(table: list[Poly], n: int) -> Poly:
    if n == 0:
        return Poly()  # placeholder, index 0 is rejected before lookup
    acc = Poly()
    for r in range(n + 1):
        acc = acc + bernoulli_poly(r).scale(_zagier_weight(n, r))
    return acc


_zagier_polys: FamilyCache[Poly] = FamilyCache(_zagier_poly_step)


def zagier_poly(n: int) -> Poly:
    """B*_n(x) = sum_{r=0}^{n} C(n+r, 2r) B_r(x) / (n+r)."""
    _check_index(n)
    return _zagier_polys(n)


def zagier_number(n: int) -> Fraction:
    """Modified Bernoulli number B*_n, computed from its own finite sum."""
    _check_index(n)
    return sum((_zagier_weight(n, r) * bernoulli_number(r) for r in range(n + 1)), Fraction(0))


def zagier_poly_via_chebyshev(n: int) -> Poly:
    """B*_n(x) as eval{T_n((x + B + 2)/2) / n} with the Bernoulli umbra B."""
    _check_index(n)
    inner = chebyshev_T(n).compose(Poly.linear(HALF, 1)) / n  # y -> T_n(y/2 + 1)/n
    return umbral_eval_poly(inner, BERNOULLI)


def _inversion_weight(n: int, k: int) -> int:
    return (-1) ** (n + k) * (binom(2 * n - 1, n - k) - binom(2 * n - 1, n - k - 1))


def bernoulli_from_zagier(n: int) -> Fraction:
    """Recover B_n from B*_1, ..., B*_n."""
    _check_index(n)
    s = sum((_inversion_weight(n, k) * zagier_number(k) for k in range(1, n + 1)), Fraction(0))
    return 2 * n * s + 2 * (-1) ** n * binom(2 * n - 1, n)


def bernoulli_poly_from_zagier(n: int) -> Poly:
    _check_index(n)
    acc = Poly()
    for k in range(1, n + 1):
        acc = acc + zagier_poly(k).scale(_inversion_weight(n, k))
    return acc.scale(2 * n) + 2 * (-1) ** n * binom(2 * n - 1, n)


def zagier_derivative_rhs(n: int) -> Poly:
    """Right side of the derivative rule: a combination of lower Zagier polynomials."""
    _check_index(n)
    m = n // 2
    if n % 2 == 0:
        acc = Poly()
        for j in range(1, m + 1):
            acc = acc + zagier_poly(2 * j - 1).scale(2 * j - 1)
        return acc
    acc = Poly([HALF])
    for j in range(1, m + 1):
        acc = acc + zagier_poly(2 * j).scale(2 * j)
    return acc


def binomial_sum_S1(n: int) -> Fraction:
    """sum_{r=1}^{n-1} (-1)^r 2(r+1)/(n+r+1) C(2r-1, r) C(n+r+1, 2r+2); equals -floor(n/2)."""
    _check_index(n)
    return sum(
        (
            (-1) ** r * Fraction(2 * (r + 1), n + r + 1) * binom(2 * r - 1, r) * binom(n + r + 1, 2 * r + 2)
            for r in range(1, n)
        ),
        Fraction(0),
    )


def binomial_sum_u(n: int, k: int) -> Fraction:
    """The auxiliary sum u(n, k) feeding the derivative rule, for 1 <= k <= n-1."""
    if not 1 <= k <= n - 1:
        raise IndexError(f"u(n, k) needs 1 <= k <= n-1, got n={n}, k={k}")
    total = Fraction(0)
    for r in range(k, n):
        bracket = binom(2 * r - 1, r - k) - binom(2 * r - 1, r - k - 1)
        total += Fraction(2 * (-1) ** r * r * (r + 1), n + r + 1) * binom(n + r + 1, 2 * r + 2) * bracket
    return total


def zagier_even_cheb_rep(n: int) -> Poly:
    """B*_{2n}(x) rebuilt from even Bernoulli polynomials and U_{2n-1}."""
    _check_index(n)
    alt = zagier_even_alt_sum(n)
    u = chebyshev_U(2 * n - 1)
    return (alt + u.compose(Poly.linear(HALF, 0)) + u.compose(Poly.linear(HALF, HALF))) / 2


def zagier_odd_cheb_rep(n: int) -> Poly:
    """B*_{2n+1}(x) rebuilt from odd Bernoulli polynomials and U_{2n}; valid for n >= 0."""
    if n < 0:
        raise UndefinedIndex(f"odd representation needs n >= 0, got {n}")
    acc = Poly()
    for r in range(n + 1):
        w = Fraction((-1) ** (n + r) * binom(n + r + 1, 2 * r + 1), n + r + 1)
        acc = acc + bernoulli_poly(2 * r + 1).scale(w)
    u = chebyshev_U(2 * n)
    return (acc + u.compose(Poly.linear(HALF, 0)) + u.compose(Poly.linear(HALF, HALF))) / 2


def zagier_even_alt_sum(n: int) -> Poly:
    """sum_{r=0}^{n} (-1)^(n+r) C(n+r, 2r) B_{2r}(x) / (n+r); equals 2 B*_{2n}(x - 2)."""
    _check_index(n)
    acc = Poly()
    for r in range(n + 1):
        acc = acc + bernoulli_poly(2 * r).scale((-1) ** (n + r) * _zagier_weight(n, r))
    return acc


def zagier_difference(n: int, k: int) -> Poly:
    """(1/2) sum_{j=1}^{k} U_{n-1}((x - j)/2 + 1), which equals B*_n(x) - B*_n(x - k)."""
    _check_index(n)
    if k < 1:
        raise ValueError(f"shift k must be positive, got {k}")
    u = chebyshev_U(n - 1)
    acc = Poly()
    for j in range(1, k + 1):
        acc = acc + u.compose(Poly.linear(HALF, 1 - Fraction(j, 2)))
    return acc / 2


def zagier_symmetry_defect(n: int) -> Poly:
    """B*_n(-x-3) - (-1)^n B*_n(x)."""
    p = zagier_poly(n)
    return p.compose(Poly.linear(-1, -3)) - p.scale((-1) ** n)


def zagier_shifted_gegenbauer(n: int) -> Poly:
    """B*_n(x - 3/2) as T_n(x/2)/n plus Gegenbauer corrections.

    The k-th correction is B_{2k}(1/2)/(4k) * C_{n-2k}^{(2k)}(x/2): Taylor
    expansion of T_n around x/2 against the even moments of i L_B / 2.
    """
    _check_index(n)
    half_x = Poly.linear(HALF, 0)
    acc = chebyshev_T(n).compose(half_x) / n
    for k in range(1, n // 2 + 1):
        c = bernoulli_poly(2 * k)(HALF) / (4 * k)
        acc = acc + gegenbauer(n - 2 * k, 2 * k).compose(half_x).scale(c)
    return acc


def _mod_euler_weight(n: int, r: int) -> Fraction:
    return binom(n + r, 2 * r) * Fraction(n, n + r)


def modified_euler_number(n: int) -> Fraction:
    """E*_n = sum_r C(n+r, 2r) n/(n+r) E_r with the (integer) Euler numbers E_r."""
    _check_index(n)
    return sum((_mod_euler_weight(n, r) * euler_number(r) for r in range(n + 1)), Fraction(0))


def _mod_euler_poly_step(table: list[Poly], n: int) -> Poly:
    if n == 0:
        return Poly()
    acc = Poly()
    for r in range(n + 1):
        acc = acc + euler_poly(r).scale(_mod_euler_weight(n, r))
    return acc


_mod_euler_polys: FamilyCache[Poly] = FamilyCache(_mod_euler_poly_step)


def modified_euler_poly(n: int) -> Poly:
    """E*_n(x) = sum_r C(n+r, 2r) n/(n+r) E_r(x).

    The weight n/(n+r) differs from the 1/(n+r) of the Bernoulli case on
    purpose.
    """
    _check_index(n)
    return _mod_euler_polys(n)


def duplication_defect(n: int) -> Poly:
    """2 B*_n(2x) - (B* o E)_n(2x) - (B* o E)_n(2x + 1)."""
    _check_index(n)
    comp = umbral_compose(zagier_poly, euler_poly, n)
    lhs = zagier_poly(n).compose(Poly.linear(2, 0)).scale(2)
    return lhs - comp.compose(Poly.linear(2, 0)) - comp.compose(Poly.linear(2, 1))
