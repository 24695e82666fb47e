"""Empirical arithmetic of Zagier polynomials and numeric checks of the
transcendental identities.

This is the only module that uses floating point.  Observations that are not
theorems carry a ``conjectural`` marker stating how far they were checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

import mpmath
import numpy as np
from scipy import integrate
from sympy import factorint, isprime

from .exact_arith import Poly
from .families import bernoulli_number, bernoulli_poly
from .zagier import zagier_number, zagier_poly

__all__ = [
    "CoefficientStats",
    "DenominatorProfile",
    "DomainError",
    "InvalidPrime",
    "Report",
    "alpha",
    "asymptotic_gf_check",
    "coefficient_stats",
    "denominator_constancy",
    "denominator_profile",
    "digamma_numeric",
    "first_omitted_term",
    "hurwitz_zeta_numeric",
    "integrality_4b",
    "logconcave_depth",
    "log_concavity_step",
    "prime_power_profile",
    "probe_logconcavity",
    "probe_prime_bound",
    "roots_numeric",
    "soliton_integral_check",
]

EXCEEDED_BUDGET = "exceeded_budget"


class DomainError(ValueError):
    """Argument at a pole or outside the supported domain."""


class InvalidPrime(ValueError):
    pass


@dataclass
class Report:
    """Outcome of a finite check.  ``failures`` lists counterexamples."""

    ok: bool
    checked: int
    failures: list = field(default_factory=list)
    conjectural: str | None = None


# denominators


def alpha(n: int) -> int:
    """Denominator of B*_n in lowest terms."""
    return zagier_number(n).denominator


@dataclass(frozen=True)
class DenominatorProfile:
    n: int
    alpha: int
    alpha_over_4: int | None
    prime_powers: dict


def denominator_profile(n: int) -> DenominatorProfile:
    a = alpha(n)
    return DenominatorProfile(n, a, a // 4 if a % 4 == 0 else None, dict(factorint(a)))


def prime_power_profile(n: int, p: int) -> int:
    """Exponent of the prime ``p`` in alpha(n)."""
    if not isprime(p):
        raise InvalidPrime(f"{p} is not prime")
    a, e = alpha(n), 0
    while a % p == 0:
        a //= p
        e += 1
    return e


def integrality_4b(j_range: Iterable[int], n_max: int) -> Report:
    """Check that 4 B*_{2n+1}(j) is an integer for n = 0..n_max and j in range."""
    js = list(j_range)
    failures = []
    for n in range(n_max + 1):
        p = zagier_poly(2 * n + 1)
        for j in js:
            v = 4 * p(Fraction(j))
            if v.denominator != 1:
                failures.append((n, j, v))
    return Report(not failures, (n_max + 1) * len(js), failures)


def denominator_constancy(n: int, j_range: Iterable[int]) -> Report:
    """Does every B*_n(j) in the range have denominator alpha(n)?"""
    a = alpha(n)
    p = zagier_poly(n)
    js = list(j_range)
    failures = [(j, p(Fraction(j)).denominator) for j in js if p(Fraction(j)).denominator != a]
    return Report(not failures, len(js), failures, conjectural=f"denominator independent of j: checked n={n}, j in [{min(js)}, {max(js)}]")


def probe_prime_bound(n_max: int) -> Report:
    """Largest prime factor of alpha(2n) against 2n + 1, for n <= n_max."""
    failures = []
    for n in range(1, n_max + 1):
        primes = factorint(alpha(2 * n))
        if primes and max(primes) > 2 * n + 1:
            failures.append((n, max(primes)))
    return Report(not failures, n_max, failures, conjectural=f"empirically verified to n={n_max}" if not failures else None)


# coefficients


def log_concavity_step(seq: list[Fraction]) -> list[Fraction]:
    """One application of a_j -> a_j^2 - a_{j-1} a_{j+1}, zero outside the range."""
    ext = [Fraction(0)] + list(seq) + [Fraction(0)]
    return [ext[j] ** 2 - ext[j - 1] * ext[j + 1] for j in range(1, len(ext) - 1)]


def logconcave_depth(seq: list[Fraction], budget: int = 5) -> int | str:
    """Number of successive operator applications that stay strictly positive.

    Returns ``"exceeded_budget"`` if all ``budget`` iterates are positive.
    """
    cur = list(seq)
    for depth in range(budget):
        cur = log_concavity_step(cur)
        if any(c <= 0 for c in cur):
            return depth
    return EXCEEDED_BUDGET


@dataclass(frozen=True)
class CoefficientStats:
    n: int
    integer_count: int
    positive_excess: Fraction
    logconcave_depth: int | str
    shifted_positive: bool


def coefficient_stats(n: int, depth_budget: int = 5) -> CoefficientStats:
    """Integer coefficients and sign excess of B*_n(x), plus the iterated
    log-concavity depth of the coefficients of B*_n(x + 3/2)."""
    p = zagier_poly(n)
    cs = p.coeffs
    integers = sum(1 for c in cs if c.denominator == 1)
    pos = sum(1 for c in cs if c > 0)
    neg = sum(1 for c in cs if c < 0)
    shifted = p.shift(Fraction(3, 2)).coeffs
    return CoefficientStats(
        n,
        integers,
        Fraction(pos - neg, n + 1),
        logconcave_depth(list(shifted), depth_budget),
        all(c > 0 for c in shifted),
    )


def probe_logconcavity(n_max: int, min_depth: int = 4, budget: int = 5) -> Report:
    failures = []
    for n in range(1, n_max + 1):
        d = coefficient_stats(n, budget).logconcave_depth
        if d != EXCEEDED_BUDGET and d < min_depth:
            failures.append((n, d))
    return Report(not failures, n_max, failures, conjectural=f"depth >= {min_depth} empirically verified to n={n_max}" if not failures else None)


# roots


def roots_numeric(n: int, precision: int = 30) -> list[tuple[float, float, float]]:
    """Roots of B*_n(x) as ``(re, im, |B*_n(root)|)`` triples.

    Float companion-matrix roots are polished by Newton's method on the exact
    coefficients at ``precision + n`` digits (the coefficients grow roughly
    like 4^n).  If polishing merges two roots, Durand-Kerner iteration is used
    instead.  Only the reported values are rounded to floats.
    """
    p = zagier_poly(n)
    seeds = np.roots([float(c) for c in reversed(p.coeffs)])
    with mpmath.workdps(precision + n):
        coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(p.coeffs)]
        dcoeffs = [c * (n - i) for i, c in enumerate(coeffs[:-1])]
        tol = mpmath.mpf(10) ** (-precision)
        roots = [_newton(coeffs, dcoeffs, mpmath.mpc(complex(z)), tol) for z in seeds]
        if _has_collision(roots, tol):
            roots = mpmath.polyroots(coeffs, maxsteps=50 + 20 * n, extraprec=precision + n)
        out = []
        for r in roots:
            r = mpmath.mpc(r)
            out.append((float(r.real), float(r.imag), float(abs(mpmath.polyval(coeffs, r)))))
    out.sort()
    return out


def _newton(coeffs, dcoeffs, z, tol, max_iter: int = 50):
    for _ in range(max_iter):
        step = mpmath.polyval(coeffs, z) / mpmath.polyval(dcoeffs, z)
        z -= step
        if abs(step) < tol * max(1, abs(z)):
            break
    return z


def _has_collision(roots, tol) -> bool:
    sep = tol ** 0.5
    return any(abs(a - b) < sep for i, a in enumerate(roots) for b in roots[:i])


# special functions

_ASYMPTOTIC_TERMS = 10


def _digamma_minus_log(x: float) -> float:
    """psi(x) - log(x) for x >= 10 from the asymptotic series."""
    inv2 = 1.0 / (x * x)
    s, pw = 0.0, 1.0
    for k in range(1, _ASYMPTOTIC_TERMS):
        pw *= inv2
        s += float(bernoulli_number(2 * k)) / (2 * k) * pw
    return -0.5 / x - s


def digamma_numeric(x: float) -> float:
    """Digamma via upward recurrence to x >= 10 and the asymptotic series."""
    if x <= 0 and x == math.floor(x):
        raise DomainError(f"digamma has a pole at {x}")
    acc = 0.0
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    return acc + math.log(x) + _digamma_minus_log(x)


def hurwitz_zeta_numeric(s: float, a: float, n_direct: int = 12, n_corr: int = 10) -> float:
    """zeta(s, a) = sum_{k>=0} (k + a)^(-s) via Euler-Maclaurin summation."""
    if s <= 1:
        raise DomainError("Hurwitz zeta needs s > 1")
    if a <= 0:
        raise DomainError("Hurwitz zeta needs a > 0")
    total = sum((k + a) ** -s for k in range(n_direct))
    b = a + n_direct
    total += b ** (1 - s) / (s - 1) + 0.5 * b**-s
    # + sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * b^(-s-2j+1)
    rising = s
    for j in range(1, n_corr + 1):
        term = float(bernoulli_number(2 * j)) / math.factorial(2 * j) * rising * b ** (-s - 2 * j + 1)
        total += term
        rising *= (s + 2 * j - 1) * (s + 2 * j)
    return total


# asymptotic generating functions


def _exact_z(z: float | Fraction) -> Fraction:
    return z if isinstance(z, Fraction) else Fraction(str(z))


def _series_terms(x: Fraction, kind: str, lo: int, hi: int) -> list[Fraction]:
    if kind == "zagier":
        return [zagier_poly(n)(x) for n in range(lo, hi + 1)]
    if kind == "hurwitz":
        return [bernoulli_poly(n)(x) for n in range(lo, hi + 1)]
    raise ValueError(f"unknown series kind {kind!r}")


def _first_index(kind: str) -> int:
    return 1 if kind == "zagier" else 0


def first_omitted_term(x, z, n_trunc: int, kind: str = "zagier") -> float:
    """|c_{n_trunc+1} z^{n_trunc+1}|, computed exactly then rounded."""
    x, zq = Fraction(x), _exact_z(z)
    (c,) = _series_terms(x, kind, n_trunc + 1, n_trunc + 1)
    return float(abs(c * zq ** (n_trunc + 1)))


def asymptotic_gf_check(x, z: float, n_trunc: int, kind: str = "zagier") -> tuple[float, float, float]:
    """Compare a truncated generating series with its closed form.

    ``kind="zagier"``: sum_{n=1}^{n_trunc} B*_n(x) z^n against
    -log(z)/2 - psi(z + 1/z - 1 - x)/2.

    ``kind="hurwitz"``: sum_{n=0}^{n_trunc} B_n(x) z^n against
    zeta(2, 1/z - x + 1)/z.

    Returns ``(series, closed_form, |series - closed_form|)``.
    """
    x, zq = Fraction(x), _exact_z(z)
    if not 0 < zq <= Fraction(1, 10):
        raise DomainError("z must lie in (0, 0.1]")
    lo = _first_index(kind)
    terms = _series_terms(x, kind, lo, n_trunc)
    lhs = float(sum((c * zq**n for n, c in enumerate(terms, lo)), Fraction(0)))
    zf, xf = float(zq), float(x)
    if kind == "zagier":
        w = zf + 1 / zf - 1 - xf
        # -log(z)/2 - psi(w)/2 = -log(z w)/2 - (psi(w) - log w)/2, z w = 1 - z + z^2 - x z
        zw_minus_1 = float(zq * zq - zq - x * zq)
        if w >= 10.0:
            rhs = -0.5 * math.log1p(zw_minus_1) - 0.5 * _digamma_minus_log(w)
        else:
            rhs = -0.5 * math.log(zf) - 0.5 * digamma_numeric(w)
    else:
        rhs = hurwitz_zeta_numeric(2.0, 1 / zf - xf + 1) / zf
    return lhs, rhs, abs(lhs - rhs)


def soliton_integral_check(n: int, x, half_width: float = 10.0) -> tuple[float, float, float]:
    """(pi/2) int (x - 1/2 + i t)^n sech^2(pi t) dt over |t| <= half_width, against B_n(x).

    Returns ``(quadrature, exact, |difference|)``.
    """
    if n > 12:
        raise DomainError("integrand grows too fast beyond n = 12")
    exact = bernoulli_poly(n)(Fraction(x))
    a = float(Fraction(x)) - 0.5

    def integrand(t: float) -> float:
        return (complex(a, t) ** n).real / math.cosh(math.pi * t) ** 2

    # the integrand is even in t for the real part
    val, _err = integrate.quad(integrand, 0.0, half_width, limit=200, epsabs=1e-15, epsrel=1e-13)
    quad = math.pi * val
    return quad, float(exact), abs(quad - float(exact))
