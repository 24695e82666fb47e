"""Exact rational scalars, dense polynomials over Q and rational power series.

Scalars are :class:`fractions.Fraction`, which already keeps the canonical
lowest-terms form with a positive denominator.  Polynomials are immutable and
store their coefficients low degree first.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

__all__ = [
    "NotExpandable",
    "Poly",
    "RationalFunction",
    "Scalar",
    "binom",
    "poly_arith",
    "poly_compose",
    "poly_derivative",
    "poly_eval",
    "rat_make",
    "series_expand",
]

Scalar = Union[int, Fraction]


class NotExpandable(ValueError):
    """Raised when a rational function has a pole at the origin."""


def rat_make(num: int, den: int) -> Fraction:
    """Return ``num/den`` in lowest terms.

    >>> rat_make(6, -4)
    Fraction(-3, 2)
    """
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(num, den)


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever ``k < 0`` or ``k > n >= 0``."""
    if k < 0:
        return 0
    if n < 0:
        # generalized: C(n, k) = (-1)^k C(k - n - 1, k)
        return (-1) ** k * comb(k - n - 1, k)
    return comb(n, k)


class Poly:
    """Dense univariate polynomial with exact rational coefficients.

    ``Poly([c0, c1, c2])`` is ``c0 + c1*x + c2*x**2``.  Trailing zeros are
    stripped, so the zero polynomial has no coefficients and ``degree`` is
    ``None``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> "Poly":
        return cls([0] * n + [c])

    @classmethod
    def linear(cls, a: Scalar, b: Scalar) -> "Poly":
        """``a*x + b``."""
        return cls([b, a])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | None:
        return len(self._coeffs) - 1 if self._coeffs else None

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Poly([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Poly([{', '.join(str(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(terms).replace("+ -", "- ")

    # ring operations

    def __add__(self, other: "Poly | Scalar") -> "Poly":
        other = _lift(other)
        n = max(len(self), len(other))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self._coeffs)

    def __sub__(self, other: "Poly | Scalar") -> "Poly":
        return self + (-_lift(other))

    def __rsub__(self, other: Scalar) -> "Poly":
        return _lift(other) - self

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        if not self._coeffs or not other._coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, c: Scalar) -> "Poly":
        return self.scale(Fraction(1) / Fraction(c))

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Scalar) -> "Poly":
        c = Fraction(c)
        return Poly(c * a for a in self._coeffs)

    # calculus and evaluation

    def __call__(self, x):
        """Horner evaluation.  ``x`` may be a scalar, float, complex or Poly."""
        if isinstance(x, Poly):
            return self.compose(x)
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0 * x
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def compose(self, q: "Poly") -> "Poly":
        """Return ``self(q(x))`` by Horner's scheme over polynomials."""
        acc = Poly()
        for c in reversed(self._coeffs):
            acc = acc * q + c
        return acc

    def shift(self, a: Scalar) -> "Poly":
        """``p(x + a)``."""
        return self.compose(Poly.linear(1, a))

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self._coeffs) if i > 0)

    def to_floats(self) -> list[float]:
        return [float(c) for c in self._coeffs]


def _lift(p: "Poly | Scalar") -> Poly:
    return p if isinstance(p, Poly) else Poly([p])


def poly_eval(p: Poly, x: Scalar) -> Fraction:
    return p(Fraction(x))


def poly_arith(a: Poly, b: Poly | None, op: str, c: Scalar | None = None) -> Poly:
    """Dispatch ``add``, ``sub``, ``mul`` or ``scale`` (``a`` times ``c``)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(c)
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_compose(p: Poly, q: Poly) -> Poly:
    return p.compose(q)


def poly_derivative(p: Poly) -> Poly:
    return p.derivative()


class RationalFunction:
    """Quotient ``num/den`` of two polynomials with a nonzero denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num = num
        self.den = den

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def series(self, n_terms: int) -> list[Fraction]:
        return series_expand(self, n_terms)


def series_expand(f: RationalFunction, n_terms: int) -> list[Fraction]:
    """First ``n_terms`` Taylor coefficients of ``f`` at the origin.

    Long division: with ``f = num/den`` and ``den[0] != 0``, the coefficients
    satisfy ``sum_j den[j] * a[k - j] = num[k]``.
    """
    den: Sequence[Fraction] = f.den.coeffs
    if den[0] == 0:
        raise NotExpandable("denominator vanishes at z = 0")
    inv0 = 1 / den[0]
    out: list[Fraction] = []
    for k in range(n_terms):
        acc = f.num[k]
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc * inv0)
    return out
