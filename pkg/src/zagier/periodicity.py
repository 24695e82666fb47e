"""Periodicity classification of Zagier special-value sequences.

Two families are examined at half-integer arguments:

* ``B*_{2n+1}(x)`` for ``n = 0, 1, ...``;
* ``A*_{2n}(u) = B*_{2n}(-1-u) - B*_{2n}(-1)`` for ``n = 1, 2, ...``.

Verdicts are empirical over a finite window and record how deep they looked.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .exact_arith import Poly, RationalFunction
from .families import chebyshev_U
from .zagier import zagier_number, zagier_poly

__all__ = [
    "HalfInteger",
    "InsufficientData",
    "SequenceClassification",
    "Verdict",
    "a_star",
    "a_star_chebyshev",
    "classify_even_zagier",
    "classify_odd_zagier",
    "classify_sequence",
    "detect_period",
    "even_a_sequence",
    "gf_odd_certificate",
    "half_value_formula",
    "jacobi_minus3",
    "odd_zagier_closed_form",
    "odd_zagier_sequence",
    "special_value_formula",
]

MIN_WINDOW = 36


class InsufficientData(ValueError):
    pass


@dataclass(frozen=True)
class HalfInteger:
    """An exact x with 2x an integer, stored as ``twice_value``."""

    twice_value: int

    def __post_init__(self):
        if not isinstance(self.twice_value, int):
            raise TypeError("twice_value must be an integer")

    @classmethod
    def of(cls, x: "int | Fraction | str | HalfInteger") -> "HalfInteger":
        if isinstance(x, HalfInteger):
            return x
        two_x = 2 * Fraction(x)
        if two_x.denominator != 1:
            raise ValueError(f"{x} is not a half-integer")
        return cls(two_x.numerator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    def __str__(self) -> str:
        return str(self.value)


class Verdict(str, Enum):
    IDENTICALLY_ZERO = "IdenticallyZero"
    PERIODIC = "Periodic"
    DRIFT_PERIODIC = "DriftPeriodic"
    UNBOUNDED = "Unbounded"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class SequenceClassification:
    """Tagged verdict with witness data.

    ``cycle`` starts at the sequence's first index (``start``).  For
    drift-periodic sequences it is the cycle of ``a_n - slope * n``.
    """

    verdict: Verdict
    n_max_tested: int
    start: int = 0
    period: int | None = None
    cycle: tuple[Fraction, ...] = ()
    slope: Fraction | None = None
    witness_index: int | None = None
    witness_value: Fraction | None = None
    notes: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {"verdict": self.verdict.value, "n_max_tested": self.n_max_tested, "start": self.start}
        if self.period is not None:
            d["period"] = self.period
            d["cycle"] = [str(c) for c in self.cycle]
        if self.slope is not None:
            d["slope"] = str(self.slope)
        if self.witness_index is not None:
            d["witness_index"] = self.witness_index
            d["witness_value"] = str(self.witness_value)
        d.update(self.notes)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def detect_period(values: Sequence[Fraction], max_period: int) -> tuple[int, list[Fraction]] | None:
    """Smallest ``p <= max_period`` with ``values[i + p] == values[i]`` throughout."""
    if max_period < 1:
        raise ValueError("max_period must be positive")
    if len(values) < 3 * max_period:
        raise InsufficientData(f"need at least {3 * max_period} values, got {len(values)}")
    n = len(values)
    for p in range(1, max_period + 1):
        if all(values[i + p] == values[i] for i in range(n - p)):
            return p, list(values[:p])
    return None


def _growth_threshold(a0: Fraction, n: int) -> Fraction:
    return 100 * max(Fraction(1), abs(a0)) * Fraction(3, 2) ** n


def classify_sequence(values: Sequence[Fraction], start: int = 0, max_period: int | None = None) -> SequenceClassification:
    """Classify ``a_start, a_{start+1}, ...``.

    Order of tests: identically zero, periodic, periodic after removing a
    linear drift, growth past ``100 max(1, |a_0|) 1.5^n``, else inconclusive.
    """
    values = list(values)
    if max_period is None:
        max_period = len(values) // 3
    n_max = start + len(values) - 1

    if all(v == 0 for v in values):
        return SequenceClassification(Verdict.IDENTICALLY_ZERO, n_max, start)

    found = detect_period(values, max_period)
    if found:
        p, cycle = found
        return SequenceClassification(Verdict.PERIODIC, n_max, start, p, tuple(cycle))

    diffs = [b - a for a, b in zip(values, values[1:])]
    dp = detect_period(diffs, min(max_period, len(diffs) // 3))
    if dp:
        p, dcycle = dp
        slope = sum(dcycle, Fraction(0)) / p
        if slope != 0:
            detrended = [v - slope * (start + i) for i, v in enumerate(values)]
            found = detect_period(detrended, max_period)
            if found:
                p, cycle = found
                return SequenceClassification(
                    Verdict.DRIFT_PERIODIC, n_max, start, p, tuple(cycle), slope=slope
                )

    a0 = values[0]
    for i, v in enumerate(values):
        if abs(v) > _growth_threshold(a0, i):
            return SequenceClassification(
                Verdict.UNBOUNDED, n_max, start, witness_index=start + i, witness_value=v
            )
    return SequenceClassification(Verdict.INCONCLUSIVE, n_max, start)


def odd_zagier_sequence(x: "HalfInteger | int | Fraction", n_max: int) -> list[Fraction]:
    """[B*_1(x), B*_3(x), ..., B*_{2 n_max - 1}(x)]."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    xv = HalfInteger.of(x).value
    return [zagier_poly(2 * n + 1)(xv) for n in range(n_max)]


def classify_odd_zagier(x: "HalfInteger | int | Fraction", n_max: int = 60) -> SequenceClassification:
    if n_max < MIN_WINDOW:
        raise InsufficientData(f"n_max must be at least {MIN_WINDOW}")
    hx = HalfInteger.of(x)
    res = classify_sequence(odd_zagier_sequence(hx, n_max), start=0)
    res.notes.update({"family": "B*_{2n+1}(x)", "x": str(hx)})
    return res


def a_star(n: int, u: int) -> Fraction:
    """A*_{2n}(u) = B*_{2n}(-1-u) - B*_{2n}(-1)."""
    p = zagier_poly(2 * n)
    return p(Fraction(-1 - u)) - p(Fraction(-1))


def a_star_chebyshev(n: int, u: int) -> Fraction:
    """(1/2) sum_{j=2}^{u+1} U_{2n-1}((u+1-j)/2), the closed form of A*_{2n}(u) for u >= 1."""
    if u < 1:
        raise ValueError("closed form holds for u >= 1")
    p = chebyshev_U(2 * n - 1)
    return sum((p(Fraction(u + 1 - j, 2)) for j in range(2, u + 2)), Fraction(0)) / 2


def even_a_sequence(u: int, n_max: int) -> list[Fraction]:
    """[A*_2(u), A*_4(u), ..., A*_{2 n_max}(u)]."""
    return [a_star(n, u) for n in range(1, n_max + 1)]


def classify_even_zagier(u: int, n_max: int = 60) -> SequenceClassification:
    if n_max < MIN_WINDOW:
        raise InsufficientData(f"n_max must be at least {MIN_WINDOW}")
    res = classify_sequence(even_a_sequence(u, n_max), start=1)
    res.notes.update({"family": "A*_{2n}(u)", "u": u})
    return res


def jacobi_minus3(n: int) -> int:
    """(-3/n): 1, -1, 0 for n = 1, 2, 0 mod 3."""
    if n < 1:
        raise ValueError("n must be positive")
    return (0, 1, -1)[n % 3]


def _u2n_half(n: int) -> int:
    # U_{2n}(1/2) cycles 1, 0, -1
    return (1, 0, -1)[n % 3]


def odd_zagier_closed_form(n: int) -> Fraction:
    """B*_{2n+1} = (-1)^n/4 + U_{2n}(1/2)/2."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return Fraction((-1) ** n, 4) + Fraction(_u2n_half(n), 2)


def gf_odd_certificate() -> RationalFunction:
    """(3z^11 - z^9 - z^7 + z^5 + z^3 - 3z) / (4(z^12 - 1)), generating B*_{2n+1} z^{2n+1}."""
    num = Poly([0, -3, 0, 1, 0, 1, 0, -1, 0, -1, 0, 3])
    den = Poly([-4] + [0] * 11 + [4])
    return RationalFunction(num, den)


def special_value_formula(k: int, n: int) -> Fraction:
    """B*_{2n+1}(-k) = -U_{2n}(0)/4 - (1/2) sum_{j=1}^{k-2} U_{2n}(j/2), for k >= 3."""
    if k < 3:
        raise IndexError(f"formula needs k >= 3, got {k}")
    u = chebyshev_U(2 * n)
    s = sum((u(Fraction(j, 2)) for j in range(1, k - 1)), Fraction(0))
    return -u(Fraction(0)) / 4 - s / 2


def half_value_formula(k: int, n: int) -> Fraction:
    """B*_{2n+1}(k + 1/2) = (1/2) sum_{r=0}^{k+1} U_{2n}((2r+1)/4), for k >= -1."""
    if k < -1:
        raise IndexError(f"formula needs k >= -1, got {k}")
    u = chebyshev_U(2 * n)
    return sum((u(Fraction(2 * r + 1, 4)) for r in range(k + 2)), Fraction(0)) / 2


def odd_zagier_numbers(count: int) -> list[Fraction]:
    """[B*_1, B*_3, ...] straight from the definition."""
    return [zagier_number(2 * n + 1) for n in range(count)]
