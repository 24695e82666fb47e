"""Bernoulli, Euler, Chebyshev and integer-order Gegenbauer families.

Every constructor is memoized.  Tables grow by appending under a lock, so a
reader either misses an entry or sees its final value.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Callable, Generic, TypeVar

from .exact_arith import Poly, binom

__all__ = [
    "FamilyCache",
    "bernoulli_number",
    "bernoulli_poly",
    "chebyshev_T",
    "chebyshev_U",
    "euler_number",
    "euler_poly",
    "gegenbauer",
]

T = TypeVar("T")


class FamilyCache(Generic[T]):
    """Append-only memo table for a sequence defined by a recursion.

    ``step(table, n)`` computes entry ``n`` from the already stored entries
    ``table[0..n-1]``.
    """

    def __init__(self, step: Callable[[list[T], int], T]):
        self._step = step
        self._table: list[T] = []
        self._lock = threading.Lock()

    def __call__(self, n: int) -> T:
        if n < 0:
            raise ValueError(f"index must be non-negative, got {n}")
        table = self._table
        if n < len(table):
            return table[n]
        with self._lock:
            while len(table) <= n:
                table.append(self._step(table, len(table)))
        return table[n]

    def __len__(self) -> int:
        return len(self._table)


def _bernoulli_step(table: list[Fraction], n: int) -> Fraction:
    # sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1
    if n == 0:
        return Fraction(1)
    s = sum((binom(n + 1, k) * table[k] for k in range(n)), Fraction(0))
    return -s / (n + 1)


_bernoulli_numbers: FamilyCache[Fraction] = FamilyCache(_bernoulli_step)


def bernoulli_number(n: int) -> Fraction:
    """B_n with the convention B_1 = -1/2."""
    return _bernoulli_numbers(n)


def _bernoulli_poly_step(table: list[Poly], n: int) -> Poly:
    return Poly(binom(n, n - i) * bernoulli_number(n - i) for i in range(n + 1))


_bernoulli_polys: FamilyCache[Poly] = FamilyCache(_bernoulli_poly_step)


def bernoulli_poly(n: int) -> Poly:
    """B_n(x) = sum_k C(n, k) B_k x^(n-k)."""
    return _bernoulli_polys(n)


def _euler_poly_step(table: list[Poly], n: int) -> Poly:
    # E_n(x) + sum_{k=0}^{n} C(n, k) E_k(x) = 2 x^n
    acc = Poly.monomial(n, 2)
    for k in range(n):
        acc = acc - table[k].scale(binom(n, k))
    return acc / 2


_euler_polys: FamilyCache[Poly] = FamilyCache(_euler_poly_step)


def euler_poly(n: int) -> Poly:
    return _euler_polys(n)


def euler_number(n: int) -> Fraction:
    """E_n = 2^n E_n(1/2); these are integers, zero for odd n."""
    return 2**n * euler_poly(n)(Fraction(1, 2))


def _three_term(p0: Poly, p1: Poly) -> Callable[[list[Poly], int], Poly]:
    two_x = Poly.monomial(1, 2)

    def step(table: list[Poly], n: int) -> Poly:
        if n == 0:
            return p0
        if n == 1:
            return p1
        return two_x * table[n - 1] - table[n - 2]

    return step


_cheb_T: FamilyCache[Poly] = FamilyCache(_three_term(Poly([1]), Poly([0, 1])))
_cheb_U: FamilyCache[Poly] = FamilyCache(_three_term(Poly([1]), Poly([0, 2])))


def chebyshev_T(n: int) -> Poly:
    return _cheb_T(n)


def chebyshev_U(n: int) -> Poly:
    return _cheb_U(n)


_gegenbauer_tables: dict[int, FamilyCache[Poly]] = {}
_gegenbauer_lock = threading.Lock()


def _gegenbauer_step(lam: int) -> Callable[[list[Poly], int], Poly]:
    x = Poly.monomial(1)

    def step(table: list[Poly], n: int) -> Poly:
        if n == 0:
            return Poly([1])
        if n == 1:
            return Poly([0, 2 * lam])
        # n C_n = 2x(n + lam - 1) C_{n-1} - (n + 2 lam - 2) C_{n-2}
        top = x * table[n - 1].scale(2 * (n + lam - 1)) - table[n - 2].scale(n + 2 * lam - 2)
        return top / n

    return step


def gegenbauer(n: int, lam: int) -> Poly:
    """Gegenbauer polynomial C_n^(lam) for a positive integer order ``lam``."""
    if not isinstance(lam, int) or lam < 1:
        raise ValueError(f"Gegenbauer order must be a positive integer, got {lam!r}")
    cache = _gegenbauer_tables.get(lam)
    if cache is None:
        with _gegenbauer_lock:
            cache = _gegenbauer_tables.setdefault(lam, FamilyCache(_gegenbauer_step(lam)))
    return cache(n)
