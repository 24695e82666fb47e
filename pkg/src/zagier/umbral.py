"""Umbrae as moment sequences, the evaluation functional and umbral composition."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence, Union

from .exact_arith import Poly, binom
from .families import FamilyCache, bernoulli_number, bernoulli_poly, euler_poly

__all__ = [
    "BERNOULLI",
    "EULER",
    "PolySequence",
    "Umbra",
    "lb_even_moment",
    "lb_moment",
    "umbra_sum",
    "umbral_compose",
    "umbral_eval",
    "umbral_eval_poly",
]


class Umbra:
    """A symbol ``u`` with ``eval{u^k} = moment(k)``.

    Moments are computed lazily and memoized.
    """

    def __init__(self, name: str, moment: Callable[[int], Fraction]):
        self.name = name
        self._moments: FamilyCache[Fraction] = FamilyCache(lambda _t, k: Fraction(moment(k)))

    def moment(self, k: int) -> Fraction:
        return self._moments(k)

    def __repr__(self) -> str:
        return f"Umbra({self.name!r})"

    def __add__(self, other: "Umbra") -> "Umbra":
        return umbra_sum(self, other)


BERNOULLI = Umbra("B", bernoulli_number)
# eval{exp(tE)} = 2/(e^t + 1), i.e. moments E_k(0)
EULER = Umbra("E", lambda k: euler_poly(k)(0))


def umbra_sum(u: Umbra, v: Umbra) -> Umbra:
    """Umbra of ``u + v`` for independent ``u`` and ``v`` (binomial convolution)."""

    def moment(k: int) -> Fraction:
        return sum((binom(k, i) * u.moment(i) * v.moment(k - i) for i in range(k + 1)), Fraction(0))

    return Umbra(f"{u.name}+{v.name}", moment)


def umbral_eval(p: Poly, u: Umbra) -> Fraction:
    """eval{p(u)}: replace ``u^k`` by its ``k``-th moment."""
    return sum((c * u.moment(k) for k, c in enumerate(p.coeffs)), Fraction(0))


def umbral_eval_poly(p: Poly, u: Umbra) -> Poly:
    """The polynomial ``x -> eval{p(x + u)}``."""
    out = [Fraction(0)] * len(p)
    for j, c in enumerate(p.coeffs):
        if c == 0:
            continue
        # (x + u)^j = sum_i C(j, i) x^(j-i) u^i
        for i in range(j + 1):
            out[j - i] += c * binom(j, i) * u.moment(i)
    return Poly(out)


def lb_moment(k: int) -> Fraction:
    """E[(i L_B / 2)^k]; odd moments vanish."""
    if k < 0:
        raise ValueError("moment index must be non-negative")
    if k % 2:
        return Fraction(0)
    return lb_even_moment(k // 2)


def lb_even_moment(k: int) -> Fraction:
    """E[(i L_B / 2)^(2k)] = B_{2k}(1/2) / 4^k."""
    if k < 0:
        raise ValueError("moment index must be non-negative")
    return bernoulli_poly(2 * k)(Fraction(1, 2)) / 4**k


PolySource = Union[Callable[[int], Poly], Sequence[Poly]]


class PolySequence:
    """An indexed family of polynomials, ``polys[n]`` of degree at most ``n``."""

    def __init__(self, source: PolySource, name: str = ""):
        self.name = name
        if callable(source):
            self._get = source
        else:
            polys = list(source)
            self._get = polys.__getitem__

    def __getitem__(self, n: int) -> Poly:
        return self._get(n)

    def __repr__(self) -> str:
        return f"PolySequence({self.name!r})"


def umbral_compose(P: PolySource | PolySequence, Q: PolySource | PolySequence, n: int) -> Poly:
    """(P o Q)_n(x) = sum_k p_{k,n} Q_k(x), with p_{k,n} the x^k coefficient of P_n."""
    P = P if isinstance(P, PolySequence) else PolySequence(P)
    Q = Q if isinstance(Q, PolySequence) else PolySequence(Q)
    acc = Poly()
    for k, c in enumerate(P[n].coeffs):
        if c:
            acc = acc + Q[k].scale(c)
    return acc
