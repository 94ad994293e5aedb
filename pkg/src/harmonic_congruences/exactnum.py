"""Exact rational arithmetic, harmonic numbers, binomials and small Bernoulli numbers.

``Rational`` is :class:`fractions.Fraction`: it keeps ``numerator`` and a positive
``denominator`` in lowest terms after every operation, which is the canonical
form everything else in the package relies on.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

__all__ = ["Rational", "harmonic_exact", "binomial_exact", "bernoulli_exact", "bernoulli_exact_table"]

Rational = Fraction


def harmonic_exact(n: int, m: int = 1) -> Fraction:
    """Return ``sum(1/k**m for k in 1..n)``; ``H_0 = 0``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if m < 1:
        raise ValueError("order m must be positive")
    total = Fraction(0)
    for k in range(1, n + 1):
        total += Fraction(1, k**m)
    return total


def binomial_exact(n: int, k: int) -> int:
    """C(n, k), with the convention C(n, k) = 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def bernoulli_exact_table(n: int) -> tuple[Fraction, ...]:
    """B_0..B_n from B_0 = 1 and sum_{k=0..m} C(m+1, k) B_k = 0 (so B_1 = -1/2)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    values = [Fraction(1)]
    for m in range(1, n + 1):
        acc = Fraction(0)
        for k in range(m):
            if values[k]:
                acc += comb(m + 1, k) * values[k]
        values.append(-acc / (m + 1))
    return tuple(values)


def bernoulli_exact(n: int) -> Fraction:
    return bernoulli_exact_table(n)[n]
