"""Exact checks of the combinatorial identities, valid for every positive integer n.

Each ``*_sides`` function returns the two rationals being compared, so tests
and the CLI can show values, and each ``check_*`` returns their equality.
"""
from __future__ import annotations

from fractions import Fraction

from .exactnum import binomial_exact as C
from .exactnum import harmonic_exact as H

__all__ = [
    "lemma_2_4_sides",
    "lemma_3_1_sides",
    "lemma_4_1_sides",
    "lemma_4_2_sides",
    "integral_identity_sides",
    "check_lemma_2_4",
    "check_lemma_3_1",
    "check_lemma_4_1",
    "check_lemma_4_2",
    "check_integral_identity",
    "IDENTITY_CHECKS",
]


def lemma_2_4_sides(n: int) -> tuple[Fraction, Fraction]:
    """sum_{1<=k<=i<=n} (2^k - 1)/(k i)  versus  sum_j C(n, j)/j^2."""
    if n < 1:
        raise ValueError("n must be positive")
    lhs = sum(
        (Fraction(2**k - 1, k * i) for k in range(1, n + 1) for i in range(k, n + 1)),
        Fraction(0),
    )
    rhs = sum((Fraction(C(n, j), j * j) for j in range(1, n + 1)), Fraction(0))
    return lhs, rhs


def lemma_3_1_sides(n: int) -> tuple[Fraction, Fraction]:
    """sum_{k<n} (-2)^k C(n, k)/k against its parity-dependent closed form."""
    if n < 2:
        raise ValueError("n must be at least 2")
    lhs = sum((Fraction((-2) ** k * C(n, k), k) for k in range(1, n)), Fraction(0))
    if n % 2:
        rhs = -2 * H(n - 1) + H((n - 1) // 2) + Fraction(2**n - 2, n)
    else:
        rhs = -2 * H(n) + H(n // 2) - Fraction(2**n, n)
    return lhs, rhs


def lemma_4_1_sides(n: int) -> tuple[Fraction, Fraction, Fraction]:
    """sum_{k<n} (-2)^(k-1) C(n, k-1)/k, the parity closed form, and the single formula covering both parities."""
    if n < 1:
        raise ValueError("n must be positive")
    lhs = sum((Fraction((-2) ** (k - 1) * C(n, k - 1), k) for k in range(1, n)), Fraction(0))
    if n % 2:
        closed = Fraction(2 ** (n - 1) * (1 - n), n + 1)
    else:
        closed = Fraction((n - 1) * 2 ** (n - 1) + 1, n + 1)
    sign = (-1) ** n
    unified = Fraction(sign * (n - 1) * 2 ** (n - 1), n + 1) + Fraction(1 + sign, 2 * (n + 1))
    return lhs, closed, unified


def lemma_4_2_sides(n: int) -> tuple[Fraction, Fraction]:
    if n < 1:
        raise ValueError("n must be positive")
    acc = sum((Fraction((-1) ** (k - 1) * C(n, k) * 2**k) * H(k) for k in range(1, n)), Fraction(0))
    lhs = (-1) ** n * acc
    rhs = (2**n - 2) * H(n - 1) + H(n // 2) + Fraction(2**n - 2, n)
    return lhs, rhs


def integral_identity_sides(n: int, x) -> tuple[Fraction, Fraction]:
    """Odd n: sum_{k<n}; even n: sum_{k<=n}. Both compare against sums of ((1-x)^k - 1)/k."""
    if n < 1:
        raise ValueError("n must be positive")
    x = Fraction(x)
    if n % 2:
        lhs = sum((Fraction((-1) ** k * C(n, k), k) * x**k for k in range(1, n)), Fraction(0))
        rhs = sum((((1 - x) ** k - 1) / k for k in range(1, n)), Fraction(0)) - (1 - x**n + (x - 1) ** n) / n
    else:
        lhs = sum(((-x) ** k * Fraction(C(n, k), k) for k in range(1, n + 1)), Fraction(0))
        rhs = sum((((1 - x) ** k - 1) / k for k in range(1, n + 1)), Fraction(0))
    return lhs, rhs


def check_lemma_2_4(n: int) -> bool:
    lhs, rhs = lemma_2_4_sides(n)
    return lhs == rhs


def check_lemma_3_1(n: int) -> bool:
    lhs, rhs = lemma_3_1_sides(n)
    return lhs == rhs


def check_lemma_4_1(n: int) -> bool:
    lhs, closed, unified = lemma_4_1_sides(n)
    return lhs == closed == unified


def check_lemma_4_2(n: int) -> bool:
    lhs, rhs = lemma_4_2_sides(n)
    return lhs == rhs


def check_integral_identity(n: int, x) -> bool:
    lhs, rhs = integral_identity_sides(n, x)
    return lhs == rhs


INTEGRAL_X_GRID = (Fraction(-1), Fraction(1, 2), Fraction(2), Fraction(3))

# name -> (smallest n, checker taking n)
IDENTITY_CHECKS = {
    "2.4": (1, check_lemma_2_4),
    "3.1": (2, check_lemma_3_1),
    "4.1": (1, check_lemma_4_1),
    "4.2": (1, check_lemma_4_2),
    "integral": (1, lambda n: all(check_integral_identity(n, x) for x in INTEGRAL_X_GRID)),
}


def run_identity_checks(max_n: int = 64, which=None) -> dict[str, list[int]]:
    """Map each selected identity to the list of n in range where it fails (empty means verified)."""
    names = list(which) if which else list(IDENTITY_CHECKS)
    failures = {}
    for name in names:
        first, check = IDENTITY_CHECKS[name]
        failures[name] = [n for n in range(first, max_n + 1) if not check(n)]
    return failures
