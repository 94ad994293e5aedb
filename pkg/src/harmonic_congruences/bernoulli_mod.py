"""Bernoulli numbers modulo p^e.

Two independent routes: the defining recurrence (O(n^2), valid for n <= p-2)
and, for the single value B_{p-3} that the catalog needs, a power-sum formula
that costs one pass of modular exponentiations.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import ConsistencyError, IndexOutOfRange, NotPIntegral
from .residue import PrimePowerModulus, Residue

__all__ = [
    "BernoulliTable",
    "bernoulli_table",
    "bernoulli_mod_recurrence",
    "bernoulli_pm3_powersum",
    "bernoulli_mod_scaled",
]


@dataclass(frozen=True)
class BernoulliTable:
    modulus: PrimePowerModulus
    values: tuple[Residue, ...]

    def __getitem__(self, n: int) -> Residue:
        return self.values[n]

    def __len__(self):
        return len(self.values)


def _raw_table(n_max: int, m: PrimePowerModulus, ops=None):
    ops = ops or kernels.for_modulus(m.m)
    inv = ops.inverse_table(m.p, m.m)
    return ops.bernoulli_table(n_max, inv, m.m)


def bernoulli_table(n_max: int, m: PrimePowerModulus) -> BernoulliTable:
    """B_0..B_{n_max} mod p^e by the recurrence; needs n_max <= p - 2."""
    if not 0 <= n_max <= m.p - 2:
        raise IndexOutOfRange(f"recurrence mod {m.p}^e only reaches B_{m.p - 2}, asked for B_{n_max}")
    ops = kernels.for_modulus(m.m)
    raw = ops.to_list(_raw_table(n_max, m, ops))
    return BernoulliTable(m, tuple(Residue(v, m) for v in raw))


def bernoulli_mod_recurrence(n: int, m: PrimePowerModulus) -> Residue:
    """B_n mod p^e from B_0 = 1, sum_{k<=n} C(n+1, k) B_k = 0."""
    if not 0 <= n <= m.p - 2:
        raise IndexOutOfRange(f"B_{n} is out of reach of the recurrence mod {m.p}^{m.e}")
    return bernoulli_table(n, m)[n]


def _power_sum_quotient(p: int, exponent: int, e: int) -> int:
    """(sum_{k<p} k^exponent) / p mod p^e; the sum is divisible by p when p-1 does not divide exponent."""
    big = p ** (e + 1)
    s = kernels.for_modulus(big).power_sum(p - 1, exponent, big)
    if s % p:
        raise ConsistencyError(f"sum of k^{exponent} for k < {p} is not divisible by {p}")
    return s // p


def bernoulli_pm3_powersum(p: int, e: int = 1) -> Residue:
    """B_{p-3} mod p^e from Faulhaber's formula for sum_{k<p} k^(p-3).

    With n = p - 3 the sum equals p*B_n + n(n-1)/6 * p^3 * B_{n-2} mod p^4
    (the B_{n-1} term vanishes because n - 1 is odd), so dividing by p gives
    B_n mod p^2 outright and mod p^3 after one correction term that needs
    only B_{p-5} mod p.
    """
    if p <= 5:
        raise ValueError("power-sum route needs p > 5")
    if e not in (1, 2, 3):
        raise ValueError("exponent must be 1, 2 or 3")
    m = PrimePowerModulus(p, e)
    value = _power_sum_quotient(p, p - 3, e)
    if e == 3:
        n = p - 3
        b_pm5 = _power_sum_quotient(p, p - 5, 1)
        coeff = n * (n - 1) * pow(6, -1, p) % p
        value -= coeff * b_pm5 % p * p * p
    return Residue(value % m.m, m)


def bernoulli_mod_scaled(n: int, m: PrimePowerModulus) -> Residue:
    """B_n mod p^e for any n with (p-1) not dividing n (n = 1 is fine too).

    Runs the same recurrence on p*B_k, which is p-integral for every k.
    Each division by k+1 can eat v_p(k+1) digits, so the work modulus starts
    with v_p((n+1)!) + 1 spare digits and the final division by p is exact.
    """
    p = m.p
    if n < 0:
        raise IndexOutOfRange("Bernoulli index must be nonnegative")
    if n >= 2 and n % (p - 1) == 0:
        raise NotPIntegral(f"B_{n} has p = {p} in its denominator")
    spare, f = 1, p
    while f <= n + 1:
        spare += (n + 1) // f
        f *= p
    big = p ** (m.e + spare)
    b = [p % big]
    for j in range(1, n + 1):
        acc, c = 0, 1
        for k in range(j):
            acc += c * b[k]
            c = c * (j + 1 - k) // (k + 1)
        top, v = j + 1, 0
        while top % p == 0:
            top //= p
            v += 1
        acc = -acc * pow(top, -1, big) % big
        if acc % p**v:
            raise ConsistencyError(f"lost divisibility by {p}^{v} at B_{j}")
        b.append(acc // p**v)
    if b[n] % p:
        raise ConsistencyError(f"p*B_{n} is not divisible by {p}")
    return Residue(b[n] // p % m.m, m)
