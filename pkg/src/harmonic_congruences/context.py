"""Per-prime tables shared by every catalog entry evaluated at that prime."""
from __future__ import annotations

from dataclasses import dataclass, field
from types import ModuleType
from typing import Any

from . import kernels
from .bernoulli_mod import bernoulli_mod_recurrence, bernoulli_pm3_powersum
from .errors import ConsistencyError, IndexOutOfRange
from .residue import PrimePowerModulus, Residue, fermat_quotient, is_prime

__all__ = ["PrimeContext", "build_context", "DEFAULT_CROSSCHECK_LIMIT"]

DEFAULT_CROSSCHECK_LIMIT = 500
HARMONIC_ORDERS = (1, 2, 3)


@dataclass(frozen=True)
class PrimeContext:
    """Tables mod p^e_max, plus copies reduced to every lower exponent.

    Vector-valued fields are kernel vectors owned by ``ops``; index k of
    ``inv`` holds 1/k, of ``pow2`` holds 2^k (k < p), of ``harmonic[m]``
    holds H_{k,m}.
    """

    p: int
    e_max: int
    modulus: PrimePowerModulus
    ops: ModuleType
    inv: Any
    pow2: Any
    harmonic: dict
    q2: Residue
    b_pm3: Residue
    _reduced: dict = field(default_factory=dict, repr=False, compare=False)
    _bernoulli: dict = field(default_factory=dict, repr=False, compare=False)

    def m(self, e: int) -> int:
        return self.p**e

    def _table(self, key, e: int):
        if e == self.e_max:
            return self.harmonic[key[1]] if key[0] == "h" else getattr(self, key[0])
        return self._reduced[key, e]

    def inverse_table(self, e: int):
        return self._table(("inv",), e)

    def pow2_table(self, e: int):
        return self._table(("pow2",), e)

    def harmonic_table(self, order: int, e: int):
        return self._table(("h", order), e)

    def harmonic_value(self, n: int, order: int, e: int) -> int:
        return int(self.harmonic_table(order, e)[n])

    def q2_at(self, e: int) -> int:
        return self.q2.value % self.m(e)

    def b_pm3_at(self, e: int) -> int:
        return self.b_pm3.value % self.m(e)

    def bernoulli_at(self, n: int, e: int) -> int:
        """B_n mod p^e for 0 <= n <= p-2; B_{p-3} comes from the cached value."""
        if n == self.p - 3:
            return self.b_pm3_at(e)
        if not 0 <= n <= self.p - 2:
            raise IndexOutOfRange(f"B({n}) is not available mod {self.p}^{e}")
        table = self._bernoulli.get(e)
        if table is None:
            ops = self.ops
            table = ops.to_list(ops.bernoulli_table(self.p - 2, self.inverse_table(e), self.m(e)))
            # idempotent fill; concurrent readers at worst compute it twice
            self._bernoulli[e] = table
        return table[n]


def build_context(p: int, e_max: int = 3, crosscheck_limit: int = DEFAULT_CROSSCHECK_LIMIT) -> PrimeContext:
    """Build every table for prime ``p`` in O(p) kernel work plus the B_{p-3} computation.

    For p <= ``crosscheck_limit`` B_{p-3} is also computed by the O(p^2)
    recurrence and the two routes must agree.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p!r} is not prime")
    if p <= 3:
        raise ValueError("prime contexts need p > 3")
    if e_max not in (1, 2, 3):
        raise ValueError("e_max must be 1, 2 or 3")
    modulus = PrimePowerModulus(p, e_max)
    m = modulus.m
    ops = kernels.for_modulus(m)
    inv = ops.inverse_table(p, m)
    pow2 = ops.geometric(2, p, m)
    harmonic = {order: ops.prefix_power_sums(inv, order, m) for order in HARMONIC_ORDERS}
    q2 = fermat_quotient(p, e_max)
    if p > 5:
        b_pm3 = bernoulli_pm3_powersum(p, e_max)
        if p <= crosscheck_limit:
            witness = bernoulli_mod_recurrence(p - 3, modulus)
            if witness != b_pm3:
                raise ConsistencyError(f"B_{p - 3} mod {p}^{e_max}: power sum {b_pm3} != recurrence {witness}")
    else:
        b_pm3 = bernoulli_mod_recurrence(p - 3, modulus)
    reduced = {}
    for e in range(1, e_max):
        me = p**e
        reduced[("inv",), e] = ops.reduce(inv, me)
        reduced[("pow2",), e] = ops.reduce(pow2, me)
        for order in HARMONIC_ORDERS:
            reduced[("h", order), e] = ops.reduce(harmonic[order], me)
    return PrimeContext(p, e_max, modulus, ops, inv, pow2, harmonic, q2, b_pm3, reduced)
