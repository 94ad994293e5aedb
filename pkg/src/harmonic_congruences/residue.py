"""Arithmetic in Z/p^e for odd primes p and 1 <= e <= 4."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import kernels
from .errors import ModulusMismatch, NotInvertible, NotPIntegral

__all__ = [
    "PrimePowerModulus",
    "Residue",
    "is_prime",
    "inverse",
    "reduce_rational",
    "pow_mod",
    "fermat_quotient",
    "batch_inverses",
]

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimePowerModulus:
    p: int
    e: int
    m: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 3 or not is_prime(self.p):
            raise ValueError(f"{self.p!r} is not an odd prime")
        if self.e not in (1, 2, 3, 4):
            raise ValueError(f"exponent must be in 1..4, got {self.e!r}")
        object.__setattr__(self, "m", self.p**self.e)

    def __call__(self, value) -> "Residue":
        """Coerce an int or a p-integral Fraction into this ring."""
        if isinstance(value, Fraction):
            return reduce_rational(value, self)
        return Residue(value % self.m, self)

    def lower(self, e: int) -> "PrimePowerModulus":
        return PrimePowerModulus(self.p, e)

    def __str__(self):
        return f"{self.p}^{self.e}" if self.e > 1 else str(self.p)


@dataclass(frozen=True)
class Residue:
    """Least nonnegative representative of a class mod p^e."""

    value: int
    modulus: PrimePowerModulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.m:
            raise ValueError(f"{self.value} is not reduced mod {self.modulus.m}")

    def _other(self, other) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"mod {self.modulus} vs mod {other.modulus}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return reduce_rational(other, self.modulus).value
        return NotImplemented

    def _wrap(self, v: int) -> "Residue":
        return Residue(v % self.modulus.m, self.modulus)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value - o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(o - self.value)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(-self.value)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self * inverse(self._wrap(o))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(o) * inverse(self)

    def __pow__(self, exp: int):
        return pow_mod(self, exp)

    def __int__(self):
        return self.value

    def is_unit(self) -> bool:
        return self.value % self.modulus.p != 0

    def reduce_to(self, e: int) -> "Residue":
        """Image under Z/p^a -> Z/p^e for e <= a."""
        if e > self.modulus.e:
            raise ValueError("cannot lift a residue to a finer modulus")
        target = self.modulus.lower(e)
        return Residue(self.value % target.m, target)

    def __str__(self):
        return str(self.value)


def inverse(x: Residue) -> Residue:
    if x.value % x.modulus.p == 0:
        raise NotInvertible(f"{x.value} is not a unit mod {x.modulus.m}")
    return Residue(pow(x.value, -1, x.modulus.m), x.modulus)


def reduce_rational(q: Fraction, m: PrimePowerModulus) -> Residue:
    q = Fraction(q)
    if q.denominator % m.p == 0:
        raise NotPIntegral(f"{q} has p={m.p} in its denominator")
    return Residue(q.numerator * pow(q.denominator, -1, m.m) % m.m, m)


def pow_mod(base: Residue, exp: int) -> Residue:
    if exp < 0:
        base = inverse(base)
        exp = -exp
    return Residue(pow(base.value, exp, base.modulus.m), base.modulus)


def fermat_quotient(p: int, e: int = 1) -> Residue:
    """(2^(p-1) - 1)/p mod p^e, via exact division of 2^(p-1) - 1 mod p^(e+1)."""
    if e not in (1, 2, 3):
        raise ValueError("fermat_quotient supports exponents 1..3")
    target = PrimePowerModulus(p, e)
    lifted = (pow(2, p - 1, p ** (e + 1)) - 1) % p ** (e + 1)
    assert lifted % p == 0, "Fermat's little theorem violated"
    return Residue(lifted // p, target)


def batch_inverses(m: PrimePowerModulus) -> list[Residue]:
    """[1/1, 1/2, ..., 1/(p-1)] mod p^e (position k-1 holds 1/k)."""
    ops = kernels.for_modulus(m.m)
    table = ops.to_list(ops.inverse_table(m.p, m.m))
    return [Residue(v, m) for v in table[1:]]
