"""The built-in catalog: one statement per congruence, in report order.

Double sums over 1 <= k <= i <= p-1 are written in their single-sum form
sum_k f(k) * (H(p-1) - H(k-1)); ``NESTED_FORMS`` keeps the literal double
sums so the two shapes can be checked against each other.
"""
from __future__ import annotations

from functools import lru_cache

from .dsl import CongruenceSpec, parse_catalog, parse_congruence

BUILTIN_CATALOG = """\
# Weighted harmonic sums, p > 5
con2   | p>5 | sum(k=1..p-1, 2^k*H(k)/k) === -q2^2 + (2/3)*p*q2^3 + (1/12)*p*B(p-3) (mod p^2)
con3   | p>5 | sum(k=1..p-1, 2^k*H(k)/k^2) === -(1/3)*q2^3 + (23/24)*B(p-3) (mod p)
con4   | p>5 | sum(k=1..p-1, H(k)/(k^2*2^k)) === (5/8)*B(p-3) (mod p)
con5   | p>5 | sum(k=1..p-1, 2^k*H(k)^2/k) === -(1/3)*q2^3 + (11/24)*B(p-3) (mod p)
con5.1 | p>5 | sum(k=1..p-1, H(k)^2/(k*2^k)) === (7/8)*B(p-3) (mod p)
con6   | p>5 | sum(k=1..p-1, 2^k*H(k, 2)/k) === -(1/3)*q2^3 - (25/24)*B(p-3) (mod p)
con7   | p>5 | sum(k=1..p-1, H(k)/(k*2^k)) === (7/24)*p*B(p-3) (mod p^2)
con7.1 | p>5 | sum(k=1..p-1, H(k, 2)/(k*2^k)) === -(3/8)*B(p-3) (mod p)
con8   | p>5 | sum(k=1..p-1, 2^k*H(k)/k) === -q2^2 (mod p)

# Binomial coefficients C(p-1, k) through harmonic numbers
con9   | p>3 | forall(k=1..p-1, binom(p-1, k) === (-1)^k - (-1)^k*p*H(k) + (-1)^k*(p^2/2)*(H(k)^2 - H(k, 2))) (mod p^3)
con10  | p>3 | forall(k=1..p-1, binom(p-1, k) === (-1)^k - (-1)^k*p*H(k)) (mod p^2)

# Full- and half-range harmonic sums
con11  | p>3 | sum(k=1..p-1, 1/k) === -(1/3)*p^2*B(p-3) (mod p^3)
con12  | p>3 | sum(k=1..p-1, 1/k^2) === (2/3)*p*B(p-3) (mod p^2)
con13  | p>3 | sum(k=1..p-1, 1/k^3) === 0 (mod p^2)
con14  | p>3 | sum(k=1..(p-1)/2, 1/k) === -2*q2 + p*q2^2 - (2/3)*p^2*q2^3 - (7/12)*p^2*B(p-3) (mod p^3)
con15  | p>3 | sum(k=1..(p-1)/2, 1/k^2) === (7/3)*p*B(p-3) (mod p^2)
con16  | p>3 | sum(k=1..(p-1)/2, 1/k^3) === -2*B(p-3) (mod p)

# Sums weighted by powers of 2
con17  | p>3 | sum(k=1..p-1, 2^k/k) === -2*q2 - (7/12)*p^2*B(p-3) (mod p^3)
con18  | p>3 | sum(k=1..p-1, 2^k/k^2) === -q2^2 + p*((2/3)*q2^3 + (7/6)*B(p-3)) (mod p^2)
con19  | p>3 | sum(k=1..p-1, 1/(k*2^k)) === q2 - (1/2)*p*q2^2 (mod p^2)
con20  | p>3 | sum(k=1..p-1, 1/(k^2*2^k)) === -(1/2)*q2^2 (mod p)
con21  | p>3 | sum(k=1..p-1, 2^k/k^3) === -(1/3)*q2^3 - (7/24)*B(p-3) (mod p)
con22  | p>3 | sum(k=1..p-1, 1/(k^3*2^k)) === (1/6)*q2^3 + (7/48)*B(p-3) (mod p)

# Alternating sums and the reflection H(k) = H(p-k-1) mod p
con24  | p>3 | sum(k=1..p-1, binom(p-1, k)/k^2) === (3/4)*p*B(p-3) (mod p^2)
con26  | p>3 | sum(k=1..p-1, (-1)^k/k^2) === (1/2)*p*B(p-3) (mod p^2)
con27  | p>3 | sum(k=1..p-1, (-1)^k/k^3) === -(1/2)*B(p-3) (mod p)
con28  | p>3 | forall(k=1..p-1, H(k) === H(p-k-1)) (mod p)
con29  | p>3 | sum(k=1..p-1, (-1)^k*H(k)/k^2) === -(1/4)*B(p-3) (mod p)
con31  | p>3 | sum(k=1..p-1, 2^k/k*(H(p-1) - H(k))) === -sum(k=1..p-1, 2^k*H(k)/k) (mod p^2)
con32  | p>3 | sum(k=1..p-1, (H(p-1) - H(k-1))/k) === (1/3)*p*B(p-3) (mod p^2)

# Binomial sums with weights (-2)^k
con37  | p>3 | sum(k=1..p-1, (-2)^k/k*binom(p, k)) === p*q2^2 - (2/3)*p^2*q2^3 + (1/12)*p^2*B(p-3) (mod p^3)
con38  | p>3 | sum(k=1..p-1, (-2)^k/k*binom(p-1, k)) === -2*q2 + p*q2^2 - (2/3)*p^2*q2^3 + (1/12)*p^2*B(p-3) (mod p^3)

# Shifted harmonic numbers H(k-1)
con41  | p>3 | sum(k=1..p-1, 2^k*H(k-1)/k^2) === (5/4)*B(p-3) (mod p)
con42  | p>3 | sum(k=1..p-1, 2^k*H(k-1)/k^2) === 2*sum(k=1..p-1, H(k)/(k^2*2^k)) (mod p)
con54  | p>3 | sum(k=1..p-1, 2^k*H(k-1)/k) === -(13/12)*p*B(p-3) (mod p^2)
con58  | p>3 | sum(k=1..p-1, 2^k*H(k-1)^2/k) === -(7/4)*B(p-3) (mod p)
con66  | p>3 | sum(k=1..p-1, 2^k*H(k-1, 2)/k) === -(3/4)*B(p-3) (mod p)

# Double sums over 1 <= k <= i <= p-1
con60  | p>3 | sum(k=1..p-1, 2^k/k^2*(H(p-1) - H(k-1))) === -(5/4)*B(p-3) (mod p)
con61  | p>3 | sum(k=1..p-1, 2^k/k*(H(p-1, 2) - H(k-1, 2))) === (3/4)*B(p-3) (mod p)
con62  | p>3 | sum(k=1..p-1, 2^k/k*(H(p-1) - H(k-1))) === (13/12)*p*B(p-3) (mod p^2)
"""

NESTED_FORMS = {
    "con31": "sum(k=1..p-1, sum(i=k+1..p-1, 2^k/(i*k)))",
    "con32": "sum(k=1..p-1, sum(i=k..p-1, 1/(k*i)))",
    "con60": "sum(k=1..p-1, sum(i=k..p-1, 2^k/(i*k^2)))",
    "con61": "sum(k=1..p-1, sum(i=k..p-1, 2^k/(i^2*k)))",
    "con62": "sum(k=1..p-1, sum(i=k..p-1, 2^k/(i*k)))",
}


@lru_cache(maxsize=None)
def _builtin() -> tuple[CongruenceSpec, ...]:
    return tuple(parse_catalog(BUILTIN_CATALOG))


def builtin_catalog() -> list[CongruenceSpec]:
    return list(_builtin())


def nested_variant(spec: CongruenceSpec) -> CongruenceSpec:
    """The entry with its flattened left side replaced by the literal double sum."""
    from .dsl import parse_expr

    return CongruenceSpec(
        spec.id, parse_expr(NESTED_FORMS[spec.id]), spec.rhs, spec.mod_exponent, spec.min_prime, spec.forall
    )


def load_catalog(path) -> list[CongruenceSpec]:
    with open(path, encoding="utf-8") as fh:
        return parse_catalog(fh.read())


def select(catalog, ids) -> list[CongruenceSpec]:
    """Keep entries named in ``ids`` (catalog order); unknown ids raise KeyError."""
    wanted = list(ids)
    known = {s.id for s in catalog}
    missing = [i for i in wanted if i not in known]
    if missing:
        raise KeyError(", ".join(missing))
    keep = set(wanted)
    return [s for s in catalog if s.id in keep]


def mutate_rhs(spec: CongruenceSpec, offset: int = 1) -> CongruenceSpec:
    """Copy of ``spec`` whose right side is shifted by an integer constant."""
    from .dsl import Add, Const

    return spec.with_rhs(Add(spec.rhs, Const(offset)))


__all__ = ["BUILTIN_CATALOG", "NESTED_FORMS", "builtin_catalog", "load_catalog", "nested_variant", "select",
           "mutate_rhs", "parse_congruence"]
