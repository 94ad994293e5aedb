"""AST for congruence statements.

Nodes are frozen dataclasses, so structural equality is plain ``==``. Index
positions (sum bounds, exponents, arguments of ``B``, ``H`` and ``binom``)
reuse the same node classes but are evaluated over the integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union


@dataclass(frozen=True)
class Const:
    """Nonnegative rational literal; negative values are ``Neg(Const(...))``."""

    value: Fraction

    def __post_init__(self):
        value = Fraction(self.value)
        if value < 0:
            raise ValueError("Const holds nonnegative values; wrap in Neg")
        object.__setattr__(self, "value", value)


@dataclass(frozen=True)
class Prime:
    pass


@dataclass(frozen=True)
class FermatQuotient:
    pass


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Bernoulli:
    index: "Expr"


@dataclass(frozen=True)
class Harmonic:
    arg: "Expr"
    order: int = 1


@dataclass(frozen=True)
class Binomial:
    top: "Expr"
    bottom: "Expr"


@dataclass(frozen=True)
class Sum:
    var: str
    lo: "Expr"
    hi: "Expr"
    body: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exp: "Expr"


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Div:
    left: "Expr"
    right: "Expr"


Expr = Union[Const, Prime, FermatQuotient, Var, Bernoulli, Harmonic, Binomial, Sum, Pow, Neg, Add, Sub, Mul, Div]
BINARY = (Add, Sub, Mul, Div)


@dataclass(frozen=True)
class Forall:
    var: str
    lo: Expr
    hi: Expr


@dataclass(frozen=True)
class CongruenceSpec:
    """``lhs == rhs (mod p^mod_exponent)`` for every prime p > min_prime.

    With ``forall`` set, both sides are checked for each integer value of the
    quantified variable in ``lo..hi``.
    """

    id: str
    lhs: Expr
    rhs: Expr
    mod_exponent: int
    min_prime: int
    forall: Optional[Forall] = None

    def __post_init__(self):
        if self.mod_exponent not in (1, 2, 3):
            raise ValueError("mod_exponent must be 1, 2 or 3")

    def applies_to(self, p: int) -> bool:
        return p > self.min_prime

    def with_rhs(self, rhs: Expr) -> "CongruenceSpec":
        return CongruenceSpec(self.id, self.lhs, rhs, self.mod_exponent, self.min_prime, self.forall)
