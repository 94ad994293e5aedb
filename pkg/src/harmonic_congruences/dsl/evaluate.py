"""Modular evaluation of congruence ASTs.

A ``sum`` is evaluated in one pass over its whole range: the bound variable is
held as a list of integers and every value subexpression becomes a residue
vector handled by the kernel backend. Sums nested inside such a vectorized
body fall back to one inner evaluation per outer position. Index positions are
evaluated exactly over the integers (elementwise on lists).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional

from ..context import PrimeContext
from ..errors import CongruenceError, IndexOutOfRange, NonIntegerIndex, NotInvertible, NotPIntegral, UnboundVariable
from ..residue import PrimePowerModulus, Residue
from ..results import VerificationResult
from .nodes import (
    Add,
    Bernoulli,
    Binomial,
    CongruenceSpec,
    Const,
    Div,
    FermatQuotient,
    Harmonic,
    Mul,
    Neg,
    Pow,
    Prime,
    Sub,
    Sum,
    Var,
)

__all__ = ["evaluate_expr", "check_congruence", "binomial_mod"]

# gather from a power table when the exponent span is at most this dense
_POW_TABLE_SLACK = 64


def binomial_mod(n: int, k: int, p: int, e: int) -> int:
    """C(n, k) mod p^e with the factors of p tracked exactly."""
    if n < 0:
        raise IndexOutOfRange(f"binom({n}, {k}) needs a nonnegative top")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    m = p**e
    unit, val = 1, 0
    for j in range(1, k + 1):
        num, den = n - k + j, j
        while num % p == 0:
            num //= p
            val += 1
        while den % p == 0:
            den //= p
            val -= 1
        unit = unit * num % m * pow(den, -1, m) % m
    return unit * p**val % m if val < e else 0


def _imap(f, a, b):
    if isinstance(a, list):
        if isinstance(b, list):
            return [f(x, y) for x, y in zip(a, b)]
        return [f(x, b) for x in a]
    if isinstance(b, list):
        return [f(a, y) for y in b]
    return f(a, b)


def _exact_div(a: int, b: int) -> int:
    if b == 0:
        raise NonIntegerIndex("division by zero in an index expression")
    q, r = divmod(a, b)
    if r:
        raise NonIntegerIndex(f"{a}/{b} is not an integer")
    return q


def _int_pow(a: int, b: int) -> int:
    if b < 0:
        raise NonIntegerIndex(f"{a}^{b} is not an integer")
    return a**b


class _Evaluator:
    def __init__(self, ctx: PrimeContext, e: int):
        if not 1 <= e <= ctx.e_max:
            raise ValueError(f"context for p={ctx.p} covers exponents 1..{ctx.e_max}, not {e}")
        self.ctx = ctx
        self.p = ctx.p
        self.e = e
        self.m = ctx.p**e
        self.ops = ctx.ops

    # -- index arithmetic (exact integers, elementwise over lists) ------

    def index(self, node, env):
        if isinstance(node, Const):
            if node.value.denominator != 1:
                raise NonIntegerIndex(f"{node.value} is not an integer")
            return node.value.numerator
        if isinstance(node, Prime):
            return self.p
        if isinstance(node, Var):
            try:
                return env[node.name]
            except KeyError:
                raise UnboundVariable(node.name) from None
        if isinstance(node, Neg):
            v = self.index(node.operand, env)
            return [-x for x in v] if isinstance(v, list) else -v
        if isinstance(node, Add):
            return _imap(lambda x, y: x + y, self.index(node.left, env), self.index(node.right, env))
        if isinstance(node, Sub):
            return _imap(lambda x, y: x - y, self.index(node.left, env), self.index(node.right, env))
        if isinstance(node, Mul):
            return _imap(lambda x, y: x * y, self.index(node.left, env), self.index(node.right, env))
        if isinstance(node, Div):
            return _imap(_exact_div, self.index(node.left, env), self.index(node.right, env))
        if isinstance(node, Pow):
            return _imap(_int_pow, self.index(node.base, env), self.index(node.exp, env))
        raise NonIntegerIndex(f"{type(node).__name__} cannot appear in an index position")

    # -- value arithmetic (int residues or kernel vectors) -------------

    def value(self, node, env):
        if isinstance(node, Add):
            return self._add(self.value(node.left, env), self.value(node.right, env))
        if isinstance(node, Mul):
            return self._mul(self.value(node.left, env), self.value(node.right, env))
        if isinstance(node, Div):
            return self._mul(self.value(node.left, env), self._reciprocal(node.right, env))
        if isinstance(node, Sub):
            return self._sub(self.value(node.left, env), self.value(node.right, env))
        if isinstance(node, Neg):
            v = self.value(node.operand, env)
            return -v % self.m if isinstance(v, int) else self.ops.neg(v, self.m)
        if isinstance(node, Const):
            q = node.value
            if q.denominator % self.p == 0:
                raise NotPIntegral(f"constant {q} is not p-integral for p={self.p}")
            return q.numerator * pow(q.denominator, -1, self.m) % self.m
        if isinstance(node, Prime):
            return self.p % self.m
        if isinstance(node, FermatQuotient):
            return self.ctx.q2_at(self.e)
        if isinstance(node, Var):
            k = self.index(node, env)
            return k % self.m if isinstance(k, int) else self.ops.from_list([x % self.m for x in k])
        if isinstance(node, Pow):
            return self._pow(node, env)
        if isinstance(node, Harmonic):
            return self._harmonic(node, env)
        if isinstance(node, Sum):
            return self._sum(node, env)
        if isinstance(node, Binomial):
            return self._binomial(node, env)
        if isinstance(node, Bernoulli):
            n = self.index(node.index, env)
            if isinstance(n, int):
                return self.ctx.bernoulli_at(n, self.e)
            return self.ops.from_list([self.ctx.bernoulli_at(x, self.e) for x in n])
        raise TypeError(f"not an expression node: {node!r}")

    def _add(self, a, b):
        ops, m = self.ops, self.m
        if isinstance(a, int):
            return (a + b) % m if isinstance(b, int) else ops.add_scalar(b, a, m)
        return ops.add_scalar(a, b, m) if isinstance(b, int) else ops.add(a, b, m)

    def _sub(self, a, b):
        ops, m = self.ops, self.m
        if isinstance(a, int):
            return (a - b) % m if isinstance(b, int) else ops.rsub_scalar(a, b, m)
        return ops.add_scalar(a, -b % m, m) if isinstance(b, int) else ops.sub(a, b, m)

    def _mul(self, a, b):
        ops, m = self.ops, self.m
        if isinstance(a, int):
            return a * b % m if isinstance(b, int) else ops.mul_scalar(b, a, m)
        return ops.mul_scalar(a, b, m) if isinstance(b, int) else ops.mul(a, b, m)

    def _invert(self, v):
        if isinstance(v, int):
            if v % self.p == 0:
                raise NotInvertible(f"division by a multiple of p={self.p}")
            return pow(v, -1, self.m)
        try:
            return self.ops.batch_inverse(v, self.m, self.p)
        except ZeroDivisionError as exc:
            raise NotInvertible(f"division by a multiple of p={self.p} (term {exc.args[0]})") from None

    def _reciprocal(self, node, env):
        if isinstance(node, Var):
            k = self.index(node, env)
            if isinstance(k, list) and k and 0 < min(k) and max(k) < self.p:
                return self.ops.gather(self.ctx.inverse_table(self.e), k)
        return self._invert(self.value(node, env))

    def _scalar_pow(self, b: int, x: int) -> int:
        if x < 0 and b % self.p == 0:
            raise NotInvertible(f"negative power of a multiple of p={self.p}")
        return pow(b, x, self.m)

    def _pow(self, node, env):
        ops, m = self.ops, self.m
        base = self.value(node.base, env)
        ex = self.index(node.exp, env)
        if isinstance(ex, int):
            if isinstance(base, int):
                return self._scalar_pow(base, ex)
            if ex < 0:
                base, ex = self._invert(base), -ex
            return ops.pow_scalar(base, ex, m)
        if isinstance(base, int):
            lo, hi = min(ex), max(ex)
            if base == 2 % m and lo >= 0 and hi < self.p:
                return ops.gather(self.ctx.pow2_table(self.e), ex)
            if hi - lo <= 4 * len(ex) + _POW_TABLE_SLACK:
                start = self._scalar_pow(base, lo)
                table = ops.mul_scalar(ops.geometric(base, hi - lo + 1, m), start, m)
                return ops.gather(table, [x - lo for x in ex])
            return ops.from_list([self._scalar_pow(base, x) for x in ex])
        bases = ops.to_list(base)
        return ops.from_list([self._scalar_pow(b, x) for b, x in zip(bases, ex)])

    def _harmonic_scalar(self, n: int, order: int) -> int:
        if n < 0:
            raise IndexOutOfRange(f"H({n}) has a negative argument")
        if n < self.p and order in self.ctx.harmonic:
            return int(self.ctx.harmonic_table(order, self.e)[n])
        if n >= self.p:
            raise NotInvertible(f"H({n}, {order}) contains 1/{self.p}")
        inv = self.ctx.inverse_table(self.e)
        return sum(pow(int(inv[k]), order, self.m) for k in range(1, n + 1)) % self.m

    def _harmonic(self, node, env):
        n = self.index(node.arg, env)
        if isinstance(n, int):
            return self._harmonic_scalar(n, node.order)
        if n and node.order in self.ctx.harmonic and 0 <= min(n) and max(n) < self.p:
            return self.ops.gather(self.ctx.harmonic_table(node.order, self.e), n)
        return self.ops.from_list([self._harmonic_scalar(x, node.order) for x in n])

    def _binomial_row(self, n: int, kmax: int):
        """C(n, k) mod p^e for k = 0..min(kmax, n)."""
        if n < 0:
            raise IndexOutOfRange(f"binom({n}, k) needs a nonnegative top")
        return self.ops.binomial_row(n, kmax, self.p, self.e, self.ctx.inverse_table(self.e), self.m)

    def _binomial(self, node, env):
        top = self.index(node.top, env)
        bottom = self.index(node.bottom, env)
        if isinstance(top, int):
            if isinstance(bottom, int):
                return binomial_mod(top, bottom, self.p, self.e)
            hi = max(bottom)
            if 0 <= min(bottom) and hi <= top:
                return self.ops.gather(self._binomial_row(top, hi), bottom)
            row = self._binomial_row(top, max(hi, 0))
            return self.ops.from_list([int(row[k]) if 0 <= k <= top else 0 for k in bottom])
        bottoms = bottom if isinstance(bottom, list) else [bottom] * len(top)
        return self.ops.from_list([binomial_mod(n, k, self.p, self.e) for n, k in zip(top, bottoms)])

    def _sum(self, node, env):
        lo = self.index(node.lo, env)
        hi = self.index(node.hi, env)
        frame = _frame_length(env)
        if frame is None:
            if hi < lo:
                return 0
            ks = list(range(lo, hi + 1))
            body = self.value(node.body, {**env, node.var: ks})
            if isinstance(body, int):
                return body * len(ks) % self.m
            return self.ops.total(body, self.m)
        out = []
        for i in range(frame):
            out.append(self._sum(node, {k: v[i] if isinstance(v, list) else v for k, v in env.items()}))
        return self.ops.from_list(out)


def _frame_length(env) -> Optional[int]:
    for v in env.values():
        if isinstance(v, list):
            return len(v)
    return None


def evaluate_expr(expr, ctx: PrimeContext, mod_exponent: int, bindings: Optional[dict] = None) -> Residue:
    """Value of ``expr`` in Z/p^mod_exponent with integer ``bindings`` for free variables."""
    ev = _Evaluator(ctx, mod_exponent)
    env = {}
    for name, v in (bindings or {}).items():
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise NonIntegerIndex(f"binding {name}={v} is not an integer")
            v = v.numerator
        env[name] = int(v)
    value = ev.value(expr, env)
    return Residue(int(value), PrimePowerModulus(ctx.p, mod_exponent))


def _as_vector(ops, v, n):
    return ops.from_list([v] * n) if isinstance(v, int) else v


def check_congruence(spec: CongruenceSpec, ctx: Optional[PrimeContext], p: Optional[int] = None) -> VerificationResult:
    """Compare both sides of ``spec`` at the context's prime.

    The precondition is checked before anything is evaluated, so ``ctx`` may be
    ``None`` when ``p`` is given and the entry does not apply.
    """
    p = ctx.p if ctx is not None else p
    if not spec.applies_to(p):
        return VerificationResult(spec.id, p, "skipped", message=f"requires p>{spec.min_prime}")
    modulus = PrimePowerModulus(p, spec.mod_exponent)
    try:
        if ctx is None:
            raise ValueError(f"no prime context for p={p}")
        ev = _Evaluator(ctx, spec.mod_exponent)
        if spec.forall is None:
            lhs = Residue(int(ev.value(spec.lhs, {})), modulus)
            rhs = Residue(int(ev.value(spec.rhs, {})), modulus)
            return VerificationResult(spec.id, p, "pass" if lhs == rhs else "fail", lhs, rhs)
        q = spec.forall
        lo, hi = ev.index(q.lo, {}), ev.index(q.hi, {})
        if hi < lo:
            return VerificationResult(spec.id, p, "pass", message="empty range")
        ks = list(range(lo, hi + 1))
        env = {q.var: ks}
        ops = ctx.ops
        left = _as_vector(ops, ev.value(spec.lhs, env), len(ks))
        right = _as_vector(ops, ev.value(spec.rhs, env), len(ks))
        i = ops.first_mismatch(left, right)
        if i < 0:
            return VerificationResult(spec.id, p, "pass", Residue(int(left[0]), modulus), Residue(int(right[0]), modulus))
        return VerificationResult(
            spec.id,
            p,
            "fail",
            Residue(int(left[i]), modulus),
            Residue(int(right[i]), modulus),
            message=f"first failure at {q.var}={ks[i]}",
        )
    except (CongruenceError, ArithmeticError, ValueError) as exc:
        return VerificationResult(spec.id, p, "error", message=f"{type(exc).__name__}: {exc}")
