"""Canonical text form of the AST; ``parse(print(x)) == x`` for parsed input."""
from __future__ import annotations

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

_ADD, _MUL, _UNARY, _POW, _ATOM = 1, 2, 3, 4, 5


def _prec(node) -> int:
    if isinstance(node, (Add, Sub)):
        return _ADD
    if isinstance(node, (Mul, Div)):
        return _MUL
    if isinstance(node, Neg):
        return _UNARY
    if isinstance(node, Pow):
        return _POW
    return _ATOM


def _is_int_const(node) -> bool:
    return isinstance(node, Const) and node.value.denominator == 1


def _paren(node) -> str:
    if isinstance(node, Div) and _is_int_const(node.left) and _is_int_const(node.right):
        # "(a/b)" would read back as a rational literal
        return f"(({print_expr(node.left)})/{print_expr(node.right)})"
    return f"({print_expr(node)})"


def _wrap(node, needs: bool) -> str:
    return _paren(node) if needs else print_expr(node)


def _index_atom(node) -> bool:
    return _is_int_const(node) or isinstance(node, (Prime, Var))


def _index_power(node) -> bool:
    if _index_atom(node):
        return True
    return isinstance(node, Pow) and _index_atom(node.base) and _exponent_ok(node.exp)


def _exponent_ok(node) -> bool:
    if isinstance(node, Neg):
        return _index_power(node.operand)
    return _index_power(node)


def print_expr(node) -> str:
    if isinstance(node, Const):
        v = node.value
        return str(v.numerator) if v.denominator == 1 else f"({v.numerator}/{v.denominator})"
    if isinstance(node, Prime):
        return "p"
    if isinstance(node, FermatQuotient):
        return "q2"
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Bernoulli):
        return f"B({print_expr(node.index)})"
    if isinstance(node, Harmonic):
        if node.order == 1:
            return f"H({print_expr(node.arg)})"
        return f"H({print_expr(node.arg)}, {node.order})"
    if isinstance(node, Binomial):
        return f"binom({print_expr(node.top)}, {print_expr(node.bottom)})"
    if isinstance(node, Sum):
        return f"sum({node.var}={print_expr(node.lo)}..{print_expr(node.hi)}, {print_expr(node.body)})"
    if isinstance(node, Pow):
        base = _wrap(node.base, _prec(node.base) <= _POW)
        exp = _wrap(node.exp, not _exponent_ok(node.exp))
        return f"{base}^{exp}"
    if isinstance(node, Neg):
        return "-" + _wrap(node.operand, _prec(node.operand) < _POW)
    if isinstance(node, (Add, Sub)):
        op = " + " if isinstance(node, Add) else " - "
        return _wrap(node.left, _prec(node.left) < _ADD) + op + _wrap(node.right, _prec(node.right) <= _ADD)
    if isinstance(node, (Mul, Div)):
        op = "*" if isinstance(node, Mul) else "/"
        return _wrap(node.left, _prec(node.left) < _MUL) + op + _wrap(node.right, _prec(node.right) <= _MUL)
    raise TypeError(f"not an expression node: {node!r}")


def print_congruence(spec: CongruenceSpec) -> str:
    body = f"{print_expr(spec.lhs)} === {print_expr(spec.rhs)}"
    if spec.forall is not None:
        q = spec.forall
        body = f"forall({q.var}={print_expr(q.lo)}..{print_expr(q.hi)}, {body})"
    modulus = "p" if spec.mod_exponent == 1 else f"p^{spec.mod_exponent}"
    return f"{spec.id} | p>{spec.min_prime} | {body} (mod {modulus})"
