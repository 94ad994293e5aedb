"""Congruence-statement language: AST, parser, printer and modular evaluator."""
from .evaluate import binomial_mod, check_congruence, evaluate_expr
from .nodes import (
    Add,
    Bernoulli,
    Binomial,
    CongruenceSpec,
    Const,
    Div,
    Expr,
    FermatQuotient,
    Forall,
    Harmonic,
    Mul,
    Neg,
    Pow,
    Prime,
    Sub,
    Sum,
    Var,
)
from .parser import parse_catalog, parse_congruence, parse_expr, tokenize
from .printer import print_congruence, print_expr

__all__ = [
    "Add", "Bernoulli", "Binomial", "CongruenceSpec", "Const", "Div", "Expr",
    "FermatQuotient", "Forall", "Harmonic", "Mul", "Neg", "Pow", "Prime", "Sub",
    "Sum", "Var", "binomial_mod", "check_congruence", "evaluate_expr",
    "parse_catalog", "parse_congruence", "parse_expr", "print_congruence",
    "print_expr", "tokenize",
]
