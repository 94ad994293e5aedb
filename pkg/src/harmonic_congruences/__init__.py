"""Verification engine for harmonic-number congruences modulo prime powers."""
from .catalog import builtin_catalog
from .context import PrimeContext, build_context
from .dsl import check_congruence, evaluate_expr, parse_congruence, parse_expr, print_congruence
from .exactnum import Rational, bernoulli_exact, binomial_exact, harmonic_exact
from .residue import PrimePowerModulus, Residue, fermat_quotient, inverse, pow_mod, reduce_rational
from .results import VerificationReport, VerificationResult, emit_report
from .verify import sieve_primes, verify_range

__version__ = "0.1.0"

__all__ = [
    "PrimeContext", "PrimePowerModulus", "Rational", "Residue", "VerificationReport",
    "VerificationResult", "bernoulli_exact", "binomial_exact", "build_context",
    "builtin_catalog", "check_congruence", "emit_report", "evaluate_expr",
    "fermat_quotient", "harmonic_exact", "inverse", "parse_congruence", "parse_expr",
    "pow_mod", "print_congruence", "reduce_rational", "sieve_primes", "verify_range",
]
