"""Sweeps of a catalog over a range of primes."""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Sequence

from . import kernels
from .context import DEFAULT_CROSSCHECK_LIMIT, build_context
from .dsl import CongruenceSpec, check_congruence
from .results import VerificationReport, VerificationResult

__all__ = ["sieve_primes", "verify_prime", "verify_range", "informational_check", "PRIME_CEILING"]

# keeps p^4 (the Fermat-quotient lift at e_max = 3) comfortably exact and fast
PRIME_CEILING = 10**6


def sieve_primes(lo: int, hi: int) -> list[int]:
    """All primes in [lo, hi], ascending."""
    if lo > hi:
        raise ValueError("lo must not exceed hi")
    if hi < 2:
        return []
    flags = bytearray([1]) * (hi + 1)
    flags[0] = flags[1] = 0
    for i in range(2, int(hi**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, hi + 1, i)))
    return [n for n in range(max(lo, 2), hi + 1) if flags[n]]


def verify_prime(
    catalog: Sequence[CongruenceSpec],
    p: int,
    e_max: int | None = None,
    crosscheck_limit: int = DEFAULT_CROSSCHECK_LIMIT,
) -> list[VerificationResult]:
    """Check every entry at one prime, building the shared context only if some entry applies."""
    if e_max is None:
        e_max = max((s.mod_exponent for s in catalog), default=1)
    if not any(s.applies_to(p) for s in catalog):
        return [check_congruence(s, None, p) for s in catalog]
    try:
        ctx = build_context(p, e_max, crosscheck_limit)
    except Exception as exc:  # every applicable entry reports the same context fault
        msg = f"{type(exc).__name__}: {exc}"
        return [
            check_congruence(s, None, p) if not s.applies_to(p) else VerificationResult(s.id, p, "error", message=msg)
            for s in catalog
        ]
    return [check_congruence(s, ctx, p) for s in catalog]


def _worker_init(backend: str) -> None:
    kernels.set_backend(backend)


def _verify_chunk(args):
    catalog, primes, e_max, crosscheck_limit = args
    return [(p, verify_prime(catalog, p, e_max, crosscheck_limit)) for p in primes]


def _chunks(items: list[int], n: int) -> list[list[int]]:
    # round-robin so large and small primes spread evenly over workers
    return [items[i::n] for i in range(n) if items[i::n]]


def verify_range(
    catalog: Iterable[CongruenceSpec],
    lo: int,
    hi: int,
    jobs: int = 1,
    crosscheck_limit: int = DEFAULT_CROSSCHECK_LIMIT,
) -> VerificationReport:
    """One result per (entry, prime), ordered by catalog position then p; independent of ``jobs``."""
    if lo > hi:
        raise ValueError("lo must not exceed hi")
    if hi > PRIME_CEILING:
        raise ValueError(f"primes above {PRIME_CEILING} are not supported")
    catalog = list(catalog)
    start = time.perf_counter()
    primes = sieve_primes(lo, hi)
    e_max = max((s.mod_exponent for s in catalog), default=1)
    per_prime: dict[int, list[VerificationResult]] = {}
    if catalog and primes:
        jobs = max(1, min(jobs, len(primes)))
        if jobs == 1:
            for p in primes:
                per_prime[p] = verify_prime(catalog, p, e_max, crosscheck_limit)
        else:
            tasks = [(catalog, chunk, e_max, crosscheck_limit) for chunk in _chunks(primes, jobs * 4)]
            with ProcessPoolExecutor(jobs, initializer=_worker_init, initargs=(kernels.active(),)) as pool:
                for batch in pool.map(_verify_chunk, tasks):
                    per_prime.update(batch)
    results = [per_prime[p][i] for i in range(len(catalog)) for p in primes]
    return VerificationReport(lo, hi, tuple(results), time.perf_counter() - start)


def informational_check(catalog: Iterable[CongruenceSpec], p: int = 5) -> list[VerificationResult]:
    """Evaluate entries whose precondition excludes ``p`` as if it held; nothing here counts as a defect."""
    chosen = [s for s in catalog if not s.applies_to(p)]
    if not chosen:
        return []
    relaxed = [CongruenceSpec(s.id, s.lhs, s.rhs, s.mod_exponent, p - 1, s.forall) for s in chosen]
    return verify_prime(relaxed, p)


def default_jobs() -> int:
    return os.cpu_count() or 1
