"""Command-line front end.

Exit status: 0 when everything checked passes (skips allowed), 1 on any
failure or evaluation error, 2 on usage or parse errors. Reports go to stdout;
diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import sys

from . import catalog as catalog_mod
from .bernoulli_mod import bernoulli_mod_recurrence, bernoulli_pm3_powersum
from .context import build_context
from .dsl import evaluate_expr, parse_expr, print_congruence
from .errors import CongruenceError, ParseError
from .identities import IDENTITY_CHECKS, run_identity_checks
from .residue import PrimePowerModulus
from .results import FORMATS, emit_report
from .verify import PRIME_CEILING, default_jobs, informational_check, verify_range

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _prime_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None
    if lo_i > hi_i:
        raise argparse.ArgumentTypeError(f"empty range {text!r}: LO exceeds HI")
    if hi_i > PRIME_CEILING:
        raise argparse.ArgumentTypeError(f"HI must not exceed {PRIME_CEILING}")
    return lo_i, hi_i


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def _exponent(text: str) -> int:
    v = _positive(text)
    if v > 3:
        raise argparse.ArgumentTypeError("exponent must be 1, 2 or 3")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="harmcong", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check catalog congruences over a range of primes")
    v.add_argument("--primes", type=_prime_range, default=(7, 2000), metavar="LO..HI")
    v.add_argument("--ids", help="comma-separated entry ids (default: all)")
    v.add_argument("--catalog", metavar="PATH", help="catalog file (default: built-in)")
    v.add_argument("--format", choices=FORMATS, default="text")
    v.add_argument("--jobs", type=_positive, default=None, help="worker processes (default: logical cores)")
    v.add_argument("--informational-p5", action="store_true", help="also try p=5 on entries stated for p>5")

    e = sub.add_parser("eval", help="evaluate one expression at a prime")
    e.add_argument("--expr", required=True)
    e.add_argument("--prime", type=int, required=True)
    e.add_argument("--exp", type=_exponent, required=True)

    b = sub.add_parser("bernoulli", help="Bernoulli number mod p^e")
    b.add_argument("--prime", type=int, required=True)
    b.add_argument("--exp", type=_exponent, required=True)
    b.add_argument("--index", type=int, default=None, help="default p-3")
    b.add_argument("--method", choices=("recurrence", "powersum", "both"), default="both")

    i = sub.add_parser("identities", help="exact checks of the combinatorial identities")
    i.add_argument("--max-n", type=_positive, default=64)
    i.add_argument("--which", default=",".join(IDENTITY_CHECKS), help="comma-separated subset")

    c = sub.add_parser("catalog", help="list or show catalog entries")
    g = c.add_mutually_exclusive_group()
    g.add_argument("--list", action="store_true")
    g.add_argument("--show", metavar="ID")
    c.add_argument("--catalog", metavar="PATH", help="catalog file (default: built-in)")
    return parser


def _load(path):
    try:
        return catalog_mod.load_catalog(path) if path else catalog_mod.builtin_catalog()
    except OSError as exc:
        raise UsageError(f"cannot read catalog: {exc}") from None


def _split(text):
    return [t.strip() for t in text.split(",") if t.strip()]


def cmd_verify(args, out, err) -> int:
    specs = _load(args.catalog)
    if args.ids:
        try:
            specs = catalog_mod.select(specs, _split(args.ids))
        except KeyError as exc:
            raise UsageError(f"unknown id(s): {exc.args[0]}") from None
    lo, hi = args.primes
    report = verify_range(specs, lo, hi, jobs=args.jobs or default_jobs())
    out.write(emit_report(report, args.format))
    out.flush()
    s = report.summary
    err.write(f"checked {len(report.results)} (entry, prime) pairs in {report.elapsed:.2f}s: "
              f"{s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped, {s['error']} error\n")
    if args.informational_p5:
        for r in informational_check(specs, 5):
            err.write(f"info p=5 {r.congruence_id}: {r.status}\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_eval(args, out, err) -> int:
    node = parse_expr(args.expr)
    try:
        ctx = build_context(args.prime, args.exp)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        value = evaluate_expr(node, ctx, args.exp)
    except (CongruenceError, ArithmeticError) as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_FAIL
    out.write(f"{value.value}\n".encode())
    return EXIT_OK


def cmd_bernoulli(args, out, err) -> int:
    p, e = args.prime, args.exp
    try:
        modulus = PrimePowerModulus(p, e)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    index = p - 3 if args.index is None else args.index
    powersum_ok = index == p - 3 and p > 5
    if args.method == "both":
        methods = ["recurrence", "powersum"] if powersum_ok else ["recurrence"]
    else:
        methods = [args.method]
    if "powersum" in methods and not powersum_ok:
        raise UsageError("the power-sum method only computes B_{p-3} for p > 5")
    try:
        values = {}
        if "recurrence" in methods:
            values["recurrence"] = bernoulli_mod_recurrence(index, modulus).value
        if "powersum" in methods:
            values["powersum"] = bernoulli_pm3_powersum(p, e).value
    except CongruenceError as exc:
        raise UsageError(str(exc)) from None
    if len(values) == 1:
        out.write(f"{next(iter(values.values()))}\n".encode())
        return EXIT_OK
    out.write("".join(f"{k}: {v}\n" for k, v in values.items()).encode())
    if len(set(values.values())) != 1:
        err.write("methods disagree\n")
        return EXIT_FAIL
    return EXIT_OK


def cmd_identities(args, out, err) -> int:
    which = _split(args.which)
    unknown = [w for w in which if w not in IDENTITY_CHECKS]
    if unknown:
        raise UsageError(f"unknown identity name(s): {', '.join(unknown)}")
    failures = run_identity_checks(args.max_n, which)
    lines = []
    for name, bad in failures.items():
        first = IDENTITY_CHECKS[name][0]
        status = "ok" if not bad else "FAIL at n=" + ",".join(map(str, bad))
        lines.append(f"{name}: n={first}..{args.max_n} {status}\n")
    out.write("".join(lines).encode())
    return EXIT_OK if not any(failures.values()) else EXIT_FAIL


def cmd_catalog(args, out, err) -> int:
    specs = _load(args.catalog)
    if args.show:
        try:
            (spec,) = catalog_mod.select(specs, [args.show])
        except KeyError:
            raise UsageError(f"unknown id {args.show!r}") from None
        out.write((print_congruence(spec) + "\n").encode())
        return EXIT_OK
    width = max((len(s.id) for s in specs), default=0)
    lines = []
    for s in specs:
        mod = "p" if s.mod_exponent == 1 else f"p^{s.mod_exponent}"
        kind = "  forall" if s.forall else ""
        lines.append(f"{s.id:<{width}}  p>{s.min_prime}  mod {mod}{kind}\n")
    out.write("".join(lines).encode())
    return EXIT_OK


COMMANDS = {
    "verify": cmd_verify,
    "eval": cmd_eval,
    "bernoulli": cmd_bernoulli,
    "identities": cmd_identities,
    "catalog": cmd_catalog,
}


def run(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout.buffer
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out, err)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_USAGE
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
