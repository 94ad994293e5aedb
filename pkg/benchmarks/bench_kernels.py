"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py              # kernels plus a 7..2000 sweep
    python3 benchmarks/bench_kernels.py --hi 500 --repeat 5
"""
import argparse
import time

from harmonic_congruences import kernels
from harmonic_congruences.catalog import builtin_catalog
from harmonic_congruences.verify import verify_range


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def kernel_cases(p, e):
    m = p**e

    def cases(ops):
        inv = ops.inverse_table(p, m)
        return {
            f"inverse_table p={p}": lambda: ops.inverse_table(p, m),
            f"prefix_power_sums p={p}": lambda: ops.prefix_power_sums(inv, 3, m),
            f"power_sum p={p}": lambda: ops.power_sum(p - 1, p - 3, m),
            f"geometric p={p}": lambda: ops.geometric(2, p, m),
            f"binomial_row p={p}": lambda: ops.binomial_row(p, p - 1, p, e, inv, m),
            f"batch_inverse p={p}": lambda: ops.batch_inverse(ops.gather(inv, range(1, p)), m, p),
        }

    return cases


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--prime", type=int, default=100003, help="prime for the kernel timings")
    ap.add_argument("--exp", type=int, default=3)
    ap.add_argument("--hi", type=int, default=2000, help="upper end of the catalog sweep (0 skips it)")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = kernels.available()
    if "cython" not in backends:
        print("compiled extension not built; only the python backend is timed")

    rows = {}
    for name in backends:
        ops = kernels.BACKENDS[name]
        for label, fn in kernel_cases(args.prime, args.exp)(ops).items():
            rows.setdefault(label, {})[name] = best_of(fn, args.repeat)
        p_small = 1009  # the O(p^2) recurrence
        inv = ops.inverse_table(p_small, p_small**2)
        rows.setdefault(f"bernoulli_table p={p_small}", {})[name] = best_of(
            lambda: ops.bernoulli_table(p_small - 2, inv, p_small**2), args.repeat)
        if args.hi:
            with kernels.use_backend(name):
                rows.setdefault(f"catalog sweep 7..{args.hi}", {})[name] = best_of(
                    lambda: verify_range(builtin_catalog(), 7, args.hi), 1)

    width = max(len(k) for k in rows)
    print(f"{'case':<{width}}  " + "  ".join(f"{b:>10}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for label, t in rows.items():
        line = f"{label:<{width}}  " + "  ".join(f"{t[b]:>9.4f}s" for b in backends)
        if len(backends) > 1:
            line += f"  {t['python'] / t['cython']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
