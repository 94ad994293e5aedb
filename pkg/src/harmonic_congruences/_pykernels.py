"""Pure-Python residue-vector kernels.

Vectors are plain lists of ints in ``[0, m)``. This module is the reference the
compiled twin (``_ckernels``) is tested against, and the path used when the
extension is unavailable or the modulus does not fit in 63 bits.
"""

NAME = "python"
MAX_MODULUS = None


def from_list(values):
    return list(values)


def to_list(v):
    return list(v)


def add(a, b, m):
    return [(x + y) % m for x, y in zip(a, b)]


def sub(a, b, m):
    return [(x - y) % m for x, y in zip(a, b)]


def mul(a, b, m):
    return [x * y % m for x, y in zip(a, b)]


def neg(a, m):
    return [(-x) % m for x in a]


def add_scalar(a, c, m):
    return [(x + c) % m for x in a]


def rsub_scalar(c, a, m):
    return [(c - x) % m for x in a]


def mul_scalar(a, c, m):
    return [x * c % m for x in a]


def total(a, m):
    return sum(a) % m


def reduce(a, m):
    return [x % m for x in a]


def pow_scalar(a, e, m):
    return [pow(x, e, m) for x in a]


def batch_inverse(a, m, p):
    """Montgomery's trick: prefix products, one inversion, then a backward sweep."""
    n = len(a)
    prefix = [0] * n
    acc = 1 % m
    for i, x in enumerate(a):
        if x % p == 0:
            raise ZeroDivisionError(i)
        prefix[i] = acc
        acc = acc * x % m
    if not n:
        return []
    inv_acc = pow(acc, -1, m)
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = prefix[i] * inv_acc % m
        inv_acc = inv_acc * a[i] % m
    return out


def geometric(base, n, m):
    out = [0] * n
    x = 1 % m
    for i in range(n):
        out[i] = x
        x = x * base % m
    return out


def gather(table, idx):
    return [table[i] for i in idx]


def first_mismatch(a, b):
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return i
    return -1


def inverse_table(p, m):
    """Entry k holds 1/k mod m for 1 <= k < p; entry 0 is 0."""
    inv = [0] * p
    if p > 1:
        inv[1] = 1
    for k in range(2, p):
        inv[k] = (p - (p // k) * inv[p % k] % p) % p
    mod = p
    while mod < m:
        mod = min(mod * mod, m)
        for k in range(1, p):
            x = inv[k]
            inv[k] = x * (2 - k * x) % mod
    return inv


def prefix_power_sums(inv, order, m):
    out = [0] * len(inv)
    acc = 0
    for k in range(1, len(inv)):
        acc = (acc + pow(inv[k], order, m)) % m
        out[k] = acc
    return out


def power_sum(n, e, m):
    """sum(k**e for k in 1..n) mod m."""
    return sum(pow(k, e, m) for k in range(1, n + 1)) % m


def bernoulli_table(n_max, inv, m):
    """B_0..B_{n_max} mod m; ``inv`` must hold 1/k mod m for 1 <= k <= n_max + 1."""
    b = [0] * (n_max + 1)
    b[0] = 1 % m
    for n in range(1, n_max + 1):
        c = 1
        acc = 0
        top = n + 1
        for k in range(n):
            if b[k]:
                acc += c * b[k]
            c = c * (top - k) % m * inv[k + 1] % m
        b[n] = (-acc % m) * inv[n + 1] % m
    return b


def binomial_row(n, kmax, p, e, inv, m):
    """C(n, k) mod m = p^e for k = 0..min(kmax, n), tracking the power of p exactly.

    ``inv`` holds 1/d mod m for every unit d < p.
    """
    kmax = min(kmax, n)
    row = [0] * (kmax + 1)
    row[0] = 1 % m
    unit, val = 1, 0
    for j in range(1, kmax + 1):
        num, den = n - j + 1, j
        while num % p == 0:
            num //= p
            val += 1
        while den % p == 0:
            den //= p
            val -= 1
        den_inv = inv[den] if den < p else pow(den, -1, m)
        unit = unit * (num % m) % m * den_inv % m
        row[j] = unit * p**val % m if val < e else 0
    return row
