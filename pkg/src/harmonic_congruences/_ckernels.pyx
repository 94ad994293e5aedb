# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled residue-vector kernels.

Same contract as ``_pykernels`` but vectors are ``array('Q')`` buffers and every
modulus must stay below 2**63, so sums of two residues never wrap and products
are formed in unsigned 128-bit arithmetic before reduction.
"""
from cpython cimport array
import array

ctypedef unsigned long long u64
ctypedef long long i64

cdef extern from *:
    """
    static inline unsigned long long hc_mulmod(unsigned long long a,
                                               unsigned long long b,
                                               unsigned long long m) {
        return (unsigned long long)(((unsigned __int128)a * b) % m);
    }
    """
    u64 hc_mulmod(u64 a, u64 b, u64 m) nogil

NAME = "cython"
MAX_MODULUS = 1 << 63

cdef array.array _TEMPLATE = array.array("Q")


cdef inline u64 mulmod(u64 a, u64 b, u64 m) nogil:
    return hc_mulmod(a, b, m)


cdef inline u64 powmod(u64 a, u64 e, u64 m) nogil:
    cdef u64 r = 1 % m
    a %= m
    while e:
        if e & 1:
            r = mulmod(r, a, m)
        a = mulmod(a, a, m)
        e >>= 1
    return r


cdef u64 invmod(u64 a, u64 m) except? 0:
    cdef i64 t = 0, newt = 1, q, tmp
    cdef i64 r = <i64>m, newr = <i64>(a % m)
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if r != 1:
        raise ZeroDivisionError(a)
    if t < 0:
        t += <i64>m
    return <u64>t


cdef inline array.array _new(Py_ssize_t n):
    return array.clone(_TEMPLATE, n, zero=False)


cdef inline array.array _zeros(Py_ssize_t n):
    return array.clone(_TEMPLATE, n, zero=True)


def from_list(values):
    return array.array("Q", values)


def to_list(v):
    return v.tolist()


def add(u64[::1] a, u64[::1] b, u64 m):
    cdef Py_ssize_t i, n = a.shape[0]
    cdef array.array out = _new(n)
    cdef u64[::1] o = out
    cdef u64 s
    for i in range(n):
        s = a[i] + b[i]
        o[i] = s - m if s >= m else s
    return out


def sub(u64[::1] a, u64[::1] b, u64 m):
    cdef Py_ssize_t i, n = a.shape[0]
    cdef array.array out = _new(n)
    cdef u64[::1] o = out
    for i in range(n):
        o[i] = a[i] - b[i] if a[i] >= b[i] else a[i] + (m - b[i])
    return out


def mul(u64[::1] a, u64[::1] b, u64 m):
    cdef Py_ssize_t i, n = a.shape[0]
    cdef array.array out = _new(n)
    cdef u64[::1] o = out
    for i in range(n):
        o[i] = mulmod(a[i], b[i], m)
    return out


def neg(u64[::1] a, u64 m):
    cdef Py_ssize_t i, n = a.shape[0]
    cdef array.array out = _new(n)
    cdef u64[::1] o = out
    for i in range(n):
        o[i] = m - a[i] if a[i] else 0
    return out


def add_scalar(u64[::1] a, c, u64 m):
    cdef u64 cc = c % m
    cdef Py_ssize_t i, n = a.shape[0]
    cdef array.array out = _new(n)
    cdef u64[::1] o = out
    cdef u64 s
    for i in range(n):
        s = a[i] + cc
        o[i] = s - m if s >= m else s
    return out


def rsub_scalar(c, u64[::1] a, u64 m):
    cdef u64 cc = c % m
    cdef Py_ssize_t i, n = a.shape[0]
    cdef array.array out = _new(n)
    cdef u64[::1] o = out
    for i in range(n):
        o[i] = cc - a[i] if cc >= a[i] else cc + (m - a[i])
    return out


def mul_scalar(u64[::1] a, c, u64 m):
    cdef u64 cc = c % m
    cdef Py_ssize_t i, n = a.shape[0]
    cdef array.array out = _new(n)
    cdef u64[::1] o = out
    for i in range(n):
        o[i] = mulmod(a[i], cc, m)
    return out


def total(u64[::1] a, u64 m):
    cdef Py_ssize_t i, n = a.shape[0]
    cdef u64 s = 0
    for i in range(n):
        s += a[i]
        if s >= m:
            s -= m
    return s


def reduce(u64[::1] a, u64 m):
    cdef Py_ssize_t i, n = a.shape[0]
    cdef array.array out = _new(n)
    cdef u64[::1] o = out
    for i in range(n):
        o[i] = a[i] % m
    return out


def pow_scalar(u64[::1] a, u64 e, u64 m):
    cdef Py_ssize_t i, n = a.shape[0]
    cdef array.array out = _new(n)
    cdef u64[::1] o = out
    for i in range(n):
        o[i] = powmod(a[i], e, m)
    return out


def batch_inverse(u64[::1] a, u64 m, u64 p):
    """Montgomery's trick: one extended-Euclid inversion plus 3(n-1) products."""
    cdef Py_ssize_t i, n = a.shape[0]
    cdef array.array out = _new(n)
    cdef u64[::1] o = out
    cdef u64 acc = 1 % m, inv_acc, t
    for i in range(n):
        if a[i] % p == 0:
            raise ZeroDivisionError(i)
        o[i] = acc
        acc = mulmod(acc, a[i], m)
    if n == 0:
        return out
    inv_acc = invmod(acc, m)
    i = n - 1
    while i >= 0:
        t = mulmod(o[i], inv_acc, m)
        inv_acc = mulmod(inv_acc, a[i], m)
        o[i] = t
        i -= 1
    return out


def geometric(base, Py_ssize_t n, u64 m):
    cdef u64 b = base % m
    cdef array.array out = _new(n)
    cdef u64[::1] o = out
    cdef u64 x = 1 % m
    cdef Py_ssize_t i
    for i in range(n):
        o[i] = x
        x = mulmod(x, b, m)
    return out


def gather(u64[::1] table, idx):
    cdef Py_ssize_t n = len(idx), i, j, size = table.shape[0]
    cdef array.array out = _new(n)
    cdef u64[::1] o = out
    for i in range(n):
        j = idx[i]
        if j < 0 or j >= size:
            raise IndexError(j)
        o[i] = table[j]
    return out


def first_mismatch(u64[::1] a, u64[::1] b):
    cdef Py_ssize_t i, n = a.shape[0]
    for i in range(n):
        if a[i] != b[i]:
            return i
    return -1


def inverse_table(u64 p, u64 m):
    cdef array.array out = _zeros(p)
    cdef u64[::1] inv = out
    cdef u64 k, mod, x, kx, t
    if p > 1:
        inv[1] = 1
    for k in range(2, p):
        inv[k] = (p - mulmod(p // k, inv[p % k], p)) % p
    mod = p
    while mod < m:
        # p**2 can exceed 64 bits only when m does, which the dispatcher rules out
        if mod > m // mod:
            mod = m
        else:
            mod = mod * mod
            if mod > m:
                mod = m
        for k in range(1, p):
            x = inv[k]
            kx = mulmod(k % mod, x, mod)
            t = (2 + mod - kx) % mod
            inv[k] = mulmod(x, t, mod)
    return out


def prefix_power_sums(u64[::1] inv, u64 order, u64 m):
    cdef Py_ssize_t k, n = inv.shape[0]
    cdef array.array out = _zeros(n)
    cdef u64[::1] o = out
    cdef u64 acc = 0
    for k in range(1, n):
        acc += powmod(inv[k], order, m)
        if acc >= m:
            acc -= m
        o[k] = acc
    return out


def power_sum(u64 n, u64 e, u64 m):
    cdef u64 k, s = 0
    for k in range(1, n + 1):
        s += powmod(k, e, m)
        if s >= m:
            s -= m
    return s


def bernoulli_table(Py_ssize_t n_max, u64[::1] inv, u64 m):
    cdef array.array out = _zeros(n_max + 1)
    cdef u64[::1] b = out
    cdef Py_ssize_t n, k
    cdef u64 c, acc, top
    b[0] = 1 % m
    for n in range(1, n_max + 1):
        c = 1 % m
        acc = 0
        top = n + 1
        for k in range(n):
            if b[k]:
                acc += mulmod(c, b[k], m)
                if acc >= m:
                    acc -= m
            c = mulmod(mulmod(c, (top - k) % m, m), inv[k + 1], m)
        b[n] = mulmod((m - acc) % m, inv[n + 1], m)
    return out


def binomial_row(u64 n, Py_ssize_t kmax, u64 p, int e, u64[::1] inv, u64 m):
    cdef Py_ssize_t j
    cdef u64 num, den, unit = 1 % m, den_inv
    cdef int val = 0, i
    cdef u64 ppow[8]
    if kmax > <Py_ssize_t>n:
        kmax = n
    ppow[0] = 1
    for i in range(1, e):
        ppow[i] = ppow[i - 1] * p
    cdef array.array out = _zeros(kmax + 1)
    cdef u64[::1] o = out
    o[0] = 1 % m
    for j in range(1, kmax + 1):
        num = n - j + 1
        den = j
        while num % p == 0:
            num //= p
            val += 1
        while den % p == 0:
            den //= p
            val -= 1
        den_inv = inv[den] if den < p else invmod(den % m, m)
        unit = mulmod(mulmod(unit, num % m, m), den_inv, m)
        o[j] = mulmod(unit, ppow[val], m) if val < e else 0
    return out
