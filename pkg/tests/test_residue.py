from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from harmonic_congruences.errors import ModulusMismatch, NotInvertible, NotPIntegral
from harmonic_congruences.residue import (
    PrimePowerModulus, Residue, batch_inverses, fermat_quotient, inverse, is_prime, pow_mod, reduce_rational,
)

PRIMES = [3, 5, 7, 11, 13, 101, 1009]
moduli = st.builds(PrimePowerModulus, st.sampled_from(PRIMES), st.integers(1, 4))


def test_is_prime_against_trial_division():
    def slow(n):
        return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))
    assert [n for n in range(2000) if is_prime(n)] == [n for n in range(2000) if slow(n)]
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7


@pytest.mark.parametrize("p, e", [(2, 1), (9, 1), (7, 0), (7, 5), (1, 1)])
def test_bad_modulus(p, e):
    with pytest.raises(ValueError):
        PrimePowerModulus(p, e)


def test_inverse_examples():
    assert inverse(Residue(1, PrimePowerModulus(7, 3))).value == 1
    assert inverse(Residue(2, PrimePowerModulus(7, 1))).value == 4
    with pytest.raises(NotInvertible):
        inverse(Residue(7, PrimePowerModulus(7, 2)))


def test_reduce_rational_examples():
    m = PrimePowerModulus(5, 2)
    assert reduce_rational(Fraction(0), m).value == 0
    assert reduce_rational(Fraction(1, 2), m).value == 13
    assert reduce_rational(Fraction(25, 12), m).value == 0
    with pytest.raises(NotPIntegral):
        reduce_rational(Fraction(1, 5), m)


def test_pow_mod_examples():
    m7 = PrimePowerModulus(7, 1)
    assert pow_mod(Residue(3, m7), 0).value == 1
    assert pow_mod(Residue(2, m7), 6).value == 1
    assert pow_mod(Residue(2, PrimePowerModulus(7, 2)), 6).value == 15
    assert pow_mod(Residue(2, m7), -1).value == 4
    with pytest.raises(NotInvertible):
        pow_mod(Residue(0, m7), -2)


@pytest.mark.parametrize("p, e, expected", [(7, 1, 2), (3, 1, 1), (1093, 1, 0), (3511, 1, 0)])
def test_fermat_quotient_examples(p, e, expected):
    assert fermat_quotient(p, e).value == expected


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 1093, 1999])
@pytest.mark.parametrize("e", [1, 2, 3])
def test_fermat_quotient_lift(p, e):
    q = fermat_quotient(p, e).value
    assert q == (2 ** (p - 1) - 1) // p % p**e
    assert pow(2, p - 1, p ** (e + 1)) == (1 + p * q) % p ** (e + 1)


def test_batch_inverse_examples():
    assert [r.value for r in batch_inverses(PrimePowerModulus(5, 1))] == [1, 3, 2, 4]
    assert batch_inverses(PrimePowerModulus(3, 2))[1].value == 5


@pytest.mark.parametrize("p", [3, 5, 7, 101, 1009])
@pytest.mark.parametrize("e", [1, 2, 3, 4])
def test_batch_inverses_full_sweep(p, e):
    m = PrimePowerModulus(p, e)
    table = batch_inverses(m)
    assert len(table) == p - 1
    assert table[0].value == 1
    assert all(k * r.value % m.m == 1 for k, r in enumerate(table, start=1))


@given(moduli, st.integers())
def test_inverse_property(m, x):
    r = Residue(x % m.m, m)
    if x % m.p == 0:
        with pytest.raises(NotInvertible):
            inverse(r)
    else:
        assert (r * inverse(r)).value == 1


@given(st.sampled_from(PRIMES), st.integers(2, 4), st.integers())
def test_inverse_reduction_compatible(p, e, x):
    if x % p == 0:
        return
    hi, lo = PrimePowerModulus(p, e), PrimePowerModulus(p, e - 1)
    assert inverse(Residue(x % hi.m, hi)).value % lo.m == inverse(Residue(x % lo.m, lo)).value


@given(moduli, st.fractions())
def test_reduce_rational_property(m, q):
    if q.denominator % m.p == 0:
        with pytest.raises(NotPIntegral):
            reduce_rational(q, m)
    else:
        assert reduce_rational(q, m).value * q.denominator % m.m == q.numerator % m.m


@given(moduli, st.integers(), st.integers())
def test_ring_operations(m, a, b):
    x, y = Residue(a % m.m, m), Residue(b % m.m, m)
    assert (x + y).value == (a + b) % m.m
    assert (x - y).value == (a - b) % m.m
    assert (x * y).value == a * b % m.m
    assert (-x).value == -a % m.m
    assert 0 <= (x * y).value < m.m


def test_mixed_moduli_rejected():
    a = Residue(1, PrimePowerModulus(7, 1))
    with pytest.raises(ModulusMismatch):
        a + Residue(1, PrimePowerModulus(7, 2))
    with pytest.raises(ModulusMismatch):
        a * Residue(1, PrimePowerModulus(11, 1))


def test_residue_rejects_noncanonical_value():
    with pytest.raises(ValueError):
        Residue(7, PrimePowerModulus(7, 1))
