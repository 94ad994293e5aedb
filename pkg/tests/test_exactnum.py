from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from harmonic_congruences.exactnum import bernoulli_exact, binomial_exact, harmonic_exact


@pytest.mark.parametrize("n, m, expected", [
    (0, 1, Fraction(0)),
    (1, 1, Fraction(1)),
    (4, 1, Fraction(25, 12)),
    (2, 2, Fraction(5, 4)),
])
def test_harmonic_examples(n, m, expected):
    assert harmonic_exact(n, m) == expected


def test_harmonic_is_reduced():
    h = harmonic_exact(6)
    assert (h.numerator, h.denominator) == (49, 20)


@given(st.integers(1, 60), st.integers(1, 4))
def test_harmonic_step(n, m):
    assert harmonic_exact(n, m) - harmonic_exact(n - 1, m) == Fraction(1, n**m)


@pytest.mark.parametrize("n, k, expected", [(5, 0, 1), (4, 2, 6), (3, 5, 0), (3, -1, 0), (0, 0, 1)])
def test_binomial_examples(n, k, expected):
    assert binomial_exact(n, k) == expected


@given(st.integers(1, 80), st.data())
def test_pascal(n, data):
    k = data.draw(st.integers(0, n))
    assert binomial_exact(n, k) == binomial_exact(n - 1, k - 1) + binomial_exact(n - 1, k)


@pytest.mark.parametrize("n, expected", [
    (0, Fraction(1)),
    (1, Fraction(-1, 2)),
    (2, Fraction(1, 6)),
    (4, Fraction(-1, 30)),
    (12, Fraction(-691, 2730)),
])
def test_bernoulli_examples(n, expected):
    assert bernoulli_exact(n) == expected


def _bernoulli_fresh(n):
    # second, independent pass of the defining recurrence
    from math import comb
    b = [Fraction(1)]
    for j in range(1, n + 1):
        b.append(-sum(comb(j + 1, k) * b[k] for k in range(j)) / (j + 1))
    return b[n]


@pytest.mark.parametrize("n", [12, 20, 31, 40])
def test_bernoulli_matches_fresh_recurrence(n):
    assert bernoulli_exact(n) == _bernoulli_fresh(n)


def test_odd_bernoulli_vanish():
    assert all(bernoulli_exact(n) == 0 for n in range(3, 65, 2))


def test_recurrence_holds():
    for n in range(1, 41):
        assert sum(binomial_exact(n + 1, k) * bernoulli_exact(k) for k in range(n + 1)) == 0


@pytest.mark.parametrize("p", [7, 11, 13, 17, 19, 23, 29, 31])
def test_p_integrality(p):
    for n in range(41):
        if n and n % (p - 1) == 0:
            assert bernoulli_exact(n).denominator % p == 0
        else:
            assert bernoulli_exact(n).denominator % p != 0
