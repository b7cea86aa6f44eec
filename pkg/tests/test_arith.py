import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from divfun.arith import (
    Factorization,
    big_omega,
    binomial,
    divisors,
    factorize,
    is_prime,
    moebius,
    primes_upto,
    rising_factorial,
)
from divfun.divisor_funcs import d


def trial_factor(n):
    out, p = [], 2
    while p * p <= n:
        a = 0
        while n % p == 0:
            n //= p
            a += 1
        if a:
            out.append((p, a))
        p += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def pascal(rows):
    tri = [[1]]
    for a in range(1, rows + 1):
        prev = tri[-1]
        tri.append([1] + [prev[b - 1] + prev[b] for b in range(1, a)] + [1])
    return tri


def test_factorize_examples():
    assert factorize(1).factors == ()
    assert factorize(20).factors == ((2, 2), (5, 1))
    assert factorize(9699690).factors == trial_factor(9699690)
    assert factorize(9699690).primes == (2, 3, 5, 7, 11, 13, 17, 19)


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


@pytest.mark.parametrize("n", [10**6 + 3, 2**31 - 1, 600851475143, 10**12 + 39])
def test_factorize_above_sieve_bound(n):
    assert factorize(n).factors == trial_factor(n)


def test_factorize_round_trip_sweep():
    for n in range(1, 10**5 + 1):
        f = factorize(n)
        assert math.prod(p**a for p, a in f.factors) == n


@given(st.integers(1, 10**7))
def test_factorize_matches_trial_division(n):
    f = factorize(n)
    assert f.factors == trial_factor(n)
    assert all(is_prime(p) for p in f.primes)


def test_factorization_invariants_enforced():
    with pytest.raises(ValueError):
        Factorization(12, ((3, 1), (2, 2)))
    with pytest.raises(ValueError):
        Factorization(12, ((2, 1), (3, 1)))


def test_divisors_examples():
    assert divisors(1) == [1]
    assert divisors(7) == [1, 7]
    assert divisors(12) == [k for k in range(1, 13) if 12 % k == 0]


@given(st.integers(1, 20000))
def test_divisors_brute_scan(n):
    assert divisors(n) == [k for k in range(1, n + 1) if n % k == 0]


def test_divisor_count_is_d2():
    for n in range(1, 10**5 + 1):
        assert len(divisors(n)) == d(2, n)


def test_big_omega():
    assert big_omega(1) == 0
    assert big_omega(20) == 3
    assert big_omega(64) == 6


def test_moebius():
    assert [moebius(n) for n in (1, 4, 6)] == [1, 0, 1]
    assert [moebius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


def test_binomial_examples():
    assert binomial(5, 0) == 1
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0
    assert binomial(24, 17) == pascal(24)[24][17] == 346104


def test_binomial_pascal_rule():
    tri = pascal(64)
    for a in range(1, 65):
        for b in range(-1, a + 2):
            assert binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b)
            if 0 <= b <= a:
                assert binomial(a, b) == tri[a][b]


def test_binomial_negative_upper_rejected():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_rising_factorial_examples():
    assert rising_factorial(17, 0) == 1
    assert rising_factorial(-5, 0) == 1
    assert all(rising_factorial(1, m) == math.factorial(m) for m in range(12))
    assert all(rising_factorial(2, m) == math.factorial(m + 1) for m in range(12))
    assert rising_factorial(-3, 4) == 0


@given(st.integers(0, 30), st.integers(0, 30))
def test_rising_factorial_negative_argument(a, m):
    value = rising_factorial(-a, m)
    if m > a:
        assert value == 0
    else:
        assert value == (-1) ** m * math.factorial(a) // math.factorial(a - m)


@given(st.integers(1, 40), st.integers(0, 20))
def test_rising_factorial_positive_argument(a, m):
    assert rising_factorial(a, m) == math.factorial(a + m - 1) // math.factorial(a - 1)


def test_primes_upto():
    assert primes_upto(1) == []
    assert primes_upto(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert len(primes_upto(10**5)) == 9592
