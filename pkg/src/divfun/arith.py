"""Integer primitives: sieve-backed factorization, divisors, Omega, Moebius,
binomials and rising factorials.

Everything here is exact (Python ints); rationals use ``fractions.Fraction``.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as _cartesian

import numpy as np

#: Inputs at or below this bound are factored from the smallest-prime-factor table.
SIEVE_BOUND = 10**6
#: Trial division above the sieve bound is only promised for 64-bit inputs.
MAX_INPUT = 2**64

# Exact rational carrier for hypergeometric and ratio values.
BigRational = Fraction


@dataclass(frozen=True)
class Factorization:
    """Prime factorization ``n = prod p**a`` with primes strictly increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, a in self.factors:
            if p <= last or a < 1:
                raise ValueError(f"malformed factor list {self.factors!r}")
            last = p
            prod *= p**a
        if prod != self.n:
            raise ValueError(f"factors multiply to {prod}, not {self.n}")

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(a for _, a in self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __len__(self):
        return len(self.factors)

    def value(self) -> int:
        out = 1
        for p, a in self.factors:
            out *= p**a
        return out


class _SPFTable:
    """Smallest-prime-factor table, grown on demand up to ``SIEVE_BOUND``."""

    def __init__(self):
        self._lock = threading.Lock()
        self._spf = np.zeros(2, dtype=np.int64)

    @property
    def limit(self) -> int:
        return len(self._spf) - 1

    def ensure(self, limit: int) -> np.ndarray:
        spf = self._spf
        if limit <= len(spf) - 1:
            return spf
        with self._lock:
            if limit > len(self._spf) - 1:
                size = max(limit, 2 * (len(self._spf) - 1), 1024)
                self._spf = _build_spf(min(size, max(limit, SIEVE_BOUND)))
            return self._spf


def _build_spf(limit: int) -> np.ndarray:
    spf = np.zeros(limit + 1, dtype=np.int64)
    spf[1] = 1
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
            spf[p] = p
    untouched = spf == 0
    spf[untouched] = np.nonzero(untouched)[0]
    return spf


_SPF = _SPFTable()


def smallest_prime_factors(limit: int) -> np.ndarray:
    """Return an array ``spf`` with ``spf[k]`` the least prime factor of k (k <= limit)."""
    return _SPF.ensure(limit)[: limit + 1]


def primes_upto(limit: int) -> list[int]:
    if limit < 2:
        return []
    spf = smallest_prime_factors(limit)
    idx = np.arange(limit + 1)
    return [int(p) for p in np.nonzero((spf == idx) & (idx >= 2))[0]]


def _trial_division(n: int) -> list[tuple[int, int]]:
    out = []
    for p in (2, 3):
        if n % p == 0:
            a = 0
            while n % p == 0:
                n //= p
                a += 1
            out.append((p, a))
    p = 5
    while p * p <= n:
        for q in (p, p + 2):
            if n % q == 0:
                a = 0
                while n % q == 0:
                    n //= q
                    a += 1
                out.append((q, a))
        p += 6
    if n > 1:
        out.append((n, 1))
    return out


@lru_cache(maxsize=1 << 17)
def factorize(n: int) -> Factorization:
    """Factor ``n >= 1``.

    Uses the smallest-prime-factor table below ``SIEVE_BOUND`` and trial division
    above it.

    >>> factorize(20).factors
    ((2, 2), (5, 1))
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    if n >= MAX_INPUT:
        raise ValueError("inputs of 64 bits or more are not supported")
    if n <= SIEVE_BOUND:
        spf = _SPF.ensure(n)
        factors: list[tuple[int, int]] = []
        m = n
        while m > 1:
            p = int(spf[m])
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            factors.append((p, a))
    else:
        factors = _trial_division(n)
    return Factorization(n, tuple(factors))


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n``, ascending."""
    f = factorize(n)
    ds = [1]
    for p, a in f.factors:
        ds = [d * p**e for e in range(a + 1) for d in ds]
    return sorted(ds)


def divisors_from(f: Factorization) -> list[int]:
    ranges = [[p**e for e in range(a + 1)] for p, a in f.factors]
    return sorted(math.prod(combo) for combo in _cartesian(*ranges))


def big_omega(n: int) -> int:
    """Number of prime factors counted with multiplicity."""
    return sum(factorize(n).exponents)


def moebius(n: int) -> int:
    f = factorize(n)
    if any(a > 1 for a in f.exponents):
        return 0
    return -1 if len(f) % 2 else 1


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = factorize(n)
    return f.factors == ((n, 1),)


def binomial(a: int, b: int) -> int:
    """C(a, b) for ``a >= 0``; zero outside ``0 <= b <= a``."""
    if a < 0:
        raise ValueError("binomial takes a non-negative upper argument; use rising_factorial")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def rising_factorial(a: int, m: int) -> int:
    """Pochhammer symbol ``a (a+1) ... (a+m-1)``; the empty product is 1."""
    if m < 0:
        raise ValueError("rising_factorial needs m >= 0")
    out = 1
    for k in range(m):
        out *= a + k
        if out == 0:
            return 0
    return out
