"""Exact truncated Dirichlet and power series, plus floating Euler products.

Dirichlet-series identities are checked on coefficient vectors
(``ArithmeticSequence``); generating-function identities on truncated power
series. Only the ratio Dirichlet series for c_j/d_j (j = 1, 2, 3) are ever
evaluated numerically, at real ``s > 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

from .arith import factorize, moebius, primes_upto
from .divisor_funcs import c, c_assoc, d


@dataclass(frozen=True)
class ArithmeticSequence:
    """Coefficients a(1..N) of a truncated Dirichlet series; indexing is 1-based."""

    N: int
    a: tuple[int, ...]

    def __post_init__(self):
        if self.N < 1 or len(self.a) != self.N:
            raise ValueError(f"need N >= 1 coefficients, got N={self.N}, len={len(self.a)}")

    @classmethod
    def from_function(cls, f: Callable[[int], int], N: int) -> ArithmeticSequence:
        return cls(N, tuple(f(n) for n in range(1, N + 1)))

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.N:
            raise IndexError(n)
        return self.a[n - 1]

    def __iter__(self):
        return iter(self.a)

    def __mul__(self, other: ArithmeticSequence) -> ArithmeticSequence:
        return dirichlet_convolve(self, other)

    def __add__(self, other: ArithmeticSequence) -> ArithmeticSequence:
        _same_N(self, other)
        return ArithmeticSequence(self.N, tuple(x + y for x, y in zip(self.a, other.a)))

    def __sub__(self, other: ArithmeticSequence) -> ArithmeticSequence:
        _same_N(self, other)
        return ArithmeticSequence(self.N, tuple(x - y for x, y in zip(self.a, other.a)))


def _same_N(a, b):
    if a.N != b.N:
        raise ValueError(f"truncation bounds differ: {a.N} vs {b.N}")


def delta(N: int) -> ArithmeticSequence:
    return ArithmeticSequence(N, (1,) + (0,) * (N - 1))


def ones(N: int) -> ArithmeticSequence:
    return ArithmeticSequence(N, (1,) * N)


def dirichlet_convolve(a: ArithmeticSequence, b: ArithmeticSequence) -> ArithmeticSequence:
    """(a * b)(n) = sum_{de = n} a(d) b(e), truncated at the common N."""
    _same_N(a, b)
    N = a.N
    out = [0] * (N + 1)
    bs = (0,) + b.a
    for dd in range(1, N + 1):
        x = a.a[dd - 1]
        if not x:
            continue
        for e in range(1, N // dd + 1):
            y = bs[e]
            if y:
                out[dd * e] += x * y
    return ArithmeticSequence(N, tuple(out[1:]))


def _power(base: ArithmeticSequence, j: int, start: ArithmeticSequence | None = None):
    acc = delta(base.N) if start is None else start
    for _ in range(j):
        acc = dirichlet_convolve(acc, base)
    return acc


def zeta_power_coeffs(j: int, N: int) -> ArithmeticSequence:
    """Coefficients of zeta(s)^j."""
    if j < 0:
        raise ValueError("j must be non-negative")
    return _power(ones(N), j)


def zeta_minus_one_power_coeffs(j: int, N: int) -> ArithmeticSequence:
    """Coefficients of (zeta(s) - 1)^j, by j-fold convolution of [n >= 2]."""
    if j < 1:
        raise ValueError("j must be positive")
    ind = ArithmeticSequence(N, (0,) + (1,) * (N - 1))
    return _power(ind, j)


def assoc_series_coeffs(j: int, r: int, N: int) -> ArithmeticSequence:
    """Coefficients of zeta(s)^r (zeta(s) - 1)^j."""
    if j < 1 or r < 0:
        raise ValueError("need j >= 1, r >= 0")
    return _power(ones(N), r, zeta_minus_one_power_coeffs(j, N))


def zeta_ratio_value(r: int, n: int) -> int:
    """Multiplicative f with f(p^a) = (2a + r)(a + r - 1)! / (r! a!)."""
    out = 1
    for _, a in factorize(n).factors:
        num = (2 * a + r) * math.factorial(a + r - 1)
        den = math.factorial(r) * math.factorial(a)
        q, rem = divmod(num, den)
        if rem:
            raise ArithmeticError(f"f(p^{a}) not integral for r={r}")
        out *= q
    return out


def zeta_ratio_moebius(r: int, n: int) -> int:
    """sum_{k^2 | n} mu(k) d_{r+2}(n / k^2)."""
    total = 0
    k = 1
    while k * k <= n:
        if n % (k * k) == 0:
            total += moebius(k) * d(r + 2, n // (k * k))
        k += 1
    return total


def zeta_ratio_coeffs(r: int, N: int) -> ArithmeticSequence:
    """Coefficients of zeta(s)^(r+2) / zeta(2s), computed two ways.

    Raises ``ArithmeticError`` at the first n where the two computations differ.
    """
    if r < 0:
        raise ValueError("r must be non-negative")
    vals = []
    for n in range(1, N + 1):
        x, y = zeta_ratio_moebius(r, n), zeta_ratio_value(r, n)
        if x != y:
            raise ArithmeticError(f"zeta ratio mismatch at r={r}, n={n}: {x} != {y}")
        vals.append(x)
    return ArithmeticSequence(N, tuple(vals))


# --- power series ----------------------------------------------------------------


@dataclass(frozen=True)
class TruncatedPowerSeries:
    """Coefficients of x^0..x^N."""

    N: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.N < 0 or len(self.coeffs) != self.N + 1:
            raise ValueError(f"need N + 1 coefficients, got N={self.N}, len={len(self.coeffs)}")

    @classmethod
    def from_function(cls, f: Callable[[int], int], N: int, start: int = 1) -> TruncatedPowerSeries:
        return cls(N, tuple(f(n) if n >= start else 0 for n in range(N + 1)))

    @classmethod
    def monomial(cls, k: int, N: int) -> TruncatedPowerSeries:
        coeffs = [0] * (N + 1)
        if k <= N:
            coeffs[k] = 1
        return cls(N, tuple(coeffs))

    @classmethod
    def zero(cls, N: int) -> TruncatedPowerSeries:
        return cls(N, (0,) * (N + 1))

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def __add__(self, other: TruncatedPowerSeries) -> TruncatedPowerSeries:
        _same_N(self, other)
        return TruncatedPowerSeries(self.N, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))


def pseries_sum(series: Iterable[TruncatedPowerSeries], N: int) -> TruncatedPowerSeries:
    acc = [0] * (N + 1)
    for s in series:
        if s.N != N:
            raise ValueError("truncation bounds differ")
        for k, x in enumerate(s.coeffs):
            acc[k] += x
    return TruncatedPowerSeries(N, tuple(acc))


def pseries_substitute(f: TruncatedPowerSeries, k: int) -> TruncatedPowerSeries:
    """f(x^k), truncated at degree N."""
    if k < 1:
        raise ValueError("k must be positive")
    out = [0] * (f.N + 1)
    for i in range(f.N // k + 1):
        out[i * k] = f.coeffs[i]
    return TruncatedPowerSeries(f.N, tuple(out))


def lambert_transform(f: TruncatedPowerSeries, shifted: bool = False) -> TruncatedPowerSeries:
    """sum_n f_n x^n / (1 - x^n), or sum_n f_n x^(2n) / (1 - x^n) when ``shifted``.

    The constant coefficient of ``f`` is ignored (x^0 / (1 - x^0) is undefined).
    """
    N = f.N
    out = [0] * (N + 1)
    first = 2 if shifted else 1
    for n in range(1, N + 1):
        x = f.coeffs[n]
        if x:
            for m in range(first * n, N + 1, n):
                out[m] += x
    return TruncatedPowerSeries(N, tuple(out))


def divisor_gf(j: int, N: int) -> TruncatedPowerSeries:
    """D_j(x) = sum_{n>=1} d_j(n) x^n; D_0 = x."""
    return TruncatedPowerSeries.from_function(lambda n: d(j, n), N)


def nontrivial_gf(j: int, N: int, r: int = 0) -> TruncatedPowerSeries:
    """C_j^(r)(x) = sum_n c_j^(r)(n) x^n; C_0 = x."""
    return TruncatedPowerSeries.from_function(lambda n: c_assoc(j, r, n), N)


# --- numerics ----------------------------------------------------------------


@dataclass(frozen=True)
class EulerProductSpec:
    s: float = 3.0
    prime_limit: int = 10**5
    term_limit: int = 10**5

    def __post_init__(self):
        if not self.s > 1:
            raise ValueError(f"need s > 1, got {self.s}")
        if self.prime_limit < 2 or self.term_limit < 2:
            raise ValueError("limits must be at least 2")


def zeta_real(s: float, term_limit: int) -> tuple[float, float]:
    """zeta(s) for real s > 1 as (value, error budget).

    Direct sum over n <= T plus the integral tail T^(1-s)/(s-1) with the
    half-term endpoint correction; the returned budget bounds what is left.
    """
    if not s > 1:
        raise ValueError(f"need s > 1, got {s}")
    T = term_limit
    total = math.fsum(n ** (-s) for n in range(1, T + 1))
    tail = T ** (1 - s) / (s - 1) - 0.5 * T ** (-s)
    budget = s * T ** (-s - 1) / 12
    return total + tail, budget


def _series_until_small(term: Callable[[int], float], x: float) -> float:
    # sum_{k>=0} term(k) x^k; term(k) is bounded by 2 so stopping at x^k < 1e-18 suffices
    total = 0.0
    k = 0
    xk = 1.0
    while True:
        t = term(k) * xk
        total += t
        if xk < 1e-18:
            return total
        k += 1
        xk *= x


def euler_factor_inv_d2(x: float) -> float:
    """p^s log(1/(1 - p^-s)) = sum_k x^k / (k + 1) with x = p^-s."""
    return _series_until_small(lambda k: 1.0 / (k + 1), x)


def euler_factor_d2_over_d3(x: float) -> float:
    """2 p^2s (log(1/(1 - p^-s)) - p^-s) = sum_k 2 x^k / (k + 2)."""
    return _series_until_small(lambda k: 2.0 / (k + 2), x)


def euler_factor_inv_d3(x: float) -> float:
    """2 p^2s (p^-s - (1 - p^-s) log(1/(1 - p^-s))) = sum_k 2 x^k / ((k + 1)(k + 2))."""
    return _series_until_small(lambda k: 2.0 / ((k + 1) * (k + 2)), x)


def euler_product(factor: Callable[[float], float], spec: EulerProductSpec) -> float:
    # ascending p; accumulate in log space so the product order is fixed
    logs = [math.log(factor(p ** (-spec.s))) for p in primes_upto(spec.prime_limit)]
    return math.exp(math.fsum(logs))


def euler_product_ratio(j: int, spec: EulerProductSpec | None = None) -> float:
    """sum_{n>=2} c_j(n) / (d_j(n) n^s) from zeta and Euler products, j in {1, 2, 3}."""
    spec = spec or EulerProductSpec()
    z, _ = zeta_real(spec.s, spec.term_limit)
    if j == 1:
        return z - 1
    if j == 2:
        return 1 + z - 2 * euler_product(euler_factor_inv_d2, spec)
    if j == 3:
        p1 = euler_product(euler_factor_d2_over_d3, spec)
        p2 = euler_product(euler_factor_inv_d3, spec)
        return z - 1 - 3 * p1 + 3 * p2
    raise ValueError(f"closed forms exist only for j in (1, 2, 3), got {j}")


def direct_ratio_sum(j: int, s: float, N: int) -> float:
    """sum_{n=2}^{N} c_j(n) / (d_j(n) n^s), summed in ascending n."""
    if not s > 1:
        raise ValueError(f"need s > 1, got {s}")
    return math.fsum(c(j, n) / (d(j, n) * n**s) for n in range(2, N + 1))
