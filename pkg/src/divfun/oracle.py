"""Brute-force ground truth, independent of the closed forms.

Nothing here goes through the prime factorizations used by
:mod:`divfun.divisor_funcs`; divisors come from plain trial scans.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

import numpy as np

from .divisor_funcs import c_assoc

#: Largest order accepted by :func:`enumerate_splittings`.
MAX_SPLITTING_ORDER = 8


class CostGuardError(ValueError):
    pass


def _scan_divisors(n: int) -> list[int]:
    small, large = [], []
    for k in range(1, isqrt(n) + 1):
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
    return small + large[::-1]


@lru_cache(maxsize=None)
def _count(n: int, j: int, proper: bool) -> int:
    if j == 1:
        return 1 if (n >= 2 or not proper) else 0
    total = 0
    for m in _scan_divisors(n):
        if proper and m == 1:
            continue
        total += _count(n // m, j - 1, proper)
    return total


def brute_count_factorizations(n: int, j: int, proper: bool = False) -> int:
    """Ordered factorizations n = m_1 ... m_j, optionally with every m_i >= 2."""
    if n < 1 or j < 1:
        raise ValueError("need n >= 1 and j >= 1")
    return _count(n, j, proper)


def brute_list_factorizations(n: int, j: int, proper: bool = False) -> list[tuple[int, ...]]:
    if j == 1:
        return [(n,)] if (n >= 2 or not proper) else []
    out = []
    for m in _scan_divisors(n):
        if proper and m == 1:
            continue
        out += [(m,) + rest for rest in brute_list_factorizations(n // m, j - 1, proper)]
    return out


def divisor_sum_table(values: list[int]) -> list[int]:
    """g(n) = sum_{m | n} f(m) over a table indexed 0..N (index 0 unused)."""
    N = len(values) - 1
    out = [0] * (N + 1)
    for m in range(1, N + 1):
        v = values[m]
        if v:
            for k in range(m, N + 1, m):
                out[k] += v
    return out


def recursion_check_assoc(j: int, r: int, n_max: int) -> bool:
    """Apply the divisor-sum recursion r times to brute-force c_j and compare with c_assoc."""
    table = [0] + [brute_count_factorizations(n, j, proper=True) for n in range(1, n_max + 1)]
    for _ in range(r):
        table = divisor_sum_table(table)
    return all(table[n] == c_assoc(j, r, n) for n in range(1, n_max + 1))


@dataclass(frozen=True)
class SplittingPair:
    """A + B = {0, ..., n^2 - 1} with every value hit exactly once."""

    n: int
    A: tuple[int, ...]
    B: tuple[int, ...]

    def __post_init__(self):
        n = self.n
        if len(self.A) != n or len(self.B) != n or 0 not in self.A or 0 not in self.B:
            raise ValueError("A and B must each hold n values including 0")
        sums = sorted(a + b for a in self.A for b in self.B)
        if sums != list(range(n * n)):
            raise ValueError("A + B is not an exact splitting of 0..n^2-1")


def enumerate_splittings(n: int) -> list[SplittingPair]:
    """Exhaustive search over exact splittings with 1 in A, sorted by (A, B).

    The smallest value not yet covered must itself join A or B (paired with 0),
    so branching on that value alone is complete.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if n > MAX_SPLITTING_ORDER:
        raise CostGuardError(f"splitting search is limited to n <= {MAX_SPLITTING_ORDER}")
    total = n * n
    covered = bytearray(total)
    covered[0] = 1
    A, B = [0], [0]
    found: list[SplittingPair] = []

    def place(x: int, mine: list[int], other: list[int]) -> list[int] | None:
        hits = []
        for y in other:
            v = x + y
            if v >= total or covered[v]:
                for h in hits:
                    covered[h] = 0
                return None
            covered[v] = 1
            hits.append(v)
        mine.append(x)
        return hits

    def search(lowest: int):
        v = lowest
        while v < total and covered[v]:
            v += 1
        if v == total:
            found.append(SplittingPair(n, tuple(sorted(A)), tuple(sorted(B))))
            return
        for mine, other in ((A, B), (B, A)):
            if len(mine) == n or (v == 1 and mine is B):
                continue
            hits = place(v, mine, other)
            if hits is None:
                continue
            search(v + 1)
            mine.pop()
            for h in hits:
                covered[h] = 0

    search(1)
    return sorted(found, key=lambda sp: (sp.A, sp.B))


def splitting_to_square(sp: SplittingPair) -> np.ndarray:
    """Candidate grid M[j][k] = A[k] + B[j] + 1 (A along the first row)."""
    a = np.array(sorted(sp.A), dtype=np.int64)
    b = np.array(sorted(sp.B), dtype=np.int64)
    return b[:, None] + a[None, :] + 1
