"""Divisor path sets, joint ordered factorisations and principal reversible squares.

A path set ((i_1..i_a), (j_1..j_a)) for n is turned into a square by reading
its joint ordered factorisation as a mixed-radix numeration of 0..n^2-1: each
step (dim, f) contributes a digit 0..f-1 with weight equal to the product of
all earlier factors. Dimension-2 digits give the first-row offsets, dimension-1
digits the first-column offsets, and M[j][k] = beta_j + alpha_k + 1.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .arith import big_omega, binomial, divisors
from .divisor_funcs import c, d


@dataclass(frozen=True, order=True)
class DivisorPathSet:
    n: int
    i_chain: tuple[int, ...]
    j_chain: tuple[int, ...]

    def __post_init__(self):
        a = len(self.i_chain)
        if a < 1 or len(self.j_chain) != a:
            raise ValueError("chains must be non-empty and of equal length")
        if self.i_chain[-1] != self.n or self.n % self.j_chain[-1]:
            raise ValueError("i-chain must end at n and j-chain at a divisor of n")
        for chain in (self.i_chain, self.j_chain):
            if chain[0] <= 1:
                raise ValueError(f"chain {chain} must start above 1")
            for x, y in zip(chain, chain[1:]):
                if y <= x or y % x:
                    raise ValueError(f"chain {chain} is not a strictly increasing divisor chain")

    @property
    def length(self) -> int:
        return len(self.i_chain)

    def sort_key(self):
        return (self.length, self.i_chain, self.j_chain)

    def to_dict(self) -> dict:
        return {"i": list(self.i_chain), "j": list(self.j_chain)}


@dataclass(frozen=True)
class JointOrderedFactorisation:
    """Alternating (dim, factor) steps; per-dimension products both equal n."""

    steps: tuple[tuple[int, int], ...]

    def product(self, dim: int) -> int:
        out = 1
        for k, f in self.steps:
            if k == dim:
                out *= f
        return out


def _chains(n: int) -> dict[int, list[tuple[int, ...]]]:
    """Divisor chains 1 < x_1 | x_2 | ... of divisors of n, bucketed by length."""
    ds = [x for x in divisors(n) if x > 1]
    multiples = {x: [y for y in ds if y > x and y % x == 0] for x in ds}
    out: dict[int, list[tuple[int, ...]]] = {}
    stack = [(x,) for x in reversed(ds)]
    while stack:
        ch = stack.pop()
        out.setdefault(len(ch), []).append(ch)
        for y in reversed(multiples[ch[-1]]):
            stack.append(ch + (y,))
    for v in out.values():
        v.sort()
    return out


def iter_divisor_path_sets(n: int) -> Iterator[DivisorPathSet]:
    """Path sets in lexicographic order of (length, i-chain, j-chain)."""
    if n < 2:
        return
    chains = _chains(n)
    for a in sorted(chains):
        i_chains = [ch for ch in chains[a] if ch[-1] == n]
        for ic in i_chains:
            for jc in chains[a]:
                yield DivisorPathSet(n, ic, jc)


def enumerate_divisor_path_sets(n: int) -> list[DivisorPathSet]:
    return list(iter_divisor_path_sets(n))


def to_joint_factorisation(ps: DivisorPathSet) -> JointOrderedFactorisation:
    steps = []
    prev_i = prev_j = 1
    for i, j in zip(ps.i_chain, ps.j_chain):
        steps.append((2, j // prev_j))
        steps.append((1, i // prev_i))
        prev_i, prev_j = i, j
    if ps.j_chain[-1] != ps.n:
        steps.append((2, ps.n // ps.j_chain[-1]))
    return JointOrderedFactorisation(tuple(steps))


def mixed_radix_offsets(jof: JointOrderedFactorisation) -> tuple[np.ndarray, np.ndarray]:
    """(alpha, beta): sorted first-row and first-column offsets."""
    offs = {1: np.zeros(1, dtype=np.int64), 2: np.zeros(1, dtype=np.int64)}
    w = 1
    for dim, f in jof.steps:
        digits = np.arange(f, dtype=np.int64) * w
        offs[dim] = np.add.outer(digits, offs[dim]).ravel()
        w *= f
    return np.sort(offs[2]), np.sort(offs[1])


@dataclass(frozen=True, eq=False)
class ReversibleSquare:
    n: int
    M: np.ndarray
    path_set: DivisorPathSet | None = field(default=None, compare=False)

    def __post_init__(self):
        M = np.asarray(self.M, dtype=np.int64)
        if M.shape != (self.n, self.n):
            raise ValueError(f"grid shape {M.shape} does not match n={self.n}")
        M.setflags(write=False)
        object.__setattr__(self, "M", M)

    def __eq__(self, other):
        if not isinstance(other, ReversibleSquare):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.M, other.M)

    def __hash__(self):
        return hash((self.n, self.digest()))

    def digest(self) -> bytes:
        return hashlib.blake2b(self.M.tobytes(), digest_size=16).digest()

    @property
    def rows(self) -> list[list[int]]:
        return self.M.tolist()

    def alpha(self) -> list[int]:
        return (self.M[0] - 1).tolist()

    def beta(self) -> list[int]:
        return (self.M[:, 0] - 1).tolist()

    def transpose(self) -> ReversibleSquare:
        return ReversibleSquare(self.n, self.M.T.copy())

    def to_dict(self) -> dict:
        out = {"n": self.n, "rows": self.rows}
        if self.path_set is not None:
            out["path_set"] = self.path_set.to_dict()
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)

    @classmethod
    def from_dict(cls, obj: dict) -> ReversibleSquare:
        ps = obj.get("path_set")
        n = int(obj["n"])
        path_set = DivisorPathSet(n, tuple(ps["i"]), tuple(ps["j"])) if ps else None
        return cls(n, np.array(obj["rows"], dtype=np.int64), path_set)


def square_from_offsets(alpha: Sequence[int], beta: Sequence[int], path_set=None) -> ReversibleSquare:
    a = np.asarray(alpha, dtype=np.int64)
    b = np.asarray(beta, dtype=np.int64)
    return ReversibleSquare(len(a), b[:, None] + a[None, :] + 1, path_set)


def build_square(ps: DivisorPathSet) -> ReversibleSquare:
    alpha, beta = mixed_radix_offsets(to_joint_factorisation(ps))
    return square_from_offsets(alpha, beta, ps)


@dataclass(frozen=True)
class ValidationReport:
    n: int
    permutation: bool
    monotone: bool
    principal: bool
    reversal: bool
    vertex: bool

    @property
    def ok(self) -> bool:
        return self.permutation and self.monotone and self.principal and self.reversal and self.vertex

    def failures(self) -> list[str]:
        names = ("permutation", "monotone", "principal", "reversal", "vertex")
        return [k for k in names if not getattr(self, k)]


def validate_square(M) -> ValidationReport:
    """Check the principal reversible square axioms on an n x n grid.

    (V) over all quadruples is equivalent to M[i][j] = M[i][1] + M[1][j] - M[1][1].
    When that holds the grid is an outer sum of its first row and column, and
    (R) and monotonicity are checked on those two vectors alone; otherwise they
    are checked on the full grid. The principal condition needs n >= 2.
    """
    if isinstance(M, ReversibleSquare):
        M = M.M
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        raise ValueError(f"expected a non-empty square grid, got shape {M.shape}")
    M = M.astype(np.int64, copy=False)
    n = M.shape[0]
    flat = M.ravel()
    lo, hi = int(flat.min()), int(flat.max())
    permutation = lo >= 1 and hi <= n * n and bool(np.all(np.bincount(flat, minlength=n * n + 1)[1:] == 1))
    principal = n >= 2 and int(M[0, 0]) == 1 and int(M[0, 1]) == 2
    vertex = bool(np.array_equal(M, M[:, :1] + M[:1, :] - M[0, 0]))
    if vertex:
        row, col = M[0], M[:, 0]
        monotone = bool(np.all(np.diff(row) > 0) and np.all(np.diff(col) > 0))
        reversal = bool(np.all(row + row[::-1] == row[0] + row[-1]) and np.all(col + col[::-1] == col[0] + col[-1]))
    else:
        monotone = bool(np.all(np.diff(M, axis=0) > 0) and np.all(np.diff(M, axis=1) > 0))
        row_rev = M + M[:, ::-1]
        col_rev = M + M[::-1, :]
        reversal = bool(np.all(row_rev == row_rev[:, :1]) and np.all(col_rev == col_rev[:1, :]))
    return ValidationReport(n, permutation, monotone, principal, reversal, vertex)


def count_principal(n: int) -> int:
    """N_n = sum_j c_j(n) (c_j(n) + c_{j+1}(n))."""
    total = 0
    for j in range(1, big_omega(n) + 1):
        cj = c(j, n)
        total += cj * (cj + c(j + 1, n))
    return total


def count_principal_dsum(n: int) -> int:
    """N_n written with d_l(n) d_{m+1}(n) only."""
    om = big_omega(n)
    ds = [d(k, n) for k in range(om + 2)]
    total = 0
    for j in range(1, om + 1):
        for l in range(1, j + 1):
            for m in range(j + 1):
                term = binomial(j, l) * binomial(j, m) * ds[l] * ds[m + 1]
                total += -term if (l + m) % 2 else term
    return total


def iter_squares(n: int) -> Iterator[ReversibleSquare]:
    for ps in iter_divisor_path_sets(n):
        yield build_square(ps)
