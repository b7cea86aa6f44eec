"""The divisor function d_j, the non-trivial divisor function c_j and the
associated divisor functions c_j^(r), with their closed and hypergeometric forms.

Primary evaluation always goes through the prime factorization:

* ``d(j, n) = prod_k C(a_k + j - 1, a_k)``
* ``c(j, n) = sum_i (-1)**(j-i) C(j, i) d(i, n)``  (with d_0 = [n == 1])
* ``c_assoc(j, r, n) = sum_i (-1)**(j-i) C(j, i) d(i + r, n)``

Divisor-sum recursions live in :mod:`divfun.oracle`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Sequence

from .arith import Factorization, binomial, factorize, rising_factorial

Kind = Literal["trivial", "nontrivial", "associated"]


def _d_from_exponents(j: int, exponents: Sequence[int]) -> int:
    if j == 0:
        return 1 if not exponents else 0
    out = 1
    for a in exponents:
        out *= binomial(a + j - 1, a)
    return out


def d(j: int, n: int) -> int:
    """Number of ordered factorizations of ``n`` into ``j`` positive factors.

    ``j = 0`` follows the convention d_0(n) = [n == 1].
    """
    if j < 0:
        raise ValueError(f"j must be non-negative, got {j}")
    return _d_from_exponents(j, factorize(n).exponents)


def d0(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return 1 if n == 1 else 0


def _alternating(j: int, r: int, exponents: Sequence[int]) -> int:
    total = 0
    for i in range(j + 1):
        term = binomial(j, i) * _d_from_exponents(i + r, exponents)
        total += -term if (j - i) % 2 else term
    if total < 0:
        raise ArithmeticError(f"negative count {total} for j={j}, r={r}, a={exponents}")
    return total


def c(j: int, n: int) -> int:
    """Number of ordered factorizations of ``n`` into ``j`` factors, each >= 2.

    ``c(0, n)`` is d_0(n).
    """
    if j < 0:
        raise ValueError(f"j must be non-negative, got {j}")
    return _alternating(j, 0, factorize(n).exponents)


def c_assoc(j: int, r: int, n: int) -> int:
    """Associated divisor function: the r-fold divisor-sum transform of c_j."""
    if j < 0 or r < 0:
        raise ValueError("j and r must be non-negative")
    return _alternating(j, r, factorize(n).exponents)


def c_assoc_prime_power(j: int, r: int, p: int, a: int) -> int:
    """c_j^(r)(p^a) = C(a + r - 1, j + r - 1); ``p`` only has to be prime."""
    if a < 1 or j < 1 or r < 0:
        raise ValueError("need j >= 1, r >= 0, a >= 1")
    return binomial(a + r - 1, j + r - 1)


@dataclass(frozen=True)
class DivisorFunctionQuery:
    kind: Kind
    j: int
    n: int
    r: int = 0

    def __post_init__(self):
        if self.kind not in ("trivial", "nontrivial", "associated"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind != "associated" and self.r != 0:
            raise ValueError(f"r is only meaningful for the associated kind, got r={self.r}")
        if self.j < 0 or self.r < 0 or self.n < 1:
            raise ValueError("need j >= 0, r >= 0, n >= 1")

    def evaluate(self) -> int:
        if self.kind == "trivial":
            return d(self.j, self.n)
        if self.kind == "nontrivial":
            return c(self.j, self.n)
        return c_assoc(self.j, self.r, self.n)


# --- hypergeometric series ---------------------------------------------------


@dataclass(frozen=True)
class HypergeometricSpec:
    """A terminating ``prefactor * kF_n(upper; lower; argument)``.

    Construction fails unless some upper parameter is a non-positive integer,
    and no lower parameter hits zero before the series terminates.
    """

    upper: tuple[int, ...]
    lower: tuple[int, ...]
    argument: Fraction = Fraction(1)
    prefactor: Fraction = Fraction(1)
    length: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(int(x) for x in self.upper))
        object.__setattr__(self, "lower", tuple(int(x) for x in self.lower))
        object.__setattr__(self, "argument", Fraction(self.argument))
        object.__setattr__(self, "prefactor", Fraction(self.prefactor))
        stops = [-u for u in self.upper if u <= 0]
        if not stops:
            raise ValueError(f"series with upper parameters {self.upper} does not terminate")
        # terms m = 0..length-1 are the only non-zero ones
        length = min(stops) + 1
        for b in self.lower:
            if b <= 0 and -b < length - 1:
                raise ZeroDivisionError(f"lower parameter {b} vanishes before termination")
        object.__setattr__(self, "length", length)

    def terms(self) -> list[Fraction]:
        out = []
        term = Fraction(1)
        for m in range(self.length):
            out.append(term)
            num = 1
            for a in self.upper:
                num *= a + m
            den = m + 1
            for b in self.lower:
                den *= b + m
            if num == 0:
                break
            term = term * num * self.argument / den
        return out

    def evaluate(self) -> Fraction:
        return self.prefactor * sum(self.terms(), Fraction(0))


def c_hypergeom_spec(j: int, f: Factorization) -> HypergeometricSpec:
    k = len(f)
    return HypergeometricSpec(
        upper=tuple(a + 1 for a in f.exponents) + (1 - j,),
        lower=(1,) * (k - 1) + (2,),
        prefactor=Fraction((-1) ** ((1 - j) % 2) * j),
    )


def c_hypergeom(j: int, f: Factorization | int) -> int:
    """c_j(n) = (-1)^(1-j) j * {k+1}F{k}({a_i + 1}, 1 - j; {1}, 2; 1)."""
    if isinstance(f, int):
        f = factorize(f)
    if j < 1 or f.n < 2:
        raise ValueError("need j >= 1 and n >= 2")
    value = c_hypergeom_spec(j, f).evaluate()
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"hypergeometric form gave {value} for j={j}, n={f.n}")
    return int(value)


def c_mult_rule_prime_power(j: int, p: int, a: int, b: int) -> int:
    """c_j(p^(a+b)) from the values d_{k+1}(p^b) and rising-factorial ratios."""
    if min(j, a, b) < 1:
        raise ValueError("need j, a, b >= 1")
    total = Fraction(0)
    base = rising_factorial(b + 1, a)
    for k in range(j):
        sign = -1 if (k - j + 1) % 2 else 1
        ratio = Fraction(rising_factorial(b + k + 1, a), base)
        total += sign * binomial(j, k + 1) * d(k + 1, p**b) * ratio
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral result {total}")
    return int(total)


# --- ratios -------------------------------------------------------------------


def ratio_to_d(j: int, r: int, n: int) -> Fraction:
    """c_j^(r)(n) / d_{j+r}(n) via the binomial-sum closed form."""
    f = factorize(n)
    t = len(f)
    total = Fraction(0)
    for i in range(j + 1):
        num = binomial(j, i) * binomial(j + r - 1, i) ** t
        if num == 0:
            continue
        den = 1
        for a in f.exponents:
            den *= binomial(a + j + r - 1, i)
        total += Fraction(-num if i % 2 else num, den)
    return total


def ratio_to_d_hypergeom(j: int, r: int, n: int) -> Fraction:
    """Same ratio as {t+1}F{t}({1-j-r}, -j; {1-a_k-j-r}; 1)."""
    f = factorize(n)
    spec = HypergeometricSpec(
        upper=(1 - j - r,) * len(f) + (-j,),
        lower=tuple(1 - a - j - r for a in f.exponents),
    )
    return spec.evaluate()


def ratio_to_dr(j: int, r: int, n: int) -> Fraction:
    """c_j^(r)(n) / d_r(n) for ``r >= 1``, binomial-sum form.

    Cross-checked against :func:`ratio_to_dr_hypergeom`; a disagreement raises.
    """
    if r < 1:
        raise ValueError("ratio_to_dr needs r >= 1")
    f = factorize(n)
    t = len(f)
    total = Fraction(0)
    for i in range(j + 1):
        num = binomial(j, i)
        for a in f.exponents:
            num *= binomial(a + i + r - 1, i)
        term = Fraction(num, binomial(i + r - 1, i) ** t)
        total += -term if (j - i) % 2 else term
    other = ratio_to_dr_hypergeom(j, r, n)
    if other != total:
        raise ArithmeticError(f"ratio forms disagree: {total} vs {other}")
    return total


def ratio_to_dr_hypergeom(j: int, r: int, n: int) -> Fraction:
    """(-1)^j {t+1}F{t}({a_k + r}, -j; {r}; 1)."""
    f = factorize(n)
    spec = HypergeometricSpec(
        upper=tuple(a + r for a in f.exponents) + (-j,),
        lower=(r,) * len(f),
        prefactor=Fraction((-1) ** (j % 2)),
    )
    return spec.evaluate()
