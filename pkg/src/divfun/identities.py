"""Named identity suites behind ``divfun identities``.

Each identity carries the formula it checks as its anchor and runs up to a
caller-supplied bound ``nmax`` (clipped where a check is expensive).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import oracle, reversible, series, sumdist
from .arith import big_omega, binomial, divisors, factorize, is_prime, primes_upto
from .divisor_funcs import (
    c,
    c_assoc,
    c_assoc_prime_power,
    c_hypergeom,
    c_mult_rule_prime_power,
    d,
    ratio_to_d,
    ratio_to_d_hypergeom,
    ratio_to_dr,
)

J_MAX = 6
R_MAX = 4


class Failure(AssertionError):
    pass


def expect(cond: bool, msg: str):
    if not cond:
        raise Failure(msg)


@dataclass(frozen=True)
class Identity:
    suite: str
    name: str
    anchor: str
    check: Callable[[int], str]


@dataclass(frozen=True)
class Outcome:
    identity: Identity
    passed: bool
    detail: str

    def row(self) -> dict:
        return {
            "suite": self.identity.suite,
            "name": self.identity.name,
            "anchor": self.identity.anchor,
            "status": "pass" if self.passed else "fail",
            "detail": self.detail,
        }


REGISTRY: list[Identity] = []


def identity(suite: str, name: str, anchor: str):
    def register(fn):
        REGISTRY.append(Identity(suite, name, anchor, fn))
        return fn

    return register


def _tables(nmax: int, jmax: int, rmax: int):
    D = {j: [0] + [d(j, n) for n in range(1, nmax + 1)] for j in range(0, jmax + rmax + 1)}
    C = {j: [0] + [c(j, n) for n in range(1, nmax + 1)] for j in range(0, jmax + rmax + 1)}
    return D, C


# --- core ----------------------------------------------------------------------


@identity("core", "factorization round trip", "n = prod p^a")
def _(nmax):
    for n in range(1, nmax + 1):
        expect(factorize(n).value() == n, f"n={n}")
    return f"n <= {nmax}"


@identity("core", "divisor count", "|{m : m | n}| = d_2(n)")
def _(nmax):
    for n in range(1, nmax + 1):
        expect(len(divisors(n)) == d(2, n), f"n={n}")
    return f"n <= {nmax}"


@identity("core", "d_j recurrence", "d_j(n) = sum_{m|n} d_{j-1}(m)")
def _(nmax):
    D, _ = _tables(nmax, J_MAX, 0)
    for j in range(2, J_MAX + 1):
        expect(oracle.divisor_sum_table(D[j - 1]) == D[j], f"j={j}")
    return f"n <= {nmax}, 2 <= j <= {J_MAX}"


@identity("core", "c_j recurrence", "c_j(n) = sum_{m|n, m<n} c_{j-1}(m)")
def _(nmax):
    _, C = _tables(nmax, J_MAX, 0)
    for j in range(2, J_MAX + 1):
        s = oracle.divisor_sum_table(C[j - 1])
        expect(all(s[n] - C[j - 1][n] == C[j][n] for n in range(1, nmax + 1)), f"j={j}")
    return f"n <= {nmax}, 2 <= j <= {J_MAX}"


@identity("core", "inclusion-exclusion", "c_j(n) = sum_i (-1)^(j-i) C(j,i) d_i(n), against brute force")
def _(nmax):
    top = min(nmax, 3000)
    for j in range(1, 6):
        for n in range(1, top + 1):
            expect(c(j, n) == oracle.brute_count_factorizations(n, j, proper=True), f"c j={j} n={n}")
            expect(d(j, n) == oracle.brute_count_factorizations(n, j, proper=False), f"d j={j} n={n}")
    return f"n <= {top}, j <= 5"


@identity("core", "inversion", "d_j(n) = sum_i C(j,i) c_i(n), c_0 = d_0")
def _(nmax):
    D, C = _tables(nmax, J_MAX, 0)
    for j in range(0, J_MAX + 1):
        for n in range(1, nmax + 1):
            expect(D[j][n] == sum(binomial(j, i) * C[i][n] for i in range(j + 1)), f"j={j} n={n}")
    return f"n <= {nmax}, j <= {J_MAX}"


@identity("core", "mixing", "c_j^(r) = sum_i C(r,i) c_{j+i}")
def _(nmax):
    _, C = _tables(nmax, 4, R_MAX)
    for j in range(1, 5):
        for r in range(R_MAX + 1):
            for n in range(1, nmax + 1):
                rhs = sum(binomial(r, i) * C[j + i][n] for i in range(r + 1))
                expect(c_assoc(j, r, n) == rhs, f"j={j} r={r} n={n}")
    return f"n <= {nmax}, j <= 4, r <= {R_MAX}"


@identity("core", "ordering chain", "c_j <= c_j^(r-1) <= c_j^(r) <= d_{j+r}")
def _(nmax):
    for n in range(1, nmax + 1):
        for j in range(1, 5):
            prev = c(j, n)
            for r in range(1, R_MAX + 1):
                cur = c_assoc(j, r, n)
                expect(prev <= cur <= d(j + r, n), f"j={j} r={r} n={n}")
                prev = cur
    return f"n <= {nmax}, j, r <= 4"


@identity("core", "vanishing", "c_j(n) = 0 iff j > Omega(n)")
def _(nmax):
    for n in range(1, nmax + 1):
        om = big_omega(n)
        for j in range(1, J_MAX + 2):
            expect((c(j, n) == 0) == (j > om), f"j={j} n={n}")
    return f"n <= {nmax}"


@identity("core", "hypergeometric c_j", "c_j = (-1)^(1-j) j {k+1}F{k}({a_i+1}, 1-j; {1}, 2; 1)")
def _(nmax):
    top = min(nmax, 5000)
    for n in range(2, top + 1):
        f = factorize(n)
        for j in range(1, J_MAX + 1):
            expect(c_hypergeom(j, f) == c(j, n), f"j={j} n={n}")
    return f"2 <= n <= {top}, j <= {J_MAX}"


@identity("core", "prime-power binomial", "c_j^(r)(p^a) = C(a+r-1, j+r-1)")
def _(nmax):
    for p in (2, 3, 5):
        for a in range(1, 13):
            for j in range(1, 13):
                for r in range(0, 6):
                    expect(c_assoc(j, r, p**a) == c_assoc_prime_power(j, r, p, a), f"p={p} a={a} j={j} r={r}")
    return "p in {2,3,5}, a, j <= 12, r <= 5"


@identity("core", "prime-power multiplication", "c_j(p^(a+b)) from d_{k+1}(p^b) and rising factorials")
def _(nmax):
    for p in (2, 3, 5):
        for a in range(1, 12):
            for b in range(1, 13 - a):
                for j in range(1, 13):
                    expect(c_mult_rule_prime_power(j, p, a, b) == c(j, p ** (a + b)), f"p={p} a={a} b={b} j={j}")
    return "a + b <= 12, j <= 12"


@identity("core", "multiplicativity of d_j", "d_j(mn) = d_j(m) d_j(n) for (m, n) = 1")
def _(nmax):
    for m in range(1, nmax + 1):
        for n in range(1, nmax // m + 1):
            if math.gcd(m, n) == 1:
                for j in range(1, J_MAX + 1):
                    expect(d(j, m * n) == d(j, m) * d(j, n), f"j={j} m={m} n={n}")
    expect(d(3, 20) != d(3, 2) * d(3, 10), "d_3 should not be totally multiplicative")
    expect(c(2, 10) != c(2, 2) * c(2, 5), "c_2 should not be multiplicative")
    return f"mn <= {nmax}"


@identity("core", "ratio c_j^(r)/d_{j+r}", "binomial sum = {t+1}F{t}({1-j-r}, -j; {1-a_k-j-r}; 1)")
def _(nmax):
    top = min(nmax, 2000)
    for n in range(1, top + 1):
        om = big_omega(n)
        for j in range(1, 5):
            for r in range(0, 4):
                val = ratio_to_d(j, r, n)
                expect(val == Fraction(c_assoc(j, r, n), d(j + r, n)), f"j={j} r={r} n={n}")
                expect(val == ratio_to_d_hypergeom(j, r, n), f"hypergeometric j={j} r={r} n={n}")
                expect(0 <= val <= 1 and ((val == 0) == (j > om)), f"range j={j} r={r} n={n}")
    return f"n <= {top}, j <= 4, r <= 3"


@identity("core", "ratio c_j^(r)/d_r", "binomial sum = (-1)^j {t+1}F{t}({a_k+r}, -j; {r}; 1)")
def _(nmax):
    top = min(nmax, 2000)
    for n in range(1, top + 1):
        for j in range(1, 5):
            for r in range(1, 4):
                expect(ratio_to_dr(j, r, n) == Fraction(c_assoc(j, r, n), d(r, n)), f"j={j} r={r} n={n}")
    return f"n <= {top}, j <= 4, 1 <= r <= 3"


@identity("core", "associated recursion", "c_j^(r)(n) = sum_{m|n} c_j^(r-1)(m)")
def _(nmax):
    top = min(nmax, 2000)
    for j in range(1, 5):
        for r in range(0, R_MAX + 1):
            expect(oracle.recursion_check_assoc(j, r, top), f"j={j} r={r}")
    return f"n <= {top}, j, r <= 4"


# --- series --------------------------------------------------------------------


def _seq(fn, N):
    return series.ArithmeticSequence.from_function(fn, N)


@identity("series", "zeta^j", "sum d_j(n) n^-s = zeta(s)^j")
def _(nmax):
    for j in range(0, J_MAX + 1):
        expect(series.zeta_power_coeffs(j, nmax) == _seq(lambda n: d(j, n), nmax), f"j={j}")
    return f"N = {nmax}, j <= {J_MAX}"


@identity("series", "(zeta-1)^j", "sum c_j(n) n^-s = (zeta(s) - 1)^j")
def _(nmax):
    for j in range(1, J_MAX + 1):
        expect(series.zeta_minus_one_power_coeffs(j, nmax) == _seq(lambda n: c(j, n), nmax), f"j={j}")
    return f"N = {nmax}, j <= {J_MAX}"


@identity("series", "zeta^r (zeta-1)^j", "sum c_j^(r)(n) n^-s = zeta(s)^r (zeta(s) - 1)^j")
def _(nmax):
    one = series.ones(nmax)
    for j in range(1, 5):
        acc = series.zeta_minus_one_power_coeffs(j, nmax)
        for r in range(0, R_MAX + 1):
            if r:
                acc = series.dirichlet_convolve(acc, one)
            expect(acc == _seq(lambda n: c_assoc(j, r, n), nmax), f"j={j} r={r}")
    return f"N = {nmax}, j, r <= 4"


@identity("series", "convolution law", "zeta^i zeta^j = zeta^(i+j)")
def _(nmax):
    pw = {k: series.zeta_power_coeffs(k, nmax) for k in range(9)}
    for i in range(0, 9):
        for j in range(0, 9 - i):
            expect(series.dirichlet_convolve(pw[i], pw[j]) == pw[i + j], f"i={i} j={j}")
    return f"N = {nmax}, i + j <= 8"


@identity("series", "zeta^(r+2)/zeta(2s)", "sum_{k^2|n} mu(k) d_{r+2}(n/k^2) = prod (2a+r)(a+r-1)!/(r! a!)")
def _(nmax):
    cols = {r: series.zeta_ratio_coeffs(r, nmax) for r in range(R_MAX + 1)}
    for n in range(1, nmax + 1):
        expect(cols[1][n] == d(2, n * n), f"r=1 n={n}")
        expect(cols[2][n] == d(2, n) ** 2, f"r=2 n={n}")
    return f"N = {nmax}, r <= {R_MAX}"


def _gf_checks(N: int, jmax: int = 4, rmax: int = 3):
    sub = series.pseries_substitute
    Dg = {j: series.divisor_gf(j, N) for j in range(0, jmax + 1)}
    Cg = {(j, r): series.nontrivial_gf(j, N, r) for j in range(0, jmax + 1) for r in range(0, rmax + 1)}
    for j in range(1, jmax + 1):
        expect(series.pseries_sum((sub(Dg[j - 1], k) for k in range(1, N + 1)), N) == Dg[j], f"D_{j}")
        expect(series.pseries_sum((sub(Cg[j - 1, 0], k) for k in range(2, N + 1)), N) == Cg[j, 0], f"C_{j}")
        expect(series.lambert_transform(Dg[j - 1]) == Dg[j], f"Lambert D_{j}")
        expect(series.lambert_transform(Cg[j - 1, 0], shifted=True) == Cg[j, 0], f"Lambert C_{j}")
        for r in range(1, rmax + 1):
            prev = Cg[j, r - 1]
            expect(series.pseries_sum((sub(prev, k) for k in range(1, N + 1)), N) == Cg[j, r], f"C_{j}^({r})")
            expect(series.lambert_transform(prev) == Cg[j, r], f"Lambert C_{j}^({r})")


@identity("series", "generating functions", "D_j = sum_k D_{j-1}(x^k), C_j = sum_{k>=2} C_{j-1}(x^k), Lambert forms")
def _(nmax):
    N = min(nmax, 512)
    _gf_checks(N)
    return f"degree <= {N}, j <= 4, r <= 3"


@identity("series", "Euler products for c_j/d_j", "sum c_j(n)/(d_j(n) n^s) at s = 3, j = 1, 2, 3")
def _(nmax):
    spec = series.EulerProductSpec(3.0, 10**5, 10**5)
    worst = 0.0
    for j in (1, 2, 3):
        closed = series.euler_product_ratio(j, spec)
        direct = series.direct_ratio_sum(j, spec.s, nmax)
        # direct sum misses at most sum_{n > nmax} n^-s
        allow = 1e-7 + nmax ** (1 - spec.s) / (spec.s - 1)
        expect(abs(closed - direct) <= allow, f"j={j}: {closed} vs {direct}")
        worst = max(worst, abs(closed - direct))
    return f"direct sum to {nmax}, max |diff| = {worst:.2e}"


# --- squares -------------------------------------------------------------------


@identity("squares", "principal square count", "N_n = sum_j c_j (c_j + c_{j+1}) = triple d-sum = #path sets")
def _(nmax):
    for n in range(1, nmax + 1):
        N = reversible.count_principal(n)
        expect(N == reversible.count_principal_dsum(n), f"n={n}")
        expect(N == sum(1 for _ in reversible.iter_divisor_path_sets(n)), f"n={n}")
    return f"n <= {nmax}"


@identity("squares", "prime counts", "N_n = 1 iff n prime; N_{p^a} = C(2a-1, a)")
def _(nmax):
    for n in range(2, nmax + 1):
        expect((reversible.count_principal(n) == 1) == is_prime(n), f"n={n}")
    for p in primes_upto(nmax):
        a = 1
        while p**a <= nmax:
            expect(reversible.count_principal(p**a) == binomial(2 * a - 1, a), f"p={p} a={a}")
            a += 1
    return f"n <= {nmax}"


@identity("squares", "construction", "every built square satisfies (R), (V), principal; distinct per path set")
def _(nmax):
    top = min(nmax, 200)
    for n in range(2, top + 1):
        seen = set()
        for ps in reversible.iter_divisor_path_sets(n):
            sq = reversible.build_square(ps)
            jof = reversible.to_joint_factorisation(ps)
            expect(jof.product(1) == n and jof.product(2) == n, f"factorisation {ps}")
            report = reversible.validate_square(sq)
            expect(report.ok, f"{ps}: {report.failures()}")
            seen.add(sq.digest())
        expect(len(seen) == reversible.count_principal(n), f"n={n}: duplicate squares")
    return f"n <= {top}"


@identity("squares", "splitting oracle", "validated exact splittings of 0..n^2-1 = constructed squares")
def _(nmax):
    top = min(nmax, oracle.MAX_SPLITTING_ORDER)
    for n in range(2, top + 1):
        found = set()
        for sp in oracle.enumerate_splittings(n):
            grid = oracle.splitting_to_square(sp)
            if reversible.validate_square(grid).ok:
                found.add(reversible.ReversibleSquare(n, grid).digest())
        built = {sq.digest() for sq in reversible.iter_squares(n)}
        expect(found == built, f"n={n}")
    return f"n <= {top}"


@identity("squares", "sum-and-distance systems", "bijection with squares of order 2m / 2m+1; sum of squares invariant")
def _(nmax):
    done = []
    for m in range(1, 7):
        for inclusive in (False, True):
            n = 2 * m + 1 if inclusive else 2 * m
            if n > nmax:
                continue
            systems = sumdist.enumerate_sds(m, inclusive)
            expect(len(systems) == reversible.count_principal(n), f"count m={m} inclusive={inclusive}")
            target = sumdist.sum_of_squares_target(m, inclusive)
            for s in systems:
                expect(sumdist.verify_sds(s) and sumdist.verify_signed_form(s), f"verify {s}")
                expect(s.sum_of_squares() == target, f"sum of squares {s}")
                expect(sumdist.square_to_sds(sumdist.sds_to_square(s)) == s, f"round trip {s}")
            done.append(n)
    return f"orders {sorted(done)}" if done else "nothing in range"


SUITES = ("core", "series", "squares")


def run_suite(suite: str, nmax: int) -> list[Outcome]:
    if nmax < 2:
        raise ValueError("nmax must be at least 2")
    wanted = SUITES if suite == "all" else (suite,)
    if any(s not in SUITES for s in wanted):
        raise ValueError(f"unknown suite {suite!r}")
    out = []
    for ident in REGISTRY:
        if ident.suite not in wanted:
            continue
        try:
            detail = ident.check(nmax)
            out.append(Outcome(ident, True, detail))
        except Failure as exc:
            out.append(Outcome(ident, False, f"counterexample: {exc}"))
    return out
