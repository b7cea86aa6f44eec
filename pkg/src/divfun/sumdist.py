"""Sum-and-distance systems and their correspondence with principal reversible squares.

An m+m system {A, B} is non-inclusive when the sums and absolute differences
a + b, |a - b| are exactly the odd numbers 1..4m^2-1, and inclusive when those
together with the elements of A and B are exactly 1..2m(m+1). Even squares
(n = 2m) correspond to non-inclusive systems and odd squares (n = 2m + 1) to
inclusive ones.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .reversible import ReversibleSquare, iter_divisor_path_sets, build_square, validate_square


class InvalidSystemError(ValueError):
    pass


@dataclass(frozen=True)
class SumDistanceSystem:
    """Two strictly increasing m-element component lists.

    Only the shape is enforced here; whether the sums and distances tile the
    required progression is decided by :func:`verify_sds`.
    """

    m: int
    A: tuple[int, ...]
    B: tuple[int, ...]
    inclusive: bool = False

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(int(x) for x in self.A))
        object.__setattr__(self, "B", tuple(int(x) for x in self.B))
        if self.m < 1 or len(self.A) != self.m or len(self.B) != self.m:
            raise InvalidSystemError(f"components must both have m={self.m} elements")
        for comp in (self.A, self.B):
            if comp[0] < 1 or any(y <= x for x, y in zip(comp, comp[1:])):
                raise InvalidSystemError(f"component {comp} is not strictly increasing and positive")

    def canonical(self) -> SumDistanceSystem:
        """Same system with the component holding the smaller minimum first."""
        if self.B[0] < self.A[0]:
            return SumDistanceSystem(self.m, self.B, self.A, self.inclusive)
        return self

    def key(self):
        c = self.canonical()
        return (c.inclusive, c.A, c.B)

    def same_as(self, other: SumDistanceSystem) -> bool:
        return self.key() == other.key()

    def sum_of_squares(self) -> int:
        return sum(x * x for x in self.A) + sum(x * x for x in self.B)

    def to_dict(self) -> dict:
        return {"m": self.m, "inclusive": self.inclusive, "A": list(self.A), "B": list(self.B)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def to_text(self) -> str:
        return " ".join(map(str, self.A)) + " | " + " ".join(map(str, self.B))

    @classmethod
    def from_dict(cls, obj: dict, inclusive: bool | None = None) -> SumDistanceSystem:
        A, B = list(obj["A"]), list(obj["B"])
        incl = obj.get("inclusive", inclusive if inclusive is not None else False)
        m = obj.get("m", len(A))
        if not isinstance(incl, bool) or not isinstance(m, int):
            raise InvalidSystemError("'inclusive' must be a boolean and 'm' an integer")
        return cls(m, tuple(A), tuple(B), incl)


def verify_sds(sys: SumDistanceSystem) -> bool:
    m = sys.m
    values = [a + b for a in sys.A for b in sys.B] + [abs(a - b) for a in sys.A for b in sys.B]
    if sys.inclusive:
        values += list(sys.A) + list(sys.B)
        target = list(range(1, 2 * m * (m + 1) + 1))
    else:
        target = list(range(1, 4 * m * m, 2))
    return sorted(values) == target


def verify_signed_form(sys: SumDistanceSystem) -> bool:
    """Equivalent check through the sum of sets {0?, +-a} + {0?, +-b}."""
    m = sys.m
    if sys.inclusive:
        left = [0] + [s * a for a in sys.A for s in (1, -1)]
        right = [0] + [s * b for b in sys.B for s in (1, -1)]
        top = 2 * m * (m + 1)
        target = list(range(-top, top + 1))
    else:
        left = [s * a for a in sys.A for s in (1, -1)]
        right = [s * b for b in sys.B for s in (1, -1)]
        target = list(range(-4 * m * m + 1, 4 * m * m, 2))
    return sorted(x + y for x in left for y in right) == target


def square_to_sds(sq: ReversibleSquare) -> SumDistanceSystem:
    """Read a system off the first row (alpha) and first column (beta)."""
    n = sq.n
    if n < 2:
        raise ValueError("squares of order 1 carry no sum-and-distance system")
    alpha, beta = sq.alpha(), sq.beta()
    if n % 2 == 0:
        m = n // 2
        # 1-based alpha_{m+j} - alpha_{m+1-j}
        A = [alpha[m + j - 1] - alpha[m - j] for j in range(1, m + 1)]
        B = [beta[m + j - 1] - beta[m - j] for j in range(1, m + 1)]
        inclusive = False
    else:
        m = n // 2
        A2 = [alpha[m + j] - alpha[m - j] for j in range(1, m + 1)]
        B2 = [beta[m + j] - beta[m - j] for j in range(1, m + 1)]
        if any(x % 2 for x in A2 + B2):
            raise InvalidSystemError("odd-order square with unequal half-differences")
        A = [x // 2 for x in A2]
        B = [x // 2 for x in B2]
        inclusive = True
    return SumDistanceSystem(m, tuple(A), tuple(B), inclusive).canonical()


def _offsets(comp: tuple[int, ...], inclusive: bool) -> list[int]:
    m = len(comp)
    top = comp[-1]
    if inclusive:
        # alpha_{m+1+j} = a_m + a_j, alpha_{m+1-j} = a_m - a_j, alpha_{m+1} = a_m
        lower = [top - comp[j - 1] for j in range(m, 0, -1)]
        upper = [top + comp[j - 1] for j in range(1, m + 1)]
        return lower + [top] + upper
    out = []
    for j in range(m, 0, -1):
        q, r = divmod(top - comp[j - 1], 2)
        if r:
            raise InvalidSystemError(f"(a_m - a_j) is odd for component {comp}")
        out.append(q)
    for j in range(1, m + 1):
        q, r = divmod(top + comp[j - 1], 2)
        if r:
            raise InvalidSystemError(f"(a_m + a_j) is odd for component {comp}")
        out.append(q)
    return out


def sds_to_square(sys: SumDistanceSystem) -> ReversibleSquare:
    """Principal reversible square of order 2m (or 2m + 1 when inclusive)."""
    alpha = np.array(_offsets(sys.A, sys.inclusive), dtype=np.int64)
    beta = np.array(_offsets(sys.B, sys.inclusive), dtype=np.int64)
    n = len(alpha)
    M = beta[:, None] + alpha[None, :] + 1
    if n >= 2 and M[0, 1] != 2:
        M = M.T.copy()
    report = validate_square(M)
    if not report.ok:
        raise InvalidSystemError(f"reconstructed grid fails {report.failures()}")
    return ReversibleSquare(n, M)


def enumerate_sds(m: int, inclusive: bool = False) -> list[SumDistanceSystem]:
    """All m+m systems of the given kind, canonical and sorted by (A, B)."""
    if m < 1:
        raise ValueError("m must be positive")
    n = 2 * m + 1 if inclusive else 2 * m
    seen = {}
    for ps in iter_divisor_path_sets(n):
        sys = square_to_sds(build_square(ps))
        seen.setdefault(sys.key(), sys)
    return sorted(seen.values(), key=lambda s: (s.A, s.B))


def sum_of_squares_target(m: int, inclusive: bool = False) -> int:
    """(2m)((2m)^4 - 1)/3! non-inclusive, (2m+1)((2m+1)^4 - 1)/4! inclusive."""
    if m < 1:
        raise ValueError("m must be positive")
    if inclusive:
        k = 2 * m + 1
        q, r = divmod(k * (k**4 - 1), 24)
    else:
        k = 2 * m
        q, r = divmod(k * (k**4 - 1), 6)
    assert r == 0
    return q
