"""Exact divisor functions d_j, c_j, c_j^(r), their series identities, and
principal reversible squares with the sum-and-distance systems they encode."""

from .arith import Factorization, big_omega, binomial, divisors, factorize, moebius, rising_factorial
from .divisor_funcs import c, c_assoc, c_hypergeom, d, ratio_to_d, ratio_to_dr
from .reversible import build_square, count_principal, enumerate_divisor_path_sets, validate_square
from .sumdist import SumDistanceSystem, enumerate_sds, verify_sds

__all__ = [
    "Factorization",
    "SumDistanceSystem",
    "big_omega",
    "binomial",
    "build_square",
    "c",
    "c_assoc",
    "c_hypergeom",
    "count_principal",
    "d",
    "divisors",
    "enumerate_divisor_path_sets",
    "enumerate_sds",
    "factorize",
    "moebius",
    "ratio_to_d",
    "ratio_to_dr",
    "rising_factorial",
    "validate_square",
    "verify_sds",
]
