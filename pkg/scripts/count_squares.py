"""Tabulate N_n, the number of principal reversible n x n squares.

Each row lists N_n from the c_j formula, from the d_j triple sum, and from a
direct count of divisor path sets, followed by the matching sum-and-distance
system count when n >= 2.
"""

import argparse
import csv
import sys

from divfun.reversible import count_principal, count_principal_dsum, enumerate_divisor_path_sets
from divfun.sumdist import enumerate_sds


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=60)
    ap.add_argument("--sds-upto", type=int, default=16, help="enumerate systems only for n up to this")
    args = ap.parse_args()
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(("n", "N_n", "N_n_dsum", "path_sets", "sds"))
    for n in range(1, args.nmax + 1):
        paths = len(enumerate_divisor_path_sets(n))
        systems = ""
        if 2 <= n <= args.sds_upto:
            systems = len(enumerate_sds(n // 2, inclusive=n % 2 == 1))
        w.writerow((n, count_principal(n), count_principal_dsum(n), paths, systems))


if __name__ == "__main__":
    main()
