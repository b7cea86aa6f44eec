"""Compare the Euler-product closed forms for sum c_j(n) / (d_j(n) n^s) with direct sums.

Sweeps the truncation limit and prints the absolute gap for j = 1, 2, 3, which
should shrink roughly like limit^(1-s).
"""

import argparse

from divfun.series import EulerProductSpec, direct_ratio_sum, euler_product_ratio


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--s", type=float, default=3.0)
    ap.add_argument("--limits", type=int, nargs="+", default=[10**3, 10**4, 10**5])
    args = ap.parse_args()
    print(f"{'limit':>8} {'j':>2} {'closed form':>20} {'direct sum':>20} {'gap':>10}")
    for limit in args.limits:
        spec = EulerProductSpec(args.s, limit, limit)
        for j in (1, 2, 3):
            closed = euler_product_ratio(j, spec)
            direct = direct_ratio_sum(j, args.s, limit)
            print(f"{limit:>8} {j:>2} {closed:>20.15f} {direct:>20.15f} {abs(closed - direct):>10.2e}")


if __name__ == "__main__":
    main()
