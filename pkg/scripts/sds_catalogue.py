"""Print every m+m sum-and-distance system for small m with its sum of squares."""

import argparse

from divfun.sumdist import enumerate_sds, sum_of_squares_target


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--mmax", type=int, default=4)
    args = ap.parse_args()
    for m in range(1, args.mmax + 1):
        for inclusive in (False, True):
            systems = enumerate_sds(m, inclusive)
            kind = "inclusive" if inclusive else "non-inclusive"
            print(f"m={m} {kind}: count {len(systems)}, sum of squares {sum_of_squares_target(m, inclusive)}")
            for s in systems:
                print(f"    {s.to_text()}")


if __name__ == "__main__":
    main()
