"""Cross-check the p-root standard tableau count against the dimension formula.

For every two-row shape up to --max-n and every order in --p, count the
p-root standard tableaux by brute enumeration and compare with the
alternating hook-length sum.  Mismatches (there should be none) are
flagged loudly.

Example:
    python scripts/root_basis_survey.py --max-n 11 --p 3 5 7
"""

import argparse

from qspecht.combinat import Partition, hook_count
from qspecht.roots import enumerate_p_root_standard, irreducible_dimension


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=11)
    parser.add_argument("--p", type=int, nargs="+", default=[3, 5, 7])
    parser.add_argument("--show-basis", action="store_true",
                        help="also print the surviving tableaux")
    args = parser.parse_args()

    mismatches = 0
    for n in range(1, args.max_n + 1):
        for second in range(0, n // 2 + 1):
            shape = Partition((n - second, second) if second else (n,))
            for p in args.p:
                tableaux = enumerate_p_root_standard(shape, p)
                dim = irreducible_dimension(shape, p)
                marker = "" if len(tableaux) == dim else "  << MISMATCH"
                if marker:
                    mismatches += 1
                print(f"{str(shape):>8}  p={p}  count={len(tableaux):>4}  "
                      f"formula={dim:>4}  (dim S = {hook_count(shape)})" + marker)
                if args.show_basis:
                    for t in tableaux:
                        print(f"            {t}")
    if mismatches:
        raise SystemExit(f"{mismatches} mismatches found")
    print("all counts match the dimension formula")


if __name__ == "__main__":
    main()
