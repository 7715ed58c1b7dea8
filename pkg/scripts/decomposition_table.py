"""Sweep two-row shapes and print their root-of-unity composition series.

Example:
    python scripts/decomposition_table.py --max-n 12 --p 3 5
"""

import argparse

from qspecht.combinat import Partition
from qspecht.roots import analyze


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=12)
    parser.add_argument("--p", type=int, nargs="+", default=[3, 5])
    args = parser.parse_args()

    header = f"{'shape':>8}  {'p':>2}  {'dim S':>6}  verdict"
    print(header)
    print("-" * len(header))
    for n in range(2, args.max_n + 1):
        for second in range(1, n // 2 + 1):
            shape = Partition((n - second, second))
            for p in args.p:
                report = analyze(shape, p)
                if report.reducible:
                    verdict = (
                        f"S = D[{report.submodule_shape}] +> D[{shape}]  "
                        f"({report.submodule_dim} + {report.quotient_dim}, "
                        f"strip length {report.strip.length})"
                    )
                else:
                    verdict = "irreducible"
                print(f"{str(shape):>8}  {p:>2}  {report.specht_dim:>6}  {verdict}")


if __name__ == "__main__":
    main()
