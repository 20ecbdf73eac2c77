"""Compare every Lagrangian Pieri coefficient with the diagram-operator count.

    python scripts/pieri_oracle_sweep.py --max-n 5
"""

import argparse
import sys
import time

from schubcalc.combinatorics import contains, strict_partitions_in_rho
from schubcalc.pieri import marking_contributions, pieri_product


def sweep(n: int) -> tuple[int, list]:
    compared, bad = 0, []
    shapes = list(strict_partitions_in_rho(n))
    for I in shapes:
        for p in range(1, n + 1):
            product = pieri_product(I, p, n)
            for J in shapes:
                if sum(J) != sum(I) + p:
                    continue
                oracle = sum(c for _, c in marking_contributions(I, J, p, n)) if contains(I, J) else 0
                compared += 1
                if oracle != product[J]:
                    bad.append((I, p, J, product[J], oracle))
    return compared, bad


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()
    total_bad = 0
    for n in range(1, args.max_n + 1):
        start = time.perf_counter()
        compared, bad = sweep(n)
        total_bad += len(bad)
        print(f"n={n}: {compared} coefficients, {len(bad)} mismatches, {time.perf_counter() - start:.2f}s")
        for row in bad[:10]:
            print("  mismatch I={} p={} J={} pieri={} operator={}".format(*row))
    return 1 if total_bad else 0


if __name__ == "__main__":
    sys.exit(main())
