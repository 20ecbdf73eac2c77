"""Tabulate ((J)) and [J] by Pfaffian, recursion and series routes.

    python scripts/coefficient_routes.py --max-top 8 --max-len 4
"""

import argparse
import sys

from schubcalc.enumgeo import ROUTES, bracket, paren


def strict_sequences(max_top: int, max_len: int):
    frontier = [()]
    for _ in range(max_len):
        frontier = [J + (x,) for J in frontier for x in range((J[-1] if J else max_top + 1) - 1, -1, -1)]
        yield from frontier


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-top", type=int, default=8)
    ap.add_argument("--max-len", type=int, default=4)
    ap.add_argument("--quiet", action="store_true", help="only print disagreements and the count")
    args = ap.parse_args()
    rows = disagreements = 0
    for J in strict_sequences(args.max_top, args.max_len):
        p = [paren(J, r) for r in ROUTES]
        b = [bracket(J, r) for r in ROUTES]
        split = len(set(p)) > 1 or len(set(b)) > 1
        disagreements += split
        rows += 1
        if split or not args.quiet:
            print(f"{','.join(map(str, J)):>12}  (( )) = {p[0]:>8}  [ ] = {b[0]:>8}{'  ROUTES DISAGREE' if split else ''}")
    print(f"{rows} sequences, {disagreements} route disagreements")
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
