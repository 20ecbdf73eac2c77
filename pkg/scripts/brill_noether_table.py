"""Euler characteristics of Brill-Noether loci W^r_d for small genus.

Prints chi(W^r_d), checks the parity sign rule when g and d differ in
parity, and compares W^0_d with the symmetric product C_d where W^1_d is
empty.

    python scripts/brill_noether_table.py --max-g 7
"""

import argparse
import sys
from math import comb

from schubcalc.loci import bn_euler, bn_rho


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-g", type=int, default=7)
    args = ap.parse_args()
    problems = 0
    print(f"{'g':>3} {'d':>3} {'r':>3} {'rho':>4} {'chi':>10}  note")
    for g in range(1, args.max_g + 1):
        for r in range(0, g + 1):
            for d in range(1, g + r):
                if bn_rho(g, d, r) < 0:
                    continue
                chi = bn_euler(g, d, r)
                notes = []
                if (g - d) % 2:
                    ok = chi < 0 if (g - r) % 2 == 0 else chi > 0
                    notes.append("sign ok" if ok else "SIGN MISMATCH")
                    problems += not ok
                if r == 0 and 2 * d < g + 2:
                    want = (-1) ** d * comb(2 * g - 2, d)
                    notes.append("= chi(C_d)" if chi == want else f"chi(C_d) = {want} MISMATCH")
                    problems += chi != want
                print(f"{g:>3} {d:>3} {r:>3} {bn_rho(g, d, r):>4} {chi:>10}  {', '.join(notes)}")
    print(f"{problems} problems")
    return 1 if problems else 0


if __name__ == "__main__":
    sys.exit(main())
