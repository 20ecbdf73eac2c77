"""Replay the reference golden values and print a one-line summary.

    python scripts/paper_tables.py [--extended]
"""

import argparse
import sys

from schubcalc.cli import paper_checks


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--extended", action="store_true", help="include every tabulated F_2 / F_4 coefficient")
    args = ap.parse_args()
    failed = 0
    checks = paper_checks(args.extended)
    for check in checks:
        got = check.compute()
        ok = got == check.expected
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'}  {check.name}: expected {check.expected}, got {got}")
    print(f"{len(checks) - failed}/{len(checks)} golden values reproduced")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
