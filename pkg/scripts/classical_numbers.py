"""Classical enumerative numbers recovered from the general formulas.

Characteristic numbers of plane conics, Castelnuovo counts of special
divisors, and the degree of the Lagrangian Grassmannian LG(n).

    python scripts/classical_numbers.py
"""

from schubcalc.enumgeo import quadrics_product
from schubcalc.loci import castelnuovo
from schubcalc.pieri import LGClass, pieri_product


def lg_degree(n: int) -> int:
    """Coefficient of the point class in sigma(1)^dim."""
    x = LGClass.unit(n)
    for _ in range(n * (n + 1) // 2):
        out = LGClass(n)
        for I, c in x.coeffs.items():
            out = out + pieri_product(I, 1, n).scale(c)
        x = out
    top = tuple(range(n, 0, -1))
    return x[top]


def main() -> None:
    conics = [quadrics_product((0, 1, 2), (5 - k, k), 1) for k in range(6)]
    print("conics through 5-k points tangent to k lines:", conics)
    for g, d, r in [(4, 3, 1), (6, 4, 1), (8, 5, 1), (9, 8, 2), (12, 10, 2)]:
        print(f"Castelnuovo number g={g} d={d} r={r}: {castelnuovo(g, d, r)}")
    print("degree of LG(n), n = 1..5:", [lg_degree(n) for n in range(1, 6)])


if __name__ == "__main__":
    main()
