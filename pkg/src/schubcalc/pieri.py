"""Cohomology of the Lagrangian Grassmannian LG(n, 2n).

Classes are integer combinations of sigma(I), I strict inside rho_n.  Products
use the Pieri rule together with the Pfaffian Giambelli formula.  The
diagram-operator evaluation in ``operator_multiplicity`` is an independent
check on the Pieri coefficients built from the type-C divided differences.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .combinatorics import (
    BarredPermutation,
    Partition,
    barred_w_I,
    is_strict,
    partition,
    skew_components,
    strict_partition,
    strict_partitions_in_rho,
)
from .divdiff import divided_difference, reflect
from .errors import DomainError, InexactDivision
from .polyring import Alphabet, MPoly, PolyRing, elementary_symmetric, ring_a
from .schurlib import pfaffian, qpoly

__all__ = [
    "LGClass",
    "DiagramMarking",
    "pieri_product",
    "pieri_candidates",
    "diagram_word",
    "operator_multiplicity",
    "marking_contributions",
    "sigma_ring",
    "giambelli",
    "evaluate_special",
    "lg_multiply",
    "q_expand",
    "qpoly_reduce",
]


def _inside_rho(I: Partition, n: int) -> bool:
    return not I or I[0] <= n


@dataclass
class LGClass:
    n: int
    coeffs: dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[Partition, int] = {}
        for key, c in self.coeffs.items():
            lam = partition(key)
            if not is_strict(lam) or not _inside_rho(lam, self.n):
                raise DomainError(f"{list(key)} is not a strict partition inside rho_{self.n}")
            if c:
                clean[lam] = clean.get(lam, 0) + c
        self.coeffs = {k: v for k, v in clean.items() if v}

    @classmethod
    def basis(cls, I: Sequence[int], n: int) -> "LGClass":
        return cls(n, {strict_partition(I): 1})

    @classmethod
    def unit(cls, n: int) -> "LGClass":
        return cls(n, {(): 1})

    def __getitem__(self, key: Sequence[int]) -> int:
        return self.coeffs.get(partition(key), 0)

    def _check(self, other: "LGClass") -> None:
        if self.n != other.n:
            raise DomainError(f"rank mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "LGClass") -> "LGClass":
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return LGClass(self.n, out)

    def scale(self, c: int) -> "LGClass":
        return LGClass(self.n, {k: c * v for k, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, LGClass):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __mul__(self, other: "LGClass") -> "LGClass":
        return lg_multiply(self, other)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: (-sum(kv[0]), tuple(-x for x in kv[0])))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"partition": list(k), "coeff": str(v)} for k, v in self.items()],
        }

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, v in self.items():
            name = f"sigma({','.join(map(str, k))})"
            parts.append(name if v == 1 else f"{v}*{name}")
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class DiagramMarking:
    J: Partition
    marked: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        boxes = {(r, c) for r, row in enumerate(self.J, 1) for c in range(1, row + 1)}
        if not set(self.marked) <= boxes:
            raise DomainError("marked boxes must lie in the diagram of J")


def _check_I(I: Sequence[int], n: int) -> Partition:
    I = strict_partition(I)
    if not _inside_rho(I, n):
        raise DomainError(f"{list(I)} is not contained in rho_{n}")
    return I


def pieri_candidates(I: Sequence[int], p: int, n: int) -> Iterator[Partition]:
    """Strict J with i_{h-1} >= j_h >= i_h (i_0 = n, i_{k+1} = 0) and |J| = |I| + p."""
    I = _check_I(I, n)
    k = len(I)
    bounds = [(I[h] if h < k else 0, n if h == 0 else I[h - 1]) for h in range(k + 1)]
    target = sum(I) + p

    def rec(h: int, prefix: tuple[int, ...], left: int) -> Iterator[Partition]:
        if h == k + 1:
            if left == 0:
                yield partition(prefix)
            return
        lo, hi = bounds[h]
        for j in range(min(hi, left), lo - 1, -1):
            if prefix and j >= prefix[-1] and j > 0:
                continue
            yield from rec(h + 1, prefix + (j,), left - j)

    for J in rec(0, (), target):
        if is_strict(J):
            yield J


def pieri_product(I: Sequence[int], p: int, n: int) -> LGClass:
    """sigma(I) sigma(p) = sum 2^{e(I,J)} sigma(J)."""
    if not 1 <= p <= n:
        raise DomainError(f"need 1 <= p <= n = {n}")
    I = _check_I(I, n)
    out = {J: 2 ** skew_components(I, J, exclude_first_column=True) for J in pieri_candidates(I, p, n)}
    return LGClass(n, out)


# --------------------------------------------------------------------------
# diagram operators


def _reading(J: Partition, n: int) -> list[tuple[tuple[int, int], int]]:
    """Boxes of D_J row by row, left to right, with column labels n, n-1, ..."""
    return [((r, c), n + 1 - c) for r, row in enumerate(J, 1) for c in range(1, row + 1)]


def diagram_word(J: Sequence[int], marked: DiagramMarking | set, n: int) -> tuple[tuple[int, ...], tuple[tuple[str, int], ...]]:
    """Return (r_D, d^D_J), both written left to right as composites.

    r_D is a word in simple reflections; d^D_J is a sequence of ("s", i) and
    ("d", i) operators, the rightmost applied first.
    """
    J = strict_partition(J)
    if J and J[0] > n:
        raise DomainError(f"{list(J)} is not contained in rho_{n}")
    D = marked.marked if isinstance(marked, DiagramMarking) else frozenset(marked)
    DiagramMarking(J, frozenset(D))
    read = _reading(J, n)
    r_D = tuple(label for box, label in reversed(read) if box in D)
    ops = tuple(("s" if box in D else "d", label) for box, label in reversed(read))
    return r_D, ops


def marking_contributions(I: Sequence[int], J: Sequence[int], p: int, n: int) -> list[tuple[frozenset, int]]:
    """All markings D of D_J with r_D reduced for w_I and nonzero d^D_J(e_p)."""
    I = _check_I(I, n)
    J = _check_I(J, n)
    if sum(J) != sum(I) + p:
        raise DomainError("need |J| = |I| + p")
    if not 1 <= p <= n:
        raise DomainError(f"need 1 <= p <= n = {n}")
    w = barred_w_I(I, n)
    L = w.length()
    read = _reading(J, n)
    N = len(read)
    ring = ring_a(n)
    start = elementary_symmetric(p, ring)
    found: list[tuple[frozenset, int]] = []
    simples = {i: BarredPermutation.simple(i, n) for i in range(1, n + 1)}

    def rec(pos: int, f: MPoly, u: BarredPermutation, t: int, chosen: tuple) -> None:
        # u = s_{x_t} ... s_{x_1} must be a reduced right factor of w
        if not f:
            return
        if pos == N:
            if t == L:
                found.append((frozenset(chosen), f.constant_term()))
            return
        box, label = read[pos]
        if t < L and N - pos > L - t - 1:
            v = simples[label] * u
            if v.length() == t + 1 and (w * v.inverse()).length() == L - t - 1:
                rec(pos + 1, reflect(label, f, n, True), v, t + 1, chosen + (box,))
        if N - pos - 1 >= L - t:
            rec(pos + 1, divided_difference(label, f, n, True), u, t, chosen)

    rec(0, start, BarredPermutation.identity(n), 0, ())
    return [(D, c) for D, c in found if c]


def operator_multiplicity(I: Sequence[int], J: Sequence[int], p: int, n: int) -> int:
    """Sum over admissible markings D of d^D_J(e_p)."""
    I, J = _check_I(I, n), _check_I(J, n)
    if len(J) < len(I) or any(a > b for a, b in zip(I, J)):
        raise DomainError(f"need {list(I)} contained in {list(J)}")
    return sum(c for _, c in marking_contributions(I, J, p, n))


# --------------------------------------------------------------------------
# Giambelli and products


def sigma_ring(n: int) -> PolyRing:
    """Polynomial ring in the special classes sigma1..sigman (sigma_k of degree k)."""
    return PolyRing.from_alphabets(Alphabet("sigma", n, chern=True))


def _sigma(k: int, ring: PolyRing, n: int) -> MPoly:
    if k == 0:
        return ring.one()
    if k < 0 or k > n:
        return ring.zero()
    return ring.gen(f"sigma{k}")


def _sigma_pair(i: int, j: int, ring: PolyRing, n: int) -> MPoly:
    out = _sigma(i, ring, n) * _sigma(j, ring, n)
    for h in range(1, j + 1):
        term = _sigma(i + h, ring, n) * _sigma(j - h, ring, n) * 2
        out = out + (term if h % 2 == 0 else -term)
    return out


def giambelli(I: Sequence[int], n: int) -> MPoly:
    """sigma(I) as the Pfaffian of [sigma(i_p, i_q)] in the special classes."""
    I = _check_I(I, n)
    ring = sigma_ring(n)
    seq = I + (0,) if len(I) % 2 else I
    k = len(seq)
    if k == 0:
        return ring.one()
    M = [[ring.zero() for _ in range(k)] for _ in range(k)]
    for p in range(k):
        for q in range(p + 1, k):
            v = _sigma_pair(seq[p], seq[q], ring, n)
            M[p][q], M[q][p] = v, -v
    return pfaffian(M, ring.one())


def _times_special(x: LGClass, p: int) -> LGClass:
    out = LGClass(x.n)
    for I, c in x.coeffs.items():
        out = out + pieri_product(I, p, x.n).scale(c)
    return out


def evaluate_special(f: MPoly, n: int, base: LGClass | None = None) -> LGClass:
    """Evaluate a polynomial in sigma1..sigman on ``base`` (default the unit)."""
    base = base if base is not None else LGClass.unit(n)
    if base.n != n:
        raise DomainError(f"rank mismatch: {base.n} vs {n}")
    ring = sigma_ring(n)
    f = ring.embed(f)
    total = LGClass(n)
    for e, c in sorted(f.terms.items()):
        cur = base
        for idx, power in enumerate(e):
            for _ in range(power):
                cur = _times_special(cur, idx + 1)
                if not cur:
                    break
        if cur:
            total = total + cur.scale(c)
    return total


def lg_multiply(x: LGClass, y: LGClass) -> LGClass:
    """Expand the factor with fewer terms through Giambelli, fold with Pieri."""
    x._check(y)
    if len(y.coeffs) > len(x.coeffs):
        x, y = y, x
    total = LGClass(x.n)
    for J, c in y.coeffs.items():
        total = total + evaluate_special(giambelli(J, x.n), x.n, x).scale(c)
    return total


def q_expand(f: MPoly, variables: Sequence[str] | None = None) -> dict[Partition, int]:
    """Expand a polynomial in the span of the Q_K(variables), K strict.

    Uses that the lexicographically leading monomial of Q_K is 2^{l(K)} a^K.
    """
    names = tuple(variables) if variables is not None else tuple(x for x in f.ring.names if x.startswith("a"))
    nv = len(names)
    ring = PolyRing(names, (1,) * nv)
    g = ring.embed(f)
    out: dict[Partition, int] = {}
    while g:
        e, c = g.leading()
        K = partition(e)
        if tuple(e) != K + (0,) * (nv - len(K)) or not is_strict(K):
            raise DomainError("polynomial is not in the span of the Q-functions")
        coeff = Fraction(c, 2 ** len(K))
        if coeff.denominator != 1:
            raise InexactDivision(f"non-integral Q-coefficient at {list(K)}")
        out[K] = out.get(K, 0) + coeff.numerator
        g = g - _q_in(K, ring) * coeff.numerator
    return out


def _q_in(K: Partition, ring: PolyRing) -> MPoly:
    base = ring_a(ring.nvars)
    return ring.embed(qpoly(K, ring.nvars, base)) if ring.names == base.names else qpoly(K, ring.nvars, base).subs(
        {f"a{i + 1}": ring.gen(ring.names[i]) for i in range(ring.nvars)}, ring
    )


def qpoly_reduce(f: Mapping[Sequence[int], int], n: int) -> LGClass:
    """Image of sum c_K Q_K under Q_K -> sigma(K) for K inside rho_n, else 0."""
    out: dict[Partition, int] = {}
    for key, c in f.items():
        K = partition(key)
        if not is_strict(K):
            raise DomainError(f"non-strict index {list(key)}")
        if _inside_rho(K, n):
            out[K] = out.get(K, 0) + c
    return LGClass(n, out)
