"""Degeneracy-locus class polynomials in formal Chern variables.

Naming: for a map F -> E with rank E = n and rank F = m, the Chern classes of
E are ``c1..cn`` and those of F are ``cp1..cpm``.  s_k(E - F) uses complete
symmetric functions in the roots, c_k(E - F) the quotient c(E)/c(F).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .combinatorics import (
    Partition,
    conjugate,
    hook_product,
    juxtapose,
    partition,
    partitions_in_box,
    partitions_of,
    rectangle,
    rho,
    strict_partitions_in_rho,
)
from .enumgeo import _gbinom, tensor_segre_coefficient
from .errors import DomainError, InexactDivision
from .polyring import Alphabet, MPoly, PolyRing, det
from .schurlib import chern_ring, chern_s, qtilde, schur_chern

__all__ = [
    "LocusClass",
    "BrillNoetherParams",
    "chern_difference",
    "gtp_class",
    "gtp_chern_form",
    "kempf_laksov_class",
    "flag_determinantal_class",
    "harris_class",
    "csm_P",
    "csm_combination",
    "bn_rho",
    "bn_phi",
    "bn_euler",
    "castelnuovo",
    "prym_coefficient",
    "ideal_generators",
    "section_euler_factor",
]


@dataclass(frozen=True)
class LocusClass:
    poly: MPoly
    formula: str
    ranks: dict = field(default_factory=dict)

    def degree(self) -> int:
        return self.poly.degree()

    def to_json(self) -> dict:
        return {"formula": self.formula, "ranks": self.ranks, "poly": self.poly.to_json()}


@dataclass(frozen=True)
class BrillNoetherParams:
    g: int
    d: int
    r: int

    def __post_init__(self) -> None:
        if self.g < 0:
            raise DomainError("genus must be nonnegative")

    @property
    def rho(self) -> int:
        return bn_rho(self.g, self.d, self.r)


def chern_difference(k: int, ring: PolyRing, a_name: str, a_rank: int, b_name: str, b_rank: int) -> MPoly:
    """c_k(A - B) = sum_t c_{k-t}(A) (-1)^t s_t(B)."""
    if k < 0:
        return ring.zero()
    total = ring.zero()
    for t in range(k + 1):
        if k - t > a_rank:
            continue
        ca = ring.one() if k - t == 0 else ring.gen(f"{a_name}{k - t}")
        term = ca * chern_s(t, b_rank, ring, b_name)
        total = total + (term if t % 2 == 0 else -term)
    return total


def _check_r(m: int, n: int, r: int) -> None:
    if not 0 <= r <= min(m, n):
        raise DomainError(f"need 0 <= r <= min(m, n) = {min(m, n)}, got r={r}")


def gtp_class(m: int, n: int, r: int) -> LocusClass:
    """Det[s_{m-r-p+q}(E - F)] of size n - r, i.e. s_{(m-r)^(n-r)}(E - F)."""
    _check_r(m, n, r)
    ring = chern_ring(n, m)
    poly = schur_chern(rectangle(m - r, n - r), n, m, ring)
    return LocusClass(poly, "gtp-segre", {"m": m, "n": n, "r": r})


def gtp_chern_form(m: int, n: int, r: int) -> LocusClass:
    """Det[c_{n-r-p+q}(E - F)] of size m - r."""
    _check_r(m, n, r)
    ring = chern_ring(n, m)
    k = m - r
    entries = {d: chern_difference(d, ring, "c", n, "cp", m) for d in range(n - r - k, n - r + k)}
    matrix = [[entries[n - r - p + q] for q in range(k)] for p in range(k)]
    return LocusClass(det(matrix, ring.one()), "gtp-chern", {"m": m, "n": n, "r": r})


def _flag_ring(a_names: Sequence[tuple[str, int]], b_names: Sequence[tuple[str, int]]) -> PolyRing:
    alphs = [Alphabet(nm, rk, chern=True) for nm, rk in list(a_names) + list(b_names)]
    return PolyRing.from_alphabets(*alphs)


def kempf_laksov_class(n: int, m_list: Sequence[int]) -> LocusClass:
    """Det[c_{n-m_i+j}(A - B_i)] with rank A = n, rank B_i = m_i.

    Variables: ``c1..cn`` for A and ``cB{i}_1..`` for B_i.
    """
    m_list = tuple(m_list)
    if any(m_list[i] >= m_list[i + 1] for i in range(len(m_list) - 1)):
        raise DomainError("m_list must be strictly increasing")
    if any(x < 0 for x in m_list) or n < 0:
        raise DomainError("ranks must be nonnegative")
    k = len(m_list)
    ring = _flag_ring([("c", n)], [(f"cB{i + 1}_", m_list[i]) for i in range(k)])
    matrix = [
        [chern_difference(n - m_list[i] + j + 1, ring, "c", n, f"cB{i + 1}_", m_list[i]) for j in range(k)]
        for i in range(k)
    ]
    return LocusClass(det(matrix, ring.one()), "kempf-laksov", {"n": n, "m": list(m_list)})


def flag_determinantal_class(n_list: Sequence[int], m_list: Sequence[int]) -> LocusClass:
    """Det[c_{n_i-m_i+j}(A_i - B_i)], variables ``cA{i}_*`` and ``cB{i}_*``."""
    n_list, m_list = tuple(n_list), tuple(m_list)
    k = len(n_list)
    if len(m_list) != k:
        raise DomainError("n_list and m_list must have equal length")
    for i in range(k):
        if m_list[i] < i + 1:
            raise DomainError(f"need m_{i + 1} >= {i + 1}")
    chain = [n_list[i] - m_list[i] + i + 1 for i in range(k)]
    if any(chain[i] < chain[i + 1] for i in range(k - 1)) or (chain and chain[-1] <= 0):
        raise DomainError("need n_1-m_1+1 >= n_2-m_2+2 >= ... >= n_k-m_k+k > 0")
    ring = _flag_ring(
        [(f"cA{i + 1}_", n_list[i]) for i in range(k)], [(f"cB{i + 1}_", m_list[i]) for i in range(k)]
    )
    matrix = [
        [
            chern_difference(n_list[i] - m_list[i] + j + 1, ring, f"cA{i + 1}_", n_list[i], f"cB{i + 1}_", m_list[i])
            for j in range(k)
        ]
        for i in range(k)
    ]
    return LocusClass(det(matrix, ring.one()), "flag-determinantal", {"n": list(n_list), "m": list(m_list)})


def harris_class(k: int, n: int | None = None) -> LocusClass:
    """sum over strict I in rho_k of Qt_I(E^v) Qt_{rho_k - I}(F^v).

    ``c*`` are the Chern classes of E^v and ``cp*`` those of F^v, both of
    rank ``n`` (default k).
    """
    if k < 0:
        raise DomainError("k must be nonnegative")
    n = k if n is None else n
    if n < k:
        raise DomainError("rank must be at least k")
    ring = chern_ring(n, n)
    cvars = [f"c{i}" for i in range(1, n + 1)]
    fvars = [f"cp{i}" for i in range(1, n + 1)]
    full = set(range(1, k + 1))
    total = ring.zero()
    for I in strict_partitions_in_rho(k):
        comp = tuple(sorted(full - set(I), reverse=True))
        total = total + qtilde(I, ring=ring, variables=cvars) * qtilde(comp, ring=ring, variables=fvars)
    return LocusClass(total, "harris", {"k": k, "n": n})


def csm_P(k: int, m: int, n: int, degree_bound: int) -> MPoly:
    """P_k(E, F) through total degree ``degree_bound``.

    sum of (-1)^{|I|+|J|} D^{m-k,n-k}_{I,J} s_{(m-k)^{n-k}+I, J~}(E - F)
    over l(I), l(J) <= min(m, n) - k, where D^{m-k,n-k}_{I,J} is the
    coefficient of s_I(E')s_J(F') in s(E' (x) F'), rank E' = n-k, rank F' = m-k.
    """
    if not 0 <= k <= min(m, n):
        raise DomainError(f"need 0 <= k <= min(m, n) = {min(m, n)}")
    ring = chern_ring(n, m)
    a, b = m - k, n - k
    lo = min(m, n) - k
    base = a * b
    total = ring.zero()
    for extra in range(max(degree_bound - base, -1) + 1):
        for wi in range(extra + 1):
            for I in partitions_of(wi, max_len=lo):
                for J in partitions_of(extra - wi, max_len=lo):
                    D = tensor_segre_coefficient(I, J, b, a)
                    if not D:
                        continue
                    lam = juxtapose(a, b, I, conjugate(J))
                    term = schur_chern(lam, n, m, ring) * D
                    total = total + (term if extra % 2 == 0 else -term)
    return total.truncate(degree_bound)


def csm_combination(r: int, m: int, n: int, degree_bound: int) -> MPoly:
    """sum_{k=0}^r (-1)^k C(min(m,n)-r+k-1, k) P_{r-k}."""
    _check_r(m, n, r)
    ring = chern_ring(n, m)
    lo = min(m, n)
    total = ring.zero()
    for k in range(r + 1):
        coeff = _gbinom(lo - r + k - 1, k)
        if coeff:
            term = csm_P(r - k, m, n, degree_bound) * coeff
            total = total + (term if k % 2 == 0 else -term)
    return total


def bn_rho(g: int, d: int, r: int) -> int:
    return g - (r + 1) * (g - d + r)


def castelnuovo(g: int, d: int, r: int) -> int:
    """g! / h((r+1)^{g-d+r}); meaningful when rho = 0."""
    q, rem = divmod(factorial(g), hook_product(rectangle(r + 1, g - d + r)))
    if rem:
        raise InexactDivision("hook product does not divide g!")
    return q


def bn_phi(g: int, d: int, r: int) -> int:
    """Phi(g, d, r); zero when rho(r) < 0."""
    rho_r = bn_rho(g, d, r)
    if rho_r < 0:
        return 0
    a, b = r + 1, g - d + r
    lo = max(min(a, b), 0)
    total = Fraction(0)
    for wi in range(rho_r + 1):
        for I in partitions_of(wi, max_len=lo):
            for J in partitions_of(rho_r - wi, max_len=lo):
                D = tensor_segre_coefficient(I, J, max(b, 0), a)
                if D:
                    lam = juxtapose(a, max(b, 0), I, conjugate(J))
                    total += Fraction(D, hook_product(lam))
    total *= factorial(g)
    if total.denominator != 1:
        raise InexactDivision(f"Phi({g},{d},{r}) = {total} is not an integer")
    return -int(total) if rho_r % 2 else int(total)


def bn_euler(g: int, d: int, r: int) -> int:
    """chi(W^r_d) = sum_{k>=r} (-1)^{k-r} C(k, k-r) Phi(g, d, k)."""
    if bn_rho(g, d, r) < 0:
        raise DomainError(f"rho({g},{d},{r}) < 0")
    total = 0
    top = max(r, d - g) + g + 2
    for k in range(r, top + 1):
        phi = bn_phi(g, d, k)
        if phi:
            term = comb(k, k - r) * phi
            total += term if (k - r) % 2 == 0 else -term
    return total


def prym_coefficient(r: int) -> Fraction:
    """2^{r(r-1)/2} prod_{i=1}^r (i-1)!/(2i-1)!."""
    if r < 0:
        raise DomainError("r must be nonnegative")
    out = Fraction(2 ** (r * (r - 1) // 2))
    for i in range(1, r + 1):
        out *= Fraction(factorial(i - 1), factorial(2 * i - 1))
    return out


def ideal_generators(kind: str, m: int, n: int, r: int) -> list[Partition]:
    """Index partitions of the finite generating families; C(n, r) of them."""
    if not 0 <= r <= n:
        raise DomainError(f"need 0 <= r <= n, got r={r}")
    box = partitions_in_box(n - r, r)
    if kind == "general":
        if r > m:
            raise DomainError("need r <= m")
        return [juxtapose(m - r, n - r, I, ()) for I in box]
    if kind == "symmetric":
        base = rho(n - r)
    elif kind == "antisymmetric":
        if r % 2:
            raise DomainError("antisymmetric case requires r even")
        base = rho(n - r - 1) + (0,) if n - r > 0 else ()
    else:
        raise DomainError(f"unknown kind {kind!r}")
    out = []
    for I in box:
        I = I + (0,) * (n - r - len(I))
        out.append(partition(tuple(x + y for x, y in zip(base, I))))
    return out


def section_euler_factor(rank_E: int, degree_bound: int) -> MPoly:
    """c(E)^{-1} c_top(E) truncated, in ``c1..c{rank}``."""
    if rank_E < 0:
        raise DomainError("rank must be nonnegative")
    ring = chern_ring(rank_E)
    top = ring.one() if rank_E == 0 else ring.gen(f"c{rank_E}")
    total = ring.zero()
    for k in range(max(degree_bound - rank_E, -1) + 1):
        term = chern_s(k, rank_E, ring) * top
        total = total + (term if k % 2 == 0 else -term)
    return total.truncate(degree_bound)
