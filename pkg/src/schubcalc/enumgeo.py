"""Enumerative coefficients: Segre classes of E (x) F, S^2 E and wedge^2 E,
complete quadrics, and total Chern classes of Schur functors.

((J)) and [J] are each computed by three independent routes: a Pfaffian,
a linear recursion, and a coefficient extraction from a power series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Mapping, Sequence

from .combinatorics import Partition, contains, partition, partitions_of, rho
from .divdiff import OperatorWord, apply_word
from .errors import DomainError, InexactDivision
from .polyring import (
    MPoly,
    PolyRing,
    TruncatedSeries,
    _truncated_product,
    det,
    ring_a,
    ring_ab,
    semistandard_tableaux,
)
from .schurlib import SchurExpansion, pfaffian, schur_expand, schur_expand_multi, schur_in

__all__ = [
    "EnumCoefficient",
    "binom",
    "d_coeff",
    "tensor_segre_coefficient",
    "paren",
    "bracket",
    "ROUTES",
    "h_series",
    "push_forward_last",
    "f_series",
    "shifted_coefficient",
    "segre_expansion",
    "segre_expansion_roots",
    "alpha",
    "quadrics_product",
    "d_kl",
    "schur_bundle_roots",
    "ctop_schur_bundle_roots",
    "ctop_builtin",
    "total_chern_schur_bundle_roots",
    "chern_schur_bundle",
    "LAMBDA3_RANK4_TOP",
    "LAMBDA3_RANK5_TOP_PRINTED",
    "sym_power_rank2_top",
]

ROUTES = ("pfaffian", "recursion", "series")


@dataclass(frozen=True)
class EnumCoefficient:
    value: int
    route: str


def binom(top: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= top."""
    if k < 0 or top < 0 or k > top:
        return 0
    return comb(top, k)


def _gbinom(top: int, k: int) -> int:
    """Generalized binomial C(top, k) for any integer top, k >= 0."""
    if k < 0:
        return 0
    num = 1
    for t in range(k):
        num *= top - t
    den = 1
    for t in range(1, k + 1):
        den *= t
    return num // den


# --------------------------------------------------------------------------
# D^{m,n}_{I,J}


def d_coeff(I: Sequence[int], J: Sequence[int], m: int, n: int) -> int:
    """Det[C(i_p + j_q + m + n - p - q, i_p + n - p)]_{1<=p,q<=n}."""
    I, J = partition(I), partition(J)
    if len(I) > n or len(J) > n:
        raise DomainError(f"partitions must have length <= {n}")
    I = I + (0,) * (n - len(I))
    J = J + (0,) * (n - len(J))
    matrix = [
        [binom(I[p] + J[q] + m + n - (p + 1) - (q + 1), I[p] + n - (p + 1)) for q in range(n)]
        for p in range(n)
    ]
    return det(matrix, 1)


# --------------------------------------------------------------------------
# ((J)) and [J]


def _strict_seq(J: Sequence[int]) -> tuple[int, ...]:
    J = tuple(int(x) for x in J)
    if any(x < 0 for x in J) or any(J[k] <= J[k + 1] for k in range(len(J) - 1)):
        raise DomainError(f"strictly decreasing nonnegative sequence required: {list(J)}")
    return J


def _paren_pfaffian(J: tuple[int, ...]) -> int:
    n = len(J)
    if n % 2 == 1:
        total = 0
        for p in range(n):
            term = 2 ** J[p] * _paren_pfaffian(J[:p] + J[p + 1:])
            total += term if p % 2 == 0 else -term
        return total
    M = [[0] * n for _ in range(n)]
    for p in range(n):
        for q in range(p + 1, n):
            v = sum(comb(J[p] + J[q], j) for j in range(J[q] + 1, J[p] + 1))
            M[p][q], M[q][p] = v, -v
    return pfaffian(M, 1)


@lru_cache(maxsize=None)
def _paren_recursion(J: tuple[int, ...]) -> int:
    # r((J)) = 2 sum_k ((J - e_k)) + [j_r = 0] ((j_1, ..., j_{r-1}))
    r = len(J)
    if r == 0:
        return 1
    total = 0
    for k in range(r):
        K = J[:k] + (J[k] - 1,) + J[k + 1:]
        if K[k] < 0 or (k + 1 < r and K[k] <= K[k + 1]):
            continue
        total += 2 * _paren_recursion(K)
    if J[-1] == 0:
        total += _paren_recursion(J[:-1])
    q, rem = divmod(total, r)
    if rem:
        raise InexactDivision(f"recursion for (({list(J)})) not integral")
    return q


@lru_cache(maxsize=None)
def _bracket_recursion(J: tuple[int, ...]) -> int:
    r = len(J)
    if r == 0:
        return 1
    if r % 2 == 1:
        return _bracket_recursion(J[:-1]) if J[-1] == 0 else 0
    p = r // 2
    total = 0
    for k in range(r):
        K = J[:k] + (J[k] - 1,) + J[k + 1:]
        if K[k] < 0 or (k + 1 < r and K[k] <= K[k + 1]):
            continue
        total += _bracket_recursion(K)
    if J[-2:] == (1, 0):
        total += _bracket_recursion(J[:-2])
    q, rem = divmod(total, p)
    if rem:
        raise InexactDivision(f"recursion for [{list(J)}] not integral")
    return q


def _bracket_entry(a: int, b: int) -> int:
    # (a+b-1)! (a-b) / (a! b!) = C(a+b-1, b) - C(a+b-1, a), for a > b >= 0
    return binom(a + b - 1, b) - binom(a + b - 1, a)


def _bracket_pfaffian(J: tuple[int, ...]) -> int:
    n = len(J)
    if n % 2 == 1:
        return _bracket_pfaffian(J[:-1]) if J[-1] == 0 else 0
    M = [[0] * n for _ in range(n)]
    for p in range(n):
        for q in range(p + 1, n):
            v = _bracket_entry(J[p], J[q])
            # integrality check against the factorial form
            exact = Fraction(_fact(J[p] + J[q] - 1) * (J[p] - J[q]), _fact(J[p]) * _fact(J[q]))
            if exact != v:
                raise InexactDivision(f"bracket entry mismatch at {J[p]},{J[q]}")
            M[p][q], M[q][p] = v, -v
    return pfaffian(M, 1)


def _fact(k: int) -> int:
    return factorial(k)


def h_series(r: int, bound: int) -> MPoly:
    """H_r = prod_{i<=j<=r} 1/(1 - a_i - a_j), truncated at total degree ``bound``."""
    return _product_series(r, bound, strict=False)


def f_series(r: int, bound: int) -> MPoly:
    """F_r = prod_{i<j<=r} 1/(1 - a_i - a_j), truncated."""
    return _product_series(r, bound, strict=True)


@lru_cache(maxsize=64)
def _product_series(r: int, bound: int, strict: bool) -> MPoly:
    ring = ring_a(r)
    g = ring.gens([f"a{i}" for i in range(1, r + 1)])
    total = ring.one()
    for i in range(r):
        for j in range(i + 1 if strict else i, r):
            x = g[i] + g[j]
            geo = ring.one()
            pw = ring.one()
            for _ in range(bound):
                pw = pw * x
                geo = geo + pw
            total = _truncated_product(total, geo, bound)
    return total


def push_forward_last(f: MPoly, r: int, signed: bool = False) -> MPoly:
    """d_1 o d_2 o ... o d_r on Z[a_1..a_{r+1}], optionally times (-1)^r.

    The unsigned form is the one under which the series identities
    F_r -> F_{r+1}, (a_1+...+a_r) F_r and H_r -> H_{r+1} hold for every r.
    """
    ring = ring_a(r + 1)
    g = ring.embed(f)
    out = apply_word(OperatorWord(tuple(range(1, r + 1)), r + 1), g)
    return -out if signed and r % 2 else out


@lru_cache(maxsize=64)
def _series_expansion(kind: str, r: int, bound: int) -> SchurExpansion:
    series = h_series(r, bound) if kind == "H" else f_series(r, bound)
    return schur_expand(series, [f"a{i}" for i in range(1, r + 1)])


def shifted_coefficient(kind: str, J: Sequence[int]) -> int:
    """Coefficient of s(J; A_r) = s_{J - rho_{r-1}}(A_r) in H_r or F_r."""
    J = tuple(J)
    r = len(J)
    shifted = tuple(J[k] - (r - 1 - k) for k in range(r))
    if any(x < 0 for x in shifted) or any(shifted[k] < shifted[k + 1] for k in range(r - 1)):
        return 0
    lam = partition(shifted)
    return _series_expansion(kind, r, sum(lam))[lam]


def paren(J: Sequence[int], route: str = "pfaffian") -> int:
    """((J)) for a strictly decreasing J = (j_1 > ... > j_n >= 0)."""
    J = _strict_seq(J)
    if route == "pfaffian":
        return _paren_pfaffian(J)
    if route == "recursion":
        return _paren_recursion(J)
    if route == "series":
        return shifted_coefficient("H", J)
    raise DomainError(f"unknown route {route!r}")


def bracket(J: Sequence[int], route: str = "pfaffian") -> int:
    """[J] for a strictly decreasing J = (j_1 > ... > j_n >= 0)."""
    J = _strict_seq(J)
    if route == "pfaffian":
        return _bracket_pfaffian(J)
    if route == "recursion":
        return _bracket_recursion(J)
    if route == "series":
        return shifted_coefficient("F", J)
    raise DomainError(f"unknown route {route!r}")


# --------------------------------------------------------------------------
# Segre classes


def _shift(I: Partition, n: int) -> tuple[int, ...]:
    I = I + (0,) * (n - len(I))
    return tuple(I[k] + n - 1 - k for k in range(n))


def segre_expansion(kind: str, degree: int, n: int, m: int | None = None) -> SchurExpansion:
    """Schur expansion of s(E (x) F), s(S^2 E) or s(wedge^2 E) through ``degree``.

    For ``tensor`` the keys are pairs (I, J) with I for E (rank n), J for F
    (rank m).
    """
    out: dict = {}
    if kind == "tensor":
        if m is None:
            raise DomainError("tensor kind needs the rank m of F")
        lo = min(n, m)
        for w in range(degree + 1):
            for wi in range(w + 1):
                for I in partitions_of(wi, max_len=n):
                    for J in partitions_of(w - wi, max_len=m):
                        if len(I) > lo or len(J) > lo:
                            continue
                        v = tensor_segre_coefficient(I, J, n, m)
                        if v:
                            out[(I, J)] = v
        return SchurExpansion(out)
    if kind in ("sym2", "wedge2"):
        fn = paren if kind == "sym2" else bracket
        for w in range(degree + 1):
            for I in partitions_of(w, max_len=n):
                v = fn(_shift(I, n))
                if v:
                    out[I] = v
        return SchurExpansion(out)
    raise DomainError(f"unknown Segre kind {kind!r}")


def tensor_segre_coefficient(I: Partition, J: Partition, n: int, m: int) -> int:
    """Coefficient of s_I(E) s_J(F), rank E = n, rank F = m.

    The determinant has size min(n, m) and is indexed on the side of the
    smaller rank; validated against the root oracle.
    """
    if n <= m:
        return d_coeff(I, J, m, n)
    return d_coeff(J, I, n, m)


def segre_expansion_roots(kind: str, degree: int, n: int, m: int | None = None) -> SchurExpansion:
    """Oracle: invert the Chern series of the roots and expand in Schur polynomials."""
    if kind == "tensor":
        if m is None:
            raise DomainError("tensor kind needs the rank m of F")
        ring = ring_ab(n, m)
        roots = [ring.gen(f"a{i}") + ring.gen(f"b{j}") for i in range(1, n + 1) for j in range(1, m + 1)]
        series = _segre_of_roots(ring, roots, degree)
        return schur_expand_multi(
            series, [[f"a{i}" for i in range(1, n + 1)], [f"b{j}" for j in range(1, m + 1)]]
        )
    ring = ring_a(n)
    g = ring.gens([f"a{i}" for i in range(1, n + 1)])
    if kind == "sym2":
        roots = [g[i] + g[j] for i in range(n) for j in range(i, n)]
    elif kind == "wedge2":
        roots = [g[i] + g[j] for i in range(n) for j in range(i + 1, n)]
    else:
        raise DomainError(f"unknown Segre kind {kind!r}")
    series = _segre_of_roots(ring, roots, degree)
    return schur_expand(series, [f"a{i}" for i in range(1, n + 1)])


def _segre_of_roots(ring: PolyRing, roots: Sequence[MPoly], bound: int) -> MPoly:
    """prod 1/(1 - x) over the roots (complete homogeneous convention)."""
    total = ring.one()
    for x in roots:
        geo = ring.one()
        pw = ring.one()
        for _ in range(bound):
            pw = pw * x
            geo = geo + pw
        total = _truncated_product(total, geo, bound)
    return total


# --------------------------------------------------------------------------
# complete quadrics


def alpha(p: int, k: int, j: int) -> int:
    """sum_{t=0}^{j} C(k, t) p^t for j >= 0, else 0 (with 0^0 = 1)."""
    if j < 0:
        return 0
    return sum(binom(k, t) * (p**t if t else 1) for t in range(j + 1))


def _shuffle_sign(J: Sequence[int], Jp: Sequence[int]) -> int:
    """Sign of the permutation sorting (J, J') into decreasing order."""
    seq = list(J) + list(Jp)
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] < seq[b])
    return -1 if inv % 2 else 1


def quadrics_product(I: Sequence[int], m_list: Sequence[int], p: int) -> int:
    """mu_1^{m_1} ... mu_{p+1}^{m_{p+1}} . omega(I) on complete quadrics of rank r.

    ``I`` is an increasing sequence of nonnegative flag dimensions, ``m_list``
    holds (m_1, ..., m_{p+1}).
    """
    I = tuple(I)
    r = len(I)
    if any(I[k] >= I[k + 1] for k in range(r - 1)) or (I and I[0] < 0):
        raise DomainError("I must be strictly increasing and nonnegative")
    if not 0 <= p < r:
        raise DomainError(f"need 0 <= p < r = {r}")
    m = tuple(m_list)
    if len(m) != p + 1 or any(x < 0 for x in m):
        raise DomainError(f"need exactly p+1 = {p + 1} nonnegative exponents")
    if sum(I) + r - 1 != sum(m):
        raise DomainError("dimension balance sum(I) + r - 1 = sum(m) violated")
    for q in range(1, p):
        if not sum(m[:q]) > sum(I[r - q:]) + q - 1:
            raise DomainError(f"inequality for q = {q} violated")
    dec = tuple(reversed(I))
    prefactor = 1
    for t in range(1, p + 1):
        prefactor *= t ** m[t - 1]
    main = (p + 1) ** m[p] * paren(dec)
    correction = 0
    for Jset in combinations(dec, r - p):
        Jp = tuple(x for x in dec if x not in Jset)
        a = alpha(p, m[p], m[p] - sum(Jset) - (r - p))
        if a:
            correction += a * _shuffle_sign(Jset, Jp) * paren(Jset) * paren(Jp)
    return prefactor * (main - correction)


# --------------------------------------------------------------------------
# Chern classes of Schur functors


def d_kl(K: Sequence[int], L: Sequence[int], n: int) -> int:
    """Det[C(k_p + n - p, l_q + n - q)]; coefficient of s_L in s_K(a + 1)."""
    K, L = partition(K), partition(L)
    if len(K) > n or len(L) > n:
        raise DomainError(f"partitions must have length <= {n}")
    if not contains(L, K):
        raise DomainError(f"{list(L)} is not contained in {list(K)}")
    K = K + (0,) * (n - len(K))
    L = L + (0,) * (n - len(L))
    return det([[binom(K[p] + n - p - 1, L[q] + n - q - 1) for q in range(n)] for p in range(n)], 1)


def schur_bundle_roots(J: Sequence[int], n: int, ring: PolyRing | None = None) -> list[MPoly]:
    """Chern roots of S^J E: sum over semistandard tableaux of t_i a_i."""
    ring = ring or ring_a(n)
    out = []
    for tab in semistandard_tableaux(partition(J), n):
        e = {}
        for row in tab:
            for v in row:
                e[v] = e.get(v, 0) + 1
        root = ring.zero()
        for v, t in e.items():
            root = root + ring.gen(f"a{v}") * t
        out.append(root)
    return out


def ctop_schur_bundle_roots(J: Sequence[int], n: int) -> SchurExpansion:
    ring = ring_a(n)
    prod = ring.one()
    for x in schur_bundle_roots(J, n, ring):
        prod = prod * x
    return schur_expand(prod, [f"a{i}" for i in range(1, n + 1)])


def total_chern_schur_bundle_roots(J: Sequence[int], n: int, degree: int) -> SchurExpansion:
    ring = ring_a(n)
    total = ring.one()
    for x in schur_bundle_roots(J, n, ring):
        total = _truncated_product(total, ring.one() + x, degree)
    return schur_expand(total, [f"a{i}" for i in range(1, n + 1)])


LAMBDA3_RANK4_TOP = {(3, 1): 1, (2, 2): 1, (2, 1, 1): 1, (1, 1, 1, 1): 1}

# Terms exactly as printed for rank 5; (3,3,3,1) occurs twice in the display.
LAMBDA3_RANK5_TOP_PRINTED = (
    ((3, 3, 2, 1, 1), 9), ((3, 3, 2, 2), 3), ((3, 3, 3, 1), 2), ((4, 2, 2, 1, 1), 9),
    ((4, 2, 2, 2), 3), ((4, 3, 1, 1, 1), 6), ((4, 3, 2, 1), 9), ((4, 3, 3), 3),
    ((4, 4, 1, 1), 3), ((4, 4, 2), 3), ((5, 2, 1, 1, 1), 4), ((5, 2, 2, 1), 4),
    ((5, 3, 1, 1), 4), ((5, 3, 2), 4), ((5, 4, 1), 2), ((6, 2, 1, 1), 1),
    ((6, 2, 2), 1), ((6, 3, 1), 1), ((3, 2, 2, 2, 1), 6), ((3, 3, 3, 1), 1),
    ((6, 1, 1, 1, 1), 1),
)


def sym_power_rank2_top(k: int) -> SchurExpansion:
    """Closed product for c_{k+1}(S^k E), rank E = 2."""
    if k < 1:
        raise DomainError("need k >= 1")
    ring = ring_a(2)
    names = ["a1", "a2"]
    s2 = schur_in((2,), names, ring)
    s11 = schur_in((1, 1), names, ring)
    out = ring.one()
    top = (k - 1) // 2 if k % 2 else k // 2 - 1
    for j in range(top + 1):
        out = out * (s2 * (j * (k - j)) + s11 * (k * k - 3 * j * (k - j)))
    if k % 2 == 0:
        out = out * schur_in((1,), names, ring) * Fraction(k, 2)
        out = out.map_coefficients(_as_int)
    return schur_expand(out, names)


def _as_int(x) -> int:
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise InexactDivision(f"non-integral coefficient {x}")
        return x.numerator
    return x


def ctop_builtin(J: Sequence[int], n: int) -> SchurExpansion:
    """Top Chern class of S^J E from the closed statements, when available."""
    J = partition(J)
    if J == (2,):
        return SchurExpansion({rho(n): 2**n})
    if J == (1, 1):
        return SchurExpansion({rho(n - 1): 1})
    if J == (1, 1, 1) and n == 4:
        return SchurExpansion(dict(LAMBDA3_RANK4_TOP))
    if J == (1, 1, 1) and n == 5:
        agg: dict = {}
        for lam, c in LAMBDA3_RANK5_TOP_PRINTED:
            agg[lam] = agg.get(lam, 0) + c
        return SchurExpansion(agg)
    if len(J) == 1 and n == 2:
        return sym_power_rank2_top(J[0])
    if J == (1,):
        return SchurExpansion({(1,) * n: 1})
    raise DomainError(f"no built-in top Chern class for J={list(J)}, n={n}; supply m_K")


def chern_schur_bundle(
    J: Sequence[int], n: int, degree: int, m_K: Mapping[Partition, int] | None = None
) -> SchurExpansion:
    """Total Chern class of S^J E from the Schur expansion of its top class.

    c(S^J E) = |J|^{-N} sum_K sum_{L in K} |J|^{|L|} m_K d_{KL} s_L(E),
    N = rank S^J E.
    """
    J = partition(J)
    coeffs = dict(m_K) if m_K is not None else ctop_builtin(J, n).coeffs
    N = sum(1 for _ in semistandard_tableaux(J, n))
    w = sum(J)
    acc: dict[Partition, Fraction] = {}
    for K, mk in coeffs.items():
        K = partition(K)
        if len(K) > n:
            continue
        for size in range(min(sum(K), degree) + 1):
            for L in partitions_of(size, max_len=n):
                if not contains(L, K):
                    continue
                d = d_kl(K, L, n)
                if d:
                    acc[L] = acc.get(L, Fraction(0)) + Fraction(w) ** (size - N) * mk * d
    return SchurExpansion({L: _as_int(v) for L, v in acc.items() if v})
