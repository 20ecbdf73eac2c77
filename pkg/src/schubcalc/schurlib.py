"""Schur, supersymmetric Schur, Chern-variable Schur, Q, P and Q-tilde polynomials.

Conventions: s_0 = 1 and s_i = 0 for i < 0.  Chern alphabets are named
``c1..cn`` (for E) and ``cp1..cpm`` (for F), with deg c_i = i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Callable, Mapping, Sequence

from .combinatorics import Partition, is_strict, partition
from .errors import DomainError
from .polyring import (
    Alphabet,
    MPoly,
    PolyRing,
    bialternant_schur,
    complete_homogeneous,
    det,
    divide_by_vandermonde,
    elementary_symmetric,
    permutation_sign,
    ring_a,
    ring_ab,
)

__all__ = [
    "SchurExpansion",
    "schur_jt",
    "super_h",
    "super_schur",
    "chern_ring",
    "chern_s",
    "chern_super_s",
    "schur_chern",
    "chern_to_roots",
    "q_single",
    "qpoly",
    "ppoly",
    "qtilde",
    "ppoly_symmetrization",
    "pfaffian",
    "schur_expand",
    "schur_expand_multi",
    "schur_in",
]


# --------------------------------------------------------------------------
# Schur expansions


@dataclass
class SchurExpansion:
    """Finite map from partitions (or tuples of partitions) to integers."""

    coeffs: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.coeffs = {k: v for k, v in self.coeffs.items() if v}

    def __getitem__(self, key) -> int:
        return self.coeffs.get(key, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, SchurExpansion):
            return self.coeffs == other.coeffs
        if isinstance(other, Mapping):
            return self.coeffs == {k: v for k, v in other.items() if v}
        return NotImplemented

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: _sort_key(kv[0]))

    def degree_part(self, d: int) -> "SchurExpansion":
        return SchurExpansion({k: v for k, v in self.coeffs.items() if _key_weight(k) == d})

    def to_json(self) -> list:
        out = []
        for key, v in self.items():
            if key and isinstance(key[0], tuple):
                out.append({"partitions": [list(p) for p in key], "coeff": str(v)})
            else:
                out.append({"partition": list(key), "coeff": str(v)})
        return out

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for key, v in self.items():
            if key and isinstance(key[0], tuple):
                label = "*".join("s(" + ",".join(map(str, p)) + ")" for p in key)
            else:
                label = "s" + ("(" + ",".join(map(str, key)) + ")" if key else "()")
            bits.append(f"{v}*{label}" if v != 1 else label)
        return " + ".join(bits)


def _key_weight(key) -> int:
    if key and isinstance(key[0], tuple):
        return sum(sum(p) for p in key)
    return sum(key)


def _sort_key(key):
    if key and isinstance(key[0], tuple):
        return (_key_weight(key), tuple(tuple(-x for x in p) for p in key))
    return (_key_weight(key), tuple(-x for x in key))


def schur_in(lam: Sequence[int], names: Sequence[str], ring: PolyRing) -> MPoly:
    """s_lam in the given variables, placed in ``ring``."""
    n = len(names)
    lam = partition(lam)
    if len(lam) > n:
        return ring.zero()
    base = bialternant_schur(lam, n)
    pos = [ring.index(x) for x in names]
    out = {}
    for e, c in base.terms.items():
        t = [0] * ring.nvars
        for k, v in zip(pos, e):
            t[k] = v
        out[tuple(t)] = c
    return MPoly(ring, out)


def schur_expand(f: MPoly, variables: Sequence[str] | None = None) -> SchurExpansion:
    """Expand a symmetric polynomial in the Schur basis of ``variables``."""
    if variables is None:
        variables = [x for x in f.ring.names if x.startswith("a")]
    exp = schur_expand_multi(f, [tuple(variables)])
    return SchurExpansion({k[0]: v for k, v in exp.coeffs.items()})


def schur_expand_multi(f: MPoly, alphabets: Sequence[Sequence[str]]) -> SchurExpansion:
    """Expand ``f`` in products s_{L1}(X1) s_{L2}(X2) ... over disjoint alphabets.

    Keys are tuples of partitions.  ``f`` may only involve the listed variables.
    """
    ring = f.ring
    pos = [[ring.index(x) for x in alph] for alph in alphabets]
    covered = {k for block in pos for k in block}
    order = [k for block in pos for k in block]
    for e in f.terms:
        if any(e[k] for k in range(ring.nvars) if k not in covered):
            raise DomainError("polynomial involves variables outside the alphabets")
    rest = MPoly(ring, dict(f.terms))
    out: dict = {}
    while rest:
        lead = max(rest.terms, key=lambda e: tuple(e[k] for k in order))
        coeff = rest.terms[lead]
        key = []
        for block in pos:
            lam = tuple(lead[k] for k in block)
            if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
                raise DomainError("polynomial is not symmetric in the given alphabets")
            key.append(partition(lam))
        basis = ring.one()
        for lam, alph in zip(key, alphabets):
            basis = basis * schur_in(lam, alph, ring)
        out[tuple(key)] = coeff
        rest = rest - basis * coeff
    return SchurExpansion(out)


# --------------------------------------------------------------------------
# ordinary and supersymmetric Schur polynomials


def schur_jt(I: Sequence[int], n: int, ring: PolyRing | None = None) -> MPoly:
    """Det[h_{i_p - p + q}(a_1..a_n)] for any integer sequence I."""
    ring = ring or ring_a(n)
    I = tuple(I)
    k = len(I)
    avars = tuple(f"a{i}" for i in range(1, n + 1))
    matrix = [[complete_homogeneous(I[p] - p + q, ring, avars) for q in range(k)] for p in range(k)]
    return det(matrix, ring.one())


def super_h(k: int, ring: PolyRing, avars: Sequence[str], bvars: Sequence[str]) -> MPoly:
    """s_k(A - B): coefficient of degree k in prod(1-a)^{-1} prod(1-b)."""
    total = ring.zero()
    for t in range(0, min(k, len(bvars)) + 1):
        term = complete_homogeneous(k - t, ring, avars) * elementary_symmetric(t, ring, bvars)
        total = total + (term if t % 2 == 0 else -term)
    return total if k >= 0 else ring.zero()


def super_schur(I: Sequence[int], nA: int, nB: int, ring: PolyRing | None = None) -> MPoly:
    ring = ring or ring_ab(nA, nB)
    avars = tuple(f"a{i}" for i in range(1, nA + 1))
    bvars = tuple(f"b{i}" for i in range(1, nB + 1))
    I = tuple(I)
    k = len(I)
    cache: dict[int, MPoly] = {}

    def entry(d: int) -> MPoly:
        if d not in cache:
            cache[d] = super_h(d, ring, avars, bvars) if d >= 0 else ring.zero()
        return cache[d]

    matrix = [[entry(I[p] - p + q) for q in range(k)] for p in range(k)]
    return det(matrix, ring.one())


def chern_ring(n: int, m: int = 0, e_name: str = "c", f_name: str = "cp") -> PolyRing:
    return PolyRing.from_alphabets(Alphabet(e_name, n, chern=True), Alphabet(f_name, m, chern=True))


def chern_s(i: int, n: int, ring: PolyRing, name: str = "c") -> MPoly:
    """s_i(c.) via s_i = s_{i-1}c_1 - s_{i-2}c_2 + ... + (-1)^{i-1} c_i."""
    return _chern_s(i, n, ring, name)


@lru_cache(maxsize=4096)
def _chern_s(i: int, n: int, ring: PolyRing, name: str) -> MPoly:
    if i < 0:
        return ring.zero()
    if i == 0:
        return ring.one()
    total = ring.zero()
    for k in range(1, min(i, n) + 1):
        term = ring.gen(f"{name}{k}") * _chern_s(i - k, n, ring, name)
        total = total + (term if k % 2 == 1 else -term)
    return total


def chern_super_s(i: int, n: int, m: int, ring: PolyRing, e_name: str = "c", f_name: str = "cp") -> MPoly:
    """s_i(c./c'.) = s_i - s_{i-1} c'_1 + ... + (-1)^i c'_i."""
    if i < 0:
        return ring.zero()
    total = ring.zero()
    for t in range(0, min(i, m) + 1):
        term = chern_s(i - t, n, ring, e_name)
        if t:
            term = term * ring.gen(f"{f_name}{t}")
        total = total + (term if t % 2 == 0 else -term)
    return total


def schur_chern(I: Sequence[int], n: int, m: int, ring: PolyRing | None = None,
                e_name: str = "c", f_name: str = "cp") -> MPoly:
    """Det[s_{i_p-p+q}(c./c'.)] in the Chern variables of E (rank n), F (rank m)."""
    ring = ring or chern_ring(n, m, e_name, f_name)
    I = tuple(I)
    k = len(I)
    cache: dict[int, MPoly] = {}

    def entry(d: int) -> MPoly:
        if d not in cache:
            cache[d] = chern_super_s(d, n, m, ring, e_name, f_name)
        return cache[d]

    matrix = [[entry(I[p] - p + q) for q in range(k)] for p in range(k)]
    return det(matrix, ring.one())


def chern_to_roots(f: MPoly, n: int, m: int, e_name: str = "c", f_name: str = "cp") -> MPoly:
    """Specialize c_i -> e_i(a_1..a_n), c'_j -> e_j(b_1..b_m)."""
    target = ring_ab(n, m)
    avars = tuple(f"a{i}" for i in range(1, n + 1))
    bvars = tuple(f"b{i}" for i in range(1, m + 1))
    values = {}
    for i in range(1, n + 1):
        if f.ring.has(f"{e_name}{i}"):
            values[f"{e_name}{i}"] = elementary_symmetric(i, target, avars)
    for j in range(1, m + 1):
        if f.ring.has(f"{f_name}{j}"):
            values[f"{f_name}{j}"] = elementary_symmetric(j, target, bvars)
    return f.subs(values, target)


# --------------------------------------------------------------------------
# Q-polynomials


def q_single(i: int, n: int, ring: PolyRing | None = None) -> MPoly:
    """Coefficient of t^i in prod (1 + t a_k)/(1 - t a_k)."""
    ring = ring or ring_a(n)
    avars = tuple(f"a{k}" for k in range(1, n + 1))
    if i < 0:
        return ring.zero()
    total = ring.zero()
    for k in range(0, min(i, n) + 1):
        total = total + elementary_symmetric(k, ring, avars) * complete_homogeneous(i - k, ring, avars)
    return total


def _q_recursive(seq: tuple[int, ...], single: Callable[[int], MPoly], one: MPoly,
                 signs: str, memo: dict) -> MPoly:
    if seq in memo:
        return memo[seq]
    k = len(seq)
    if k == 0:
        out = one
    elif k == 1:
        out = single(seq[0])
    elif k == 2:
        i, j = seq
        out = single(i) * single(j)
        for p in range(1, j + 1):
            term = single(i + p) * single(j - p) * 2
            out = out + (term if p % 2 == 0 else -term)
    elif k % 2 == 1:
        out = one * 0
        for p in range(k):
            rest = seq[:p] + seq[p + 1:]
            term = single(seq[p]) * _q_recursive(rest, single, one, signs, memo)
            # 1-based p+1: standard sign (-1)^p; printed variant uses (-1)^(k-1) = +1
            negative = (p % 2 == 1) if signs == "standard" else ((k - 1) % 2 == 1)
            out = out - term if negative else out + term
    else:
        out = one * 0
        for p in range(1, k):
            rest = seq[1:p] + seq[p + 1:]
            term = _q_recursive((seq[0], seq[p]), single, one, signs, memo) * _q_recursive(
                rest, single, one, signs, memo
            )
            # partner at 1-based position p+1: standard sign (-1)^(p+1); printed variant (-1)^k = +1
            negative = (p % 2 == 0) if signs == "standard" else (k % 2 == 1)
            out = out - term if negative else out + term
    memo[seq] = out
    return out


_SIGNS = ("standard", "printed")


def qpoly(I: Sequence[int], n: int, ring: PolyRing | None = None, signs: str = "standard") -> MPoly:
    """Q_I(a_1..a_n) for any sequence of nonnegative integers."""
    if signs not in _SIGNS:
        raise DomainError(f"signs must be one of {_SIGNS}")
    ring = ring or ring_a(n)
    singles: dict[int, MPoly] = {}

    def single(i: int) -> MPoly:
        if i not in singles:
            singles[i] = q_single(i, n, ring)
        return singles[i]

    return _q_recursive(tuple(I), single, ring.one(), signs, {})


def ppoly(I: Sequence[int], n: int, ring: PolyRing | None = None) -> MPoly:
    """P_I = Q_I / 2^{l(I)}; the division must be exact.

    Any sequence is accepted (juxtaposed indices such as P_{I,J} need this);
    for strict I this is the usual Schur P-polynomial.
    """
    I = tuple(I)
    return qpoly(I, n, ring).exact_scalar_div(2 ** len([x for x in I if x]))


def qtilde(I: Sequence[int], n: int | None = None, ring: PolyRing | None = None,
           variables: Sequence[str] | None = None, signs: str = "standard") -> MPoly:
    """Q-tilde_I: the Q recursion seeded with elementary symmetric polynomials.

    ``variables`` may name Chern variables directly (then e_i is the i-th
    of them, with e_i = 0 beyond the list).
    """
    if variables is None:
        if n is None:
            raise DomainError("qtilde needs n or explicit variables")
        ring = ring or ring_a(n)
        avars = tuple(f"a{k}" for k in range(1, n + 1))

        def single(i: int) -> MPoly:
            return elementary_symmetric(i, ring, avars)
    else:
        assert ring is not None
        names = tuple(variables)

        def single(i: int) -> MPoly:
            if i == 0:
                return ring.one()
            if i < 0 or i > len(names):
                return ring.zero()
            return ring.gen(names[i - 1])

    return _q_recursive(tuple(I), single, ring.one(), signs, {})


def ppoly_symmetrization(I: Sequence[int], n: int, ring: PolyRing | None = None) -> MPoly:
    """Independent oracle: P_I = sum over S_n/S_{n-l} of
    w( a^I prod_{i<=l, i<j} (a_i + a_j)/(a_i - a_j) )."""
    lam = partition(I)
    if not is_strict(lam):
        raise DomainError("symmetrization oracle needs a strict partition")
    ell = len(lam)
    if ell > n:
        return (ring or ring_a(n)).zero()
    ring = ring or ring_a(n)
    avars = [f"a{i}" for i in range(1, n + 1)]
    g = ring.gens(avars)
    num = ring.monomial({f"a{i + 1}": lam[i] for i in range(ell)})
    for i in range(ell):
        for j in range(i + 1, n):
            num = num * (g[i] + g[j])
    for i in range(ell, n):
        for j in range(i + 1, n):
            num = num * (g[i] - g[j])
    total = ring.zero()
    idx = [ring.index(x) for x in avars]
    for sigma in permutations(range(n)):
        mapping = {idx[k]: (idx[sigma[k]], 1) for k in range(n)}
        total = total + permutation_sign(sigma) * num.signed_permute(mapping)
    total = divide_by_vandermonde(total, avars)
    return total.exact_scalar_div(factorial(n - ell))


# --------------------------------------------------------------------------
# Pfaffians


def pfaffian(M: Sequence[Sequence], one=1):
    """Pfaffian of an antisymmetric matrix by first-row expansion."""
    k = len(M)
    if k % 2:
        raise DomainError("Pfaffian needs even dimension")
    for p in range(k):
        if M[p][p]:
            raise DomainError("antisymmetric matrix must have zero diagonal")
        for q in range(p + 1, k):
            if M[p][q] != -M[q][p]:
                raise DomainError("matrix is not antisymmetric")
    memo: dict[tuple[int, ...], object] = {}

    def rec(idx: tuple[int, ...]):
        if not idx:
            return one
        if idx in memo:
            return memo[idx]
        first = idx[0]
        total = None
        for t in range(1, len(idx)):
            entry = M[first][idx[t]]
            if not entry:
                continue
            sub = rec(idx[1:t] + idx[t + 1:])
            term = entry * sub
            term = term if t % 2 == 1 else -term
            total = term if total is None else total + term
        if total is None:
            total = one * 0
        memo[idx] = total
        return total

    return rec(tuple(range(k)))
