"""Divided differences of types A and C and the symmetrizers built from them.

Operators act on the ``a`` alphabet only; every other variable is a scalar.
A word ``[i_1, ..., i_k]`` stands for the composite with ``i_k`` applied first.
The type-C generator of index ``n`` is ``(f - s_n f) / (2 a_n)`` where ``s_n``
negates ``a_n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections import Counter
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Literal, Sequence

from .combinatorics import BarredPermutation, canonical_reduced_word, partition
from .errors import DomainError
from .polyring import MPoly, PolyRing, bialternant_schur, divide_by_vandermonde, elementary_symmetric, permutation_sign, ring_a

__all__ = [
    "OperatorWord",
    "divided_difference",
    "reflect",
    "apply_word",
    "apply_mixed",
    "symmetrizer_word",
    "gysin_symmetrizer",
    "gysin_coset_sum",
    "GYSIN_KINDS",
    "grassmann_multiplicity",
    "lagrangian_qtilde_image",
    "lagrangian_schur_image",
    "schur_by_operator",
]

GYSIN_KINDS = ("projective", "grassmann", "full_flag", "lagrangian_flag", "lagrangian_grassmann")


@dataclass(frozen=True)
class OperatorWord:
    indices: tuple[int, ...]
    n: int
    symplectic: bool = False
    prefix: str = "a"

    def __post_init__(self) -> None:
        top = self.n if self.symplectic else self.n - 1
        for i in self.indices:
            if not 1 <= i <= top:
                raise DomainError(f"index {i} invalid for rank {self.n}")


def _var(f: MPoly, prefix: str, i: int) -> int:
    return f.ring.index(f"{prefix}{i}")


def _dd_typeA(f: MPoly, i: int, j: int) -> MPoly:
    """(f - swap f)/(x_i - x_j) term by term, with no division."""
    out: dict[tuple[int, ...], int] = {}
    for e, c in f.terms.items():
        p, q = e[i], e[j]
        if p == q:
            continue
        if p > q:
            lo, d, sign = q, p - q, 1
        else:
            lo, d, sign = p, q - p, -1
        base = list(e)
        for t in range(d):
            base[i] = lo + t
            base[j] = lo + d - 1 - t
            key = tuple(base)
            out[key] = out.get(key, 0) + sign * c
    return MPoly(f.ring, out)


def _dd_symplectic(f: MPoly, k: int) -> MPoly:
    out = {}
    for e, c in f.terms.items():
        if e[k] & 1:
            t = list(e)
            t[k] -= 1
            out[tuple(t)] = c
    return MPoly(f.ring, out)


def divided_difference(
    i: int, f: MPoly, n: int | None = None, symplectic: bool = False, prefix: str = "a"
) -> MPoly:
    """Apply the i-th divided difference.

    With ``symplectic=True`` and ``i == n`` this is the sign-change operator
    divided by ``2 a_n``; otherwise it is the ordinary one for a_i, a_{i+1}.
    """
    if symplectic:
        if n is None:
            raise DomainError("symplectic divided differences need the rank n")
        if i == n:
            return _dd_symplectic(f, _var(f, prefix, n))
    if i < 1 or (n is not None and i >= n):
        raise DomainError(f"index {i} invalid for rank {n}")
    return _dd_typeA(f, _var(f, prefix, i), _var(f, prefix, i + 1))


def reflect(i: int, f: MPoly, n: int | None = None, symplectic: bool = False, prefix: str = "a") -> MPoly:
    """Action of the simple reflection s_i on polynomials."""
    if symplectic and i == n:
        return f.negate_var(_var(f, prefix, n))
    return f.swap(_var(f, prefix, i), _var(f, prefix, i + 1))


def apply_word(w: OperatorWord, f: MPoly) -> MPoly:
    for i in reversed(w.indices):
        if not f:
            break
        f = divided_difference(i, f, w.n, w.symplectic, w.prefix)
    return f


def apply_mixed(
    ops: Sequence[tuple[str, int]], f: MPoly, n: int, symplectic: bool = True, prefix: str = "a"
) -> MPoly:
    """Apply a written composite of ``("s", i)`` reflections and ``("d", i)``
    divided differences, rightmost first."""
    for kind, i in reversed(ops):
        if not f:
            break
        if kind == "s":
            f = reflect(i, f, n, symplectic, prefix)
        elif kind == "d":
            f = divided_difference(i, f, n, symplectic, prefix)
        else:
            raise DomainError(f"unknown operator kind {kind!r}")
    return f


# --------------------------------------------------------------------------
# symmetrizers


Kind = Literal["projective", "grassmann", "full_flag", "lagrangian_flag", "lagrangian_grassmann"]


def symmetrizer_word(kind: str, n: int, q: int | None = None) -> OperatorWord:
    if kind == "projective":
        return OperatorWord(tuple(range(n - 1, 0, -1)), n)
    if kind == "grassmann":
        if q is None or not 0 <= q <= n:
            raise DomainError(f"grassmann symmetrizer needs 0 <= q <= n, got q={q}")
        word: list[int] = []
        for t in range(q - 1, -1, -1):
            word.extend(range(n - 1 - t, q - t - 1, -1))
        return OperatorWord(tuple(word), n)
    if kind == "full_flag":
        word = []
        for top in range(n - 1, 0, -1):
            word.extend(range(1, top + 1))
        return OperatorWord(tuple(word), n)
    if kind == "lagrangian_flag":
        return OperatorWord(canonical_reduced_word(BarredPermutation.longest(n)), n, True)
    if kind == "lagrangian_grassmann":
        v = BarredPermutation(tuple(-(n - k) for k in range(n)))
        return OperatorWord(canonical_reduced_word(v), n, True)
    raise DomainError(f"unknown symmetrizer kind {kind!r}")


def _required_symmetries(kind: str, n: int, q: int | None) -> Iterable[int]:
    if kind == "projective":
        return range(2, n)
    if kind == "grassmann":
        return [i for i in range(1, n) if i != q]
    if kind == "lagrangian_grassmann":
        return range(1, n)
    return ()


def _check_symmetry(kind: str, f: MPoly, n: int, q: int | None) -> None:
    for i in _required_symmetries(kind, n, q):
        if reflect(i, f) != f:
            raise DomainError(f"{kind} symmetrizer needs f symmetric in a{i}, a{i + 1}")


def gysin_symmetrizer(kind: str, f: MPoly, n: int, q: int | None = None) -> MPoly:
    """Operator-word form of the Gysin map of the given flag-bundle kind."""
    _check_symmetry(kind, f, n, q)
    return apply_word(symmetrizer_word(kind, n, q), f)


def _permute_a(f: MPoly, sigma: Sequence[int], signs: Sequence[int] | None = None) -> MPoly:
    """Substitute a_k -> sign_k * a_{sigma[k]} (0-based sigma)."""
    mapping = {}
    for k, target in enumerate(sigma):
        s = 1 if signs is None else signs[k]
        mapping[f.ring.index(f"a{k + 1}")] = (f.ring.index(f"a{target + 1}"), s)
    return f.signed_permute(mapping)


def gysin_coset_sum(kind: str, f: MPoly, n: int, q: int | None = None) -> MPoly:
    """Independent Weyl-group summation form of the same Gysin maps."""
    _check_symmetry(kind, f, n, q)
    ring = f.ring
    avars = [f"a{i}" for i in range(1, n + 1)]
    gens = ring.gens(avars)
    if kind in ("projective", "grassmann", "full_flag"):
        if kind == "projective":
            q = 1
        if kind == "full_flag":
            # sum over S_n of sign(sigma) sigma(f), over the Vandermonde
            total = ring.zero()
            for sigma in permutations(range(n)):
                total = total + permutation_sign(sigma) * _permute_a(f, sigma)
            return divide_by_vandermonde(total, avars)
        assert q is not None
        vq = ring.one()
        for i in range(q):
            for j in range(i + 1, q):
                vq = vq * (gens[i] - gens[j])
        vr = ring.one()
        for i in range(q, n):
            for j in range(i + 1, n):
                vr = vr * (gens[i] - gens[j])
        g = f * vq * vr
        total = ring.zero()
        for first in combinations(range(n), q):
            rest = [k for k in range(n) if k not in first]
            sigma = list(first) + rest
            total = total + permutation_sign(sigma) * _permute_a(g, sigma)
        return divide_by_vandermonde(total, avars)
    if kind in ("lagrangian_flag", "lagrangian_grassmann"):
        g = f
        if kind == "lagrangian_grassmann":
            g = f * ring.monomial({f"a{k}": n - k for k in range(1, n)})
        total = ring.zero()
        for w in BarredPermutation.all(n):
            sigma = [abs(x) - 1 for x in w.images]
            signs = [1 if x > 0 else -1 for x in w.images]
            term = _permute_a(g, sigma, signs)
            total = total + (term if w.length() % 2 == 0 else -term)
        # divide by the product of positive roots a_i -+ a_j (i<j), 2 a_i
        idx = [ring.index(x) for x in avars]
        for i in range(n):
            for j in range(i + 1, n):
                total = total.div_binomial(idx[i], idx[j], 1)
                total = total.div_binomial(idx[i], idx[j], -1)
            total = total.div_var(idx[i])
        return total.exact_scalar_div(2**n)
    raise DomainError(f"unknown symmetrizer kind {kind!r}")


# --------------------------------------------------------------------------
# closed forms for pushforwards


def grassmann_multiplicity(q: int, k: int, h: int, n: int) -> int:
    """d with pi_*(c_top(Q (x) R) P_I Q P_J R) = d P_{I,J}, l(I) = k, l(J) = h.

    Zero when (q-k)(n-q-h) is odd, else (-1)^{(q-k)r} C([(n-k-h)/2], [(q-k)/2]).
    """
    r = n - q
    if not (0 <= k <= q and 0 <= h <= r):
        raise DomainError("need l(I) <= q and l(J) <= n - q")
    if (q - k) * (r - h) % 2:
        return 0
    sign = -1 if (q - k) * r % 2 else 1
    return sign * comb((n - k - h) // 2, (q - k) // 2)


def _squares(n: int, ring: PolyRing) -> dict[str, MPoly]:
    return {f"a{i}": ring.gen(f"a{i}") ** 2 for i in range(1, n + 1)}


def lagrangian_qtilde_image(I: Sequence[int], n: int, ring: PolyRing | None = None) -> MPoly:
    """Closed form of the Lagrangian pushforward of Qt_I(R^v).

    Zero unless every p in 1..n has odd multiplicity m_p in I; then
    prod_p e_p(a_1^2, ..., a_n^2)^{(m_p - 1)/2}.  The roots of R^v are a_i
    and (-1)^p c_{2p}(V) becomes e_p(a^2).
    """
    ring = ring or ring_a(n)
    mult = Counter(x for x in I if x)
    if any(x > n for x in mult) or any(mult[p] % 2 == 0 for p in range(1, n + 1)):
        return ring.zero()
    out = ring.one()
    sq = _squares(n, ring)
    for p in range(1, n + 1):
        ep = elementary_symmetric(p, ring, [f"a{i}" for i in range(1, n + 1)]).subs(sq, ring)
        out = out * ep ** ((mult[p] - 1) // 2)
    return out


def lagrangian_schur_image(I: Sequence[int], n: int, ring: PolyRing | None = None) -> MPoly:
    """Closed form of the Lagrangian pushforward of s_I(R^v).

    Zero unless I = 2J + rho_n; then s_J(a_1^2, ..., a_n^2).
    """
    ring = ring or ring_a(n)
    lam = partition(I)
    if len(lam) > n:
        return ring.zero()
    lam = lam + (0,) * (n - len(lam))
    J = []
    for k in range(n):
        d = lam[k] - (n - k)
        if d < 0 or d % 2:
            return ring.zero()
        J.append(d // 2)
    return ring.embed(bialternant_schur(tuple(J), n, ring_a(n)).subs(_squares(n, ring_a(n))))


def schur_by_operator(I: Sequence[int], n: int, ring: PolyRing | None = None) -> MPoly:
    """s_I(a_1..a_n) as the Jacobi symmetrizer of the monomial a^{I + rho_{n-1}}."""
    ring = ring or ring_a(n)
    lam = tuple(I)
    if len(lam) > n:
        raise DomainError(f"partition {lam} has more than {n} parts")
    lam = lam + (0,) * (n - len(lam))
    mono = ring.one()
    for k, x in enumerate(lam):
        if x + n - 1 - k:
            mono = mono * ring.gen(f"a{k + 1}") ** (x + n - 1 - k)
    return gysin_symmetrizer("full_flag", mono, n)
