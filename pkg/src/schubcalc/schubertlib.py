"""Double and single Schubert polynomials."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .combinatorics import Permutation, canonical_reduced_word
from .divdiff import OperatorWord, apply_word
from .errors import DomainError
from .polyring import MPoly, PolyRing, ring_ab

__all__ = ["top_polynomial", "double_schubert", "single_schubert", "as_permutation"]


def as_permutation(mu: Permutation | Sequence[int]) -> Permutation:
    return mu if isinstance(mu, Permutation) else Permutation(tuple(mu))


def top_polynomial(n: int, ring: PolyRing | None = None) -> MPoly:
    """prod_{i+j<=n} (a_i - b_j)."""
    ring = ring or ring_ab(n, n)
    out = ring.one()
    for i in range(1, n + 1):
        for j in range(1, n + 1 - i):
            out = out * (ring.gen(f"a{i}") - ring.gen(f"b{j}"))
    return out


def double_schubert(mu: Permutation | Sequence[int], n: int | None = None) -> MPoly:
    """S_mu(A/B) = d_{mu^{-1} omega} applied to the top polynomial."""
    mu = as_permutation(mu)
    if n is not None and n != mu.n:
        raise DomainError(f"permutation has rank {mu.n}, expected {n}")
    return _double(mu.images)


@lru_cache(maxsize=None)
def _double(images: tuple[int, ...]) -> MPoly:
    mu = Permutation(images)
    n = mu.n
    v = mu.inverse() * Permutation.longest(n)
    word = canonical_reduced_word(v)
    return apply_word(OperatorWord(word, n), top_polynomial(n))


def single_schubert(mu: Permutation | Sequence[int], n: int | None = None) -> MPoly:
    """S_mu(A): the double Schubert polynomial with every b_j set to 0."""
    f = double_schubert(mu, n)
    m = as_permutation(mu).n
    return f.subs({f"b{j}": 0 for j in range(1, m + 1)}, PolyRing(f.ring.names[:m], (1,) * m))
