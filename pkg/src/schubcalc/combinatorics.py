"""Partitions, diagrams and the Weyl groups of types A and C.

Partitions are plain tuples of positive integers in weakly decreasing order
(trailing zeros stripped).  Weyl group elements are stored in one-line
notation; ``(u * v)(x) = u(v(x))`` so right multiplication by a simple
reflection acts on positions.

>>> conjugate((3, 1))
(2, 1, 1)
>>> hook_product((2, 2))
12
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Iterator, Sequence

from .errors import DomainError

Partition = tuple[int, ...]

__all__ = [
    "Partition",
    "partition",
    "strict_partition",
    "is_strict",
    "weight",
    "conjugate",
    "hook_product",
    "rho",
    "rectangle",
    "juxtapose",
    "contains",
    "diagram",
    "skew_cells",
    "skew_components",
    "box_complement",
    "strict_complement",
    "partitions_of",
    "partitions_in_box",
    "strict_partitions_in_rho",
    "strict_partitions_of",
    "Permutation",
    "BarredPermutation",
    "reduced_words",
    "canonical_reduced_word",
    "barred_w_I",
    "w_I_word",
]


# --------------------------------------------------------------------------
# partitions


def partition(parts: Iterable[int]) -> Partition:
    """Validate and normalize a partition (drop trailing zeros)."""
    seq = tuple(int(x) for x in parts)
    for k in range(len(seq) - 1):
        if seq[k] < seq[k + 1]:
            raise DomainError(f"partition must be weakly decreasing: {list(seq)}")
    if seq and seq[-1] < 0:
        raise DomainError(f"partition parts must be nonnegative: {list(seq)}")
    while seq and seq[-1] == 0:
        seq = seq[:-1]
    return seq


def is_strict(parts: Sequence[int]) -> bool:
    return all(parts[k] > parts[k + 1] for k in range(len(parts) - 1))


def strict_partition(parts: Iterable[int]) -> Partition:
    seq = partition(parts)
    if not is_strict(seq):
        raise DomainError(f"strict partition required: {list(seq)}")
    return seq


def weight(parts: Sequence[int]) -> int:
    return sum(parts)


def conjugate(parts: Sequence[int]) -> Partition:
    lam = partition(parts)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= p) for p in range(1, lam[0] + 1))


def hook_product(parts: Sequence[int]) -> int:
    lam = partition(parts)
    conj = conjugate(lam)
    out = 1
    for r, row in enumerate(lam):
        for c in range(row):
            out *= (row - c - 1) + (conj[c] - r - 1) + 1
    return out


def rho(k: int) -> Partition:
    """The staircase (k, k-1, ..., 1)."""
    return tuple(range(k, 0, -1))


def rectangle(i: int, k: int) -> Partition:
    """The partition (i)^k."""
    return partition((i,) * k) if i > 0 else ()


def juxtapose(i: int, k: int, I: Sequence[int], J: Sequence[int]) -> Partition:
    """(i)^k + I, J = (i + i_1, ..., i + i_k, j_1, j_2, ...)."""
    I = tuple(I)
    if len(partition(I)) > k:
        raise DomainError(f"l(I) = {len(partition(I))} exceeds {k}")
    I = partition(I) + (0,) * (k - len(partition(I)))
    seq = tuple(i + x for x in I) + tuple(J)
    return partition(seq)


def contains(inner: Sequence[int], outer: Sequence[int]) -> bool:
    inner, outer = partition(inner), partition(outer)
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def diagram(parts: Sequence[int]) -> frozenset[tuple[int, int]]:
    """Ferrers diagram as 1-based (row, column) cells."""
    return frozenset((r + 1, c + 1) for r, row in enumerate(parts) for c in range(row))


def skew_cells(inner: Sequence[int], outer: Sequence[int]) -> frozenset[tuple[int, int]]:
    if not contains(inner, outer):
        raise DomainError(f"{list(inner)} is not contained in {list(outer)}")
    return diagram(partition(outer)) - diagram(partition(inner))


def _is_interval(values: set[int]) -> bool:
    return max(values) - min(values) + 1 == len(values)


def _connected(cells: set[tuple[int, int]]) -> bool:
    return _is_interval({r for r, _ in cells}) and _is_interval({c for _, c in cells})


def skew_components(
    inner: Sequence[int], outer: Sequence[int], exclude_first_column: bool = False
) -> int:
    """Count connected components of outer/inner.

    A set of cells is connected when both of its coordinate projections are
    intervals.  Components are obtained by merging row segments while the
    union stays connected.
    """
    cells = skew_cells(inner, outer)
    groups: list[set[tuple[int, int]]] = []
    for r in sorted({r for r, _ in cells}):
        groups.append({cell for cell in cells if cell[0] == r})
    merged = True
    while merged:
        merged = False
        for a, b in combinations(range(len(groups)), 2):
            union = groups[a] | groups[b]
            if _connected(union):
                groups[a] = union
                del groups[b]
                merged = True
                break
    if exclude_first_column:
        groups = [g for g in groups if all(c != 1 for _, c in g)]
    return len(groups)


def box_complement(J: Sequence[int], q: int, r: int) -> Partition:
    """Complement of J^~ inside the rectangle (q)^r (r rows of length q)."""
    J = partition(J)
    if len(J) > q or (J and J[0] > r):
        raise DomainError(f"{list(J)} is not contained in ({r})^{q}")
    Jc = conjugate(J) + (0,) * r
    return partition(q - Jc[r - 1 - t] for t in range(r))


def strict_complement(J: Sequence[int], k: int) -> Partition:
    parts = tuple(J)
    if len(set(parts)) != len(parts) or any(x < 1 or x > k for x in parts):
        raise DomainError(f"{list(parts)} is not a subset of {{1..{k}}}")
    return tuple(x for x in range(k, 0, -1) if x not in parts)


def partitions_of(
    n: int, max_len: int | None = None, max_part: int | None = None
) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(rest: int, cap: int, slots: int | None) -> Iterator[Partition]:
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first, None if slots is None else slots - 1):
                yield (first,) + tail

    yield from rec(n, max_part, max_len)


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``cols``."""
    for w in range(rows * cols + 1):
        yield from partitions_of(w, max_len=rows, max_part=cols)


def strict_partitions_in_rho(n: int) -> Iterator[Partition]:
    """Strict partitions contained in rho_n, by weight then reverse lex."""
    out = []
    for k in range(n + 1):
        for subset in combinations(range(n, 0, -1), k):
            out.append(subset)
    out.sort(key=lambda s: (sum(s), [-x for x in s]))
    yield from out


def strict_partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    for lam in partitions_of(n, max_part=max_part):
        if is_strict(lam):
            yield lam


# --------------------------------------------------------------------------
# Weyl groups


@dataclass(frozen=True)
class Permutation:
    """Element of S_n in one-line notation (mu(1), ..., mu(n))."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise DomainError(f"not a permutation: {list(self.images)}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        if not 1 <= i < n:
            raise DomainError(f"simple transposition {i} invalid in S_{n}")
        im = list(range(1, n + 1))
        im[i - 1], im[i] = im[i], im[i - 1]
        return cls(tuple(im))

    @classmethod
    def from_word(cls, word: Sequence[int], n: int) -> "Permutation":
        w = cls.identity(n)
        for i in word:
            w = w * cls.simple(i, n)
        return w

    @classmethod
    def all(cls, n: int) -> list["Permutation"]:
        return [cls(p) for p in permutations(range(1, n + 1))]

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(self(other(x)) for x in range(1, self.n + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images):
            inv[v - 1] = i + 1
        return Permutation(tuple(inv))

    def length(self) -> int:
        im = self.images
        return sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])

    def rank(self) -> int:
        return self.n - 1

    def simple_reflection(self, i: int) -> "Permutation":
        return Permutation.simple(i, self.n)

    def generators(self) -> range:
        return range(1, self.n)


@dataclass(frozen=True)
class BarredPermutation:
    """Element of the hyperoctahedral group as a signed one-line sequence.

    Generators: s_i (i < n) swaps positions i, i+1; s_n negates position n.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(abs(x) for x in self.images) != list(range(1, len(self.images) + 1)):
            raise DomainError(f"not a barred permutation: {list(self.images)}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "BarredPermutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "BarredPermutation":
        return cls(tuple(-x for x in range(1, n + 1)))

    @classmethod
    def simple(cls, i: int, n: int) -> "BarredPermutation":
        if not 1 <= i <= n:
            raise DomainError(f"simple reflection {i} invalid in rank {n}")
        im = list(range(1, n + 1))
        if i == n:
            im[-1] = -n
        else:
            im[i - 1], im[i] = im[i], im[i - 1]
        return cls(tuple(im))

    @classmethod
    def from_word(cls, word: Sequence[int], n: int) -> "BarredPermutation":
        w = cls.identity(n)
        for i in word:
            w = w * cls.simple(i, n)
        return w

    @classmethod
    def all(cls, n: int) -> list["BarredPermutation"]:
        out = []
        for p in permutations(range(1, n + 1)):
            for signs in product((1, -1), repeat=n):
                out.append(cls(tuple(s * x for s, x in zip(signs, p))))
        return out

    def __call__(self, x: int) -> int:
        v = self.images[abs(x) - 1]
        return v if x > 0 else -v

    def __mul__(self, other: "BarredPermutation") -> "BarredPermutation":
        return BarredPermutation(tuple(self(other(x)) for x in range(1, self.n + 1)))

    def inverse(self) -> "BarredPermutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images):
            inv[abs(v) - 1] = (i + 1) if v > 0 else -(i + 1)
        return BarredPermutation(tuple(inv))

    def length(self) -> int:
        """Number of positive type-C roots sent to negative roots."""
        return _barred_length(self.images)

    def rank(self) -> int:
        return self.n

    def simple_reflection(self, i: int) -> "BarredPermutation":
        return BarredPermutation.simple(i, self.n)

    def generators(self) -> range:
        return range(1, self.n + 1)


@lru_cache(maxsize=None)
def _barred_length(images: tuple[int, ...]) -> int:
    n = len(images)

    def image(i: int) -> tuple[int, int]:
        v = images[i]
        return abs(v) - 1, (1 if v > 0 else -1)

    def negative(vec: dict[int, int]) -> bool:
        k = min(x for x, c in vec.items() if c != 0)
        return vec[k] < 0

    count = 0
    for i in range(n):
        pi, si = image(i)
        if si < 0:  # root 2e_i
            count += 1
        for j in range(i + 1, n):
            pj, sj = image(j)
            for sign in (-1, 1):  # e_i - e_j and e_i + e_j
                vec: dict[int, int] = {}
                vec[pi] = vec.get(pi, 0) + si
                vec[pj] = vec.get(pj, 0) + sign * sj
                if negative(vec):
                    count += 1
    return count


WeylElement = Permutation | BarredPermutation


def _words(w: WeylElement) -> frozenset[tuple[int, ...]]:
    return _words_cached(type(w), w.images)


@lru_cache(maxsize=None)
def _words_cached(cls: type, images: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    w = cls(images)
    ell = w.length()
    if ell == 0:
        return frozenset({()})
    out = set()
    for i in w.generators():
        v = w.simple_reflection(i) * w
        if v.length() < ell:
            out.update((i,) + tail for tail in _words_cached(cls, v.images))
    return frozenset(out)


def reduced_words(w: WeylElement, guard: int = 6) -> set[tuple[int, ...]]:
    """All reduced words of ``w``; refuses ranks above ``guard``."""
    if w.n > guard:
        raise DomainError(f"rank {w.n} exceeds enumeration guard {guard}")
    return set(_words(w))


def canonical_reduced_word(w: WeylElement) -> tuple[int, ...]:
    """Lexicographically smallest reduced word (greedy on left descents)."""
    word: list[int] = []
    ell = w.length()
    while ell:
        for i in w.generators():
            v = w.simple_reflection(i) * w
            if v.length() < ell:
                word.append(i)
                w, ell = v, ell - 1
                break
    return tuple(word)


def w_I_word(I: Sequence[int], n: int) -> tuple[int, ...]:
    """The defining word of w_I: blocks (s_{n-i_h+1} ... s_n) for h = k..1."""
    I = strict_partition(I)
    if I and I[0] > n:
        raise DomainError(f"{list(I)} is not contained in rho_{n}")
    word: list[int] = []
    for i in reversed(I):
        word.extend(range(n - i + 1, n + 1))
    return tuple(word)


def barred_w_I(I: Sequence[int], n: int) -> BarredPermutation:
    return BarredPermutation.from_word(w_I_word(I, n), n)
