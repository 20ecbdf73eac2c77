"""Exact multivariate polynomials over named, graded alphabets.

A ``PolyRing`` is an ordered tuple of variable names with graded degrees
(``a_i`` and ``b_j`` have degree 1, Chern variables ``c_i`` degree i).  An
``MPoly`` stores a sparse dict from dense exponent tuples to Python ints.
"""

from __future__ import annotations

import json
import operator
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Callable, Iterable, Mapping, Sequence

from .combinatorics import partition
from .errors import AlphabetMismatch, DomainError, InexactDivision

__all__ = [
    "Alphabet",
    "PolyRing",
    "MPoly",
    "TruncatedSeries",
    "series_inverse",
    "ring_a",
    "ring_ab",
    "elementary_symmetric",
    "complete_homogeneous",
    "power_sum",
    "det",
    "permutation_sign",
    "vandermonde",
    "bialternant_schur",
    "tableau_schur",
    "semistandard_tableaux",
]

Exp = tuple[int, ...]


@dataclass(frozen=True)
class Alphabet:
    """A block of variables ``{name}1 .. {name}{size}``."""

    name: str
    size: int
    chern: bool = False

    def __post_init__(self) -> None:
        if self.size < 0:
            raise DomainError("alphabet size must be nonnegative")

    def variables(self) -> tuple[str, ...]:
        return tuple(f"{self.name}{i}" for i in range(1, self.size + 1))

    def degrees(self) -> tuple[int, ...]:
        return tuple(range(1, self.size + 1)) if self.chern else (1,) * self.size


@dataclass(frozen=True)
class PolyRing:
    names: tuple[str, ...]
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise DomainError(f"duplicate variable names in {self.names}")
        if len(self.degrees) != len(self.names):
            raise DomainError("one degree per variable required")

    @classmethod
    def from_alphabets(cls, *alphabets: Alphabet) -> "PolyRing":
        names: tuple[str, ...] = ()
        degs: tuple[int, ...] = ()
        for alph in alphabets:
            names += alph.variables()
            degs += alph.degrees()
        return cls(names, degs)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index()[name]
        except KeyError:
            raise DomainError(f"variable {name!r} not in ring") from None

    def _index(self) -> dict[str, int]:
        return _index_map(self.names)

    def has(self, name: str) -> bool:
        return name in self._index()

    def zero(self) -> "MPoly":
        return MPoly(self, {})

    def one(self) -> "MPoly":
        return self.const(1)

    def const(self, c) -> "MPoly":
        return MPoly(self, {(0,) * self.nvars: c} if c else {})

    def gen(self, name: str) -> "MPoly":
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return MPoly(self, {tuple(e): 1})

    def gens(self, names: Iterable[str]) -> list["MPoly"]:
        return [self.gen(x) for x in names]

    def monomial(self, exps: Mapping[str, int], coeff=1) -> "MPoly":
        e = [0] * self.nvars
        for name, k in exps.items():
            e[self.index(name)] += k
        return MPoly(self, {tuple(e): coeff} if coeff else {})

    def embed(self, f: "MPoly") -> "MPoly":
        """Re-express ``f`` in this ring (variables matched by name)."""
        if f.ring == self:
            return f
        pos = [self.index(x) for x in f.ring.names]
        out: dict[Exp, object] = {}
        for e, c in f.terms.items():
            t = [0] * self.nvars
            for k, v in zip(pos, e):
                t[k] += v
            out[tuple(t)] = c
        return MPoly(self, out)

    def union(self, other: "PolyRing") -> "PolyRing":
        names = list(self.names)
        degs = list(self.degrees)
        for x, d in zip(other.names, other.degrees):
            if x not in self._index():
                names.append(x)
                degs.append(d)
        return PolyRing(tuple(names), tuple(degs))


@lru_cache(maxsize=None)
def _index_map(names: tuple[str, ...]) -> dict[str, int]:
    return {x: i for i, x in enumerate(names)}


class MPoly:
    """Sparse polynomial: ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Mapping[Exp, object] | None = None):
        self.ring = ring
        self.terms: dict[Exp, object] = {e: c for e, c in (terms or {}).items() if c}

    # -- construction helpers -------------------------------------------
    def _new(self, terms: dict[Exp, object]) -> "MPoly":
        p = MPoly.__new__(MPoly)
        p.ring = self.ring
        p.terms = terms
        return p

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.ring != self.ring:
                raise AlphabetMismatch(
                    f"rings differ: {self.ring.names} vs {other.ring.names}"
                )
            return other
        return self.ring.const(other)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other) -> "MPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            if not other:
                return self._new({})
            return self._new({e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if len(self.terms) > len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out: dict[Exp, object] = {}
        add = operator.add
        get = out.get
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(map(add, e1, e2))
                out[e] = get(e, 0) + c1 * c2
        return self._new({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise DomainError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_scalar_div(self, d: int) -> "MPoly":
        out = {}
        for e, c in self.terms.items():
            q, r = divmod(c, d)
            if r:
                raise InexactDivision(f"coefficient {c} not divisible by {d}")
            out[e] = q
        return self._new(out)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            if other.ring != self.ring:
                return False
            return self.terms == other.terms
        if isinstance(other, (int,)) or hasattr(other, "numerator"):
            return self.terms == ({(0,) * self.ring.nvars: other} if other else {})
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- inspection ---------------------------------------------------------
    def term_degree(self, e: Exp) -> int:
        return sum(x * d for x, d in zip(e, self.ring.degrees))

    def degree(self) -> int:
        """Graded degree (-1 for the zero polynomial)."""
        return max((self.term_degree(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({self.term_degree(e) for e in self.terms}) <= 1

    def homogeneous_part(self, d: int) -> "MPoly":
        return self._new({e: c for e, c in self.terms.items() if self.term_degree(e) == d})

    def truncate(self, bound: int) -> "MPoly":
        return self._new({e: c for e, c in self.terms.items() if self.term_degree(e) <= bound})

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, 0)

    def coeff(self, exps: Mapping[str, int]):
        e = [0] * self.ring.nvars
        for name, k in exps.items():
            e[self.ring.index(name)] = k
        return self.terms.get(tuple(e), 0)

    def variables_used(self) -> set[str]:
        used = set()
        for e in self.terms:
            used.update(self.ring.names[i] for i, x in enumerate(e) if x)
        return used

    def leading(self) -> tuple[Exp, object]:
        """Lexicographically largest exponent with its coefficient."""
        e = max(self.terms)
        return e, self.terms[e]

    # -- variable operations -----------------------------------------------
    def swap(self, i: int, j: int) -> "MPoly":
        """Exchange variables with indices i and j (0-based)."""
        out = {}
        for e, c in self.terms.items():
            t = list(e)
            t[i], t[j] = t[j], t[i]
            out[tuple(t)] = c
        return self._new(out)

    def negate_var(self, i: int) -> "MPoly":
        return self._new({e: (-c if e[i] & 1 else c) for e, c in self.terms.items()})

    def signed_permute(self, mapping: Mapping[int, tuple[int, int]]) -> "MPoly":
        """Substitute x_k -> sign * x_{target} for each k in ``mapping``.

        ``mapping`` must be a bijection on its key set.
        """
        out = {}
        for e, c in self.terms.items():
            t = list(e)
            sign = 1
            for k, (target, s) in mapping.items():
                t[target] = e[k]
                if s < 0 and e[k] & 1:
                    sign = -sign
            out[tuple(t)] = sign * c
        return self._new(out)

    def subs(self, values: Mapping[str, object], ring: PolyRing | None = None) -> "MPoly":
        """Substitute polynomials (or scalars) for named variables.

        The result lives in ``ring`` (default: this ring).  Variables not
        substituted are carried over by name.
        """
        target = ring or self.ring
        images: list[MPoly] = []
        for name in self.ring.names:
            if name in values:
                v = values[name]
                images.append(target.embed(v) if isinstance(v, MPoly) else target.const(v))
            else:
                images.append(target.gen(name))
        cache: dict[tuple[int, int], MPoly] = {}

        def power(k: int, x: int) -> MPoly:
            key = (k, x)
            if key not in cache:
                cache[key] = images[k] ** x
            return cache[key]

        total: dict[Exp, object] = {}
        for e, c in self.terms.items():
            term = target.const(c)
            for k, x in enumerate(e):
                if x:
                    term = term * power(k, x)
                    if not term:
                        break
            for te, tc in term.terms.items():
                total[te] = total.get(te, 0) + tc
        return MPoly(target, total)

    def div_binomial(self, i: int, j: int, c: int = 1) -> "MPoly":
        """Exact quotient by (x_i - c*x_j), i != j, c in {1, -1}."""
        if i == j:
            raise DomainError("binomial divisor needs two distinct variables")
        # f = sum_k f_k x_i^k with f_k free of x_i.  Top down:
        # q_{k-1} = f_k + c x_j q_k, and the remainder f_0 + c x_j q_0 must vanish.
        rest_polys: dict[int, dict[Exp, object]] = {}
        for e, coef in self.terms.items():
            rest_polys.setdefault(e[i], {})[e[:i] + (0,) + e[i + 1:]] = coef
        if not rest_polys:
            return self._new({})
        top = max(rest_polys)
        q: dict[int, dict[Exp, object]] = {}
        carry: dict[Exp, object] = {}  # c*x_j*q_k
        for k in range(top, 0, -1):
            fk = rest_polys.get(k, {})
            qk = dict(fk)
            for e, v in carry.items():
                qk[e] = qk.get(e, 0) + v
            qk = {e: v for e, v in qk.items() if v}
            q[k - 1] = qk
            carry = {}
            for e, v in qk.items():
                t = list(e)
                t[j] += 1
                carry[tuple(t)] = c * v
        rem = dict(rest_polys.get(0, {}))
        for e, v in carry.items():
            rem[e] = rem.get(e, 0) + v
        if any(rem.values()):
            raise InexactDivision(
                f"not divisible by {self.ring.names[i]} - ({c})*{self.ring.names[j]}"
            )
        out: dict[Exp, object] = {}
        for k, qk in q.items():
            for e, v in qk.items():
                t = list(e)
                t[i] = k
                out[tuple(t)] = v
        return self._new(out)

    def div_var(self, i: int) -> "MPoly":
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                raise InexactDivision(f"not divisible by {self.ring.names[i]}")
            t = list(e)
            t[i] -= 1
            out[tuple(t)] = c
        return self._new(out)

    def map_coefficients(self, fn: Callable) -> "MPoly":
        return self._new({e: fn(c) for e, c in self.terms.items()})

    # -- output -------------------------------------------------------------
    def sorted_terms(self) -> list[tuple[Exp, object]]:
        """Graded lexicographic order, largest first."""
        return sorted(self.terms.items(), key=lambda t: (self.term_degree(t[0]), t[0]), reverse=True)

    def to_json(self) -> dict:
        return {
            "vars": list(self.ring.names),
            "terms": [{"coeff": str(c), "exp": list(e)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping, degrees: Sequence[int] | None = None) -> "MPoly":
        names = tuple(data["vars"])
        ring = PolyRing(names, tuple(degrees) if degrees else (1,) * len(names))
        terms = {}
        for t in data["terms"]:
            terms[tuple(t["exp"])] = int(t["coeff"])
        return cls(ring, terms)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def __repr__(self) -> str:
        return f"MPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                (name if x == 1 else f"{name}^{x}")
                for name, x in zip(self.ring.names, e)
                if x
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


# --------------------------------------------------------------------------
# truncated power series


@dataclass(frozen=True)
class TruncatedSeries:
    poly: MPoly
    bound: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "poly", self.poly.truncate(self.bound))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        bound = min(self.bound, other.bound)
        return TruncatedSeries(_truncated_product(self.poly, other.poly, bound), bound)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return TruncatedSeries(self.poly + other.poly, min(self.bound, other.bound))

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self.bound == other.bound and self.poly == other.poly


def _truncated_product(f: MPoly, g: MPoly, bound: int) -> MPoly:
    out: dict[Exp, object] = {}
    fd = [(e, c, f.term_degree(e)) for e, c in f.terms.items()]
    gd = [(e, c, g.term_degree(e)) for e, c in g.terms.items()]
    add = operator.add
    for e1, c1, d1 in fd:
        for e2, c2, d2 in gd:
            if d1 + d2 <= bound:
                e = tuple(map(add, e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
    return MPoly(f.ring, out)


def series_inverse(f: TruncatedSeries) -> TruncatedSeries:
    """Inverse of a series with constant term 1, degree by degree."""
    if f.poly.constant_term() != 1:
        raise DomainError("series inverse needs constant term 1")
    ring = f.poly.ring
    parts = [f.poly.homogeneous_part(d) for d in range(f.bound + 1)]
    inv = [ring.one()]
    for d in range(1, f.bound + 1):
        acc = ring.zero()
        for k in range(1, d + 1):
            if parts[k]:
                acc = acc + parts[k] * inv[d - k]
        inv.append(-acc)
    total = ring.zero()
    for p in inv:
        total = total + p
    return TruncatedSeries(total, f.bound)


# --------------------------------------------------------------------------
# symmetric functions in a block of variables


def ring_a(n: int, name: str = "a") -> PolyRing:
    return PolyRing.from_alphabets(Alphabet(name, n))


def ring_ab(n: int, m: int) -> PolyRing:
    return PolyRing.from_alphabets(Alphabet("a", n), Alphabet("b", m))


def _alphabet_vars(ring: PolyRing, variables: Sequence[str] | None, prefix: str = "a") -> tuple[str, ...]:
    if variables is not None:
        return tuple(variables)
    return tuple(x for x in ring.names if x.startswith(prefix) and x[len(prefix):].isdigit())


def elementary_symmetric(k: int, ring: PolyRing, variables: Sequence[str] | None = None) -> MPoly:
    """e_k of the given variables (default: the ``a`` alphabet of ``ring``)."""
    vs = _alphabet_vars(ring, variables)
    return _elem(k, ring, vs)


@lru_cache(maxsize=4096)
def _elem(k: int, ring: PolyRing, vs: tuple[str, ...]) -> MPoly:
    if k < 0 or k > len(vs):
        return ring.zero()
    if k == 0:
        return ring.one()
    idx = [ring.index(x) for x in vs]
    terms = {}
    for combo in combinations(idx, k):
        e = [0] * ring.nvars
        for i in combo:
            e[i] = 1
        terms[tuple(e)] = 1
    return MPoly(ring, terms)


def complete_homogeneous(k: int, ring: PolyRing, variables: Sequence[str] | None = None) -> MPoly:
    vs = _alphabet_vars(ring, variables)
    return _complete(k, ring, vs)


@lru_cache(maxsize=4096)
def _complete(k: int, ring: PolyRing, vs: tuple[str, ...]) -> MPoly:
    if k < 0:
        return ring.zero()
    if k == 0:
        return ring.one()
    if not vs:
        return ring.zero()
    # h_k(x_1..x_m) = h_k(x_1..x_{m-1}) + x_m h_{k-1}(x_1..x_m)
    return _complete(k, ring, vs[:-1]) + ring.gen(vs[-1]) * _complete(k - 1, ring, vs)


def power_sum(k: int, ring: PolyRing, variables: Sequence[str] | None = None) -> MPoly:
    vs = _alphabet_vars(ring, variables)
    total = ring.zero()
    for x in vs:
        total = total + ring.gen(x) ** k
    return total


# --------------------------------------------------------------------------
# determinants


def det(matrix: Sequence[Sequence], one=1):
    """Determinant by Laplace expansion memoized over column subsets.

    Entries may be ints, Fractions or MPolys; ``one`` is the unit used for
    the empty determinant.
    """
    k = len(matrix)
    if k == 0:
        return one
    memo: dict[int, object] = {}

    def rec(row: int, cols: int):
        # determinant of rows row..k-1 restricted to column set ``cols``
        if row == k:
            return one
        if cols in memo:
            return memo[cols]
        total = None
        sign = 1
        for c in range(k):
            if cols >> c & 1:
                entry = matrix[row][c]
                if _nonzero(entry):
                    sub = rec(row + 1, cols & ~(1 << c))
                    term = entry * sub
                    term = term if sign > 0 else -term
                    total = term if total is None else total + term
                sign = -sign
        if total is None:
            total = one * 0
        memo[cols] = total
        return total

    return rec(0, (1 << k) - 1)


def _nonzero(x) -> bool:
    return bool(x)


def permutation_sign(p: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def vandermonde(ring: PolyRing, variables: Sequence[str]) -> MPoly:
    """prod_{i<j} (x_i - x_j)."""
    out = ring.one()
    gens = ring.gens(variables)
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            out = out * (gens[i] - gens[j])
    return out


def divide_by_vandermonde(f: MPoly, variables: Sequence[str]) -> MPoly:
    idx = [f.ring.index(x) for x in variables]
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            f = f.div_binomial(idx[a], idx[b], 1)
    return f


def bialternant_schur(I: Sequence[int], n: int, ring: PolyRing | None = None) -> MPoly:
    """Det[a_j^{i_k+n-k}] divided exactly by the Vandermonde."""

    lam = partition(I)
    if len(lam) > n:
        raise DomainError(f"l(I) = {len(lam)} exceeds n = {n}")
    ring = ring or ring_a(n)
    return _bialternant(lam, n, ring)


@lru_cache(maxsize=2048)
def _bialternant(lam: tuple[int, ...], n: int, ring: PolyRing) -> MPoly:
    vs = tuple(f"a{i}" for i in range(1, n + 1))
    idx = [ring.index(x) for x in vs]
    lam = lam + (0,) * (n - len(lam))
    shifted = [lam[k] + n - 1 - k for k in range(n)]
    terms: dict[Exp, int] = {}
    for perm in permutations(range(n)):
        e = [0] * ring.nvars
        for k in range(n):
            e[idx[perm[k]]] = shifted[k]
        terms[tuple(e)] = permutation_sign(perm)
    alt = MPoly(ring, terms)
    return divide_by_vandermonde(alt, vs)


def semistandard_tableaux(shape: Sequence[int], n: int):
    """Yield SSYT of the given shape with entries 1..n, as lists of rows."""
    cells = [(r, c) for r, row in enumerate(shape) for c in range(row)]
    filling: dict[tuple[int, int], int] = {}

    def rec(k: int):
        if k == len(cells):
            yield [[filling[(r, c)] for c in range(row)] for r, row in enumerate(shape)]
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, n + 1):
            filling[(r, c)] = v
            yield from rec(k + 1)
        filling.pop((r, c), None)

    yield from rec(0)


def tableau_schur(I: Sequence[int], n: int, ring: PolyRing | None = None) -> MPoly:
    """Schur polynomial as a sum of tableau monomials (independent oracle)."""

    lam = partition(I)
    ring = ring or ring_a(n)
    idx = [ring.index(f"a{i}") for i in range(1, n + 1)]
    terms: dict[Exp, int] = {}
    for tab in semistandard_tableaux(lam, n):
        e = [0] * ring.nvars
        for row in tab:
            for v in row:
                e[idx[v - 1]] += 1
        t = tuple(e)
        terms[t] = terms.get(t, 0) + 1
    return MPoly(ring, terms)
