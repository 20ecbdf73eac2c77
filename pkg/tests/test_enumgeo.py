from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schubcalc.combinatorics import partitions_of, rho
from schubcalc.enumgeo import (
    LAMBDA3_RANK4_TOP,
    LAMBDA3_RANK5_TOP_PRINTED,
    ROUTES,
    alpha,
    bracket,
    chern_schur_bundle,
    ctop_builtin,
    ctop_schur_bundle_roots,
    d_coeff,
    d_kl,
    f_series,
    h_series,
    paren,
    push_forward_last,
    quadrics_product,
    segre_expansion,
    segre_expansion_roots,
    sym_power_rank2_top,
    tensor_segre_coefficient,
    total_chern_schur_bundle_roots,
)
from schubcalc.errors import DomainError
from schubcalc.polyring import ring_a
from schubcalc.schurlib import SchurExpansion


def strict_sequences(max_top, max_len):
    """All j_1 > ... > j_k >= 0 with j_1 <= max_top and k <= max_len."""
    out = [()]
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for J in frontier:
            top = J[-1] - 1 if J else max_top
            for x in range(top, -1, -1):
                nxt.append(J + (x,))
        out += nxt
        frontier = nxt
    return out


STRICT = strict_sequences(8, 4)


# -- tensor Segre coefficients ---------------------------------------------------


def test_d_coeff_examples():
    assert d_coeff((), (), 3, 2) == 1
    assert tensor_segre_coefficient((), (), 3, 2) == 1
    for i in range(5):
        for j in range(5):
            assert d_coeff((i,), (j,), 1, 1) == comb(i + j, i)
    with pytest.raises(DomainError):
        d_coeff((1, 1, 1), (), 2, 2)


def test_d_coeff_nonnegative():
    for m in range(1, 4):
        for n in range(1, 4):
            for w in range(5):
                for wi in range(w + 1):
                    for I in partitions_of(wi, max_len=min(m, n)):
                        for J in partitions_of(w - wi, max_len=min(m, n)):
                            assert tensor_segre_coefficient(I, J, n, m) >= 0


@pytest.mark.parametrize("n,m", [(n, m) for n in (1, 2, 3) for m in (1, 2, 3)])
def test_tensor_segre_matches_roots(n, m):
    assert segre_expansion("tensor", 4, n, m) == segre_expansion_roots("tensor", 4, n, m)


# -- ((J)) and [J] ---------------------------------------------------------------


def test_paren_examples():
    assert paren((1, 0)) == 1
    assert paren((6, 2)) == 210
    for i in range(1, 11):
        assert paren((i, 0)) == 2**i - 1
    with pytest.raises(DomainError):
        paren((2, 2))


def test_bracket_examples():
    assert bracket((3, 2, 1, 0)) == 1
    assert bracket((5, 3, 1, 0)) == 12
    assert bracket((7, 4, 1, 0)) == 87
    assert bracket((6, 3)) == 28
    with pytest.raises(DomainError):
        bracket((1, 2))


def test_paren_routes_agree():
    for J in STRICT:
        values = {paren(J, route) for route in ROUTES}
        assert len(values) == 1, J
        assert values.pop() >= 0


def test_bracket_routes_agree():
    for J in STRICT:
        values = {bracket(J, route) for route in ROUTES}
        assert len(values) == 1, J
        assert values.pop() >= 0


def test_paren_triangle_recurrence():
    def pv(i, j):
        return paren((i, j)) if i > j else 0

    for i in range(1, 9):
        for j in range(1, i):
            assert pv(i, j) == pv(i - 1, j) + pv(i, j - 1)


def test_bracket_relations():
    assert 2 * bracket((5, 3, 2, 1)) - bracket((5, 3, 2, 0)) - bracket((4, 3, 2, 1)) == 0
    assert 2 * bracket((5, 4, 3, 1)) - bracket((5, 4, 3, 0)) - bracket((5, 4, 2, 1)) == 0
    assert 2 * bracket((6, 3, 1, 0)) - bracket((6, 2, 1, 0)) - bracket((5, 3, 1, 0)) == bracket((6, 3)) == 28


# -- Segre classes of S^2 E and wedge^2 E ----------------------------------------


def test_segre_small_examples():
    assert segre_expansion("sym2", 0, 3) == SchurExpansion({(): 1})
    assert segre_expansion("sym2", 1, 2)[(1,)] == 3
    assert segre_expansion("wedge2", 1, 3)[(1,)] == 2


@pytest.mark.parametrize("kind", ["sym2", "wedge2"])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_segre_matches_roots(kind, n):
    degree = 5 if n <= 3 else 4
    expected = segre_expansion_roots(kind, degree, n)
    assert segre_expansion(kind, degree, n) == expected
    fn = paren if kind == "sym2" else bracket
    for I, v in expected.items():
        shifted = tuple(x + y for x, y in zip(I + (0,) * (n - len(I)), rho(n - 1) + (0,)))
        assert v == fn(shifted)


def test_segre_unknown_kind():
    with pytest.raises(DomainError):
        segre_expansion("cube", 1, 2)


# -- series identities for the pushforward along the last variable ---------------


def _lemma_sides(r, D, signed):
    ring = ring_a(r + 1)
    e1 = ring.zero()
    for i in range(1, r + 2):
        e1 = e1 + ring.gen(f"a{i}")
    F1, H1 = ring.embed(f_series(r + 1, D)), ring.embed(h_series(r + 1, D))
    top = D - r
    small = ring_a(r)
    er = small.zero()
    for i in range(1, r + 1):
        er = er + small.gen(f"a{i}")
    first = (push_forward_last(f_series(r, D), r, signed).truncate(top), (F1 if r % 2 == 0 else ring.zero()).truncate(top))
    rhs2 = F1 * Fraction(r + 1, 2) - e1 * F1 if r % 2 else F1 * Fraction(r, 2)
    second = (push_forward_last((er * f_series(r, D)).truncate(D), r, signed).truncate(top), rhs2.truncate(top))
    third = (push_forward_last(h_series(r, D), r, signed).truncate(top), (H1 * (r + 1) - e1 * H1 * 2).truncate(top))
    return first, second, third


@pytest.mark.parametrize("r", [1, 2, 3])
def test_pushforward_series_identities(r):
    for lhs, rhs in _lemma_sides(r, 6, signed=False):
        assert lhs == rhs


def test_signed_pushforward_breaks_identities_at_odd_rank():
    _, second, third = _lemma_sides(1, 6, signed=True)
    assert second[0] != second[1]
    assert third[0] != third[1]


# -- complete quadrics -----------------------------------------------------------


def test_alpha():
    assert alpha(3, 4, -1) == 0
    assert alpha(1, 2, 1) == 3
    assert alpha(2, 3, 2) == 19
    assert alpha(0, 5, 0) == 1


def test_conic_characteristic_numbers():
    # conics through 5 - k points and tangent to k lines
    assert [quadrics_product((0, 1, 2), (5 - k, k), 1) for k in range(6)] == [1, 2, 4, 4, 2, 1]


@pytest.mark.parametrize("I", [(0, 1, 2), (0, 2, 3), (1, 2, 4), (0, 1, 2, 3), (0, 2, 4, 5)])
def test_quadrics_p0_reduces_to_paren(I):
    m1 = sum(I) + len(I) - 1
    assert quadrics_product(I, (m1,), 0) == paren(tuple(reversed(I)))


def test_quadrics_rejects_bad_input():
    with pytest.raises(DomainError):
        quadrics_product((0, 1, 2), (4, 0), 1)
    with pytest.raises(DomainError):
        quadrics_product((2, 1), (3,), 0)
    with pytest.raises(DomainError):
        quadrics_product((0, 1), (1, 0), 2)


# -- Chern classes of Schur functors ---------------------------------------------


def test_d_kl_examples():
    assert d_kl((2, 1), (2, 1), 3) == 1
    assert d_kl((1,), (), 2) == 2
    assert d_kl((2,), (1,), 1) == 2
    with pytest.raises(DomainError):
        d_kl((1,), (2,), 2)


@given(st.integers(1, 4), st.data())
def test_d_kl_unitriangular(n, data):
    K = data.draw(st.sampled_from(list(partitions_of(data.draw(st.integers(0, 5)), max_len=n))))
    assert d_kl(K, K, n) == 1


def test_top_classes_of_wedge3():
    assert ctop_schur_bundle_roots((1, 1, 1), 4) == SchurExpansion(dict(LAMBDA3_RANK4_TOP))
    oracle = ctop_schur_bundle_roots((1, 1, 1), 5)
    assert len(oracle.coeffs) == 20
    assert ctop_builtin((1, 1, 1), 5) == oracle
    keys = [lam for lam, _ in LAMBDA3_RANK5_TOP_PRINTED]
    assert len(keys) == 21 and len(set(keys)) == 20


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_top_classes_of_sym2_and_wedge2(n):
    assert ctop_schur_bundle_roots((2,), n) == SchurExpansion({rho(n): 2**n})
    assert ctop_schur_bundle_roots((1, 1), n) == SchurExpansion({rho(n - 1): 1})


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_rank2_symmetric_power_top_class(k):
    assert sym_power_rank2_top(k) == ctop_schur_bundle_roots((k,), 2)


def test_chern_schur_bundle_examples():
    assert chern_schur_bundle((1,), 3, 3) == SchurExpansion({(): 1, (1,): 1, (1, 1): 1, (1, 1, 1): 1})
    assert chern_schur_bundle((2,), 2, 3).degree_part(3) == SchurExpansion({(2, 1): 4})


@pytest.mark.parametrize("J,n", [((2,), 2), ((2,), 3), ((1, 1), 3), ((1, 1), 4), ((1, 1, 1), 4), ((3,), 2)])
def test_chern_schur_bundle_matches_roots(J, n):
    degree = 6
    assert chern_schur_bundle(J, n, degree) == total_chern_schur_bundle_roots(J, n, degree)


def test_chern_schur_bundle_unsupported():
    with pytest.raises(DomainError):
        chern_schur_bundle((2, 1), 3, 2)
