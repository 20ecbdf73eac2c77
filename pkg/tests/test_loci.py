from fractions import Fraction
from math import comb, factorial

import pytest

from schubcalc.combinatorics import hook_product, rectangle, rho
from schubcalc.errors import DomainError
from schubcalc.loci import (
    bn_euler,
    bn_phi,
    bn_rho,
    castelnuovo,
    csm_combination,
    csm_P,
    flag_determinantal_class,
    gtp_chern_form,
    gtp_class,
    harris_class,
    ideal_generators,
    kempf_laksov_class,
    prym_coefficient,
    section_euler_factor,
)
from schubcalc.polyring import TruncatedSeries, ring_ab, series_inverse
from schubcalc.schurlib import chern_ring, chern_to_roots, qtilde

SMALL = [(m, n, r) for m in range(1, 4) for n in range(1, 4) for r in range(min(m, n) + 1)]


def chern_quotient(k, ring, a, a_rank, b, b_rank):
    """c_k(A - B) read off c(A) * c(B)^{-1} as a truncated series."""
    ca = ring.one()
    for i in range(1, a_rank + 1):
        ca = ca + ring.gen(f"{a}{i}")
    cb = ring.one()
    for i in range(1, b_rank + 1):
        cb = cb + ring.gen(f"{b}{i}")
    q = (TruncatedSeries(ca, k) * series_inverse(TruncatedSeries(cb, k))).poly
    return q.homogeneous_part(k)


def euler_oracle(m, n, bound):
    """c(Hom)^{-1} c_top(Hom) in roots, with Hom roots a_i - b_j."""
    ring = ring_ab(n, m)
    roots = [ring.gen(f"a{i}") - ring.gen(f"b{j}") for i in range(1, n + 1) for j in range(1, m + 1)]
    top, total = ring.one(), TruncatedSeries(ring.one(), bound)
    for x in roots:
        top = top * x
        total = total * series_inverse(TruncatedSeries(ring.one() + x, bound))
    return (total * TruncatedSeries(top, bound)).poly


# -- Porteous type classes -------------------------------------------------------


def test_gtp_examples():
    ring = chern_ring(1, 1)
    assert gtp_class(1, 1, 0).poly == ring.gen("c1") - ring.gen("cp1")
    assert gtp_class(3, 2, 2).poly == chern_ring(2, 3).one()
    assert gtp_class(2, 2, 1).poly == gtp_chern_form(2, 2, 1).poly


@pytest.mark.parametrize("m,n,r", SMALL)
def test_gtp_segre_and_chern_forms_agree(m, n, r):
    cls = gtp_class(m, n, r)
    assert cls.poly == gtp_chern_form(m, n, r).poly
    assert cls.poly.is_homogeneous() and cls.degree() == (m - r) * (n - r)


@pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2)])
def test_gtp_r0_is_resultant(m, n):
    # s_{m^n}(E - F) over roots is prod (a_i - b_j)
    ring = ring_ab(n, m)
    expected = ring.one()
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            expected = expected * (ring.gen(f"a{i}") - ring.gen(f"b{j}"))
    assert chern_to_roots(gtp_class(m, n, 0).poly, n, m) == expected


def test_gtp_rejects_rank_out_of_range():
    with pytest.raises(DomainError):
        gtp_class(2, 2, 3)
    with pytest.raises(DomainError):
        gtp_class(2, 2, -1)


def test_kempf_laksov_small():
    cls = kempf_laksov_class(3, (2,))
    assert cls.poly == chern_quotient(2, cls.poly.ring, "c", 3, "cB1_", 2)
    cls = kempf_laksov_class(2, (1, 2))
    ring = cls.poly.ring
    e = lambda k, i, mi: chern_quotient(k, ring, "c", 2, f"cB{i}_", mi)
    expected = e(2, 1, 1) * e(2, 2, 2) - e(3, 1, 1) * e(1, 2, 2)
    assert cls.poly == expected
    with pytest.raises(DomainError):
        kempf_laksov_class(2, (2, 1))


def test_flag_determinantal_small():
    cls = flag_determinantal_class((2, 1), (1, 2))
    ring = cls.poly.ring
    e = lambda k, i, ni, mi: chern_quotient(k, ring, f"cA{i}_", ni, f"cB{i}_", mi)
    expected = e(2, 1, 2, 1) * e(1, 2, 1, 2) - e(3, 1, 2, 1) * e(0, 2, 1, 2)
    assert cls.poly == expected
    assert cls.degree() == sum(n - m + i for i, (n, m) in enumerate(zip((2, 1), (1, 2)), 1))
    with pytest.raises(DomainError):
        flag_determinantal_class((1, 3), (1, 2))
    with pytest.raises(DomainError):
        flag_determinantal_class((2,), (0,))


@pytest.mark.parametrize("n,m_list", [(2, (1,)), (3, (1, 2)), (3, (1, 3)), (4, (2, 3, 4))])
def test_flag_with_equal_sources_is_kempf_laksov(n, m_list):
    flag = flag_determinantal_class((n,) * len(m_list), m_list).poly
    kl = kempf_laksov_class(n, m_list).poly
    values = {f"cA{i}_{j}": kl.ring.gen(f"c{j}") for i in range(1, len(m_list) + 1) for j in range(1, n + 1)}
    values.update({f"cB{i}_{j}": kl.ring.gen(f"cB{i}_{j}") for i, mi in enumerate(m_list, 1) for j in range(1, mi + 1)})
    assert flag.subs(values, kl.ring) == kl


@pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)])
def test_single_flag_matches_chern_form(m, n):
    if n - m + 1 <= 0:
        pytest.skip("empty chain")
    flag = flag_determinantal_class((n,), (m,)).poly
    gtp = gtp_chern_form(m, n, m - 1).poly
    values = {f"cA1_{j}": gtp.ring.gen(f"c{j}") for j in range(1, n + 1)}
    values.update({f"cB1_{j}": gtp.ring.gen(f"cp{j}") for j in range(1, m + 1)})
    assert flag.subs(values, gtp.ring) == gtp


def test_harris_examples():
    assert harris_class(0).poly == chern_ring(0, 0).one()
    ring = chern_ring(1, 1)
    assert harris_class(1).poly == ring.gen("c1") + ring.gen("cp1")
    ring = chern_ring(2, 2)
    c1, c2, d1, d2 = ring.gens(["c1", "c2", "cp1", "cp2"])
    assert harris_class(2).poly == c1 * c2 + c2 * d1 + c1 * d2 + d1 * d2


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_harris_specializes_to_staircase(k):
    cls = harris_class(k)
    assert cls.degree() == k * (k + 1) // 2
    ring = cls.poly.ring
    zero_f = {f"cp{i}": ring.zero() for i in range(1, k + 1)}
    cvars = [f"c{i}" for i in range(1, k + 1)]
    assert cls.poly.subs(zero_f, ring) == qtilde(rho(k), ring=ring, variables=cvars)


# -- Euler characteristics -------------------------------------------------------


@pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1), (2, 3), (3, 2)])
def test_csm_P0_matches_root_expansion(m, n):
    bound = m * n + 3
    assert chern_to_roots(csm_P(0, m, n, bound), n, m) == euler_oracle(m, n, bound)


@pytest.mark.parametrize("m,n,k", [(m, n, k) for m, n, k in SMALL if k < min(m, n)])
def test_csm_P_leading_term_is_rectangle(m, n, k):
    base = (m - k) * (n - k)
    P = csm_P(k, m, n, base + 2)
    assert P.homogeneous_part(base) == gtp_class(m, n, k).poly
    assert all(P.homogeneous_part(d).is_zero() for d in range(base))
    assert csm_P(k, m, n, base) == gtp_class(m, n, k).poly


def test_csm_P_one_by_one():
    # m = n = 1, k = 0: (c1 - cp1)/(1 + c1 - cp1) through degree 2
    ring = chern_ring(1, 1)
    x = ring.gen("c1") - ring.gen("cp1")
    assert csm_P(0, 1, 1, 2) == x - x * x
    assert csm_P(1, 1, 1, 0) == ring.one()


def test_csm_combination():
    assert csm_combination(0, 2, 3, 6) == csm_P(0, 2, 3, 6)
    # k = 1 coefficient is C(min(m,n) - r, 1) = 1 here
    assert csm_combination(1, 2, 3, 6) == csm_P(1, 2, 3, 6) - csm_P(0, 2, 3, 6)
    assert csm_combination(1, 3, 3, 6) == csm_P(1, 3, 3, 6) - csm_P(0, 3, 3, 6) * 2
    assert csm_combination(2, 2, 2, 0) == csm_P(2, 2, 2, 0).truncate(0)


def test_bn_phi_values():
    assert bn_phi(4, 3, 1) == 2
    assert bn_phi(4, 3, 2) == 0
    assert bn_phi(0, 0, 0) == 1
    assert bn_rho(1, 1, 0) == 1


@pytest.mark.parametrize("g,d,r", [(4, 3, 1), (6, 4, 1), (9, 8, 2), (8, 5, 1), (12, 10, 2), (3, 4, 2), (5, 8, 4)])
def test_bn_phi_at_rho_zero_is_castelnuovo(g, d, r):
    assert bn_rho(g, d, r) == 0
    expected = factorial(g) // hook_product(rectangle(r + 1, g - d + r))
    assert bn_phi(g, d, r) == castelnuovo(g, d, r) == expected
    assert bn_euler(g, d, r) == expected


@pytest.mark.parametrize("g", range(1, 7))
def test_bn_euler_of_curve(g):
    # W^0_1 is the curve itself
    assert bn_euler(g, 1, 0) == 2 - 2 * g


@pytest.mark.parametrize("g,d", [(g, d) for g in range(2, 10) for d in range(1, g) if 2 * d < g + 2])
def test_bn_euler_of_symmetric_product(g, d):
    # W^1_d is empty here, so W^0_d is the symmetric product C_d
    assert bn_euler(g, d, 0) == (-1) ** d * comb(2 * g - 2, d)


def test_bn_euler_sign():
    # g and d of different parity, g and r of different parity: positive
    for g, d, r in [(4, 3, 1), (6, 5, 1), (7, 6, 2)]:
        if bn_rho(g, d, r) >= 0 and (g - d) % 2 and (g - r) % 2:
            assert bn_euler(g, d, r) > 0


def test_bn_euler_requires_nonnegative_rho():
    with pytest.raises(DomainError):
        bn_euler(4, 2, 1)


def test_prym_coefficient():
    assert prym_coefficient(0) == 1
    assert prym_coefficient(1) == 1
    assert prym_coefficient(2) == Fraction(1, 3)
    assert prym_coefficient(3) == Fraction(8 * 2, 6 * 120)


def test_ideal_generators():
    assert ideal_generators("general", 1, 1, 0) == [(1,)]
    assert sorted(ideal_generators("general", 2, 2, 1)) == [(1,), (2,)]
    assert sorted(ideal_generators("symmetric", 0, 3, 1)) == [(2, 1), (3, 1), (3, 2)]
    for kind, m, n, r in [("general", 4, 5, 2), ("symmetric", 0, 5, 3), ("antisymmetric", 0, 6, 2)]:
        gens = ideal_generators(kind, m, n, r)
        assert len(set(gens)) == len(gens) == comb(n, r)
    with pytest.raises(DomainError):
        ideal_generators("antisymmetric", 0, 4, 1)


def test_section_euler_factor():
    assert section_euler_factor(0, 3) == chern_ring(0).one()
    ring = chern_ring(1)
    c1 = ring.gen("c1")
    assert section_euler_factor(1, 3) == c1 - c1**2 + c1**3
    ring = chern_ring(2)
    assert section_euler_factor(2, 2) == ring.gen("c2")
