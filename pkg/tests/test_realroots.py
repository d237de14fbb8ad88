import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gammacalc.polynomial import IntPolynomial as P, gamma_from_h, h_from_gamma
from gammacalc.realroots import (Region, SturmChain, all_roots_real_negative, count_real_roots,
                                 cubic_discriminant, cubic_real_root_obstruction, deg4_region,
                                 is_real_rooted, numeric_roots, real_root_multiplicities,
                                 smallest_modulus_root_is_real_negative, squarefree_decomposition,
                                 squarefree_part)

CE_H = P([1, 11, 39, 59, 39, 11, 1])


def test_squarefree_examples():
    assert squarefree_part(P([1, 1]) ** 2) == P([1, 1])
    assert squarefree_part(P([1, 2])) == P([1, 2])
    p = P([1, 1]) ** 2 * P([1, 3, 1])
    assert squarefree_part(p) == P([1, 1]) * P([1, 3, 1])
    with pytest.raises(ValueError):
        squarefree_part(P())


def test_squarefree_decomposition_multiplicities():
    p = P([1, 1]) ** 3 * P([2, 0, 1]) * P([-1, 1]) ** 2
    dec = squarefree_decomposition(p)
    assert dec[3] == P([1, 1]) and dec[1] == P([2, 0, 1]) and dec[2] == P([-1, 1])
    assert real_root_multiplicities(P([1, 1]) ** 4 * P([-2, 1])) == {4: 1, 1: 1}


def test_sturm_chain_shape():
    ch = SturmChain.of(P([1, 3, 1]) * P([1, 0, 1]))
    assert len(ch.chain[-1]) == 1 and ch.chain[-1][0] != 0


def test_count_real_roots_examples():
    assert count_real_roots(P([1, 3, 1]), float("-inf"), 0) == 2
    assert count_real_roots(P([1, 1]) ** 4) == 1
    assert count_real_roots(CE_H) == 2
    # half-open interval (lo, hi]
    assert count_real_roots(P([-1, 1]), 0, 1) == 1
    assert count_real_roots(P([-1, 1]), 1, 2) == 0


def test_all_roots_real_negative_examples():
    for n in range(1, 7):
        assert all_roots_real_negative(P([1, 1]) ** n)
    assert all_roots_real_negative(P([1, 9, 21, 9, 1]))
    assert not all_roots_real_negative(CE_H)
    assert not all_roots_real_negative(P([-1, 1]))
    assert not is_real_rooted(CE_H)


def test_deg4_region_examples():
    r = deg4_region(4, 6)
    assert r.cd == 0 and r.sr == 0 and r.double_root
    assert r.tag is Region.ALL_REAL_NEGATIVE
    r = deg4_region(9, 21)
    assert (r.cd, r.sr, r.tag) == (5, 5, Region.ALL_REAL_NEGATIVE)
    r = deg4_region(3, 4)
    assert r.tag is Region.UNIT_CIRCLE and r.double_root


def _numeric_profile(h1, h2):
    rs = numeric_roots(P([1, h1, h2, h1, 1]))
    on_circle = sum(abs(abs(z) - 1) < 1e-6 for z in rs)
    real_neg = sum(abs(z.imag) < 1e-6 and z.real < 0 and abs(abs(z) - 1) >= 1e-6 for z in rs)
    real_pos = sum(abs(z.imag) < 1e-6 and z.real > 0 and abs(abs(z) - 1) >= 1e-6 for z in rs)
    return on_circle, real_neg, real_pos


@pytest.mark.parametrize("h1", range(-10, 11, 2))
def test_deg4_tags_match_root_geometry(h1):
    for h2 in range(-15, 35):
        r = deg4_region(h1, h2)
        circ, neg, pos = _numeric_profile(h1, h2)
        if r.tag is Region.COMPLEX_QUADRUPLE:
            assert circ == neg == pos == 0
        elif r.tag is Region.UNIT_CIRCLE:
            assert circ == 4
        elif r.tag is Region.MIXED_REAL_PAIR:
            assert neg == 2
        elif r.tag is Region.BOUNDARY_DOUBLE_ROOT:
            assert r.double_root
        elif r.tag is Region.MIXED_CIRCLE_PAIR:
            assert pos >= 2 or (circ == 2 and neg == 0)


def test_cubic_obstruction_examples():
    assert cubic_real_root_obstruction(4, 4, 1)
    assert cubic_real_root_obstruction(5, 4, 1)
    assert cubic_discriminant(1, 4, 5, 1) == -23
    assert not cubic_real_root_obstruction(6, 4, 1)


def test_cubic_obstruction_is_necessary():
    r = range(-12, 13)
    for g1, g2, g3 in itertools.product(r, r, r):
        if g3 == 0 or cubic_real_root_obstruction(g1, g2, g3):
            continue
        p = P([1, g1, g2, g3])
        assert count_real_roots(p) < 3


def test_numeric_roots_examples():
    rs = numeric_roots(P([1, 0, 1]))
    assert sorted((round(z.imag, 9) for z in rs)) == [-1, 1]
    rs = sorted(z.real for z in numeric_roots(P([1, 3, 1])))
    assert rs[0] == pytest.approx((-3 - 5 ** 0.5) / 2, abs=1e-12)
    assert rs[1] == pytest.approx((-3 + 5 ** 0.5) / 2, abs=1e-12)
    rs = numeric_roots(CE_H)
    assert sum(abs(z.imag) < 1e-9 for z in rs) == 2
    with pytest.raises(ValueError):
        numeric_roots(P([3]))


def test_numeric_roots_with_multiplicity():
    rs = numeric_roots(P([1, 1]) ** 5 * P([1, 3, 1]))
    assert len(rs) == 7
    assert sum(abs(z + 1) < 1e-12 for z in rs) == 5


def test_smallest_modulus_examples():
    assert smallest_modulus_root_is_real_negative(P([1, 1]) ** 4)
    assert smallest_modulus_root_is_real_negative(CE_H)
    for m in range(4, 12):
        assert smallest_modulus_root_is_real_negative(P([1, m - 2, 1]))
    # the (non-flag) triangle: 1 + t + t^2 has only complex roots
    assert not smallest_modulus_root_is_real_negative(P([1, 1, 1]))
    # smallest roots form a complex pair
    assert not smallest_modulus_root_is_real_negative(P([4, 0, 1]) * P([3, 1]))


def _grid_sign_changes(p: P, steps: int = 1200) -> tuple[int, Fraction]:
    """Brute force: sign changes of the squarefree part on an exact grid over
    the Cauchy bound. Returns the count and the grid spacing; the count is a
    lower bound that is exact once real roots are further apart than it."""
    sf = squarefree_part(p)
    d = sf.degree
    bound = 1 + max(abs(Fraction(c, sf.leading)) for c in sf.coeffs[:-1])
    B = -(-bound.numerator // bound.denominator)
    # grid points x = k / q with integer k; evaluate q^d p(k/q) exactly
    q = max(1, steps // (2 * B))
    count, prev = 0, None
    for k in range(-B * q, B * q + 1):
        v = sum(c * k ** i * q ** (d - i) for i, c in enumerate(sf.coeffs))
        if v == 0:
            count += 1
            prev = None
            continue
        if prev is not None and (prev > 0) != (v > 0):
            count += 1
        prev = v
    return count, Fraction(1, q)


def test_sturm_matches_brute_force_on_random_polys():
    rng = random.Random(7)
    checked = exact = 0
    while checked < 1000:
        deg = rng.randint(1, 8)
        p = P([rng.randint(-9, 9) for _ in range(deg + 1)])
        if p.degree < 1:
            continue
        checked += 1
        sturm = count_real_roots(p)
        grid, step = _grid_sign_changes(p)
        assert grid <= sturm
        reals = sorted({round(z.real, 9) for z in numeric_roots(p) if abs(z.imag) < 1e-7})
        assert sturm == len(reals)
        if all(b - a > 2 * step for a, b in zip(reals, reals[1:])):
            assert grid == sturm
            exact += 1
    assert exact > 900


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=4), st.integers(0, 1))
def test_gamma_equivalence(gs, parity):
    g = P([1] + gs)
    n = 2 * g.degree + parity
    h = h_from_gamma(g, n)
    assert gamma_from_h(h, n) == g
    assert all_roots_real_negative(h) == all_roots_real_negative(g)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=2, max_size=9))
def test_vieta_sum_and_product(cs):
    p = P(cs)
    if p.degree < 1 or p[0] == 0:
        return
    rs = numeric_roots(p)
    lead = p.leading
    s = sum(rs)
    prod = 1
    for z in rs:
        prod *= z
    scale = 1 + sum(abs(z) for z in rs)
    assert abs(s + p[p.degree - 1] / lead) <= 1e-8 * scale
    assert abs(prod - (-1) ** p.degree * p[0] / lead) <= 1e-8 * max(1, abs(prod))
