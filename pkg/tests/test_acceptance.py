"""Acceptance criteria, one test per criterion.

Each test tags itself with ``record_property("criterion", n)``; the conftest
hook prints a PASS/FAIL line per criterion at the end of the run. Run directly
with ``python3 tests/test_acceptance.py``.
"""

import itertools
import math
import random
import sys
import time
import warnings

import pytest

from gammacalc.complex import (cross_polytope, edge_subdivision, f_polynomial,
                               h_polynomial, is_cross_polytope, is_eulerian, is_flag, is_ghs,
                               join, link, polygon, simplex_boundary, sum_link_f)
from gammacalc.constructions import (cone_decompose, realizable_by_theorem, realize_h4,
                                     target_h4, verify_counterexample)
from gammacalc.coxeter import (bfs_growth_oracle, growth_series, is_crosspolytope_join_simplex,
                               radius_one_check, series_expand)
from gammacalc.polynomial import IntPolynomial as P, derivative, gamma_from_h, h_from_f
from gammacalc.posets import babson_check, cd_index, face_poset, gamma_cd_bridge_check
from gammacalc.realroots import (ToleranceAmbiguity, all_roots_real_negative, count_real_roots,
                                 cubic_real_root_obstruction, deg4_region, Region, SturmChain,
                                 smallest_modulus_root_is_real_negative, squarefree_part)

from conftest import cliques

T = P([0, 1])


def _gamma(X):
    n = X.dim + 1
    return gamma_from_h(h_from_f(f_polynomial(X), n), n)


def _recount_f(X) -> P:
    """Face numbers from the facet list alone, by brute-force subset enumeration."""
    faces = set()
    for facet in X.facets:
        for r in range(len(facet) + 1):
            faces.update(itertools.combinations(facet, r))
    counts = [0] * (X.dim + 2)
    for s in faces:
        counts[len(s)] += 1
    return P(counts)


def test_counterexample_f_vector(record_property):
    record_property("criterion", 1)
    t0 = time.perf_counter()
    r = verify_counterexample(1)
    assert r.f == P([1, 17, 109, 345, 575, 483, 161])
    assert time.perf_counter() - t0 < 1


def test_counterexample_gamma(record_property):
    record_property("criterion", 2)
    assert verify_counterexample(0).gamma == P([1, 4, 4, 1])
    for m in range(9):
        assert verify_counterexample(m).gamma == P([1, 4 + m, 4, 1])


def test_real_root_failure(record_property):
    record_property("criterion", 3)
    r1 = verify_counterexample(1)
    assert count_real_roots(r1.h) == 2 < squarefree_part(r1.h).degree == 6
    assert not r1.real_rooted
    r2 = verify_counterexample(2)
    g = r2.gamma
    assert not cubic_real_root_obstruction(g[1], g[2], g[3])  # 16 < 3 * 6
    assert count_real_roots(r2.h) < squarefree_part(r2.h).degree
    assert not r2.real_rooted


def test_gamma_nonnegativity_retained(record_property):
    record_property("criterion", 4)
    for m in range(9):
        assert verify_counterexample(m).gamma_nonneg


def test_polygon_formulas(record_property):
    record_property("criterion", 5)
    for m in range(3, 51):
        X = polygon(m)
        assert f_polynomial(X) == P([1, m, m])
        assert h_polynomial(X) == P([1, m - 2, 1])
        assert _gamma(X) == P([1, m - 4])


def test_dehn_sommerville(record_property, eulerian_corpus):
    record_property("criterion", 6)
    assert len(eulerian_corpus) >= 100
    for _, X in eulerian_corpus:
        n = X.dim + 1
        f = f_polynomial(X)
        assert f.compose(P([-1, 1])) == (-1) ** n * f.compose(P([0, -1]))


def test_subdivision_identity(record_property, eulerian_corpus):
    record_property("criterion", 7)
    rng = random.Random(7)
    pool = [X for _, X in eulerian_corpus if X.edges and len(X.facets) <= 400]
    done = 0
    while done < 60:
        X = rng.choice(pool)
        eta = rng.choice(X.edges)
        Y = edge_subdivision(X, eta)
        n = X.dim + 1
        h_sub = h_from_f(_recount_f(Y), n)
        h = h_from_f(_recount_f(X), n)
        h_lk = h_from_f(_recount_f(link(X, eta)), n - 2)
        assert h_sub == h + T * h_lk
        done += 1


def test_join_multiplicativity(record_property, eulerian_corpus):
    record_property("criterion", 8)
    rng = random.Random(8)
    members = [X for _, X in eulerian_corpus]
    done = 0
    while done < 60:
        X, Y = rng.choice(members), rng.choice(members)
        if len(X.faces) * len(Y.faces) > 60_000:
            continue
        J = join(X, Y)
        assert f_polynomial(J) == f_polynomial(X) * f_polynomial(Y)
        assert h_polynomial(J) == h_polynomial(X) * h_polynomial(Y)
        assert _gamma(J) == _gamma(X) * _gamma(Y)
        done += 1


def test_link_sum_lemma(record_property, eulerian_corpus):
    record_property("criterion", 9)
    for _, X in eulerian_corpus:
        f = f_polynomial(X)
        dk = f
        for k in range(4):
            assert sum_link_f(X, k) * math.factorial(k) == dk
            dk = derivative(dk)


def test_low_dimension_real_rooted(record_property, flag_ghs_corpus):
    record_property("criterion", 10)
    seen = 0
    for _, X in flag_ghs_corpus:
        if X.dim <= 4:
            assert is_flag(X) and is_ghs(X)
            assert all_roots_real_negative(h_polynomial(X))
            seen += 1
    assert seen >= 50


def test_gamma1_bound(record_property, flag_ghs_corpus):
    record_property("criterion", 11)
    for _, X in flag_ghs_corpus:
        n = X.dim + 1
        g1 = _gamma(X)[1]
        assert g1 == len(X.vertices) - 2 * n >= 0
        assert (g1 == 0) == is_cross_polytope(X, n)


def test_degree4_geography(record_property):
    record_property("criterion", 12)
    grid = [(h1, h2) for h1 in range(4, 31) for h2 in range(0, 251)]
    t0 = time.perf_counter()
    tags = {pt: deg4_region(*pt) for pt in grid}
    for pt, r in tags.items():
        sturm = SturmChain.of(target_h4(*pt))
        negative = sturm.count(hi=0)
        assert (r.tag is Region.ALL_REAL_NEGATIVE) == (negative == sturm.degree)
        if r.tag is Region.COMPLEX_QUADRUPLE:
            assert sturm.count() == 0
        elif r.tag is Region.MIXED_REAL_PAIR:
            assert negative == 2
    assert time.perf_counter() - t0 < 10
    assert tags[(4, 6)].cd == 0 and tags[(4, 6)].sr == 0


def test_realization_theorem(record_property):
    record_property("criterion", 13)
    points = [(h1, h2) for h1 in range(4, 13) for h2 in range(0, 40)
              if realizable_by_theorem(h1, h2)]
    assert len(points) >= 30
    for h1, h2 in points:
        X = realize_h4(h1, h2)
        assert is_flag(X) and is_eulerian(X)
        assert h_polynomial(X) == target_h4(h1, h2)
    t0 = time.perf_counter()
    for h1, h2 in random.Random(13).sample(points, 10):
        assert is_ghs(realize_h4(h1, h2))
    assert time.perf_counter() - t0 <= 60


def test_non_covered_point(record_property):
    record_property("criterion", 14)
    assert all_roots_real_negative(target_h4(9, 21))
    with pytest.raises(ValueError):
        cone_decompose(9, 21)


def test_cd_index(record_property):
    record_property("criterion", 15)
    for m in range(3, 13):
        phi = cd_index(face_poset(polygon(m)))
        assert phi.terms == {"cc": 1, "d": m - 2}
        assert gamma_cd_bridge_check(face_poset(polygon(m)))
    for n in range(1, 5):
        assert gamma_cd_bridge_check(face_poset(simplex_boundary(n)))
    for n in range(1, 4):
        assert gamma_cd_bridge_check(face_poset(cross_polytope(n)))


def test_babson_identity(record_property, poset_corpus):
    record_property("criterion", 16)
    for _, Q in poset_corpus:
        assert babson_check(Q)


def test_growth_oracle(record_property):
    record_property("criterion", 17)
    t0 = time.perf_counter()
    members = [X for _, X in cliques(5)] + [polygon(m) for m in range(4, 8)]
    for X in members:
        assert series_expand(growth_series(X), 7) == bfs_growth_oracle(X, 7)
    assert time.perf_counter() - t0 < 30


def test_series_positivity(record_property, flag_ghs_corpus):
    record_property("criterion", 18)
    members = [X for _, X in cliques(6)] + [X for _, X in flag_ghs_corpus]
    infinite = 0
    for X in members:
        coeffs = series_expand(growth_series(X), 30)
        finite = len(X.facets) == 1
        if finite:
            assert all(c >= 0 for c in coeffs)
        else:
            assert all(c > 0 for c in coeffs)
            infinite += 1
    assert infinite > 100


def test_radius_one_structure(record_property):
    record_property("criterion", 19)
    t0 = time.perf_counter()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ToleranceAmbiguity)
        for _, X in cliques(6):
            if radius_one_check(X, tol=1e-9):
                assert is_crosspolytope_join_simplex(X)
    assert time.perf_counter() - t0 < 60


def test_smallest_modulus_root(record_property, flag_ghs_corpus):
    record_property("criterion", 20)
    for _, X in flag_ghs_corpus:
        assert smallest_modulus_root_is_real_negative(h_polynomial(X), 1e-9)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
