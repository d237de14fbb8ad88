import warnings

import pytest
from hypothesis import given, settings, strategies as st

from gammacalc.complex import (Graph, SimplicialComplex, clique_complex, cross_polytope,
                               f_polynomial, join, polygon, simplex, simplex_boundary)
from gammacalc.coxeter import (GrowthSeries, RacgPresentation, bfs_growth_oracle, growth_series,
                               is_crosspolytope_join_simplex, radius_one_check, series_expand)
from gammacalc.polynomial import IntPolynomial as P, RationalFunction
from gammacalc.realroots import ToleranceAmbiguity

from conftest import cliques

S0 = cross_polytope(1)
O2 = cross_polytope(2)


def two_edges():
    return clique_complex(Graph.from_edges("abcd", [("a", "b"), ("c", "d")]))


def test_presentation():
    R = RacgPresentation.from_complex(polygon(4))
    assert len(R.generators) == 4 and len(R.commuting_pairs) == 4
    masks = R.commute_masks()
    assert all(bin(m).count("1") == 2 for m in masks)


def test_growth_series_examples():
    W = growth_series(S0)
    assert W.rat.num == P([1, 1]) and W.rat.den == P([1, -1])
    W = growth_series(O2)
    assert W.rat.num == P([1, 1]) ** 2 and W.rat.den == P([1, -1]) ** 2
    for n in (1, 2, 4):
        W = growth_series(simplex(n - 1))
        assert W.rat.num == P([1, 1]) ** n and W.rat.den == P([1])


def test_growth_series_rejects_non_flag():
    with pytest.raises(ValueError):
        growth_series(simplex_boundary(2))
    with pytest.raises(ValueError):
        bfs_growth_oracle(simplex_boundary(2), 3)


def test_series_expand_examples():
    assert series_expand(growth_series(S0), 5) == [1, 2, 2, 2, 2, 2]
    assert series_expand(growth_series(O2), 4) == [1, 4, 8, 12, 16]
    assert series_expand(GrowthSeries(RationalFunction(P([1, 1]) ** 3, P([1]))), 5) == [1, 3, 3, 1, 0, 0]
    W = growth_series(polygon(5))
    long = series_expand(W, 10)
    assert series_expand(W, 4) == long[:5]


def test_bfs_examples():
    assert bfs_growth_oracle(S0, 4) == [1, 2, 2, 2, 2]
    assert bfs_growth_oracle(O2, 3) == [1, 4, 8, 12]
    assert bfs_growth_oracle(simplex(2), 4) == [1, 3, 3, 1, 0]


def test_cross_join_simplex_examples():
    for n in range(1, 5):
        assert is_crosspolytope_join_simplex(cross_polytope(n))
    assert is_crosspolytope_join_simplex(simplex(3))
    assert is_crosspolytope_join_simplex(join(cross_polytope(2), simplex(1)))
    assert not is_crosspolytope_join_simplex(polygon(5))
    assert not is_crosspolytope_join_simplex(two_edges())


def test_radius_one_examples():
    assert radius_one_check(simplex(3))
    assert radius_one_check(S0)
    assert radius_one_check(O2)
    assert not radius_one_check(two_edges())
    assert not radius_one_check(polygon(5))


def test_join_is_product():
    for X, Y in [(S0, polygon(5)), (O2, simplex(1)), (polygon(4), polygon(6))]:
        W = growth_series(join(X, Y)).rat
        U, V = growth_series(X).rat, growth_series(Y).rat
        assert W == RationalFunction(U.num * V.num, U.den * V.den)


def _inverse_matches_f(X: SimplicialComplex) -> bool:
    # f(-t/(1+t)) = sum f_i (-t)^i / (1+t)^i; clear by (1+t)^(d+1)
    f = f_polynomial(X)
    n = X.dim + 1
    cleared = P()
    for i, c in enumerate(f.coeffs):
        cleared = cleared + c * P.monomial(i, (-1) ** i) * P([1, 1]) ** (n - i)
    inv = RationalFunction(cleared, P([1, 1]) ** n)
    W = growth_series(X).rat
    return inv == RationalFunction(W.den, W.num)


clique_members = st.sampled_from(cliques(5))


@settings(max_examples=60, deadline=None)
@given(clique_members)
def test_reciprocal_identity(named):
    assert _inverse_matches_f(named[1])


@settings(max_examples=40, deadline=None)
@given(clique_members)
def test_series_matches_oracle(named):
    X = named[1]
    assert series_expand(growth_series(X), 6) == bfs_growth_oracle(X, 6)


@settings(max_examples=40, deadline=None)
@given(clique_members)
def test_radius_one_implies_structure(named):
    X = named[1]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ToleranceAmbiguity)
        if radius_one_check(X):
            assert is_crosspolytope_join_simplex(X)
