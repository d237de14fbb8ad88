"""Explicit builds: the flag S^5 counterexample, degree-4 realizations, region grids."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Optional

from .complex import (SimplicialComplex, cross_polytope, cross_shape, edge_subdivision,
                      f_polynomial, find_edges_with_link, is_eulerian, is_flag,
                      is_ghs, is_polygon, join, link, polygon, polygon_shape, subdivide_times)
from .polynomial import IntPolynomial, gamma_from_h, h_from_f
from .realroots import (count_real_roots, cubic_discriminant, cubic_real_root_obstruction,
                        deg4_region, is_real_rooted, squarefree_part)


class ConstructionError(RuntimeError):
    pass


class OutsideConesError(ValueError):
    pass


# ---------------------------------------------------------------------------
# The S^5 counterexample
# ---------------------------------------------------------------------------

def _first_edge(X: SimplicialComplex, predicate, what: str) -> tuple[str, str]:
    edges = find_edges_with_link(X, predicate)
    if not edges:
        raise ConstructionError(f"no edge with {what} link")
    return edges[0]


def paper_counterexample_base() -> tuple[SimplicialComplex, tuple[str, str]]:
    """The 5-sphere X (join of a subdivided pentagon-join with a pentagon) and an
    edge of X whose link is the 4-dimensional cross-polytope."""
    x1 = join(polygon(5), polygon(5))
    eta = _first_edge(x1, polygon_shape(4), "quadrilateral")
    x2 = edge_subdivision(x1, eta)
    x = join(x2, polygon(5))
    return x, _first_edge(x, cross_shape(4), "cross-polytope")


def paper_counterexample(m: int) -> SimplicialComplex:
    """X subdivided m times along an edge with cross-polytope link.

    After the first subdivision of ``{s, t}`` with new vertex ``e`` the edge
    ``{s, e}`` has the same link, so the iteration follows it.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    x, eta = paper_counterexample_base()
    out, _ = subdivide_times(x, eta, m)
    return out


@dataclass(frozen=True)
class CounterexampleReport:
    complex: SimplicialComplex
    m: int
    f: IntPolynomial
    h: IntPolynomial
    gamma: IntPolynomial
    flag: bool
    eulerian: bool
    ghs: Optional[bool]
    real_rooted: bool
    gamma_nonneg: bool
    distinct_real_roots: int
    squarefree_degree: int
    cubic_obstruction_holds: bool
    gamma_discriminant: int

    def expected_gamma(self) -> IntPolynomial:
        return IntPolynomial([1, 4 + self.m, 4, 1])

    def contracts(self) -> dict[str, bool]:
        return {
            "gamma_formula": self.gamma == self.expected_gamma(),
            "gamma_nonneg": self.gamma_nonneg,
            "flag": self.flag,
            "eulerian": self.eulerian,
            "ghs": self.ghs is not False,
            "real_rooted_iff_m0": self.real_rooted == (self.m == 0),
        }

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "vertices": len(self.complex.vertices),
            "facets": len(self.complex.facets),
            "f": self.f.to_json(),
            "h": self.h.to_json(),
            "gamma": self.gamma.to_json(),
            "flag": self.flag,
            "eulerian": self.eulerian,
            "ghs": self.ghs,
            "real_rooted": self.real_rooted,
            "gamma_nonneg": self.gamma_nonneg,
            "distinct_real_roots": self.distinct_real_roots,
            "squarefree_degree": self.squarefree_degree,
            "cubic_obstruction_holds": self.cubic_obstruction_holds,
            "gamma_discriminant": self.gamma_discriminant,
            "contracts": self.contracts(),
        }


def verify_counterexample(m: int, with_ghs: bool = False) -> CounterexampleReport:
    """Recompute every invariant of :func:`paper_counterexample` from its faces."""
    X = paper_counterexample(m)
    n = X.dim + 1
    f = f_polynomial(X)
    h = h_from_f(f, n)
    eulerian = is_eulerian(X)
    gamma = gamma_from_h(h, n)
    g = [gamma[i] for i in range(4)]
    return CounterexampleReport(
        complex=X, m=m, f=f, h=h, gamma=gamma,
        flag=is_flag(X),
        eulerian=eulerian,
        ghs=is_ghs(X) if with_ghs else None,
        real_rooted=is_real_rooted(h),
        gamma_nonneg=all(c >= 0 for c in gamma.coeffs),
        distinct_real_roots=count_real_roots(h),
        squarefree_degree=squarefree_part(h).degree,
        cubic_obstruction_holds=cubic_real_root_obstruction(g[1], g[2], g[3]),
        gamma_discriminant=cubic_discriminant(g[3], g[2], g[1], g[0]),
    )


def higher_dim_counterexample(m: int, extra: SimplicialComplex) -> SimplicialComplex:
    """Join the m-fold counterexample with a flag Eulerian complex whose
    h-polynomial is real-rooted; the product h keeps the non-real roots."""
    if not is_flag(extra):
        raise ValueError("extra complex must be flag")
    if not extra.is_pure() or not is_eulerian(extra):
        raise ValueError("extra complex must be Eulerian")
    if not is_real_rooted(h_from_f(f_polynomial(extra), extra.dim + 1)):
        raise ValueError("extra complex must have a real-rooted h-polynomial")
    return join(paper_counterexample(m), extra)


# ---------------------------------------------------------------------------
# Degree-4 realization via cones
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConeCoordinates:
    """``(h1 - 1, h2 - 2) = (2k-1, k^2-k+2) + a (1, k-1) + b (1, k)``."""

    k: int
    a: int
    b: int

    def point(self) -> tuple[int, int]:
        k, a, b = self.k, self.a, self.b
        return (2 * k - 1 + a + b + 1, k * k - k + 2 + a * (k - 1) + b * k + 2)


def _alpha(k: int, x: int, y: int) -> int:
    return y - 2 - k * (x - k)


def cone_decompose(h1: int, h2: int) -> ConeCoordinates:
    """Cone coordinates of ``(h1, h2)``.

    Membership is decided for the shifted point ``(x, y) = (h1 - 1, h2 - 2)``,
    i.e. for the h-polynomial with the quadrilateral-link subdivision removed:
    it must satisfy ``6 <= 2x - 2 <= y <= x^2/4 + 2``. The smallest ``k`` with
    ``alpha_{k-1} >= 0 >= alpha_k`` is used (for k = 2 only the ray
    ``alpha_2 = 0``).
    """
    x, y = h1 - 1, h2 - 2
    if not (6 <= 2 * x - 2 <= y and 4 * y <= x * x + 8):
        raise OutsideConesError(f"({h1}, {h2}) lies outside the realizable cones")
    k = 2
    while True:
        if k == 2:
            ok = _alpha(2, x, y) == 0
        else:
            ok = _alpha(k - 1, x, y) >= 0 >= _alpha(k, x, y)
        if ok:
            break
        k += 1
        if k > x + 2:  # pragma: no cover - excluded by the region test
            raise OutsideConesError(f"no cone contains ({h1}, {h2})")
    b = h2 - (k - 1) * h1 + k * k - k - 4
    a = h1 - 2 * k - b
    if a < 0 or b < 0:  # pragma: no cover - cones are unimodular
        raise ConstructionError(f"negative cone coordinates for ({h1}, {h2})")
    return ConeCoordinates(k, a, b)


def target_h4(h1: int, h2: int) -> IntPolynomial:
    return IntPolynomial([1, h1, h2, h1, 1])


def realize_h4(h1: int, h2: int, check_ghs: bool = False) -> SimplicialComplex:
    """Flag 3-sphere with h-polynomial ``1 + h1 t + h2 t^2 + h1 t^3 + t^4``,
    for points accepted by :func:`cone_decompose` and for ``(4, 6)``.

    Start from the join of P = (k+1)-gon and Q = (k+2)-gon and subdivide a
    cross edge {x, w} (quadrilateral link). Afterwards the edge {w, q} (q a
    neighbour of w in Q) has a (k+1)-gon link and {x, p} (p a neighbour of x
    in P) a (k+2)-gon link; no face contains both, so iterating a
    subdivisions on the first and b on the second adds exactly
    a (1, k-1) + b (1, k) to (h1, h2). The links (k+1, k+2) differ from the
    k-gon and (k+1)-gon one might expect; the increments decide.
    """
    if (h1, h2) == (4, 6):
        # vertex of the C_2 ray, excluded by cone_decompose; the recipe would
        # leave the triangle factor unbroken, and O^4 already has h = (1+t)^4
        X = cross_polytope(4)
    else:
        cc = cone_decompose(h1, h2)
        k, a, b = cc.k, cc.a, cc.b
        P, Q = polygon(k + 1), polygon(k + 2)
        X = join(P, Q)
        x, w = "L:v0", "R:v0"
        X = edge_subdivision(X, (x, w))
        a_edge = (w, "R:v1")
        # for k = 2 the triangle {v1, v2, e} is a missing face and must be cut;
        # a = 0 on the C_2 ray, so no a-edge shares a facet with {v1, v2}
        b_edge = ("L:v1", "L:v2") if k == 2 else (x, "L:v1")
        if not is_polygon(link(X, a_edge), k + 1) or not is_polygon(link(X, b_edge), k + 2):
            raise ConstructionError("unexpected links after the cross subdivision")
        X, _ = subdivide_times(X, a_edge, a)
        X, _ = subdivide_times(X, b_edge, b)
    h = h_from_f(f_polynomial(X), X.dim + 1)
    if h != target_h4(h1, h2):
        raise ConstructionError(f"built h = {h}, wanted {target_h4(h1, h2)}")
    if not is_flag(X):
        raise ConstructionError("realization is not flag")
    if not is_eulerian(X):
        raise ConstructionError("realization is not Eulerian")
    if check_ghs and not is_ghs(X):
        raise ConstructionError("realization is not a homology sphere")
    return X


def realizable_by_theorem(h1: int, h2: int) -> bool:
    try:
        cone_decompose(h1, h2)
    except OutsideConesError:
        return False
    return True


def region_grid(h1_max: int, h2_max: int, h1_min: int = 4, h2_min: int = 0) -> list[dict]:
    if h1_max < 4 or h2_max < 4:
        raise ValueError("bounds must be at least 4")
    rows = []
    for h1 in range(h1_min, h1_max + 1):
        for h2 in range(h2_min, h2_max + 1):
            rc = deg4_region(h1, h2)
            rows.append({"h1": h1, "h2": h2, "cd": rc.cd, "sr": rc.sr, "class": rc.tag.value,
                         "realizable": realizable_by_theorem(h1, h2)})
    return rows


def region_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=["h1", "h2", "cd", "sr", "class", "realizable"],
                       lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({**r, "realizable": str(r["realizable"]).lower()})
    return buf.getvalue()
