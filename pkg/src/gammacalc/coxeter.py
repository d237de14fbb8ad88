"""Growth series of right-angled Coxeter groups attached to flag complexes."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .complex import SimplicialComplex, _popcount, is_flag
from .polynomial import IntPolynomial, ONE_PLUS_T, RationalFunction
from .realroots import ToleranceAmbiguity, count_real_roots, numeric_roots

BFS_CAP = 2_000_000


@dataclass(frozen=True)
class RacgPresentation:
    """Involutive generators; a pair commutes iff it spans an edge."""

    generators: tuple[str, ...]
    commuting_pairs: frozenset[tuple[str, str]]

    @classmethod
    def from_complex(cls, X: SimplicialComplex) -> "RacgPresentation":
        return cls(X.vertices, frozenset(X.edges))

    def commute_masks(self) -> list[int]:
        idx = {g: i for i, g in enumerate(self.generators)}
        out = [0] * len(self.generators)
        for a, b in self.commuting_pairs:
            out[idx[a]] |= 1 << idx[b]
            out[idx[b]] |= 1 << idx[a]
        return out


@dataclass
class GrowthSeries:
    rat: RationalFunction
    expansion_cache: list[int] = field(default_factory=list)


def _require_flag(X: SimplicialComplex):
    if not is_flag(X):
        raise ValueError("growth series needs a flag complex")


def growth_series(X: SimplicialComplex) -> GrowthSeries:
    """``W(t) = (1+t)^(d+1) / sum_sigma (-t)^#sigma (1+t)^(d+1-#sigma)``, reduced."""
    _require_flag(X)
    n = X.dim + 1
    g = IntPolynomial()
    for m in X.faces:
        k = _popcount(m)
        g = g + IntPolynomial.monomial(k, (-1) ** k) * ONE_PLUS_T ** (n - k)
    return GrowthSeries(RationalFunction(ONE_PLUS_T ** n, g))


def series_expand(W: GrowthSeries, N: int) -> list[int]:
    """First N+1 Taylor coefficients via the denominator recurrence."""
    num, den = W.rat.num, W.rat.den
    if den[0] == 0:
        raise ValueError("denominator vanishes at 0")
    if len(W.expansion_cache) > N:
        return W.expansion_cache[:N + 1]
    d0 = Fraction(den[0])
    coeffs: list[Fraction] = []
    for k in range(N + 1):
        acc = Fraction(num[k])
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * coeffs[k - j]
        coeffs.append(acc / d0)
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("non-integral growth coefficient")
    W.expansion_cache[:] = [int(c) for c in coeffs]
    return list(W.expansion_cache)


# ---------------------------------------------------------------------------
# Independent oracle: breadth-first enumeration of normal forms
# ---------------------------------------------------------------------------

def _canonical(word: tuple[int, ...], comm: list[int]) -> tuple[int, ...]:
    """Lexicographically least word in the commutation class of a reduced word.

    A letter may be pulled to the front iff it commutes with every letter
    before it; greedily take the smallest such letter.
    """
    rest = list(word)
    out = []
    while rest:
        best = None
        prefix = 0
        for i, g in enumerate(rest):
            if prefix & ~comm[g] == 0:
                if best is None or g < rest[best]:
                    best = i
            prefix |= 1 << g
        out.append(rest.pop(best))
    return tuple(out)


def _times_generator(word: tuple[int, ...], s: int, comm: list[int]) -> tuple[int, ...]:
    """Right multiplication by s, cancelling s against the last occurrence that
    can be shuffled to the end."""
    for i in range(len(word) - 1, -1, -1):
        g = word[i]
        if g == s:
            return word[:i] + word[i + 1:]
        if not comm[s] >> g & 1:
            break
    return word + (s,)


def bfs_growth_oracle(X: SimplicialComplex, N: int) -> list[int]:
    """Count group elements of each length 0..N by explicit enumeration."""
    _require_flag(X)
    comm = RacgPresentation.from_complex(X).commute_masks()
    gens = range(len(comm))
    seen = {()}
    frontier = [()]
    counts = [1]
    for k in range(1, N + 1):
        nxt = []
        for w in frontier:
            for s in gens:
                v = _times_generator(w, s, comm)
                if len(v) != k:
                    continue
                v = _canonical(v, comm)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        if len(seen) > BFS_CAP:
            raise RuntimeError(f"more than {BFS_CAP} group elements enumerated")
        counts.append(len(nxt))
        frontier = nxt
    return counts


# ---------------------------------------------------------------------------
# Radius-of-convergence structure
# ---------------------------------------------------------------------------

def is_crosspolytope_join_simplex(X: SimplicialComplex) -> bool:
    """Complement of the one-skeleton is a matching plus isolated vertices."""
    _require_flag(X)
    nv = len(X.vertices)
    deg = [0] * nv
    for a, b in X.edges:
        deg[X.index[a]] += 1
        deg[X.index[b]] += 1
    return all(nv - 1 - d <= 1 for d in deg)


def radius_one_check(X: SimplicialComplex, tol: float = 1e-9) -> bool:
    """True iff the reduced denominator of W(t) has no root of modulus < 1.

    Real roots in (-1, 1) are counted exactly with Sturm; the numeric root
    moduli must agree with that count, and a non-real root within ``tol`` of
    the unit circle raises a :class:`ToleranceAmbiguity` warning.
    """
    den = growth_series(X).rat.den
    if den.degree < 1:
        return True
    exact_inside = count_real_roots(den, -1, 1) - (1 if den(1) == 0 else 0)
    inside = exact_inside > 0
    numeric_real_inside = set()
    for z in numeric_roots(den, 1e-12):
        near_real = abs(z.imag) <= 1e-7 * (1 + abs(z))
        if near_real and abs(z.real) < 1 - tol:
            numeric_real_inside.add(round(z.real, 6))
        elif abs(abs(z) - 1) < tol and not near_real:
            warnings.warn(f"root {z} within tol of the unit circle", ToleranceAmbiguity)
        if abs(z) < 1 - tol:
            inside = True
    if len(numeric_real_inside) != exact_inside:
        raise ArithmeticError(
            f"numeric ({len(numeric_real_inside)}) and Sturm ({exact_inside}) counts of "
            "real roots in (-1, 1) disagree")
    return not inside
