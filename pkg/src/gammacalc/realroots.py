"""Exact real-root counting (Sturm) and the degree-4 / cubic root tests.

The Sturm machinery is the source of truth; :func:`numeric_roots` is a
double-precision Durand-Kerner solver used only for modulus comparisons and
as a cross-check.
"""

from __future__ import annotations

import cmath
import enum
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .polynomial import (IntPolynomial, q_divmod, q_gcd, q_is_zero,
                         q_to_primitive_int, to_q)

INF = float("inf")


class RootFindingError(RuntimeError):
    pass


class ToleranceAmbiguity(UserWarning):
    pass


# ---------------------------------------------------------------------------
# Square-free reduction
# ---------------------------------------------------------------------------

def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """``p / gcd(p, p')`` as a primitive integer polynomial."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    g = q_gcd(to_q(p), to_q(p.derivative()))
    quo, _ = q_divmod(to_q(p), g)
    return q_to_primitive_int(quo)


def squarefree_decomposition(p: IntPolynomial) -> dict[int, IntPolynomial]:
    """Yun's algorithm: ``{multiplicity: squarefree factor}`` (primitive, non-constant).

    ``p`` equals a constant times the product of ``factor ** multiplicity``.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    out: dict[int, IntPolynomial] = {}
    a = to_q(p)
    b = q_gcd(a, to_q(p.derivative()))
    c, _ = q_divmod(a, b)
    i = 1
    while len(_strip(c)) > 1:
        y = q_gcd(b, c)
        z, _ = q_divmod(c, y)
        if len(_strip(z)) > 1:
            out[i] = q_to_primitive_int(z)
        b, _ = q_divmod(b, y)
        c = y
        i += 1
    return out


def _strip(a):
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


# ---------------------------------------------------------------------------
# Sturm chains
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SturmChain:
    chain: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def of(cls, p: IntPolynomial) -> "SturmChain":
        """Chain of the square-free part of ``p``: p, p', then negated remainders."""
        p0 = to_q(squarefree_part(p))
        seq = [p0]
        if len(p0) > 1:
            seq.append(_qderiv(p0))
            while True:
                _, r = q_divmod(seq[-2], seq[-1])
                if q_is_zero(r):
                    break
                seq.append([-c for c in r])
        return cls(tuple(tuple(s) for s in seq))

    def variations(self, x) -> int:
        signs = []
        for poly in self.chain:
            v = _sign_at(poly, x)
            if v:
                signs.append(v)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    @property
    def degree(self) -> int:
        """Degree of the square-free part heading the chain."""
        return len(self.chain[0]) - 1

    def count(self, lo=-INF, hi=INF) -> int:
        lo = lo if lo in (INF, -INF) else Fraction(lo)
        hi = hi if hi in (INF, -INF) else Fraction(hi)
        if not lo < hi:
            return 0
        return self.variations(lo) - self.variations(hi)


def _qderiv(a):
    return [i * c for i, c in enumerate(a)][1:] or [Fraction(0)]


def _sign_at(poly, x) -> int:
    deg = len(poly) - 1
    if x == INF or x == -INF:
        lead = poly[-1]
        s = 1 if lead > 0 else -1
        if x == -INF and deg % 2:
            s = -s
        return s if lead else 0
    acc = Fraction(0)
    for c in reversed(poly):
        acc = acc * x + c
    return (acc > 0) - (acc < 0)


def count_real_roots(p: IntPolynomial, lo=-INF, hi=INF) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    return SturmChain.of(p).count(lo, hi)


def real_root_multiplicities(p: IntPolynomial) -> dict[int, int]:
    """``{multiplicity: number of distinct real roots with that multiplicity}``."""
    return {k: count_real_roots(f) for k, f in squarefree_decomposition(p).items()}


def is_real_rooted(p: IntPolynomial) -> bool:
    """All complex roots of ``p`` are real (decided on the square-free part)."""
    if p.degree in (0,):
        return True
    chain = SturmChain.of(p)
    return chain.count() == chain.degree


def all_roots_real_negative(p: IntPolynomial) -> bool:
    if p.is_zero() or p[0] == 0:
        raise ValueError("need a nonzero polynomial with nonzero constant term")
    chain = SturmChain.of(p)
    return chain.degree == 0 or chain.count(-INF, 0) == chain.degree


# ---------------------------------------------------------------------------
# Degree-4 reciprocal geography and the cubic obstruction
# ---------------------------------------------------------------------------

class Region(enum.Enum):
    ALL_REAL_NEGATIVE = "ALL_REAL_NEGATIVE"
    UNIT_CIRCLE = "UNIT_CIRCLE"
    MIXED_REAL_PAIR = "MIXED_REAL_PAIR"
    MIXED_CIRCLE_PAIR = "MIXED_CIRCLE_PAIR"
    COMPLEX_QUADRUPLE = "COMPLEX_QUADRUPLE"
    BOUNDARY_DOUBLE_ROOT = "BOUNDARY_DOUBLE_ROOT"


@dataclass(frozen=True)
class RegionClass:
    tag: Region
    cd: int
    sr: int
    double_root: bool


def deg4_region(h1: int, h2: int) -> RegionClass:
    """Classify the roots of ``1 + h1 t + h2 t^2 + h1 t^3 + t^4``.

    Writing ``u = t + 1/t`` the roots pair up through ``q(u) = u^2 + h1 u + h2 - 2``,
    whose discriminant is ``sr`` and whose value at ``u = -2`` is ``cd``.
    A u-root below -2 gives a negative real pair, one in [-2, 2] a pair on
    the unit circle, one above 2 a positive real pair. Precedence:

    * ALL_REAL_NEGATIVE iff cd >= 0, sr >= 0, h1 >= 4 (double roots included);
    * COMPLEX_QUADRUPLE when sr < 0 (no root real or on the unit circle);
    * UNIT_CIRCLE when both u-roots lie in [-2, 2];
    * MIXED_REAL_PAIR when -2 separates the u-roots (cd < 0);
    * BOUNDARY_DOUBLE_ROOT for the remaining repeated roots (at +1, or a
      double positive pair);
    * MIXED_CIRCLE_PAIR otherwise.

    ``double_root`` is reported independently of the tag.
    """
    cd = h2 - 2 * h1 + 2
    sr = h1 * h1 - 4 * (h2 - 2)
    q_at_2 = h2 + 2 * h1 + 2
    double = cd == 0 or sr == 0 or q_at_2 == 0
    if cd >= 0 and sr >= 0 and h1 >= 4:
        tag = Region.ALL_REAL_NEGATIVE
    elif sr < 0:
        tag = Region.COMPLEX_QUADRUPLE
    elif cd >= 0 and q_at_2 >= 0 and -4 <= h1 <= 4:
        tag = Region.UNIT_CIRCLE
    elif cd < 0:
        tag = Region.MIXED_REAL_PAIR
    elif double:
        tag = Region.BOUNDARY_DOUBLE_ROOT
    else:
        tag = Region.MIXED_CIRCLE_PAIR
    return RegionClass(tag, cd, sr, double)


def cubic_real_root_obstruction(g1: int, g2: int, g3: int) -> bool:
    """Necessary condition ``g2^2 >= 3 g3 g1`` for ``1 + g1 t + g2 t^2 + g3 t^3``
    to be real-rooted; ``False`` certifies a non-real root."""
    return g2 * g2 >= 3 * g3 * g1


def cubic_discriminant(a: int, b: int, c: int, d: int) -> int:
    """Discriminant of ``a t^3 + b t^2 + c t + d``."""
    return 18 * a * b * c * d - 4 * b ** 3 * d + b * b * c * c - 4 * a * c ** 3 - 27 * a * a * d * d


# ---------------------------------------------------------------------------
# Numerics
# ---------------------------------------------------------------------------

def _durand_kerner(coeffs: list[float], tol: float, max_iter: int) -> list[complex]:
    n = len(coeffs) - 1
    lead = coeffs[-1]
    monic = [c / lead for c in coeffs]
    radius = 1 + max(abs(c) for c in monic[:-1])
    z = [radius * cmath.exp(1j * (2 * math.pi * k / n + 0.4)) for k in range(n)]

    def ev(x):
        acc = 0j
        for c in reversed(monic):
            acc = acc * x + c
        return acc

    for _ in range(max_iter):
        step = 0.0
        new = []
        for i in range(n):
            denom = 1 + 0j
            for j in range(n):
                if j != i:
                    denom *= z[i] - z[j]
            delta = ev(z[i]) / denom
            new.append(z[i] - delta)
            step = max(step, abs(delta) / (1 + abs(new[i])))
        z = new
        if step < tol:
            return z
    raise RootFindingError(f"Durand-Kerner did not converge in {max_iter} iterations")


def numeric_roots(p: IntPolynomial, tol: float = 1e-12, max_iter: int = 200) -> list[complex]:
    """All complex roots of ``p`` with multiplicity.

    Each square-free factor from :func:`squarefree_decomposition` is solved by
    Durand-Kerner (initial points on the circle of radius ``1 + max|a_i/a_n|``
    offset by 0.4 rad) and its roots repeated by multiplicity, which keeps the
    iteration quadratically convergent.
    """
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    roots: list[complex] = []
    for mult, factor in sorted(squarefree_decomposition(p).items()):
        if factor.degree == 1:
            rs = [complex(-factor[0] / factor[1])]
        else:
            rs = _durand_kerner([float(c) for c in factor.coeffs], tol, max_iter)
        roots += rs * mult
    return sorted(roots, key=lambda z: (abs(z), z.real, z.imag))


def _verified_real(p_sf: IntPolynomial, z: complex) -> bool:
    """Sturm confirms an exact real root in a small window around ``z.real``."""
    if abs(z.imag) > 1e-6 * (1 + abs(z)):
        return False
    delta = 1e-6 * (1 + abs(z.real))
    lo = Fraction(z.real - delta)
    hi = Fraction(z.real + delta)
    return count_real_roots(p_sf, lo, hi) >= 1


def smallest_modulus_root_is_real_negative(p: IntPolynomial, tol: float = 1e-12,
                                           tie_tol: float = 1e-9) -> bool:
    """Does the set of minimum-modulus roots (ties within ``tie_tol``) contain a
    real negative root? Candidates are confirmed with an exact Sturm count.

    Emits :class:`ToleranceAmbiguity` when a verified real negative root sits
    just outside the tie window (within ``10 * tie_tol``).
    """
    if p[0] == 0:
        raise ValueError("constant term must be nonzero")
    roots = numeric_roots(p, tol)
    sf = squarefree_part(p)
    rmin = min(abs(z) for z in roots)
    for z in roots:
        mod = abs(z)
        if mod <= rmin + tie_tol:
            if z.real < 0 and _verified_real(sf, z):
                return True
        elif mod <= rmin + 10 * tie_tol and z.real < 0 and _verified_real(sf, z):
            warnings.warn(f"real root {z} within 10*tie_tol of the minimum modulus",
                          ToleranceAmbiguity)
    return False


def root_summary(p: IntPolynomial, tol: float = 1e-12, tie_tol: float = 1e-9) -> dict:
    """Exact and numeric root data, as reported by the ``roots`` command."""
    sf = squarefree_part(p)
    info = {
        "degree": p.degree,
        "distinct_real_roots": count_real_roots(p),
        "squarefree_degree": sf.degree,
        "real_rooted": is_real_rooted(p),
    }
    if p[0] != 0:
        info["all_real_negative"] = all_roots_real_negative(p)
    if p.degree >= 1:
        rs = numeric_roots(p, tol)
        info["numeric_roots"] = [[z.real, z.imag] for z in rs]
        if p[0] != 0:
            info["smallest_modulus_real_negative"] = smallest_modulus_root_is_real_negative(p, tol, tie_tol)
    if p.degree == 4 and p.coeffs == p.coeffs[::-1] and p[0] == 1:
        rc = deg4_region(p[1], p[2])
        info["deg4_region"] = {"class": rc.tag.value, "cd": rc.cd, "sr": rc.sr,
                               "double_root": rc.double_root}
    return info
