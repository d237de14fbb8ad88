"""Graded posets, flag enumeration, ab-index and cd-index."""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Hashable, Iterable, Mapping, Sequence

from .complex import SimplicialComplex, _bits, clique_complex, Graph, f_polynomial
from .polynomial import IntPolynomial, gamma_from_h, h_from_f

MAX_CHAINS = 20_000

TOP = "^1"


class NotCDExpressible(ValueError):
    """The ab-polynomial is not in the span of the cd-words; ``witness`` is an
    ab-word whose coefficient cannot be matched."""

    def __init__(self, witness: str):
        super().__init__(f"not cd-expressible (witness ab-word {witness!r})")
        self.witness = witness


class PosetSizeError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# Noncommutative word polynomials
# ---------------------------------------------------------------------------

class WordPolynomial:
    """Integer combination of words over a fixed alphabet, homogeneous in weight."""

    weights: Mapping[str, int] = {}

    def __init__(self, terms: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[str, int] = defaultdict(int)
        for w, c in items:
            if any(ch not in self.weights for ch in w):
                raise ValueError(f"word {w!r} outside alphabet {''.join(self.weights)}")
            acc[w] += c
        self.terms = {w: c for w, c in sorted(acc.items()) if c}
        ws = {self.weight(w) for w in self.terms}
        if len(ws) > 1:
            raise ValueError("inhomogeneous word polynomial")

    @classmethod
    def weight(cls, w: str) -> int:
        return sum(cls.weights[ch] for ch in w)

    def __eq__(self, other):
        return type(self) is type(other) and self.terms == other.terms

    def __hash__(self):
        return hash((type(self).__name__, tuple(self.terms.items())))

    def __add__(self, other):
        return type(self)(list(self.terms.items()) + list(other.terms.items()))

    def __mul__(self, other):
        if isinstance(other, int):
            return type(self)({w: c * other for w, c in self.terms.items()})
        return type(self)([(u + v, a * b) for u, a in self.terms.items()
                           for v, b in other.terms.items()])

    __rmul__ = __mul__

    def evaluate(self, values: Mapping[str, IntPolynomial | int]) -> IntPolynomial:
        """Commutative specialization letter -> value."""
        total = IntPolynomial()
        for w, c in self.terms.items():
            term = IntPolynomial([c])
            for ch in w:
                term = term * values[ch]
            total = total + term
        return total

    def __repr__(self):
        return f"{type(self).__name__}({self.terms})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.terms.items():
            mono = _compress(w)
            coeff = "" if abs(c) == 1 and mono else str(abs(c))
            parts.append(("-" if c < 0 else "+", f"{coeff}{mono}" or "1"))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return s + "".join(f" {sg} {body}" for sg, body in parts[1:])


def _compress(w: str) -> str:
    out = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        out.append(w[i] if j - i == 1 else f"{w[i]}^{j - i}")
        i = j
    return "".join(out)


class ABPolynomial(WordPolynomial):
    weights = {"a": 1, "b": 1}


class CDPolynomial(WordPolynomial):
    weights = {"c": 1, "d": 2}

    def to_ab(self) -> ABPolynomial:
        c = ABPolynomial({"a": 1, "b": 1})
        d = ABPolynomial({"ab": 1, "ba": 1})
        total = ABPolynomial()
        for w, coef in self.terms.items():
            term = ABPolynomial({"": coef})
            for ch in w:
                term = term * (c if ch == "c" else d)
            total = total + term
        return total

    def negative_terms(self) -> dict[str, int]:
        return {w: c for w, c in self.terms.items() if c < 0}


def cd_words(n: int) -> list[str]:
    """All cd-words of weight n, lexicographic with c < d."""
    if n < 0:
        return []
    if n == 0:
        return [""]
    out = ["c" + w for w in cd_words(n - 1)] + ["d" + w for w in cd_words(n - 2)]
    return sorted(out)


# ---------------------------------------------------------------------------
# Graded posets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GradedPoset:
    """Finite graded poset with unique bottom and top.

    ``covers`` holds index pairs ``(x, y)`` with ``x`` covered by ``y``.
    """

    elements: tuple[Hashable, ...]
    covers: tuple[tuple[int, int], ...]
    rank: tuple[int, ...]
    bottom: int
    top: int

    @classmethod
    def from_covers(cls, elements: Sequence[Hashable], covers: Iterable[tuple]):
        elements = tuple(elements)
        idx = {e: i for i, e in enumerate(elements)}
        if len(idx) != len(elements):
            raise ValueError("duplicate poset element")
        cov = sorted({(idx[x], idx[y]) for x, y in covers})
        n = len(elements)
        has_down = {y for _, y in cov}
        has_up = {x for x, _ in cov}
        mins = [i for i in range(n) if i not in has_down]
        maxs = [i for i in range(n) if i not in has_up]
        if len(mins) != 1 or len(maxs) != 1:
            raise ValueError("poset needs a unique minimum and maximum")
        up = defaultdict(list)
        for x, y in cov:
            up[x].append(y)
        rank = [None] * n
        rank[mins[0]] = 0
        queue = deque([mins[0]])
        while queue:
            x = queue.popleft()
            for y in up[x]:
                if rank[y] is None:
                    rank[y] = rank[x] + 1
                    queue.append(y)
                elif rank[y] != rank[x] + 1:
                    raise ValueError("poset is not graded")
        if any(r is None for r in rank):  # pragma: no cover - unique min reaches all
            raise ValueError("disconnected poset")
        return cls(elements, tuple(cov), tuple(rank), mins[0], maxs[0])

    @classmethod
    def from_json(cls, data: dict) -> "GradedPoset":
        return cls.from_covers([str(e) for e in data["elements"]],
                               [(str(x), str(y)) for x, y in data["covers"]])

    @property
    def total_rank(self) -> int:
        return self.rank[self.top]

    @cached_property
    def strictly_above(self) -> tuple[int, ...]:
        """Bitmask of elements strictly greater than each element."""
        n = len(self.elements)
        up = defaultdict(list)
        for x, y in self.covers:
            up[x].append(y)
        above = [0] * n
        for x in sorted(range(n), key=lambda i: -self.rank[i]):
            m = 0
            for y in up[x]:
                m |= (1 << y) | above[y]
            above[x] = m
        return tuple(above)

    def leq(self, x: int, y: int) -> bool:
        return x == y or bool(self.strictly_above[x] >> y & 1)

    def proper(self) -> list[int]:
        return [i for i in range(len(self.elements)) if i not in (self.bottom, self.top)]

    def chains(self) -> list[tuple[int, ...]]:
        """All chains of proper elements (the empty chain included), by DFS."""
        proper_mask = sum(1 << i for i in self.proper())
        out: list[tuple[int, ...]] = []

        def walk(last: int, chain: tuple[int, ...]):
            out.append(chain)
            if len(out) > MAX_CHAINS:
                raise PosetSizeError(f"more than {MAX_CHAINS} chains")
            for y in _bits(self.strictly_above[last] & proper_mask):
                walk(y, chain + (y,))

        walk(self.bottom, ())
        return out


def face_poset(X: SimplicialComplex) -> GradedPoset:
    """Faces of X ordered by inclusion, with an adjoined top; elements are
    label tuples (``()`` is the bottom) plus the string ``"^1"``."""
    faces = sorted(X.faces, key=lambda m: (bin(m).count("1"), m))
    elems = [X.labels_of(m) for m in faces] + [TOP]
    covers = []
    for m in faces:
        for i in _bits(m):
            covers.append((X.labels_of(m & ~(1 << i)), X.labels_of(m)))
    for m in X.facet_masks:
        covers.append((X.labels_of(m), TOP))
    return GradedPoset.from_covers(elems, covers)


def boolean_lattice(n: int) -> GradedPoset:
    """Subsets of an n-set; as a face poset this is B_n with its own top."""
    elems = [tuple(i for i in range(n) if m >> i & 1) for m in range(1 << n)]
    covers = [(elems[m & ~(1 << i)], elems[m]) for m in range(1 << n) for i in _bits(m)]
    return GradedPoset.from_covers(elems, covers)


def chain_poset(length: int) -> GradedPoset:
    """Totally ordered poset ``0 < 1 < ... < length``."""
    return GradedPoset.from_covers(range(length + 1), [(i, i + 1) for i in range(length)])


def is_eulerian_poset(P: GradedPoset) -> bool:
    """Every interval [x, z] with x < z has vanishing alternating rank sum."""
    n = len(P.elements)
    for x in range(n):
        for z in _bits(P.strictly_above[x]):
            total = (-1) ** P.rank[x]
            for y in _bits(P.strictly_above[x]):
                if P.leq(y, z):
                    total += (-1) ** P.rank[y]
            if total:
                return False
    return True


def upsilon(P: GradedPoset) -> ABPolynomial:
    """Flag f-vector as an ab-polynomial: b at the ranks a chain visits."""
    n = P.total_rank - 1
    terms: dict[str, int] = defaultdict(int)
    for chain in P.chains():
        word = ["a"] * n
        for x in chain:
            word[P.rank[x] - 1] = "b"
        terms["".join(word)] += 1
    return ABPolynomial(terms)


def psi(P: GradedPoset) -> ABPolynomial:
    """ab-index: substitute a -> a - b letterwise in :func:`upsilon`."""
    terms: dict[str, int] = defaultdict(int)
    for w, c in upsilon(P).terms.items():
        options = [(("a", 1), ("b", -1)) if ch == "a" else (("b", 1),) for ch in w]
        for choice in product(*options):
            word = "".join(ch for ch, _ in choice)
            sign = 1
            for _, s in choice:
                sign *= s
            terms[word] += sign * c
    return ABPolynomial(terms)


def cd_rewrite(ab: ABPolynomial) -> CDPolynomial:
    """Express ``ab`` in c = a + b, d = ab + ba by an exact linear solve.

    The cd-words of the right weight are linearly independent, so a solution,
    when it exists, is unique. The residual after solving names a witness.
    """
    if not ab.terms:
        return CDPolynomial()
    n = len(next(iter(ab.terms)))
    basis = cd_words(n)
    expansions = [CDPolynomial({w: 1}).to_ab().terms for w in basis]
    rows = sorted({w for e in expansions for w in e} | set(ab.terms))
    # augmented matrix, one row per ab-word
    M = [[Fraction(e.get(r, 0)) for e in expansions] + [Fraction(ab.terms.get(r, 0))]
         for r in rows]
    ncol = len(basis)
    pivots = []
    r = 0
    for c in range(ncol):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        lead = M[r][c]
        M[r] = [v / lead for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    sol = [Fraction(0)] * ncol
    for i, c in enumerate(pivots):
        sol[c] = M[i][-1]
    # residual check against the original system
    recon = defaultdict(Fraction)
    for x, e in zip(sol, expansions):
        for w, v in e.items():
            recon[w] += x * v
    for w in rows:
        if recon[w] != ab.terms.get(w, 0):
            raise NotCDExpressible(w)
    if any(x.denominator != 1 for x in sol):  # pragma: no cover - unimodular basis
        raise NotCDExpressible(rows[0])
    return CDPolynomial({w: int(x) for w, x in zip(basis, sol)})


def cd_index(P: GradedPoset) -> CDPolynomial:
    return cd_rewrite(psi(P))


def _label(e) -> str:
    if isinstance(e, tuple):
        return "{" + ",".join(str(v) for v in e) + "}"
    return str(e)


def order_complex(P: GradedPoset) -> SimplicialComplex:
    """Chains of the proper part, as a (flag) clique complex of comparability."""
    prop = P.proper()
    labels = [_label(P.elements[i]) for i in prop]
    if len(set(labels)) != len(labels):
        labels = [f"{lab}#{i}" for lab, i in zip(labels, prop)]
    edges = [(labels[a], labels[b]) for a in range(len(prop)) for b in range(len(prop))
             if P.strictly_above[prop[a]] >> prop[b] & 1]
    return clique_complex(Graph.from_edges(labels, edges))


def barycentric(X: SimplicialComplex) -> SimplicialComplex:
    return order_complex(face_poset(X))


def _order_complex_h(P: GradedPoset) -> IntPolynomial:
    return h_from_f(f_polynomial(order_complex(P)), P.total_rank - 1)


def gamma_cd_bridge_check(P: GradedPoset) -> bool:
    """gamma of the order complex equals the cd-index at c = 1, d = 2t."""
    phi = cd_index(P).evaluate({"c": IntPolynomial([1]), "d": IntPolynomial([0, 2])})
    gamma = gamma_from_h(_order_complex_h(P), P.total_rank - 1)
    return phi == gamma


def babson_check(P: GradedPoset) -> bool:
    """h of the order complex at -1 equals Psi written in c, d at c = 0, d = -2.

    Read commutatively in a, b the right side would be ``(-2)^n h_n``, which
    fails already for a pentagon. For Eulerian P the cd-form is the cd-index;
    otherwise Psi is written in c = a + b, e = a - b and evaluated at c = 0,
    e = 2 (so that ab + ba = (c^2 - e^2)/2 = -2).
    """
    lhs = _order_complex_h(P)(-1)
    try:
        phi = cd_index(P)
    except NotCDExpressible:
        # a = (c + e)/2 = 1, b = (c - e)/2 = -1
        rhs = psi(P).evaluate({"a": 1, "b": -1})(0)
    else:
        rhs = phi.evaluate({"c": 0, "d": -2})(0)
    return lhs == rhs
