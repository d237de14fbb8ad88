"""Finite abstract simplicial complexes with labelled vertices.

Faces are handled internally as bitmasks over the vertex index; the full face
table is enumerated lazily from the facets and memoized on the instance.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from math import factorial
from typing import Callable, Iterable, Sequence

from .homology import smith_invariants
from .polynomial import IntPolynomial, h_from_f

DEFAULT_MAX_FACES = 500_000


class FaceLimitError(RuntimeError):
    """Raised when face enumeration would exceed the configured cap."""


def max_faces() -> int:
    return int(os.environ.get("GAMMACALC_MAX_FACES", DEFAULT_MAX_FACES))


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def _submasks(m: int):
    s = m
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & m


def _maximal(masks: Iterable[int]) -> list[int]:
    keep: list[int] = []
    for m in sorted(set(masks), key=_popcount, reverse=True):
        if not any(m & k == m for k in keep):
            keep.append(m)
    return keep


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex stored by its facets.

    ``facets`` holds sorted tuples of indices into ``vertices``. Use
    :meth:`from_facets` to build one from labels; it drops non-maximal faces
    and unused labels. The complex ``{∅}`` has no vertices and the single
    empty facet.
    """

    vertices: tuple[str, ...]
    facets: tuple[tuple[int, ...], ...]

    @classmethod
    def from_facets(cls, labels: Sequence[str], facet_lists: Iterable[Iterable[str]]):
        labels = [str(v) for v in labels]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate vertex label")
        index = {v: i for i, v in enumerate(labels)}
        masks = []
        for face in facet_lists:
            face = [str(v) for v in face]
            if len(set(face)) != len(face):
                raise ValueError(f"duplicate vertex in face {face}")
            m = 0
            for v in face:
                if v not in index:
                    raise KeyError(f"unknown vertex label {v!r}")
                m |= 1 << index[v]
            masks.append(m)
        return cls._from_masks(labels, masks)

    @classmethod
    def _from_masks(cls, labels: Sequence[str], masks: Iterable[int]):
        facets = _maximal(masks) or [0]
        used = 0
        for m in facets:
            used |= m
        keep = [i for i in range(len(labels)) if used >> i & 1]
        new_index = {old: new for new, old in enumerate(keep)}
        tuples = sorted(tuple(sorted(new_index[i] for i in _bits(m))) for m in facets)
        return cls(tuple(labels[i] for i in keep), tuple(tuples))

    @classmethod
    def from_json(cls, data: dict) -> "SimplicialComplex":
        return cls.from_facets(data["vertices"], data["facets"])

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices),
                "facets": [[self.vertices[i] for i in f] for f in self.facets]}

    # -- internals ---------------------------------------------------------

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def facet_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << i for i in f) for f in self.facets)

    @cached_property
    def faces(self) -> frozenset[int]:
        """All faces as bitmasks (the empty face is ``0``)."""
        cap = max_faces()
        out: set[int] = set()
        for m in self.facet_masks:
            out.update(_submasks(m))
            if len(out) > cap:
                raise FaceLimitError(f"more than {cap} faces")
        return frozenset(out)

    def mask(self, face: Iterable[str]) -> int:
        m = 0
        for v in face:
            m |= 1 << self.index[str(v)]
        return m

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in _bits(mask))

    # -- basic invariants --------------------------------------------------

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    def has_face(self, face: Iterable[str]) -> bool:
        try:
            return self.mask(face) in self.faces
        except KeyError:
            return False

    @cached_property
    def edges(self) -> tuple[tuple[str, str], ...]:
        """Edges as label pairs in deterministic (sorted) order."""
        out = set()
        for f in self.facets:
            for i, j in combinations(f, 2):
                a, b = sorted((self.vertices[i], self.vertices[j]))
                out.add((a, b))
        return tuple(sorted(out))

    def __len__(self):
        return len(self.faces)

    def __repr__(self):
        return f"SimplicialComplex({len(self.vertices)} vertices, {len(self.facets)} facets)"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on string labels."""

    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]]

    @classmethod
    def from_edges(cls, vertices: Iterable[str], edges: Iterable[Iterable[str]]):
        vertices = tuple(str(v) for v in vertices)
        vs = set(vertices)
        norm = set()
        for e in edges:
            a, b = (str(x) for x in e)
            if a == b:
                raise ValueError(f"loop at {a!r}")
            if a not in vs or b not in vs:
                raise KeyError(f"edge {a!r}-{b!r} uses an unknown vertex")
            norm.add(tuple(sorted((a, b))))
        return cls(vertices, frozenset(norm))

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        return cls.from_edges(data["vertices"], data["edges"])

    def adjacency_masks(self) -> list[int]:
        idx = {v: i for i, v in enumerate(self.vertices)}
        adj = [0] * len(self.vertices)
        for a, b in self.edges:
            adj[idx[a]] |= 1 << idx[b]
            adj[idx[b]] |= 1 << idx[a]
        return adj


def one_skeleton(X: SimplicialComplex) -> Graph:
    return Graph(X.vertices, frozenset(X.edges))


def maximal_cliques(adj: Sequence[int]) -> list[int]:
    """Bron-Kerbosch with pivoting over bitmask adjacency."""
    out: list[int] = []

    def expand(R: int, P: int, Xs: int):
        if not P and not Xs:
            out.append(R)
            return
        pivot = max(_bits(P | Xs), key=lambda u: _popcount(P & adj[u]))
        for v in _bits(P & ~adj[pivot]):
            bit = 1 << v
            expand(R | bit, P & adj[v], Xs & adj[v])
            P &= ~bit
            Xs |= bit

    n = len(adj)
    if n == 0:
        return [0]
    expand(0, (1 << n) - 1, 0)
    return out


def clique_complex(G: Graph) -> SimplicialComplex:
    return SimplicialComplex._from_masks(G.vertices, maximal_cliques(G.adjacency_masks()))


def is_flag(X: SimplicialComplex) -> bool:
    """True iff every clique of the one-skeleton is a face."""
    adj = [0] * len(X.vertices)
    for m in X.facet_masks:
        for i in _bits(m):
            adj[i] |= m & ~(1 << i)
    return set(maximal_cliques(adj)) == set(X.facet_masks)


def f_polynomial(X: SimplicialComplex) -> IntPolynomial:
    counts = Counter(_popcount(m) for m in X.faces)
    return IntPolynomial(counts.get(i, 0) for i in range(X.dim + 2))


def h_polynomial(X: SimplicialComplex) -> IntPolynomial:
    return h_from_f(f_polynomial(X), X.dim + 1)


def _link_masks(X: SimplicialComplex, s: int) -> list[int]:
    return [m & ~s for m in X.facet_masks if m & s == s]


def link(X: SimplicialComplex, sigma: Iterable[str]) -> SimplicialComplex:
    """Link of the face ``sigma`` (given by labels)."""
    sigma = list(sigma)
    try:
        s = X.mask(sigma)
    except KeyError:
        raise ValueError(f"{sigma} is not a face") from None
    if s not in X.faces:
        raise ValueError(f"{sigma} is not a face")
    return SimplicialComplex._from_masks(X.vertices, _link_masks(X, s))


def is_eulerian(X: SimplicialComplex) -> bool:
    """Alternating coface sums: sum over tau ⊇ sigma of (-1)^#tau = (-1)^n for all sigma."""
    if not X.is_pure():
        raise ValueError("Eulerian test needs a pure complex")
    n = X.dim + 1
    acc: Counter = Counter()
    for tau in X.faces:
        sign = -1 if _popcount(tau) % 2 else 1
        for sigma in _submasks(tau):
            acc[sigma] += sign
    target = (-1) ** n
    return all(v == target for v in acc.values())


def reduced_homology(X: SimplicialComplex) -> dict[int, tuple[int, tuple[int, ...]]]:
    """Reduced integral homology ``{dim: (betti, torsion)}`` for dims -1..dim X.

    Uses the augmented chain complex (the empty face spans degree -1), so the
    complex ``{∅}`` has ``H_{-1} = Z``.
    """
    by_size: dict[int, list[int]] = {}
    for m in X.faces:
        by_size.setdefault(_popcount(m), []).append(m)
    top = X.dim + 1
    pos = {}
    for k in range(top + 1):
        by_size.setdefault(k, [])
        by_size[k].sort()
        for j, m in enumerate(by_size[k]):
            pos[m] = j
    invariants: dict[int, list[int]] = {}
    for k in range(1, top + 1):
        rows = []
        for m in by_size[k]:
            row = {}
            for sgn, i in enumerate(_bits(m)):
                row[pos[m & ~(1 << i)]] = -1 if sgn % 2 else 1
            rows.append(row)
        invariants[k] = smith_invariants(rows)  # boundary from size k to size k-1
    out = {}
    for k in range(top + 1):
        rank_out = len(invariants.get(k, []))
        inc = invariants.get(k + 1, [])
        betti = len(by_size[k]) - rank_out - len(inc)
        torsion = tuple(sorted(d for d in inc if d > 1))
        out[k - 1] = (betti, torsion)
    return out


def homology_ranks(X: SimplicialComplex) -> dict[int, tuple[int, tuple[int, ...]]]:
    return reduced_homology(X)


def _is_homology_sphere(X: SimplicialComplex, d: int) -> bool:
    H = reduced_homology(X)
    return all(v == ((1, ()) if k == d else (0, ())) for k, v in H.items()) and d in H


def is_ghs(X: SimplicialComplex) -> bool:
    """Every face link (empty face included) has the homology of the sphere
    of complementary dimension."""
    if not X.is_pure():
        return False
    d = X.dim
    seen: dict[tuple, bool] = {}
    for s in sorted(X.faces, key=_popcount):
        L = SimplicialComplex._from_masks(X.vertices, _link_masks(X, s))
        key = (L.facets, d - _popcount(s))
        if key not in seen:
            seen[key] = _is_homology_sphere(L, d - _popcount(s))
        if not seen[key]:
            return False
    return True


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------

def polygon(m: int) -> SimplicialComplex:
    if m < 3:
        raise ValueError("polygon needs m >= 3")
    labels = [f"v{i}" for i in range(m)]
    return SimplicialComplex.from_facets(labels, [(labels[i], labels[(i + 1) % m]) for i in range(m)])


def cross_polytope(n: int) -> SimplicialComplex:
    """n-fold join of S^0, on vertices ``+i`` / ``-i``."""
    if n < 0:
        raise ValueError("cross polytope needs n >= 0")
    labels = [f"{s}{i}" for i in range(n) for s in "+-"]
    facets = [[f"{s}{i}" for i, s in enumerate(signs)] for signs in product("+-", repeat=n)]
    return SimplicialComplex.from_facets(labels, facets)


def simplex(n: int) -> SimplicialComplex:
    """The full n-dimensional simplex (n+1 vertices)."""
    if n < 0:
        raise ValueError("simplex needs n >= 0")
    labels = [f"v{i}" for i in range(n + 1)]
    return SimplicialComplex.from_facets(labels, [labels])


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the n-simplex, a sphere of dimension n-1."""
    if n < 0:
        raise ValueError("simplex boundary needs n >= 0")
    labels = [f"v{i}" for i in range(n + 1)]
    return SimplicialComplex.from_facets(labels, combinations(labels, n))


def join(X: SimplicialComplex, Y: SimplicialComplex) -> SimplicialComplex:
    """Join, with vertices relabelled ``L:`` / ``R:`` to keep them disjoint."""
    labels = [f"L:{v}" for v in X.vertices] + [f"R:{v}" for v in Y.vertices]
    shift = len(X.vertices)
    masks = [a | (b << shift) for a in X.facet_masks for b in Y.facet_masks]
    return SimplicialComplex._from_masks(labels, masks)


def suspension(X: SimplicialComplex) -> SimplicialComplex:
    return join(X, cross_polytope(1))


def fresh_label(X: SimplicialComplex, prefix: str = "e") -> str:
    k = 0
    while f"{prefix}{k}" in X.index:
        k += 1
    return f"{prefix}{k}"


def edge_subdivision(X: SimplicialComplex, eta: Sequence[str], new_label: str | None = None):
    """Bisect every face containing the edge ``eta = {s, t}`` with a new vertex.

    Faces avoiding ``eta`` are kept; for each sigma in the link of ``eta`` the
    faces sigma+e, sigma+{s,e}, sigma+{t,e} are added.
    """
    s_lab, t_lab = (str(v) for v in eta)
    if s_lab == t_lab or not X.has_face([s_lab, t_lab]):
        raise ValueError(f"{eta} is not an edge")
    if new_label is None:
        new_label = fresh_label(X)
    if new_label in X.index:
        raise ValueError(f"label {new_label!r} already in use")
    labels = list(X.vertices) + [new_label]
    s, t = 1 << X.index[s_lab], 1 << X.index[t_lab]
    e = 1 << len(X.vertices)
    eta_m = s | t
    masks = []
    for m in X.facet_masks:
        if m & eta_m == eta_m:
            sigma = m & ~eta_m
            masks += [sigma | s | e, sigma | t | e]
        else:
            masks.append(m)
    return SimplicialComplex._from_masks(labels, masks)


def subdivide_times(X: SimplicialComplex, eta: Sequence[str], times: int):
    """Subdivide ``eta = (s, t)`` then keep subdividing the new edge ``{s, e}``.

    Returns the complex and the last edge subdivided (or ``eta`` if times=0).
    """
    s, t = eta
    for _ in range(times):
        e = fresh_label(X)
        X = edge_subdivision(X, (s, t), e)
        t = e
    return X, (s, t)


def sum_link_f(X: SimplicialComplex, k: int) -> IntPolynomial:
    """Sum of f-polynomials of links of all faces with k vertices."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    total = IntPolynomial()
    for s in X.faces:
        if _popcount(s) == k:
            total = total + f_polynomial(SimplicialComplex._from_masks(X.vertices, _link_masks(X, s)))
    return total


def link_sum_identity(X: SimplicialComplex, k: int) -> bool:
    f = f_polynomial(X)
    return sum_link_f(X, k) * factorial(k) == f.derivative(k)


def find_edges_with_link(X: SimplicialComplex, predicate: Callable[[SimplicialComplex], bool]):
    return [e for e in X.edges if predicate(link(X, e))]


# ---------------------------------------------------------------------------
# Shape recognition for the fixed shapes the constructions need
# ---------------------------------------------------------------------------

def is_polygon(X: SimplicialComplex, m: int | None = None) -> bool:
    """True iff X is a single cycle (on m vertices when m is given)."""
    nv = len(X.vertices)
    if nv < 3 or (m is not None and nv != m):
        return False
    if any(len(f) != 2 for f in X.facets) or len(X.facets) != nv:
        return False
    deg = Counter(i for f in X.facets for i in f)
    if any(deg[i] != 2 for i in range(nv)):
        return False
    nbrs = {i: [] for i in range(nv)}
    for a, b in X.facets:
        nbrs[a].append(b)
        nbrs[b].append(a)
    seen, stack = {0}, [0]
    while stack:
        for w in nbrs[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == nv


def is_cross_polytope(X: SimplicialComplex, n: int | None = None) -> bool:
    """True iff X is isomorphic to O^n: flag, and the complement of its
    one-skeleton is a perfect matching."""
    nv = len(X.vertices)
    if nv % 2 or (n is not None and nv != 2 * n):
        return False
    if nv == 0:
        return True
    adj = {v: set() for v in X.vertices}
    for a, b in X.edges:
        adj[a].add(b)
        adj[b].add(a)
    for v in X.vertices:
        if len(adj[v]) != nv - 2:
            return False
    return is_flag(X)


def polygon_shape(m: int) -> Callable[[SimplicialComplex], bool]:
    return lambda L: is_polygon(L, m)


def cross_shape(n: int) -> Callable[[SimplicialComplex], bool]:
    return lambda L: is_cross_polytope(L, n)
