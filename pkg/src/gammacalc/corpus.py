"""Deterministic test corpora. Everything is rebuilt from a seed, so the
``--seed-complexes`` dump and the property tests see identical objects."""

from __future__ import annotations

import random
from dataclasses import dataclass

import networkx as nx

from .complex import (Graph, SimplicialComplex, clique_complex, cross_polytope, edge_subdivision,
                      is_flag, join, polygon, simplex, simplex_boundary, suspension)
from .constructions import paper_counterexample, realize_h4
from .posets import GradedPoset, boolean_lattice, chain_poset, face_poset

DEFAULT_SEED = 20240531


@dataclass(frozen=True)
class CorpusConfig:
    seed: int = DEFAULT_SEED
    eulerian_size: int = 120
    subdivisions_per_member: int = 3
    max_dim: int = 5
    max_vertices: int = 24


def _bases() -> list[tuple[str, SimplicialComplex]]:
    out = [(f"polygon({m})", polygon(m)) for m in range(3, 9)]
    out += [(f"cross({n})", cross_polytope(n)) for n in range(1, 5)]
    out += [(f"simplex_boundary({n})", simplex_boundary(n)) for n in range(1, 5)]
    return out


def _random_subdivision(X: SimplicialComplex, rng: random.Random) -> SimplicialComplex:
    return edge_subdivision(X, rng.choice(X.edges))


def eulerian_corpus(cfg: CorpusConfig = CorpusConfig()) -> list[tuple[str, SimplicialComplex]]:
    """Spheres built from polygons, cross-polytopes and simplex boundaries by
    joins, suspensions and random edge subdivisions."""
    rng = random.Random(cfg.seed)
    bases = _bases()
    out = list(bases)
    out += [(f"susp({name})", suspension(X)) for name, X in bases if X.dim + 1 <= cfg.max_dim]
    attempts = 0
    while len(out) < cfg.eulerian_size:
        attempts += 1
        if attempts > 50 * cfg.eulerian_size:  # pragma: no cover
            raise RuntimeError("corpus generation stalled")
        (na, A), (nb, B) = rng.choice(out), rng.choice(bases)
        kind = rng.random()
        if kind < 0.45:
            name, X = f"join({na},{nb})", join(A, B)
        elif kind < 0.6:
            name, X = f"susp({na})", suspension(A)
        elif A.edges:
            X = A
            k = rng.randint(1, cfg.subdivisions_per_member)
            for _ in range(k):
                X = _random_subdivision(X, rng)
            name = f"sub{k}({na})"
        else:
            continue
        if X.dim <= cfg.max_dim and len(X.vertices) <= cfg.max_vertices:
            out.append((name, X))
    return out


def flag_ghs_corpus(cfg: CorpusConfig = CorpusConfig()) -> list[tuple[str, SimplicialComplex]]:
    """Flag spheres: the corpus members without a triangle or simplex-boundary
    factor, plus degree-4 realizations and the counterexample pair."""
    out = [(n, X) for n, X in eulerian_corpus(cfg) if is_flag(X)]
    points = [(4, 6), (5, 8), (7, 12), (8, 15), (9, 18), (10, 22)]
    out += [(f"realize_h4{pt}", realize_h4(*pt)) for pt in points]
    out += [(f"paper({m})", paper_counterexample(m)) for m in (0, 1)]
    return out


def atlas_graphs(max_nodes: int, min_nodes: int = 1) -> list[Graph]:
    """All graphs up to isomorphism on ``min_nodes..max_nodes`` vertices (<= 7)."""
    if max_nodes > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    out = []
    for g in nx.graph_atlas_g():
        if min_nodes <= g.number_of_nodes() <= max_nodes:
            out.append(Graph.from_edges([str(v) for v in g.nodes],
                                        [(str(a), str(b)) for a, b in g.edges]))
    return out


def clique_corpus(max_nodes: int = 6) -> list[tuple[str, SimplicialComplex]]:
    return [(f"atlas{G.vertices}:{sorted(G.edges)}", clique_complex(G))
            for G in atlas_graphs(max_nodes)]


def poset_corpus() -> list[tuple[str, GradedPoset]]:
    out = [(f"face_poset(polygon({m}))", face_poset(polygon(m))) for m in range(3, 13)]
    out += [(f"face_poset(simplex_boundary({n}))", face_poset(simplex_boundary(n))) for n in range(1, 5)]
    out += [(f"face_poset(cross({n}))", face_poset(cross_polytope(n))) for n in range(1, 4)]
    out += [(f"boolean({n})", boolean_lattice(n)) for n in range(1, 5)]
    # graded but not Eulerian
    out += [(f"chain({n})", chain_poset(n)) for n in range(1, 5)]
    out += [(f"face_poset(simplex({n}))", face_poset(simplex(n))) for n in range(1, 4)]
    path = SimplicialComplex.from_facets(["a", "b", "c", "d"], [["a", "b"], ["b", "c"], ["c", "d"]])
    out.append(("face_poset(path4)", face_poset(path)))
    return out


def dump(cfg: CorpusConfig = CorpusConfig()) -> dict:
    """JSON-ready dump of the complex corpora."""
    return {
        "seed": cfg.seed,
        "eulerian": [{"name": n, "complex": X.to_json()} for n, X in eulerian_corpus(cfg)],
        "flag_ghs": [{"name": n, "complex": X.to_json()} for n, X in flag_ghs_corpus(cfg)],
        "clique": [{"name": n, "complex": X.to_json()} for n, X in clique_corpus()],
    }
