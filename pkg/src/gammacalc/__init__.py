"""Exact invariants of flag simplicial complexes: f/h/gamma polynomials,
real-rootedness, edge subdivisions, cd-indices and Coxeter growth series."""

from .polynomial import (IntPolynomial, RationalFunction, charney_davis_quantity, f_from_h,
                         gamma_from_h, h_from_f, h_from_gamma, is_reciprocal, is_unimodal)
from .complex import (Graph, SimplicialComplex, clique_complex, cross_polytope, edge_subdivision,
                      f_polynomial, h_polynomial, is_eulerian, is_flag, is_ghs, join, link,
                      polygon, simplex, simplex_boundary, suspension)
from .realroots import (count_real_roots, deg4_region, is_real_rooted,
                        smallest_modulus_root_is_real_negative)
from .posets import GradedPoset, cd_index, face_poset, psi, upsilon
from .coxeter import bfs_growth_oracle, growth_series, radius_one_check, series_expand
from .constructions import (cone_decompose, paper_counterexample, realize_h4, region_grid,
                            verify_counterexample)

__version__ = "0.1.0"
