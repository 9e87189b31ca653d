"""Exact tools for edge counts and face lattices of convex polytopes."""
from .bounds import (BoundResult, FeasibilityVerdict, Status, Verdict, edges_feasible, excess_bounds,
                     forbidden_band, max_dimension_for_edges, max_edges, min_edges, min_facets,
                     min_ridges_2dplus1, fm_lower_bound, simple_vertex_reachable, dplus2_decompositions)
from .combinatorics import binom, phi
from .constructions import (FamilyTag, construct, cyclic, delta_sum, parse_tag, pentasm, prism, pyramid,
                            sigma3, simplex, stacked, triplex)
from .isomorphism import are_isomorphic, canonical_form, facet_census
from .lattice import FaceLattice, enumerate_lattice, kernel_name
from .polytope import CombinatorialPolytope, InvalidPolytope

__version__ = "0.1.0"
