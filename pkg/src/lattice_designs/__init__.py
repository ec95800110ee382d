"""Spherical designs from the standard realizations of crystal lattices.

A finite graph is realized harmonically in its cycle space; the normalized
images of its edges, with their negatives, form an antipodal point set on the
unit sphere.  This package computes that set exactly (rational arithmetic),
its distance set, design strength and per-point distributions, and provides
generators for the graph families studied with it.
"""

from .design import (ComponentAnalysis, Configuration, DesignPointSet, PointDistribution,
                     analyze_component, build_point_set, configuration, design_strength,
                     distance_set, normalized_strength, point_distributions,
                     unequal_norm_summary)
from .errors import (DegenerateDimension, Disconnected, Exhausted, InvalidParam,
                     LatticeDesignError, NotPrimePower, NotSimple, NotSymmetric, ParseError,
                     SingularMatrix, UnequalNorms, UnknownName, UnknownTable)
from .exact import RatMatrix, format_rational, parse_rational, rat_solve, sphere_moment
from .families import (gen_bouquet, gen_circulant, gen_cocktail_party, gen_complete,
                       gen_complete_multipartite, gen_cycle, gen_cyclotomic, gen_diamond,
                       gen_hamming, gen_johnson, gen_named, gen_paley, gen_path, gen_polytope,
                       gen_square_lattice, gen_triangular, seidel_switch)
from .fields import FiniteField, field
from .graph import (OrientedMultigraph, complement, components, disjoint_union, is_connected,
                    multiedge_expand, parse_edge_list, parse_graph6, read_graph, srg_params,
                    write_edge_list, write_graph6)
from .realization import (cycle_basis, equal_norm_check, projection_gram, projection_gram_cut,
                          realize)
from .symmetry import find_isomorphism, is_isomorphic, transitivity

__version__ = "0.1.0"
