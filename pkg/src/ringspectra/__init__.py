"""Exact spectra and genus of commuting graphs of finite rings."""

from ._kernels import BACKEND as KERNEL_BACKEND
from .ring import (AbelianGroupType, CCResult, ElementSet, FiniteRing,
                   additive_quotient_structure, center, centralizer,
                   centralizer_family, commuting_probability, direct_product,
                   is_cc_ring, is_prime, smallest_prime_divisor, validate_ring)
from .generators import (CatalogEntry, StructureConstants, cyclic_ring,
                         enumerate_bilinear_rings, full_matrix_ring,
                         ring_from_structure_constants, row_matrix_ring,
                         scan_associative_tensor_indices, upper_triangular_ring,
                         zero_ring)
from .graphs import (CliqueDecomposition, CommutingGraph, GenusResult,
                     NotCliqueUnion, clique_union_decomposition,
                     commuting_graph, connected_components, genus,
                     genus_clique_union, genus_complete, graph_from_edges)
from .spectra import (DEFAULT_CHAR_POLY_CAP, IntegerPolynomial, SpectrumResult,
                      char_poly, clique_union_spectrum, integer_spectrum)

__version__ = "0.1.0"
