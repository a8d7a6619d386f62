"""Matching extension and exclusion of small graphs.

Decides k-extendability and 1-excludability both directly (blossom
matching, explicit enumeration) and through odd-component criteria,
computes adjacency spectral radii and exact quotient characteristic
polynomials, constructs and recognizes the extremal families attaining
the size/spectral thresholds, and sweeps every connected graph at desk
scale to confirm the threshold statements exception-by-exception.
"""

from .graphs import (Graph, are_isomorphic, complete_graph, components,
                     cycle_graph, delete_vertices, disjoint_union, empty_graph,
                     from_edge_list, is_connected, join, min_degree,
                     odd_components, parse_graph6, path_graph, to_graph6)
from .matching import (MatchingResult, Verdict, berge_tutte_deficiency,
                       find_odd_bridges, has_perfect_matching, is_1_excludable,
                       is_1_excludable_criterion, is_k_extendable,
                       is_k_extendable_chen, matching_number, max_matching)
from .spectral import (Partition, Polynomial, QuotientMatrix,
                       characteristic_polynomial, eigenvalues,
                       largest_real_root, quotient_matrix, spectral_radius,
                       theta)
from .families import (FAMILY_REGISTRY, build, build_named,
                       canonical_partition, named_spec, parse_family_text,
                       recognize)
from .theorems import (TheoremId, TheoremVerdict, size_threshold_excludable,
                       size_threshold_extendable, spectral_threshold_excludable,
                       spectral_threshold_extendable, theorem_verdict)
from .enumeration import (BuiltIn, File, LemmaReport, SweepReport,
                          enumerate_connected, sweep_theorem,
                          verify_charpoly_identities, verify_lemma)

__version__ = "0.1.0"
