"""Reduced homology of independence complexes and discrete Morse bounds on it."""

from .bounds import comparison_table, corollary_bound, lucas_product_bound, planar_lower_bound, ramanujan_threshold
from .canonical import canonical_form, is_isomorphic
from .complex import BettiReport, IndComplex, betti_numbers, build_complex, total_betti
from .cycles import (
    CycleAnalysis,
    analyze,
    cycle_packing,
    effective_girth,
    find_low_attachment_cycle,
    girth,
    min_feedback_set,
    voss_table,
)
from .errors import (
    CapabilityError,
    IndMorseError,
    InputError,
    PreconditionError,
    ResourceError,
    StructuralError,
    VerificationError,
)
from .graph import Graph, contract_degree_two, disjoint_union, find_fold, induced
from .io import family, format_graph6, parse_edge_list, parse_graph6, read_graph_file
from .lucas import (
    bundling_inequality_check,
    count_valid_assignments,
    fibonacci,
    lucas,
    lucas_sweep,
    lucas_triangle_row,
    trace_count,
)
from .morse import (
    MorseCertificate,
    MorseEngine,
    MorseMatching,
    bound_by_fold,
    bound_by_link,
    bound_feedback,
    bound_forest,
    bound_no_two_disjoint_cycles,
    is_acyclic,
    is_valid_matching,
    main_bound,
    product_matching,
    remove_cycle_bound,
)
from .verify import verify_corpus

__version__ = "0.1.0"
