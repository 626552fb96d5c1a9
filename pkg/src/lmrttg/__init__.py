"""Exact construction and verification of locally most reliable two-terminal graphs."""

from .classify import PairClass, Sign, SpectrumParams, classify, coarse_sign, moptimal_predict, spectrum, tie_pairs
from .errors import DomainError, FamilyDoesNotExist, SizeLimitError
from .families import (
    FamilyParams,
    FamilyTag,
    build_family,
    build_h_optimal,
    build_lmrttg,
    build_lmrttg_sparse,
    candidate_set,
    family_exists,
    quasi_complete_params,
    quasi_star_params,
)
from .graphs import (
    Graph,
    TwoTerminalGraph,
    canonical_form,
    canonical_key,
    complement,
    disjoint_union,
    from_json,
    graph_key,
    is_universal,
    join,
    to_dot,
    to_json,
)
from .invariants import (
    InvariantBundle,
    count_p3,
    count_p4,
    count_triangles,
    family_h,
    h_invariant,
    h_sum_offset,
    invariant_bundle,
    quasi_complete_h,
    quasi_complete_m1,
    quasi_star_m1,
    ramsey_residuals,
    zagreb1,
    zagreb2,
)
from .quadratic import (
    GAP_LOWER,
    MARGIN,
    SPREAD_UPPER,
    QuadNumber,
    QuadPolynomial,
    band_bounds_check,
    count_roots,
    eval_gap_lower,
    eval_margin,
    eval_spread_upper,
    refine_root,
    sturm_sequence,
)
from .reliability import (
    enumerate_classes,
    filtration,
    find_lmrttg,
    lex_compare,
    n_vector,
    prefix3,
    reliability_at,
)
from .scans import (
    ScanReport,
    band_bounds_report,
    band_decomposition_violations,
    brute_record,
    identity_suite,
    scan_tie_band,
    scan_uniqueness,
    spot_check_large_band,
    sturm_report,
    verify_seven_pairs,
)
