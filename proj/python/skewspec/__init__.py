"""Exact spectral characterization of small oriented graphs.

Everything is computed in exact arbitrary-precision arithmetic: walk-matrix
determinants, generalized cospectrality, rational orthogonal certificates and
their levels, family membership and the 2^k - 1 mate-class bound.
"""

from ._skewspec import (
    InapplicableError,
    InputError,
    MateVerificationError,
    NotControllableError,
    OrientedGraph,
    canonical_form,
    census,
    char_polys,
    det_walk,
    example1_c,
    example1_d,
    example2_d,
    factorize,
    find_mates,
    fingerprint_digest,
    fn_membership,
    generalized_cospectral,
    is_controllable,
    is_isomorphic,
    is_prime,
    mate_bound,
    recover_q,
    skew_adjacency,
    snf_structure_check,
    verify_candidate_mate,
    verify_examples,
    walk_invariant_factors,
    walk_matrix,
    wdgss_criterion,
)

__all__ = [
    "InapplicableError",
    "InputError",
    "MateVerificationError",
    "NotControllableError",
    "OrientedGraph",
    "canonical_form",
    "census",
    "char_polys",
    "det_walk",
    "example1_c",
    "example1_d",
    "example2_d",
    "factorize",
    "find_mates",
    "fingerprint_digest",
    "fn_membership",
    "generalized_cospectral",
    "is_controllable",
    "is_isomorphic",
    "is_prime",
    "mate_bound",
    "recover_q",
    "skew_adjacency",
    "snf_structure_check",
    "verify_candidate_mate",
    "verify_examples",
    "walk_invariant_factors",
    "walk_matrix",
    "wdgss_criterion",
]

__version__ = "0.1.0"
