from .multigraded import (
    BigradedSeries,
    CISpec,
    canonical_quadric_count,
    ci_curve_invariants,
    ci_hilbert_value,
    hyperelliptic_genus,
    restricted_degree,
    rr_h0,
)

__all__ = [
    "BigradedSeries",
    "CISpec",
    "canonical_quadric_count",
    "ci_curve_invariants",
    "ci_hilbert_value",
    "hyperelliptic_genus",
    "restricted_degree",
    "rr_h0",
]
