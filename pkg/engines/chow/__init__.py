from .rings import ChowClass, ChowRing, make_ring
from .chern import ChernPoly, chern_dual, chern_quotient, chern_sum, chern_twist, chern_whitney, segre_series
from .bundles import (
    BundleSpec,
    ac_hat_identities,
    canonical_class,
    exact_sequence_check,
    projective_bundle_dim,
    pushforward_degree,
)

__all__ = [
    "ChowClass",
    "ChowRing",
    "make_ring",
    "ChernPoly",
    "chern_dual",
    "chern_quotient",
    "chern_sum",
    "chern_twist",
    "chern_whitney",
    "segre_series",
    "BundleSpec",
    "ac_hat_identities",
    "canonical_class",
    "exact_sequence_check",
    "projective_bundle_dim",
    "pushforward_degree",
]
