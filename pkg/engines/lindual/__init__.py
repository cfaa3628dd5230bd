from .subspace import (
    Subspace,
    annihilator,
    contains,
    intersect,
    intersect_dim,
    jump_histogram,
    lemma22_verify,
    pairing_zero,
    random_subspace,
    span_sum,
)

__all__ = [
    "Subspace",
    "annihilator",
    "contains",
    "intersect",
    "intersect_dim",
    "jump_histogram",
    "lemma22_verify",
    "pairing_zero",
    "random_subspace",
    "span_sum",
]
