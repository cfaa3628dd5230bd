from .rng import derive_seed, generic_share, make_rng

__all__ = ["derive_seed", "generic_share", "make_rng"]
