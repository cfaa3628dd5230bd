import hashlib
from typing import Any, Mapping, Optional, Tuple

import numpy as np


def derive_seed(global_seed: int, claim_id: str, index: Optional[int] = None) -> int:
    """Derive a 64-bit claim seed from the global seed and the claim id.

    The first 8 bytes of blake2b("<seed>:<claim id>[#<index>]"), little endian.
    """
    label = f"{global_seed}:{claim_id}"
    if index is not None:
        label = f"{label}#{index}"
    digest = hashlib.blake2b(label.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "little")


def make_rng(seed: int) -> np.random.Generator:
    """PCG64 generator; the only source of randomness in the workbench"""
    return np.random.Generator(np.random.PCG64(seed))


def generic_share(histogram: Mapping[Any, int]) -> Tuple[Any, float]:
    """Most frequent value of a sample histogram and the share of samples showing it"""
    total = sum(histogram.values())
    if not total:
        return None, 0.0
    value, count = max(histogram.items(), key=lambda item: item[1])
    return value, count / total
