from engines.polycore.orders import MonomialOrder
from .buchberger import (
    GroebnerBasis,
    GroebnerLimits,
    buchberger,
    ideal_contains,
    normal_form,
    s_pair_certificate,
)
from .hilbert import HilbertData, hilbert_data, hilbert_function
from .jacobian import jacobian_rank_at, locate_point, matrix_rank, random_coordinate_change

__all__ = [
    "MonomialOrder",
    "GroebnerBasis",
    "GroebnerLimits",
    "buchberger",
    "ideal_contains",
    "normal_form",
    "s_pair_certificate",
    "HilbertData",
    "hilbert_data",
    "hilbert_function",
    "jacobian_rank_at",
    "locate_point",
    "matrix_rank",
    "random_coordinate_change",
]
