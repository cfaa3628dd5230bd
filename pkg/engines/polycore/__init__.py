from .scalars import Field, Scalar
from .orders import MonomialOrder
from .rings import RingSpec, indexed_names, matrix_names
from .polynomial import Polynomial, format_poly, normalize, poly_diff, poly_eval, poly_subst
from .parser import parse_poly

__all__ = [
    "Field",
    "Scalar",
    "MonomialOrder",
    "RingSpec",
    "indexed_names",
    "matrix_names",
    "Polynomial",
    "format_poly",
    "normalize",
    "poly_diff",
    "poly_eval",
    "poly_subst",
    "parse_poly",
]
