import logging
from typing import Any, List, Sequence

from sympy.polys.matrices import DomainMatrix

from engines.groebner.buchberger import GroebnerBasis, normal_form
from engines.groebner.hilbert import hilbert_data
from engines.polycore.polynomial import Polynomial, poly_diff, poly_eval, poly_subst
from engines.polycore.rings import RingSpec
from engines.polycore.scalars import Scalar, as_raw_vector
from utils.errors import (
    DegenerateDrawError,
    DimensionMismatchError,
    NonFiniteSchemeError,
    PointNotOnVarietyError,
    PreconditionError,
    RingMismatchError,
    ZeroPointError,
)
from utils.rng import make_rng

logger = logging.getLogger(__name__)

MAX_DRAWS = 16


def matrix_rank(rows: List[List[Any]], spec: RingSpec, ncols: int) -> int:
    if not rows:
        return 0
    return DomainMatrix(rows, (len(rows), ncols), spec.field.domain).rank()


def jacobian_rank_at(generators: Sequence[Polynomial], point: Sequence[Any]) -> int:
    """Rank of (dg_i/dx_j) at a point of the variety"""
    if not generators:
        return 0
    spec = generators[0].spec
    for g in generators:
        if g.spec != spec:
            raise RingMismatchError(f"Generators live in different rings: {spec} and {g.spec}")
    if len(point) != spec.ngens:
        raise DimensionMismatchError(f"Point has {len(point)} coordinates, ring has {spec.ngens} variables")
    values = as_raw_vector(point, spec.field)
    if not any(values):
        raise ZeroPointError("The zero vector is not a projective point")

    for i, g in enumerate(generators):
        if poly_eval(g, values):
            raise PointNotOnVarietyError(i)

    rows = [
        [poly_eval(poly_diff(g, j), values).value for j in range(spec.ngens)]
        for g in generators
    ]
    return matrix_rank(rows, spec, spec.ngens)


def random_coordinate_change(generators: Sequence[Polynomial], seed: int) -> List[Polynomial]:
    """Generators under x_i -> sum_j A_ij x_j for a random invertible A"""
    if not generators:
        return []
    spec = generators[0].spec
    field = spec.field
    rng = make_rng(seed)
    n = spec.ngens
    for _ in range(MAX_DRAWS):
        A = [field.random_vector(rng, n) for _ in range(n)]
        if matrix_rank(A, spec, n) == n:
            break
    else:
        raise DegenerateDrawError(f"No invertible {n}x{n} matrix in {MAX_DRAWS} draws")
    assignment = {i: Polynomial.linear_form(spec, row) for i, row in enumerate(A)}
    return [poly_subst(g, assignment) for g in generators]


def _standard_monomials(gb: GroebnerBasis, degree: int) -> List[tuple]:
    """Monomials of the given degree outside the leading-term ideal"""
    leads = gb.leading_monomials()
    n = gb.spec.ngens

    def standard(m: tuple) -> bool:
        return not any(all(a >= b for a, b in zip(m, lead)) for lead in leads)

    layer = {(0,) * n} if standard((0,) * n) else set()
    for _ in range(degree):
        grown = set()
        for m in layer:
            for i in range(n):
                child = m[:i] + (m[i] + 1,) + m[i + 1:]
                if standard(child):
                    grown.add(child)
        layer = grown
    return sorted(layer)


def locate_point(gb: GroebnerBasis) -> List[Scalar]:
    """The point cut out by an ideal whose projective scheme is one reduced point.

    In a degree where the quotient is one-dimensional it is spanned by a single
    standard monomial s = x_k * r; the point has v_k = 1 and v_i equal to the
    coefficient of s in the normal form of x_i * r.
    """
    data = hilbert_data(gb)
    if data.projective_dim != 0:
        raise NonFiniteSchemeError(f"Expected a finite scheme, got projective dimension {data.projective_dim}")
    if data.degree != 1:
        raise PreconditionError(f"Expected a single point, the scheme has degree {data.degree}")

    spec = gb.spec
    degree = max(1, len(data.numerator_coefficients) - 1)
    standard = _standard_monomials(gb, degree)
    if len(standard) != 1:
        raise NonFiniteSchemeError(f"Quotient in degree {degree} has {len(standard)} standard monomials")
    s = standard[0]
    k = next(i for i, e in enumerate(s) if e)
    r = s[:k] + (s[k] - 1,) + s[k + 1:]

    point: List[Scalar] = []
    for i in range(spec.ngens):
        monomial = r[:i] + (r[i] + 1,) + r[i + 1:]
        remainder = normal_form(Polynomial.from_terms(spec, {monomial: 1}), gb)
        point.append(remainder.coefficient(s))
    logger.info(f"Located point {[str(v) for v in point]} in {spec}")
    return point
