import logging
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

from engines.groebner.buchberger import GroebnerLimits, buchberger
from engines.groebner.hilbert import HilbertData, hilbert_data
from engines.polycore.polynomial import Polynomial
from engines.polycore.rings import RingSpec, indexed_names
from engines.polycore.scalars import Field
from engines.varieties.cases import CaseId
from engines.varieties.ideals import DualModel, build_dual_ideal
from utils.errors import NotACurveError, PreconditionError
from utils.rng import make_rng

logger = logging.getLogger(__name__)


def dual_hilbert(case: str, field: Field, limits: Optional[GroebnerLimits] = None) -> HilbertData:
    """Hilbert data of the dual variety's ideal"""
    model = build_dual_ideal(case, field)
    return hilbert_data(buchberger(model.generators, limits=limits))


def section_invariants(model: DualModel, limits: Optional[GroebnerLimits] = None) -> Dict[str, object]:
    data = hilbert_data(buchberger(model.generators, limits=limits))
    return {
        "dim": data.projective_dim,
        "degree": data.degree,
        "hilbert_polynomial": str(data.hilbert_polynomial),
    }


def linear_section(case: str, codim: int, seed: int, field: Field) -> DualModel:
    """The dual ideal plus codim random linear forms"""
    model = build_dual_ideal(case, field)
    rng = make_rng(seed)
    spec = model.spec
    forms = [Polynomial.linear_form(spec, field.random_vector(rng, spec.ngens)) for _ in range(codim)]
    return DualModel(model.case, spec, model.generators + forms, f"codimension {codim} linear section")


def linear_section_invariants(
    case: str,
    codim: int,
    seed: int,
    field: Field,
    limits: Optional[GroebnerLimits] = None,
) -> Dict[str, object]:
    result = section_invariants(linear_section(case, codim, seed, field), limits)
    logger.info(f"Codimension {codim} section of {case} (seed {seed}): {result}")
    return result


# curves in P^2 x P^3 cut by three (1,1) forms and one (1,2) form


def plane_space_ring(field: Field) -> RingSpec:
    """x1..x3 of bidegree (1,0), y1..y4 of bidegree (0,1)"""
    return RingSpec(indexed_names("x", 3) + indexed_names("y", 4), field, grading_split=3)


def random_bihomogeneous(spec: RingSpec, a: int, b: int, rng) -> Polynomial:
    k = spec.grading_split
    field = spec.field
    terms = {}
    for xs in combinations_with_replacement(range(k), a):
        for ys in combinations_with_replacement(range(k, spec.ngens), b):
            monomial = [0] * spec.ngens
            for i in xs + ys:
                monomial[i] += 1
            terms[tuple(monomial)] = field.random_element(rng)
    return Polynomial.from_terms(spec, terms)


def random_cor46_input(field: Field, seed: int) -> Tuple[List[Polynomial], Polynomial]:
    """Three random (1,1) forms and one random (1,2) form"""
    spec = plane_space_ring(field)
    rng = make_rng(seed)
    eta = [random_bihomogeneous(spec, 1, 1, rng) for _ in range(3)]
    return eta, random_bihomogeneous(spec, 1, 2, rng)


def split_by_y(xi: Polynomial) -> List[Polynomial]:
    """(1,1) forms l_1..l_4 with xi = sum l_i y_i; each term goes to its smallest y"""
    spec = xi.spec
    k = spec.grading_split
    parts: List[Dict[tuple, object]] = [{} for _ in range(spec.ngens - k)]
    for monomial, coeff in xi.terms():
        a = next(i for i in range(k, spec.ngens) if monomial[i])
        rest = list(monomial)
        rest[a] -= 1
        parts[a - k][tuple(rest)] = coeff
    return [Polynomial.from_terms(spec, terms) for terms in parts]


def bilinear_to_matrix_form(f: Polynomial, target: RingSpec) -> Polynomial:
    """x_k y_j -> d_jk"""
    spec = f.spec
    k = spec.grading_split
    result = Polynomial.zero(target)
    for monomial, coeff in f.terms():
        x_index = next(i for i in range(k) if monomial[i])
        y_index = next(i for i in range(k, spec.ngens) if monomial[i]) - k
        result = result + Polynomial.variable(target, f"d{y_index + 1}{x_index + 1}") * coeff
    return result


def cor46_section(eta: Sequence[Polynomial], xi: Polynomial) -> DualModel:
    """The genus-5 dual ideal cut by p_i = L_i(D) and the three forms eta read on D"""
    for f in eta:
        if f.bidegree() != (1, 1):
            raise PreconditionError(f"{f} is not of bidegree (1, 1)")
    if xi.bidegree() != (1, 2):
        raise PreconditionError(f"{xi} is not of bidegree (1, 2)")
    model = build_dual_ideal(CaseId.G5, xi.spec.field)
    spec = model.spec
    graph = [
        Polynomial.variable(spec, f"p{i + 1}") - bilinear_to_matrix_form(l, spec)
        for i, l in enumerate(split_by_y(xi))
    ]
    linear = [bilinear_to_matrix_form(f, spec) for f in eta]
    return DualModel(CaseId.G5, spec, model.generators + graph + linear, "section by p = L(D) and the eta forms")


def cor46_round_trip(
    eta: Sequence[Polynomial],
    xi: Polynomial,
    limits: Optional[GroebnerLimits] = None,
) -> Dict[str, object]:
    """Degree, genus and Hilbert polynomial of the curve section"""
    model = cor46_section(eta, xi)
    data = hilbert_data(buchberger(model.generators, limits=limits))
    if data.projective_dim != 1:
        raise NotACurveError(f"Section has projective dimension {data.projective_dim}, not a curve")
    genus = 1 - int(data.hilbert_polynomial.evaluate([0]).to_python())
    return {
        "dim": data.projective_dim,
        "degree": data.degree,
        "genus": genus,
        "hilbert_polynomial": str(data.hilbert_polynomial),
    }
