"""Singular-locus checks on the genus-6 C-type cubic and finite-field probes.

The cubic's singular locus is checked symbolically by substituting the
parametrizations of its two components into all 13 partials. The probes work
over F_p: random 6-dimensional linear sections of the cubic (one ordinary double
point expected) and lines and planes through points of P^2 x P^3.
"""
import logging
from typing import Dict, List, Optional, Sequence

from engines.groebner.buchberger import GroebnerLimits, buchberger
from engines.groebner.hilbert import hilbert_data
from engines.groebner.jacobian import locate_point, matrix_rank
from engines.lindual.subspace import Subspace, random_subspace
from engines.polycore.polynomial import Polynomial, poly_diff, poly_eval, poly_subst
from engines.polycore.rings import RingSpec, indexed_names
from engines.polycore.scalars import Field, Scalar
from engines.varieties.cases import CaseId
from engines.varieties.ideals import case_ring, genus6c_cubic, segre_ideal, segre_ring
from utils.errors import (
    DegenerateDrawError,
    LinearSpaceInSegreError,
    NonFiniteSchemeError,
    UnknownComponentError,
)
from utils.rng import make_rng

logger = logging.getLogger(__name__)

MAX_DRAWS = 16

COMPONENT_ALIASES = {"q=0": "G6C:q0", "G6C:q0": "G6C:q0", "S_F": "G6C:SF", "G6C:SF": "G6C:SF"}


def _cubic_ring(field: Field) -> RingSpec:
    return case_ring(CaseId.G6C, field)


def incidence_vector(spec: RingSpec) -> List[Polynomial]:
    """The point x of A_C over [q]: the twisted-cubic quadrics, then q5*q1..q5*q5"""
    q = [Polynomial.variable(spec, f"q{i}") for i in range(1, 6)]
    return [
        q[1] ** 2 - q[0] * q[2],
        q[0] * q[3] - q[1] * q[2],
        q[2] ** 2 - q[1] * q[3],
    ] + [q[4] * qi for qi in q]


def cubic_identity_check(field: Field, seed: int = 0) -> bool:
    """The pairing of (p, r) with the incidence vector equals the cubic"""
    spec = _cubic_ring(field)
    cubic = genus6c_cubic(spec)
    dual = [Polynomial.variable(spec, name) for name in indexed_names("p", 3) + indexed_names("r", 5)]
    pairing = sum((a * b for a, b in zip(dual, incidence_vector(spec))), Polynomial.zero(spec))
    if not (pairing - cubic).is_zero:
        return False
    point = field.random_vector(make_rng(seed), spec.ngens)
    return poly_eval(pairing, point) == poly_eval(cubic, point)


def twisted_cubic_cone(spec: RingSpec) -> List[Polynomial]:
    """Cone over the twisted cubic with vertex {q = 0}"""
    return incidence_vector(spec)[:3] + [Polynomial.variable(spec, "q5")]


def component_parametrization(component: str, field: Field) -> Dict[str, Polynomial]:
    """Substitution for the q5 = 0 linear component or the closure S_F"""
    if component not in COMPONENT_ALIASES:
        raise UnknownComponentError(f"Unknown singular component: {component}")
    component = COMPONENT_ALIASES[component]
    if component == "G6C:q0":
        params = RingSpec(indexed_names("p", 3) + indexed_names("r", 5), field)
        return {f"q{i}": Polynomial.zero(params) for i in range(1, 6)}

    params = RingSpec(("q2", "p3", "r2", "r3", "r4", "r5"), field)
    q2, p3, r2, r3, r4 = (Polynomial.variable(params, name) for name in ("q2", "p3", "r2", "r3", "r4"))
    return {
        "q1": Polynomial.one(params),
        "q3": q2 ** 2,
        "q4": q2 ** 3,
        "q5": Polynomial.zero(params),
        "p1": q2 ** 2 * p3,
        "p2": q2 * p3,
        "r1": -(q2 * r2) - q2 ** 2 * r3 - q2 ** 3 * r4,
    }


def _substitute(f: Polynomial, assignment: Dict[str, Polynomial]) -> Polynomial:
    target = next(iter(assignment.values())).spec
    return poly_subst(f, assignment, target)


def sing_gradient_check(case: str, component: str, field: Field) -> bool:
    """Every partial of the cubic vanishes identically on the component"""
    if case != CaseId.G6C:
        raise UnknownComponentError(f"Singular components are only known for G6C, not {case}")
    spec = _cubic_ring(field)
    cubic = genus6c_cubic(spec)
    assignment = component_parametrization(component, field)
    return all(_substitute(poly_diff(cubic, i), assignment).is_zero for i in range(spec.ngens))


def cone_contains_component(field: Field) -> bool:
    """The twisted-cubic cone equations vanish on S_F"""
    spec = _cubic_ring(field)
    assignment = component_parametrization("S_F", field)
    return all(_substitute(f, assignment).is_zero for f in twisted_cubic_cone(spec))


def generic_cubic_point(seed: int, field: Field) -> List[Scalar]:
    """A point of the cubic with q5 != 0, solving the cubic for r5"""
    spec = _cubic_ring(field)
    cubic = genus6c_cubic(spec)
    rng = make_rng(seed)
    r5 = spec.index["r5"]
    q5 = spec.index["q5"]
    values = field.random_vector(rng, spec.ngens)
    values[q5] = field.random_nonzero(rng)
    values[r5] = field.domain.zero
    rest = poly_eval(cubic, values).value
    values[r5] = -rest / (values[q5] ** 2)
    return [Scalar(v, field) for v in values]


def gradient_nonzero_at(point: Sequence[Scalar], field: Field) -> bool:
    spec = _cubic_ring(field)
    cubic = genus6c_cubic(spec)
    return any(poly_eval(poly_diff(cubic, i), point) for i in range(spec.ngens))


# four-fold sections of the cubic


def restrict_to(f: Polynomial, basis: Sequence[Sequence], names: Sequence[str]) -> Polynomial:
    """f on the linear space spanned by the basis rows, in coordinates t_k"""
    spec = f.spec
    target = RingSpec(names, spec.field)
    t = Polynomial.variables(target)
    assignment = {}
    for i, name in enumerate(spec.names):
        image = Polynomial.zero(target)
        for k, row in enumerate(basis):
            if row[i]:
                image = image + t[k] * Scalar(row[i], spec.field)
        assignment[name] = image
    return poly_subst(f, assignment, target)


def affine_hessian_rank(F: Polynomial, point: Sequence[Scalar]) -> int:
    """Rank of the quadratic part of F in the affine chart centred at a singular point"""
    spec = F.spec
    k = next(i for i, v in enumerate(point) if v)
    scaled = [v / point[k] for v in point]
    chart = RingSpec([f"s{i}" for i in range(spec.ngens) if i != k], spec.field)
    s = iter(Polynomial.variables(chart))
    assignment = {
        i: Polynomial.constant(chart, 1) if i == k else next(s) + Polynomial.constant(chart, scaled[i])
        for i in range(spec.ngens)
    }
    G = poly_subst(F, assignment, chart)
    origin = [0] * chart.ngens
    hessian = [
        [poly_eval(poly_diff(poly_diff(G, i), j), origin).value for j in range(chart.ngens)]
        for i in range(chart.ngens)
    ]
    return matrix_rank(hessian, chart, chart.ngens)


def singular_scheme(F: Polynomial, limits: GroebnerLimits):
    generators = [F] + [poly_diff(F, i) for i in range(F.spec.ngens)]
    gb = buchberger([g for g in generators if not g.is_zero], limits=limits)
    return gb, hilbert_data(gb)


def cor63_probe(seed: int, field: Field, limits: Optional[GroebnerLimits] = None, Lambda: Optional[Subspace] = None) -> Dict[str, object]:
    """Singular points of the cubic restricted to a random P^5"""
    limits = limits or GroebnerLimits()
    spec = _cubic_ring(field)
    cubic = genus6c_cubic(spec)
    Lambda = Lambda or random_subspace(6, spec.ngens, field, seed)
    names = indexed_names("t", Lambda.dim)
    F = restrict_to(cubic, Lambda.rows, names)
    gb, data = singular_scheme(F, limits)
    if data.projective_dim != 0:
        raise NonFiniteSchemeError(f"Singular scheme of the section has projective dimension {data.projective_dim}")
    if data.degree != 1:
        return {"sing_count": data.degree, "on_q0_component": None, "affine_hessian_rank": None}

    t_point = locate_point(gb)
    ambient = [
        sum((Scalar(row[i], field) * t for row, t in zip(Lambda.rows, t_point)), field.zero())
        for i in range(spec.ngens)
    ]
    q_indices = [spec.index[f"q{i}"] for i in range(1, 6)]
    result = {
        "sing_count": data.degree,
        "on_q0_component": all(not ambient[i] for i in q_indices),
        "affine_hessian_rank": affine_hessian_rank(F, t_point),
    }
    logger.info(f"Section singularities for seed {seed}: {result}")
    return result


def special_lambda(field: Field, seed: int) -> Subspace:
    """A random 6-dimensional space inside {q5 = 0}"""
    spec = _cubic_ring(field)
    q5 = spec.index["q5"]
    rng = make_rng(seed)
    for _ in range(MAX_DRAWS):
        rows = []
        for _ in range(6):
            row = field.random_vector(rng, spec.ngens)
            row[q5] = field.domain.zero
            rows.append(row)
        s = Subspace(field, spec.ngens, rows)
        if s.dim == 6:
            return s
    raise DegenerateDrawError("No 6-dimensional space inside {q5 = 0}")


# lines and planes against P^2 x P^3


def segre_point(x: Sequence, y: Sequence, field: Field) -> List:
    return [field.convert(a) * field.convert(b) for a in x for b in y]


def lemma42_probe(kind: str, seed: int, field: Field, share_first_factor: bool = False, limits: Optional[GroebnerLimits] = None) -> int:
    """Degree of the intersection of P^2 x P^3 with the span of 2 or 3 random points on it"""
    if kind not in ("line2", "plane3"):
        raise UnknownComponentError(f"Unknown probe kind: {kind}")
    count = 2 if kind == "line2" else 3
    rng = make_rng(seed)
    spec = segre_ring(field)

    for _ in range(MAX_DRAWS):
        xs = [field.random_vector(rng, 3) for _ in range(count)]
        ys = [field.random_vector(rng, 4) for _ in range(count)]
        if share_first_factor:
            xs = [xs[0]] * count
        else:
            # no two points on a common fiber of either projection
            if Subspace(field, 3, xs).dim < min(count, 3) or Subspace(field, 4, ys).dim < count:
                continue
        points = [segre_point(x, y, field) for x, y in zip(xs, ys)]
        span = Subspace(field, spec.ngens, points)
        if span.dim == count:
            break
    else:
        raise DegenerateDrawError(f"No {count} points in general position in {MAX_DRAWS} draws")

    names = indexed_names("t", count)
    restricted = [restrict_to(m, points, names) for m in segre_ideal(spec)]
    nonzero = [f for f in restricted if not f.is_zero]
    if not nonzero:
        raise LinearSpaceInSegreError(f"The {kind} spanned by the points lies inside P^2 x P^3")
    data = hilbert_data(buchberger(nonzero, limits=limits))
    if data.projective_dim != 0:
        raise LinearSpaceInSegreError(f"The {kind} meets P^2 x P^3 in a positive-dimensional set")
    return data.degree
