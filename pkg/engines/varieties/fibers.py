"""Fibers of E and E-perp over sampled base points.

Vectors of V_E and V_E* are written in the same coordinates, paired by the dot
product:
  G4  p (3), q (3), the traceless matrix D by its entries without d33 (8)
  G5  the 4x3 matrix D row by row (12), p (4)
  G8  V' (5), then the Plücker coordinates z12 z13 z14 z15 z23 z24 z25 (7)
The sampled dual point of G4 is written in the 15 coordinates of the ideal.
"""
import logging
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from engines.lindual.subspace import Subspace, annihilator, random_subspace
from engines.polycore.polynomial import poly_eval
from engines.polycore.scalars import Field, Scalar
from engines.varieties.cases import CaseId, case_info
from engines.varieties.ideals import build_dual_ideal
from utils.errors import DegenerateDrawError, UnsupportedCaseError
from utils.rng import derive_seed, make_rng

logger = logging.getLogger(__name__)

MAX_DRAWS = 16

PLUCKER_PAIRS = list(combinations(range(5), 2))
# Plücker coordinates of P(U^7), and the three solved for by the B5 constraints
KEPT_PAIRS = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]
SOLVED_PAIRS = [(2, 3), (2, 4), (3, 4)]
# B5 is fixed once for the whole workbench
B5_SEED = 5


class FiberPoint:
    def __init__(self, case: CaseId, base: Dict[str, List[Any]], E_s: Subspace, E_perp: Subspace, point: List[Scalar]):
        self.case = case
        self.base = base
        self.E_s = E_s
        self.E_perp = E_perp
        self.point = point

    def __repr__(self) -> str:
        return f"FiberPoint({self.case.value}, E_s dim {self.E_s.dim}, E_perp dim {self.E_perp.dim})"


def _dot(u: Sequence[Any], v: Sequence[Any], field: Field) -> Any:
    total = field.domain.zero
    for a, b in zip(u, v):
        total += a * b
    return total


def _nonzero_vector(field: Field, rng: np.random.Generator, n: int) -> List[Any]:
    for _ in range(MAX_DRAWS):
        v = field.random_vector(rng, n)
        if any(v):
            return v
    raise DegenerateDrawError(f"No nonzero vector in {MAX_DRAWS} draws")


def _random_in(s: Subspace, rng: np.random.Generator, nonzero: bool = True) -> List[Any]:
    """Random combination of the basis of s"""
    for _ in range(MAX_DRAWS):
        weights = s.field.random_vector(rng, s.dim)
        v = [s.field.domain.zero] * s.ambient
        for w, row in zip(weights, s.rows):
            v = [a + w * b for a, b in zip(v, row)]
        if any(v) or not nonzero:
            return v
    raise DegenerateDrawError(f"No nonzero vector of {s} in {MAX_DRAWS} draws")


def _perp_of(v: Sequence[Any], field: Field) -> Subspace:
    return annihilator(Subspace(field, len(v), [list(v)]))


# genus 4


def g4_fiber(y: Sequence[Any], x: Sequence[Any], field: Field) -> Subspace:
    """E-perp over ([y], [x]) in B6: p with <y,p> = 0, q with <q,x> = 0, and y (x) x"""
    y = [field.convert(v) for v in y]
    x = [field.convert(v) for v in x]
    zero = field.domain.zero
    vectors = []
    for p in _perp_of(y, field).rows:
        vectors.append(list(p) + [zero] * 11)
    for q in _perp_of(x, field).rows:
        vectors.append([zero] * 3 + list(q) + [zero] * 8)
    D = [y[i] * x[j] for i in range(3) for j in range(3)]
    vectors.append([zero] * 6 + D[:8])
    return Subspace(field, 14, vectors)


def g4_point(y: Sequence[Any], x: Sequence[Any], p: Sequence[Any], q: Sequence[Any], scale: Any, field: Field) -> List[Scalar]:
    """(p, q, scale * y (x) x) in the 15 coordinates p1..p3, q1..q3, d11..d33"""
    y, x, p, q = ([field.convert(v) for v in vec] for vec in (y, x, p, q))
    c = field.convert(scale)
    D = [c * y[i] * x[j] for i in range(3) for j in range(3)]
    return [Scalar(v, field) for v in list(p) + list(q) + D]


def _sample_g4(field: Field, rng: np.random.Generator) -> FiberPoint:
    y = _nonzero_vector(field, rng, 3)
    x = _random_in(_perp_of(y, field), rng)
    p = _random_in(_perp_of(y, field), rng, nonzero=False)
    q = _random_in(_perp_of(x, field), rng, nonzero=False)
    E_perp = g4_fiber(y, x, field)
    point = g4_point(y, x, p, q, field.random_nonzero(rng), field)
    return FiberPoint(CaseId.G4, {"y": y, "x": x}, annihilator(E_perp), E_perp, point)


# genus 5


def g5_fiber(u: Sequence[Any], field: Field) -> Subspace:
    """E-perp over [u] in P^3: D = u w^t for all w, and p with <p,u> = 0"""
    u = [field.convert(v) for v in u]
    zero = field.domain.zero
    vectors = []
    for j in range(3):
        D = [u[i] if k == j else zero for i in range(4) for k in range(3)]
        vectors.append(D + [zero] * 4)
    for p in _perp_of(u, field).rows:
        vectors.append([zero] * 12 + list(p))
    return Subspace(field, 16, vectors)


def g5_point(u: Sequence[Any], w: Sequence[Any], p: Sequence[Any], field: Field) -> List[Scalar]:
    """(D = u w^t, p) in the 16 coordinates d11..d43, p1..p4"""
    u, w, p = ([field.convert(v) for v in vec] for vec in (u, w, p))
    D = [u[i] * w[j] for i in range(4) for j in range(3)]
    return [Scalar(v, field) for v in D + list(p)]


def g5_vertex_point(field: Field, seed: int) -> List[Scalar]:
    """A point with D = 0 and random nonzero p"""
    rng = make_rng(seed)
    return [Scalar(v, field) for v in [field.domain.zero] * 12 + _nonzero_vector(field, rng, 4)]


def _sample_g5(field: Field, rng: np.random.Generator) -> FiberPoint:
    u = _nonzero_vector(field, rng, 4)
    w = _nonzero_vector(field, rng, 3)
    p = _random_in(_perp_of(u, field), rng, nonzero=False)
    E_perp = g5_fiber(u, field)
    return FiberPoint(CaseId.G5, {"u": u, "w": w}, annihilator(E_perp), E_perp, g5_point(u, w, p, field))


# genus 8


def b5_constraints(field: Field) -> List[List[Any]]:
    """Three Plücker-linear forms z_solved - L(z_kept) defining B5 in G(2,5)"""
    rng = make_rng(B5_SEED)
    constraints = []
    for target in SOLVED_PAIRS:
        coefficients = field.random_vector(rng, len(KEPT_PAIRS))
        row = {pair: -c for pair, c in zip(KEPT_PAIRS, coefficients)}
        row[target] = field.domain.one
        constraints.append([row.get(pair, field.domain.zero) for pair in PLUCKER_PAIRS])
    return constraints


def plucker(a: Sequence[Any], b: Sequence[Any]) -> List[Any]:
    return [a[i] * b[j] - a[j] * b[i] for i, j in PLUCKER_PAIRS]


def _second_row(a: List[Any], constraints: List[List[Any]], field: Field) -> Subspace:
    """Vectors b with plucker(a, b) on B5; always contains a"""
    rows = []
    for c in constraints:
        # coefficient of b_k in sum_{i<j} c_ij (a_i b_j - a_j b_i)
        row = [field.domain.zero] * 5
        for (i, j), cij in zip(PLUCKER_PAIRS, c):
            row[j] += cij * a[i]
            row[i] -= cij * a[j]
        rows.append(row)
    return annihilator(Subspace(field, 5, rows))


def g8_fiber(a: Sequence[Any], b: Sequence[Any], field: Field) -> Subspace:
    """E over [W] with W = span(a, b): W in V' and the Plücker point in U^7"""
    a = [field.convert(v) for v in a]
    b = [field.convert(v) for v in b]
    xi = dict(zip(PLUCKER_PAIRS, plucker(a, b)))
    zero = field.domain.zero
    return Subspace(
        field,
        12,
        [a + [zero] * 7, b + [zero] * 7, [zero] * 5 + [xi[pair] for pair in KEPT_PAIRS]],
    )


def _sample_g8(field: Field, rng: np.random.Generator) -> FiberPoint:
    constraints = b5_constraints(field)
    for _ in range(MAX_DRAWS):
        a = _nonzero_vector(field, rng, 5)
        solutions = _second_row(a, constraints, field)
        b = _random_in(solutions, rng)
        E_s = g8_fiber(a, b, field)
        if E_s.dim == 3:
            break
        logger.warning(f"Degenerate B5 draw: plane of dimension {E_s.dim - 1}, retrying")
    else:
        raise DegenerateDrawError(f"No 2-plane on B5 in {MAX_DRAWS} draws")
    E_perp = annihilator(E_s)
    point = [Scalar(v, field) for v in _random_in(E_perp, rng)]
    return FiberPoint(CaseId.G8, {"a": a, "b": b}, E_s, E_perp, point)


_SAMPLERS = {CaseId.G4: _sample_g4, CaseId.G5: _sample_g5, CaseId.G8: _sample_g8}


def fiber_sample(case: str, seed: int, field: Field) -> FiberPoint:
    """Fibers of E and E-perp over a random base point, plus a point of P(E-perp)"""
    case_id = case_info(case).case
    if case_id not in _SAMPLERS:
        raise UnsupportedCaseError(f"No fiber sampler for {case_id.value}")
    return _SAMPLERS[case_id](field, make_rng(seed))


def containment_check(case: str, N: int, seed: int, field: Field) -> int:
    """Number of fiber samples at which some generator of the dual ideal does not vanish"""
    case_id = case_info(case).case
    if case_id not in (CaseId.G4, CaseId.G5):
        raise UnsupportedCaseError(f"No containment check for {case_id.value}")
    model = build_dual_ideal(case_id, field)
    failures = 0
    for i in range(N):
        sample = fiber_sample(case_id, derive_seed(seed, case_id.value, i), field)
        if any(poly_eval(g, sample.point) for g in model.generators):
            failures += 1
    if failures:
        logger.warning(f"{failures} of {N} {case_id.value} samples are off the dual variety")
    return failures


def fiber_orthogonality(case: str, N: int, seed: int, field: Field) -> int:
    """Samples where E_s and E-perp fail to pair to zero or have the wrong dimensions"""
    info = case_info(case)
    failures = 0
    for i in range(N):
        sample = fiber_sample(info.case, derive_seed(seed, info.case.value, i), field)
        paired = all(
            _dot(u, w, field) == field.domain.zero for u in sample.E_s.rows for w in sample.E_perp.rows
        )
        dims = (sample.E_s.dim, sample.E_perp.dim) == (info.rank_E, info.rank_E_perp)
        if not (paired and dims):
            failures += 1
    return failures


def random_lambda(case: str, dim: int, seed: int, field: Field, ambient: Optional[int] = None) -> Subspace:
    ambient = ambient or case_info(case).section_dim
    return random_subspace(dim, ambient, field, seed)
