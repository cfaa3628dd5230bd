"""Explicit equations of the dual varieties and of the Segre P^2 x P^3."""
import logging
from itertools import combinations
from typing import List, Optional

from engines.polycore.polynomial import Polynomial
from engines.polycore.rings import RingSpec, matrix_names
from engines.polycore.scalars import Field
from engines.varieties.cases import CaseId, case_info
from utils.errors import UnsupportedCaseError

logger = logging.getLogger(__name__)


class DualModel:
    """Ambient ring and defining equations of a dual variety"""

    def __init__(self, case: CaseId, spec: RingSpec, generators: List[Polynomial], notes: str = ""):
        self.case = case
        self.spec = spec
        self.generators = generators
        self.notes = notes

    def __repr__(self) -> str:
        return f"DualModel({self.case.value}: {len(self.generators)} generators in {self.spec.ngens} variables)"


def case_ring(case: str, field: Field) -> RingSpec:
    return RingSpec(case_info(case).coordinates, field)


def _matrix(spec: RingSpec, prefix: str, rows: int, cols: int) -> List[List[Polynomial]]:
    names = matrix_names(prefix, rows, cols)
    return [[Polynomial.variable(spec, names[i * cols + j]) for j in range(cols)] for i in range(rows)]


def _vector(spec: RingSpec, prefix: str, count: int) -> List[Polynomial]:
    return [Polynomial.variable(spec, f"{prefix}{i}") for i in range(1, count + 1)]


def two_by_two_minors(M: List[List[Polynomial]]) -> List[Polynomial]:
    rows, cols = len(M), len(M[0])
    return [
        M[i][k] * M[j][l] - M[i][l] * M[j][k]
        for i, j in combinations(range(rows), 2)
        for k, l in combinations(range(cols), 2)
    ]


def adjugate(M: List[List[Polynomial]]) -> List[List[Polynomial]]:
    """Transposed cofactor matrix of a 3x3 matrix"""

    def cofactor(i: int, j: int) -> Polynomial:
        r = [k for k in range(3) if k != i]
        c = [k for k in range(3) if k != j]
        minor = M[r[0]][c[0]] * M[r[1]][c[1]] - M[r[0]][c[1]] * M[r[1]][c[0]]
        return minor if (i + j) % 2 == 0 else -minor

    return [[cofactor(j, i) for j in range(3)] for i in range(3)]


def _genus4_ideal(spec: RingSpec) -> List[Polynomial]:
    p = _vector(spec, "p", 3)
    q = _vector(spec, "q", 3)
    D = _matrix(spec, "d", 3, 3)
    pD = [sum((p[i] * D[i][j] for i in range(3)), Polynomial.zero(spec)) for j in range(3)]
    Dq = [sum((D[i][j] * q[j] for j in range(3)), Polynomial.zero(spec)) for i in range(3)]
    adj = [entry for row in adjugate(D) for entry in row]
    trace = D[0][0] + D[1][1] + D[2][2]
    return pD + Dq + adj + [trace]


def _genus5_ideal(spec: RingSpec) -> List[Polynomial]:
    D = _matrix(spec, "d", 4, 3)
    p = _vector(spec, "p", 4)
    pD = [sum((p[i] * D[i][j] for i in range(4)), Polynomial.zero(spec)) for j in range(3)]
    return two_by_two_minors(D) + pD


def genus6c_cubic(spec: RingSpec) -> Polynomial:
    """p1(q2^2 - q1q3) + p2(q1q4 - q2q3) + p3(q3^2 - q2q4) + q5 * sum r_i q_i"""
    p = _vector(spec, "p", 3)
    r = _vector(spec, "r", 5)
    q = _vector(spec, "q", 5)
    cubic = (
        p[0] * (q[1] ** 2 - q[0] * q[2])
        + p[1] * (q[0] * q[3] - q[1] * q[2])
        + p[2] * (q[2] ** 2 - q[1] * q[3])
    )
    return cubic + q[4] * sum((r[i] * q[i] for i in range(5)), Polynomial.zero(spec))


def build_dual_ideal(case: str, field: Field) -> DualModel:
    """Ambient ring and generators of the dual variety for G4, G5 and G6C"""
    info = case_info(case)
    case_id = info.case
    if case_id not in (CaseId.G4, CaseId.G5, CaseId.G6C):
        raise UnsupportedCaseError(f"No equations for {case_id.value}: {info.note}")
    spec = case_ring(case_id, field)
    if case_id == CaseId.G4:
        generators = _genus4_ideal(spec)
    elif case_id == CaseId.G5:
        generators = _genus5_ideal(spec)
    else:
        generators = [genus6c_cubic(spec)]
    logger.info(f"Built dual ideal of {case_id.value}: {len(generators)} generators in {spec.ngens} variables")
    return DualModel(case_id, spec, generators, info.note)


def segre_ring(field: Field, prefix: str = "z") -> RingSpec:
    """Coordinates z_jk of P^11 = P(3x4 matrices)"""
    return RingSpec(matrix_names(prefix, 3, 4), field)


def segre_ideal(spec: Optional[RingSpec] = None, field: Optional[Field] = None) -> List[Polynomial]:
    """The 18 minors cutting out P^2 x P^3 in P^11"""
    spec = spec or segre_ring(field or Field(0))
    return two_by_two_minors(_matrix(spec, "z", 3, 4))
