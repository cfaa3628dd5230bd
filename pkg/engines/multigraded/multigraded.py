"""Bigraded Hilbert series of complete intersections in P^m x P^n.

The series is prod(1 - u^a_i v^b_i) / ((1 - u)^(m+1) (1 - v)^(n+1)); it is
expanded by exact multiplication truncated to the requested window.
"""
import logging
from math import comb
from typing import Dict, List, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator
from sympy.polys.domains import ZZ
from sympy.polys.rings import PolyElement, ring

from utils.errors import NoAffineFitError, NotACurveError, PreconditionError

logger = logging.getLogger(__name__)

_UV_RING, _U, _V = ring("u,v", ZZ)

FIT_WINDOW = range(3, 7)


class CISpec(BaseModel):
    """Complete intersection of divisors of the given bidegrees in P^m x P^n"""

    m: int = Field(..., ge=0, description="Dimension of the first factor")
    n: int = Field(..., ge=0, description="Dimension of the second factor")
    bidegrees: List[Tuple[int, int]] = Field(default_factory=list, description="Bidegrees of the cutting divisors")

    model_config = {"frozen": True}

    @field_validator("bidegrees")
    @classmethod
    def validate_bidegrees(cls, v):
        for a, b in v:
            if a < 0 or b < 0:
                raise ValueError(f"Bidegree ({a}, {b}) has a negative entry")
            if (a, b) == (0, 0):
                raise ValueError("Bidegree (0, 0) does not cut a divisor")
        return v

    @model_validator(mode="after")
    def validate_count(self):
        if len(self.bidegrees) > self.m + self.n:
            raise ValueError(f"{len(self.bidegrees)} divisors exceed the ambient dimension {self.m + self.n}")
        return self

    @property
    def dimension(self) -> int:
        return self.m + self.n - len(self.bidegrees)


class BigradedSeries:
    """Truncated coefficient table of a complete intersection's bigraded series"""

    def __init__(self, spec: CISpec, max_a: int, max_b: int):
        self.spec = spec
        self.max_a = max_a
        self.max_b = max_b
        self.numerator = self._numerator()
        self.table = self._expand()

    def _numerator(self) -> PolyElement:
        result = _UV_RING.one
        for a, b in self.spec.bidegrees:
            result *= _UV_RING.one - _U ** a * _V ** b
        return result

    def _truncate(self, f: PolyElement) -> PolyElement:
        return _UV_RING.from_dict({(i, j): c for (i, j), c in f.items() if i <= self.max_a and j <= self.max_b})

    def _expand(self) -> Dict[Tuple[int, int], int]:
        u_part = _UV_RING.from_dict({(i, 0): comb(i + self.spec.m, self.spec.m) for i in range(self.max_a + 1)})
        v_part = _UV_RING.from_dict({(0, j): comb(j + self.spec.n, self.spec.n) for j in range(self.max_b + 1)})
        series = self._truncate(self._truncate(self.numerator * u_part) * v_part)
        return {(i, j): int(c) for (i, j), c in series.items()}

    def coefficient(self, a: int, b: int) -> int:
        if a > self.max_a or b > self.max_b:
            raise PreconditionError(f"({a}, {b}) lies outside the expanded window")
        return self.table.get((a, b), 0)


def ci_hilbert_value(spec: CISpec, a: int, b: int) -> int:
    """Coefficient of u^a v^b in the bigraded Hilbert series"""
    if a < 0 or b < 0:
        raise PreconditionError(f"Bidegree ({a}, {b}) must be non-negative")
    return BigradedSeries(spec, a, b).coefficient(a, b)


def ci_curve_invariants(spec: CISpec) -> Tuple[int, int, int]:
    """Bidegree (d1, d2) and genus of a complete-intersection curve.

    Fits H(a, b) = d1*a + d2*b + 1 - g on [3..6]^2 and checks all 16 points.
    """
    if spec.dimension != 1:
        raise NotACurveError(f"Complete intersection has dimension {spec.dimension}, not 1")
    top = FIT_WINDOW[-1]
    series = BigradedSeries(spec, top, top)
    base = FIT_WINDOW[0]
    h = series.coefficient(base, base)
    d1 = series.coefficient(base + 1, base) - h
    d2 = series.coefficient(base, base + 1) - h
    constant = h - base * d1 - base * d2
    for a in FIT_WINDOW:
        for b in FIT_WINDOW:
            if series.coefficient(a, b) != d1 * a + d2 * b + constant:
                raise NoAffineFitError(f"Hilbert function is not affine at ({a}, {b}) for {spec.bidegrees}")
    genus = 1 - constant
    logger.info(f"Curve {spec.bidegrees} in P^{spec.m} x P^{spec.n}: bidegree ({d1}, {d2}), genus {genus}")
    return d1, d2, genus


def restricted_degree(spec: CISpec, a: int, b: int) -> int:
    """Degree of O_C(a, b) on the curve"""
    d1, d2, _ = ci_curve_invariants(spec)
    return a * d1 + b * d2


def rr_h0(d: int, g: int) -> int:
    """h^0 of a non-special line bundle of degree d on a genus-g curve"""
    if g < 0 or d <= 2 * g - 2:
        raise PreconditionError(f"Riemann-Roch count needs d > 2g - 2, got d={d}, g={g}")
    return d - g + 1


def canonical_quadric_count(g: int) -> int:
    """Quadrics through a canonical curve of genus g"""
    if g < 5:
        raise PreconditionError(f"Quadric count needs genus at least 5, got {g}")
    return g * (g + 1) // 2 - (3 * g - 3)


def hyperelliptic_genus(branch_points: int) -> int:
    """Genus of a double cover of P^1 branched at the given number of points"""
    if branch_points < 2 or branch_points % 2:
        raise PreconditionError(f"A double cover of P^1 needs an even, positive branch count, got {branch_points}")
    return (branch_points - 2) // 2
