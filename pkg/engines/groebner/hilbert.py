"""Hilbert series of a quotient by a homogeneous ideal.

The numerator over (1 - t)^n is computed on the leading-term monomial ideal by
pivot recursion: N(I) = N(I + (x)) + t * N(I : x), pivoting on the variable that
occurs in the most generators, down to ideals with at most one generator that
is not a pure power.
"""
import logging
from math import comb, factorial
from typing import Dict, List

import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.rings import PolyElement, ring

from engines.groebner.buchberger import GroebnerBasis
from engines.polycore.polynomial import Polynomial
from engines.polycore.rings import RingSpec
from engines.polycore.scalars import Field

logger = logging.getLogger(__name__)

_SERIES_RING, _T = ring("t", ZZ)
_HP_SPEC = RingSpec(("t",), Field(0))


def minimalize(A: np.ndarray) -> np.ndarray:
    """Minimal generators among the rows of A"""
    if len(A) == 0:
        return A
    rows = sorted(A.tolist(), key=lambda m: (sum(m), m))
    kept: List[List[int]] = []
    for m in rows:
        row = np.array(m)
        if kept and np.any(np.all(np.array(kept) <= row, axis=1)):
            continue
        kept.append(m)
    return np.array(kept, dtype=np.int64).reshape(len(kept), A.shape[1])


def _pure_power_product(P: np.ndarray) -> PolyElement:
    result = _SERIES_RING.one
    for m in P:
        result *= _SERIES_RING.one - _T ** int(m.sum())
    return result


def _numerator(A: np.ndarray, memo: Dict[bytes, PolyElement]) -> PolyElement:
    if len(A) == 0:
        return _SERIES_RING.one
    key = A.tobytes() + bytes(str(A.shape), "ascii")
    if key in memo:
        return memo[key]

    support = np.count_nonzero(A, axis=1)
    if np.any(support == 0):
        # the unit ideal
        return _SERIES_RING.zero
    mixed = support > 1
    if np.count_nonzero(mixed) <= 1:
        pure = A[~mixed]
        result = _pure_power_product(pure)
        if np.any(mixed):
            m = A[mixed][0]
            colon = np.maximum(pure - m, 0)
            colon_part = _SERIES_RING.zero if np.any(colon.sum(axis=1) == 0) else _pure_power_product(colon)
            result = result - _T ** int(m.sum()) * colon_part
        memo[key] = result
        return result

    j = int(np.argmax(np.count_nonzero(A, axis=0)))
    pivot = np.zeros(A.shape[1], dtype=np.int64)
    pivot[j] = 1
    left = np.vstack([A[A[:, j] == 0], pivot[None, :]])
    right = A.copy()
    right[:, j] = np.maximum(right[:, j] - 1, 0)
    result = _numerator(minimalize(left), memo) + _T * _numerator(minimalize(right), memo)
    memo[key] = result
    return result


def monomial_ideal_numerator(monomials: List[tuple], nvars: int) -> PolyElement:
    """Numerator of the Hilbert series of k[x]/(monomials) over (1 - t)^nvars"""
    A = np.array(monomials, dtype=np.int64).reshape(len(monomials), nvars)
    return _numerator(minimalize(A), {})


def _binomial_polynomial(shift: int, k: int) -> PolyElement:
    """C(t + shift, k) as a polynomial in t over QQ"""
    qq_ring = _HP_SPEC.sympy_ring
    t = qq_ring.gens[0]
    result = qq_ring.one
    for j in range(k):
        result *= t + (shift - j)
    return result * qq_ring.domain(1, factorial(k))


class HilbertData:
    """Hilbert series N(t)/(1 - t)^d in lowest terms plus derived invariants"""

    def __init__(self, numerator: PolyElement, pole_order: int, nvars: int):
        self.numerator = numerator
        self.pole_order = pole_order
        self.nvars = nvars

    @property
    def numerator_coefficients(self) -> List[int]:
        if not self.numerator:
            return []
        top = self.numerator.degree()
        return [int(self.numerator.get((k,), 0)) for k in range(top + 1)]

    @property
    def krull_dim(self) -> int:
        return self.pole_order

    @property
    def projective_dim(self) -> int:
        return self.pole_order - 1

    @property
    def degree(self) -> int:
        if not self.numerator:
            return 0
        return int(self.numerator(1))

    def value(self, s: int) -> int:
        """Hilbert function at degree s"""
        if s < 0:
            return 0
        coefficients = self.numerator_coefficients
        d = self.pole_order
        if d == 0:
            return coefficients[s] if s < len(coefficients) else 0
        return sum(q * comb(s - k + d - 1, d - 1) for k, q in enumerate(coefficients) if s >= k)

    @property
    def hilbert_polynomial(self) -> Polynomial:
        qq_ring = _HP_SPEC.sympy_ring
        result = qq_ring.zero
        d = self.pole_order
        if d > 0:
            for k, q in enumerate(self.numerator_coefficients):
                if q:
                    result += _binomial_polynomial(d - 1 - k, d - 1) * q
        return Polynomial(_HP_SPEC, result)

    @property
    def span_defect(self) -> int:
        """Number of independent linear forms in the ideal"""
        return self.nvars - self.value(1)

    def summary(self) -> dict:
        return {
            "projective_dim": self.projective_dim,
            "degree": self.degree,
            "span_defect": self.span_defect,
            "hilbert_polynomial": str(self.hilbert_polynomial),
        }

    def __repr__(self) -> str:
        return f"HilbertData(dim={self.projective_dim}, degree={self.degree}, hp={self.hilbert_polynomial})"


def hilbert_series_from_monomials(monomials: List[tuple], nvars: int) -> HilbertData:
    numerator = monomial_ideal_numerator(monomials, nvars)
    pole_order = nvars
    one_minus_t = _SERIES_RING.one - _T
    if not numerator:
        return HilbertData(numerator, 0, nvars)
    while pole_order > 0 and numerator(1) == 0:
        numerator = numerator.exquo(one_minus_t)
        pole_order -= 1
    return HilbertData(numerator, pole_order, nvars)


def hilbert_data(gb: GroebnerBasis) -> HilbertData:
    """Hilbert series and derived invariants of the quotient by gb's ideal"""
    data = hilbert_series_from_monomials(gb.leading_monomials(), gb.spec.ngens)
    logger.info(f"Hilbert data for ideal {gb.fingerprint[:12]}: {data!r}")
    return data


def hilbert_function(data: HilbertData, s: int) -> int:
    return data.value(s)
