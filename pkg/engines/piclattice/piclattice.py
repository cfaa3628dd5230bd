"""Picard lattices of blow-ups of P^2 in k points.

A class c_m*m - sum c_i*e_i is stored as the integer vector (c_m, c_1, ..., c_k).
"""
import logging
from typing import Dict, Sequence, Union

import numpy as np

from utils.errors import DimensionMismatchError, PreconditionError

logger = logging.getLogger(__name__)


class SurfaceLattice:
    """Pic of P^2 blown up in k points, with form diag(1, -1, ..., -1)"""

    def __init__(self, k: int):
        if k < 0:
            raise PreconditionError(f"Number of blown-up points must be non-negative, got {k}")
        self.k = k
        self.form = np.diag([1] + [-1] * k).astype(np.int64)

    @property
    def rank(self) -> int:
        return self.k + 1

    def cls(self, m: int, multiplicities: Union[int, Sequence[int]] = 0) -> "DivisorClass":
        """m*line - sum mult_i * e_i; a single int is used for every point"""
        if isinstance(multiplicities, int):
            multiplicities = [multiplicities] * self.k
        return DivisorClass(self, [m] + list(multiplicities))

    def line(self) -> "DivisorClass":
        return self.cls(1)

    def exceptional(self, i: int) -> "DivisorClass":
        """e_i, 1-based"""
        if not 1 <= i <= self.k:
            raise DimensionMismatchError(f"No exceptional curve e_{i} on a blow-up in {self.k} points")
        vector = [0] * self.rank
        vector[i] = -1
        return DivisorClass(self, vector)

    def canonical(self) -> "DivisorClass":
        return self.cls(-3, -1)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SurfaceLattice) and other.k == self.k

    def __hash__(self) -> int:
        return hash(self.k)

    def __repr__(self) -> str:
        return f"SurfaceLattice(k={self.k})"


class DivisorClass:
    def __init__(self, lattice: SurfaceLattice, vector: Sequence[int]):
        if len(vector) != lattice.rank:
            raise DimensionMismatchError(f"Expected {lattice.rank} entries, got {len(vector)}")
        self.lattice = lattice
        self.vector = np.array(vector, dtype=np.int64)

    def _check(self, other: "DivisorClass") -> None:
        if other.lattice != self.lattice:
            raise DimensionMismatchError(f"Classes on {self.lattice} and {other.lattice}")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(self.lattice, self.vector + other.vector)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(self.lattice, self.vector - other.vector)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.lattice, -self.vector)

    def __rmul__(self, n: int) -> "DivisorClass":
        return DivisorClass(self.lattice, n * self.vector)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DivisorClass) and other.lattice == self.lattice and bool(np.all(other.vector == self.vector))

    def __hash__(self) -> int:
        return hash((self.lattice.k, tuple(int(v) for v in self.vector)))

    def __str__(self) -> str:
        parts = [f"{int(self.vector[0])}m"]
        parts += [f"{-int(c):+d}e{i}" for i, c in enumerate(self.vector[1:], start=1) if c]
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"DivisorClass({self})"


def pairing(a: DivisorClass, b: DivisorClass) -> int:
    """Intersection number a.b"""
    a._check(b)
    return int(a.vector @ a.lattice.form @ b.vector)


def genus_of_class(c: DivisorClass) -> int:
    """Arithmetic genus by adjunction"""
    total = pairing(c, c) + pairing(c, c.lattice.canonical())
    if total % 2:
        raise PreconditionError(f"C^2 + C.K = {total} is odd for {c}")
    return total // 2 + 1


def prop73_suite() -> Dict[str, int]:
    """A 4-nodal plane quintic on the quintic del Pezzo surface"""
    L = SurfaceLattice(4)
    C = L.cls(5, 2)
    K = L.canonical()
    result = {
        "C^2": pairing(C, C),
        "C.K": pairing(C, K),
        "genus": genus_of_class(C),
        "delta_degree": pairing(-K, C),
        "anticanonical_degree": pairing(K, K),
        "line_degree": pairing(L.line(), C),
        "canonical_degree": pairing(L.cls(2, 1), C),
    }
    logger.info(f"Quintic del Pezzo lattice checks: {result}")
    return result


def rem45_suite() -> Dict[str, int]:
    """A 6-nodal plane septic whose nodes lie on a conic"""
    L = SurfaceLattice(6)
    C = L.cls(7, 2)
    conic = L.cls(2, 1)
    H = L.cls(3, 1)
    result = {
        "genus": genus_of_class(C),
        "C.conic": pairing(C, conic),
        "cubic_surface_degree": pairing(H, H),
        "curve_degree": pairing(H, C),
    }
    logger.info(f"Cubic surface lattice checks: {result}")
    return result
