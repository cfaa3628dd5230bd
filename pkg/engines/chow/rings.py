"""Finitely presented intersection rings.

A ring is given by basis labels per codimension, the products of basis pairs of
positive codimension and the degrees of the top-codimension classes. The full
structure tensor is assembled once and checked for commutativity, grading and
associativity on every basis triple.
"""
import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from utils.errors import PreconditionError, RingMismatchError, UnsupportedCaseError

logger = logging.getLogger(__name__)

ProductTable = Dict[Tuple[str, str], Dict[str, int]]


class ChowRing:
    def __init__(
        self,
        name: str,
        dim: int,
        basis: Sequence[Sequence[str]],
        products: ProductTable,
        integrals: Dict[str, int],
    ):
        if len(basis) != dim + 1 or list(basis[0]) != ["1"]:
            raise PreconditionError(f"{name}: basis must list codimensions 0..{dim} starting with the unit")
        self.name = name
        self.dim = dim
        self.basis: List[List[str]] = [list(labels) for labels in basis]
        self.labels: List[str] = [label for labels in self.basis for label in labels]
        self.index: Dict[str, int] = {label: i for i, label in enumerate(self.labels)}
        self.codims = np.array([c for c, labels in enumerate(self.basis) for _ in labels], dtype=np.int64)
        self.table = self._structure_tensor(products)
        self.integrals = np.zeros(len(self.labels), dtype=np.int64)
        for label, value in integrals.items():
            if self.codims[self.index[label]] != dim:
                raise PreconditionError(f"{name}: integral given on {label}, which is not of top codimension")
            self.integrals[self.index[label]] = value
        self._validate()
        logger.info(f"Built Chow ring {name} of dimension {dim} with {len(self.labels)} basis classes")

    def _structure_tensor(self, products: ProductTable) -> np.ndarray:
        n = len(self.labels)
        table = np.zeros((n, n, n), dtype=np.int64)
        for i in range(n):
            table[0, i, i] = 1
            table[i, 0, i] = 1
        for (a, b), result in products.items():
            i, j = self.index[a], self.index[b]
            row = np.zeros(n, dtype=np.int64)
            for label, value in result.items():
                row[self.index[label]] = value
            table[i, j] = row
            table[j, i] = row
        for i in range(1, n):
            for j in range(1, n):
                if self.codims[i] + self.codims[j] <= self.dim and not table[i, j].any() and (
                    (self.labels[i], self.labels[j]) not in products and (self.labels[j], self.labels[i]) not in products
                ):
                    raise PreconditionError(f"{self.name}: missing product {self.labels[i]} * {self.labels[j]}")
        return table

    def _validate(self) -> None:
        T = self.table
        if not np.array_equal(T, T.transpose(1, 0, 2)):
            raise PreconditionError(f"{self.name}: multiplication table is not commutative")
        n = len(self.labels)
        for i in range(n):
            for j in range(n):
                for k in np.nonzero(T[i, j])[0]:
                    if self.codims[k] != self.codims[i] + self.codims[j]:
                        raise PreconditionError(f"{self.name}: {self.labels[i]} * {self.labels[j]} leaves its codimension")
        left = np.einsum("ijm,mkn->ijkn", T, T)
        right = np.einsum("jkm,imn->ijkn", T, T)
        if not np.array_equal(left, right):
            raise PreconditionError(f"{self.name}: multiplication table is not associative")
        if not self.integrals.any():
            raise PreconditionError(f"{self.name}: integration vanishes on every top class")

    # classes

    def element(self, coefficients: Dict[str, int]) -> "ChowClass":
        vector = np.zeros(len(self.labels), dtype=np.int64)
        for label, value in coefficients.items():
            if label not in self.index:
                raise PreconditionError(f"{self.name} has no basis class {label}")
            vector[self.index[label]] += value
        return ChowClass(self, vector)

    def __getitem__(self, label: str) -> "ChowClass":
        return self.element({label: 1})

    def zero(self) -> "ChowClass":
        return ChowClass(self, np.zeros(len(self.labels), dtype=np.int64))

    def one(self) -> "ChowClass":
        return self["1"]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ChowRing) and (self.name, self.labels) == (other.name, other.labels)

    def __hash__(self) -> int:
        return hash(("ChowRing", self.name, tuple(self.labels)))

    def __repr__(self) -> str:
        return f"ChowRing({self.name}, dim={self.dim})"


class ChowClass:
    """Integer combination of basis classes"""

    __slots__ = ("ring", "vector")

    def __init__(self, ring: ChowRing, vector: np.ndarray):
        self.ring = ring
        self.vector = vector

    def _other(self, other: Union["ChowClass", int]) -> np.ndarray:
        if isinstance(other, ChowClass):
            if other.ring != self.ring:
                raise RingMismatchError(f"Cannot combine classes of {self.ring.name} and {other.ring.name}")
            return other.vector
        if isinstance(other, (int, np.integer)):
            return self.ring.one().vector * int(other)
        raise RingMismatchError(f"Cannot combine a Chow class with {type(other).__name__}")

    def __add__(self, other) -> "ChowClass":
        return ChowClass(self.ring, self.vector + self._other(other))

    __radd__ = __add__

    def __sub__(self, other) -> "ChowClass":
        return ChowClass(self.ring, self.vector - self._other(other))

    def __rsub__(self, other) -> "ChowClass":
        return ChowClass(self.ring, self._other(other) - self.vector)

    def __neg__(self) -> "ChowClass":
        return ChowClass(self.ring, -self.vector)

    def __mul__(self, other) -> "ChowClass":
        if isinstance(other, (int, np.integer)):
            return ChowClass(self.ring, self.vector * int(other))
        return ChowClass(self.ring, np.einsum("i,j,ijk->k", self.vector, self._other(other), self.ring.table))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "ChowClass":
        result = self.ring.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ChowClass):
            return self.ring == other.ring and np.array_equal(self.vector, other.vector)
        if isinstance(other, int):
            return np.array_equal(self.vector, self.ring.one().vector * other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, tuple(int(v) for v in self.vector)))

    def __bool__(self) -> bool:
        return bool(self.vector.any())

    def part(self, codim: int) -> "ChowClass":
        """Homogeneous component of the given codimension"""
        return ChowClass(self.ring, np.where(self.ring.codims == codim, self.vector, 0))

    @property
    def codim(self) -> Optional[int]:
        """Common codimension of the components; None for zero or mixed classes"""
        present = set(self.ring.codims[np.nonzero(self.vector)[0]].tolist())
        return present.pop() if len(present) == 1 else None

    def integrate(self) -> int:
        return int(self.vector @ self.ring.integrals)

    def coefficients(self) -> Dict[str, int]:
        return {label: int(v) for label, v in zip(self.ring.labels, self.vector) if v}

    def __str__(self) -> str:
        pieces = []
        for label, value in self.coefficients().items():
            magnitude = abs(value)
            if label == "1":
                body = str(magnitude)
            else:
                body = label if magnitude == 1 else f"{magnitude}*{label}"
            if not pieces:
                pieces.append(f"-{body}" if value < 0 else body)
            else:
                pieces.append(f" - {body}" if value < 0 else f" + {body}")
        return "".join(pieces) or "0"

    def __repr__(self) -> str:
        return f"ChowClass({self}, {self.ring.name})"


def _projective_space(n: int) -> ChowRing:
    labels = ["1", "h"] + [f"h^{i}" for i in range(2, n + 1)]
    products: ProductTable = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if i + j <= n:
                products[(labels[i], labels[j])] = {labels[i + j]: 1}
    return ChowRing(f"P{n}", n, [[label] for label in labels[: n + 1]], products, {labels[n]: 1})


def _quintic_del_pezzo() -> ChowRing:
    return ChowRing(
        "B5",
        3,
        [["1"], ["H"], ["l"], ["pt"]],
        {("H", "H"): {"l": 5}, ("H", "l"): {"pt": 1}},
        {"pt": 1},
    )


def _flag_threefold() -> ChowRing:
    # h1^2 + h2^2 = h1*h2 and h1^3 = h2^3 = 0
    return ChowRing(
        "B6",
        3,
        [["1"], ["h1", "h2"], ["h1h2", "h1^2"], ["pt"]],
        {
            ("h1", "h1"): {"h1^2": 1},
            ("h1", "h2"): {"h1h2": 1},
            ("h2", "h2"): {"h1h2": 1, "h1^2": -1},
            ("h1", "h1^2"): {},
            ("h1", "h1h2"): {"pt": 1},
            ("h2", "h1^2"): {"pt": 1},
            ("h2", "h1h2"): {"pt": 1},
        },
        {"pt": 1},
    )


def _quadric_threefold() -> ChowRing:
    return ChowRing(
        "Q3",
        3,
        [["1"], ["h"], ["l"], ["pt"]],
        {("h", "h"): {"l": 2}, ("h", "l"): {"pt": 1}},
        {"pt": 1},
    )


def _blown_up_del_pezzo_fourfold() -> ChowRing:
    # generators cA and F (the exceptional divisor over the plane); l is a line
    # pulled back from A_C, which misses the plane
    return ChowRing(
        "AC_hat",
        4,
        [["1"], ["cA", "F"], ["cA^2", "cA*F", "F^2"], ["l", "cA^2*F"], ["pt"]],
        {
            ("cA", "cA"): {"cA^2": 1},
            ("cA", "F"): {"cA*F": 1},
            ("F", "F"): {"F^2": 1},
            ("cA", "cA^2"): {"l": 5},
            ("cA", "cA*F"): {"cA^2*F": 1},
            ("F", "cA^2"): {"cA^2*F": 1},
            ("cA", "F^2"): {"l": -1},
            ("F", "cA*F"): {"l": -1},
            ("F", "F^2"): {"cA^2*F": -2},
            ("cA", "l"): {"pt": 1},
            ("F", "l"): {},
            ("cA", "cA^2*F"): {},
            ("F", "cA^2*F"): {"pt": -1},
            ("cA^2", "cA^2"): {"pt": 5},
            ("cA^2", "cA*F"): {},
            ("cA^2", "F^2"): {"pt": -1},
            ("cA*F", "cA*F"): {"pt": -1},
            ("cA*F", "F^2"): {},
            ("F^2", "F^2"): {"pt": 2},
        },
        {"pt": 1},
    )


@lru_cache(maxsize=None)
def make_ring(which: str, n: Optional[int] = None) -> ChowRing:
    """Validated intersection ring: "Pn" (with n), "point", "B5", "B6", "Q3" or "AC_hat" """
    if which == "Pn":
        if n is None or n < 0:
            raise PreconditionError("Projective space needs a dimension n >= 0")
        return _projective_space(n)
    if which == "point":
        return _projective_space(0)
    builders = {
        "B5": _quintic_del_pezzo,
        "B6": _flag_threefold,
        "Q3": _quadric_threefold,
        "AC_hat": _blown_up_del_pezzo_fourfold,
    }
    if which not in builders:
        raise UnsupportedCaseError(f"Unknown Chow ring: {which}")
    return builders[which]()
