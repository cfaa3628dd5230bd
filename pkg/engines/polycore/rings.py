from functools import lru_cache
from typing import Dict, Optional, Sequence, Tuple

from sympy.polys.rings import PolyRing

from engines.polycore.orders import MonomialOrder
from engines.polycore.scalars import Field
from utils.errors import PreconditionError


@lru_cache(maxsize=None)
def _sympy_ring(names: Tuple[str, ...], field: Field, order: MonomialOrder) -> PolyRing:
    return PolyRing(names, field.domain, order)


class RingSpec:
    """Ring descriptor: variable names, field, optional bigrading split and order.

    With ``grading_split = k`` the first k variables have bidegree (1, 0) and
    the rest (0, 1).
    """

    def __init__(
        self,
        names: Sequence[str],
        field: Field,
        grading_split: Optional[int] = None,
        order: Optional[MonomialOrder] = None,
    ):
        names = tuple(names)
        if not names:
            raise PreconditionError("A ring needs at least one variable")
        if len(set(names)) != len(names):
            raise PreconditionError(f"Duplicate variable names in {names}")
        if grading_split is not None and not 0 <= grading_split <= len(names):
            raise PreconditionError(f"Grading split {grading_split} out of range")
        self.names = names
        self.field = field
        self.grading_split = grading_split
        self.order = order if order is not None else MonomialOrder.degrevlex(len(names))
        if self.order.nvars != len(names):
            raise PreconditionError("Monomial order does not match the number of variables")
        self.index: Dict[str, int] = {name: i for i, name in enumerate(names)}

    @property
    def ngens(self) -> int:
        return len(self.names)

    @property
    def sympy_ring(self) -> PolyRing:
        return _sympy_ring(self.names, self.field, self.order)

    def with_order(self, order: MonomialOrder) -> "RingSpec":
        return RingSpec(self.names, self.field, self.grading_split, order)

    def with_field(self, field: Field) -> "RingSpec":
        return RingSpec(self.names, field, self.grading_split, self.order)

    def bidegree_of(self, monomial: Sequence[int]) -> Optional[Tuple[int, int]]:
        if self.grading_split is None:
            return None
        k = self.grading_split
        return sum(monomial[:k]), sum(monomial[k:])

    def _key(self):
        return (self.names, self.field, self.grading_split, self.order)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RingSpec) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"RingSpec({', '.join(self.names)} over {self.field.name}, order={self.order.alias})"


def indexed_names(prefix: str, count: int, start: int = 1) -> Tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(start, start + count))


def matrix_names(prefix: str, rows: int, cols: int) -> Tuple[str, ...]:
    return tuple(f"{prefix}{i}{j}" for i in range(1, rows + 1) for j in range(1, cols + 1))
