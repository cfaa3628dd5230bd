from math import comb
from typing import List, Optional, Sequence

from engines.chow.rings import ChowClass, ChowRing
from utils.errors import PreconditionError, RingMismatchError


def _binomial(n: int, k: int) -> int:
    """Binomial coefficient, extended to negative n"""
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k)
    return (-1) ** k * comb(k - n - 1, k)


class ChernPoly:
    """Total Chern class c_0 + c_1 t + ... truncated at the base dimension.

    ``rank`` may be negative for the virtual bundles produced by inverting a
    class (Segre series).
    """

    def __init__(self, ring: ChowRing, rank: int, classes: Sequence[ChowClass]):
        classes = list(classes)
        for extra in classes[ring.dim + 1:]:
            if extra:
                raise PreconditionError(f"Chern class beyond the dimension of {ring.name}")
        classes = classes[: ring.dim + 1] + [ring.zero()] * (ring.dim + 1 - len(classes))
        for i, c in enumerate(classes):
            if c.ring != ring:
                raise RingMismatchError(f"c_{i} lives in {c.ring.name}, not {ring.name}")
            if c != c.part(i):
                raise PreconditionError(f"c_{i} = {c} is not of codimension {i}")
        if classes[0] != ring.one():
            raise PreconditionError(f"c_0 must be 1, got {classes[0]}")
        self.ring = ring
        self.rank = rank
        self.classes: List[ChowClass] = classes

    @classmethod
    def from_total(cls, ring: ChowRing, rank: int, total: ChowClass) -> "ChernPoly":
        return cls(ring, rank, [total.part(i) for i in range(ring.dim + 1)])

    @classmethod
    def trivial(cls, ring: ChowRing, rank: int) -> "ChernPoly":
        return cls.from_total(ring, rank, ring.one())

    @classmethod
    def line(cls, ring: ChowRing, c1: ChowClass) -> "ChernPoly":
        """Total Chern class 1 + c1 of a line bundle"""
        if c1 and c1.codim != 1:
            raise PreconditionError(f"First Chern class {c1} is not of codimension 1")
        return cls.from_total(ring, 1, ring.one() + c1)

    def total(self) -> ChowClass:
        result = self.ring.zero()
        for c in self.classes:
            result = result + c
        return result

    def __getitem__(self, i: int) -> ChowClass:
        return self.classes[i] if i <= self.ring.dim else self.ring.zero()

    def with_rank(self, rank: int) -> "ChernPoly":
        return ChernPoly(self.ring, rank, self.classes)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChernPoly):
            return NotImplemented
        return self.ring == other.ring and self.rank == other.rank and self.total() == other.total()

    def __hash__(self) -> int:
        return hash((self.ring, self.rank, self.total()))

    def __str__(self) -> str:
        pieces = []
        for i, c in enumerate(self.classes):
            if not c:
                continue
            text = str(c) if i == 0 else f"({c})t" if i == 1 else f"({c})t^{i}"
            pieces.append(text)
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"ChernPoly(rank={self.rank}, {self}, {self.ring.name})"


def _check_rings(a: ChernPoly, b: ChernPoly) -> None:
    if a.ring != b.ring:
        raise RingMismatchError(f"Chern classes over {a.ring.name} and {b.ring.name}")


def chern_whitney(a: ChernPoly, b: ChernPoly) -> ChernPoly:
    """Total Chern class of a direct sum"""
    _check_rings(a, b)
    return ChernPoly.from_total(a.ring, a.rank + b.rank, a.total() * b.total())


def chern_sum(pieces: Sequence[ChernPoly], ring: Optional[ChowRing] = None) -> ChernPoly:
    if not pieces:
        if ring is None:
            raise PreconditionError("An empty direct sum needs an explicit ring")
        return ChernPoly.trivial(ring, 0)
    result = pieces[0]
    for piece in pieces[1:]:
        result = chern_whitney(result, piece)
    return result


def chern_dual(c: ChernPoly) -> ChernPoly:
    return ChernPoly(c.ring, c.rank, [ci * (-1) ** i for i, ci in enumerate(c.classes)])


def chern_twist(c: ChernPoly, line_c1: ChowClass) -> ChernPoly:
    """c(E (x) L) from c(E) and c_1(L): c_k = sum_i C(r - i, k - i) c_i(E) c_1(L)^(k - i)"""
    if line_c1.ring != c.ring:
        raise RingMismatchError(f"Line class lives in {line_c1.ring.name}, not {c.ring.name}")
    if line_c1 and line_c1.codim != 1:
        raise PreconditionError(f"Twisting class {line_c1} is not of codimension 1")
    r = c.rank
    classes = []
    for k in range(c.ring.dim + 1):
        ck = c.ring.zero()
        for i in range(k + 1):
            ck = ck + c.classes[i] * line_c1 ** (k - i) * _binomial(r - i, k - i)
        classes.append(ck)
    return ChernPoly(c.ring, r, classes)


def segre_series(c: ChernPoly) -> ChernPoly:
    """Truncated multiplicative inverse of the total Chern class"""
    x = c.total() - c.ring.one()
    result = c.ring.one()
    power = c.ring.one()
    for k in range(1, c.ring.dim + 1):
        power = power * x
        result = result + power * (-1) ** k
    return ChernPoly.from_total(c.ring, -c.rank, result)


def chern_quotient(total: ChernPoly, sub: ChernPoly) -> ChernPoly:
    """Chern class of F/S from 0 -> S -> F -> F/S -> 0"""
    _check_rings(total, sub)
    return chern_whitney(total, segre_series(sub)).with_rank(total.rank - sub.rank)
