"""Exact subspaces of k^n and of its dual.

A Subspace is kept as its reduced row echelon basis, so equal subspaces have
identical representations. Subspaces of V* use the same class; the pairing
between V and V* is the coordinate dot product.
"""
import logging
from collections import Counter
from typing import Any, Callable, Dict, List, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from engines.polycore.scalars import Field, as_raw_vector
from utils.errors import DegenerateDrawError, DimensionMismatchError, FieldMismatchError
from utils.rng import derive_seed, make_rng

logger = logging.getLogger(__name__)

MAX_DRAWS = 16


def _rref(rows: List[List[Any]], field: Field, ncols: int) -> Tuple[List[List[Any]], Tuple[int, ...]]:
    rows = [row for row in rows if any(row)]
    if not rows:
        return [], ()
    reduced, pivots = DomainMatrix(rows, (len(rows), ncols), field.domain).rref()
    return reduced.to_list()[: len(pivots)], tuple(pivots)


class Subspace:
    def __init__(self, field: Field, ambient: int, vectors: Sequence[Sequence[Any]] = ()):
        raw = []
        for v in vectors:
            if len(v) != ambient:
                raise DimensionMismatchError(f"Vector of length {len(v)} in a space of dimension {ambient}")
            raw.append(as_raw_vector(v, field))
        self.field = field
        self.ambient = ambient
        self.rows, self.pivots = _rref(raw, field, ambient)

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient)

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, [[int(i == j) for j in range(ambient)] for i in range(ambient)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis(self) -> List[List[Any]]:
        return [list(row) for row in self.rows]

    def _key(self):
        return (self.field, self.ambient, tuple(tuple(self.field.to_python(x) for x in row) for row in self.rows))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Subspace) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim} in {self.ambient} over {self.field.name})"


def _check_compatible(a: Subspace, b: Subspace) -> None:
    if a.field != b.field:
        raise FieldMismatchError(f"Subspaces over {a.field.name} and {b.field.name}")
    if a.ambient != b.ambient:
        raise DimensionMismatchError(f"Ambient dimensions {a.ambient} and {b.ambient} differ")


def annihilator(s: Subspace) -> Subspace:
    """Linear forms vanishing on s, read off the echelon form"""
    field, n = s.field, s.ambient
    domain = field.domain
    pivot_rows = dict(zip(s.pivots, s.rows))
    vectors = []
    for free in range(n):
        if free in pivot_rows:
            continue
        v = [domain.zero] * n
        v[free] = domain.one
        for pivot, row in pivot_rows.items():
            v[pivot] = -row[free]
        vectors.append(v)
    return Subspace(field, n, vectors)


def span_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    return Subspace(a.field, a.ambient, a.rows + b.rows)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    return annihilator(span_sum(annihilator(a), annihilator(b)))


def intersect_dim(a: Subspace, b: Subspace) -> int:
    return a.dim + b.dim - span_sum(a, b).dim


def contains(s: Subspace, v: Sequence[Any]) -> bool:
    return Subspace(s.field, s.ambient, s.rows + [list(v)]).dim == s.dim


def pairing_zero(a: Subspace, b: Subspace) -> bool:
    """Every vector of a pairs to zero with every vector of b"""
    _check_compatible(a, b)
    zero = a.field.domain.zero
    return all(sum((x * y for x, y in zip(u, w)), zero) == zero for u in a.rows for w in b.rows)


def lemma22_verify(E_s: Subspace, Lambda: Subspace) -> Tuple[int, int, bool]:
    """dim(E_s ∩ Λ⊥) against dim(E_s⊥ ∩ Λ) + dim E_s - dim Λ"""
    _check_compatible(E_s, Lambda)
    lhs = intersect_dim(E_s, annihilator(Lambda))
    rhs = intersect_dim(annihilator(E_s), Lambda) + E_s.dim - Lambda.dim
    return lhs, rhs, lhs == rhs


def random_subspace(dim: int, ambient: int, field: Field, seed: int) -> Subspace:
    if not 0 <= dim <= ambient:
        raise DimensionMismatchError(f"Cannot draw a {dim}-dimensional subspace of a {ambient}-dimensional space")
    rng = make_rng(seed)
    for _ in range(MAX_DRAWS):
        s = Subspace(field, ambient, [field.random_vector(rng, ambient) for _ in range(dim)])
        if s.dim == dim:
            return s
    raise DegenerateDrawError(f"No {dim}-dimensional subspace in {MAX_DRAWS} draws")


def jump_histogram(
    fibers: Callable[[int], Subspace],
    Lambda: Subspace,
    N: int,
    seed: int,
) -> Dict[int, int]:
    """Histogram of dim(E_s ∩ Λ⊥) over N fibers drawn from per-sample seeds"""
    perp = annihilator(Lambda)
    counts: Counter = Counter()
    for i in range(N):
        E_s = fibers(derive_seed(seed, "fiber", i))
        lhs, rhs, holds = lemma22_verify(E_s, Lambda)
        if not holds:
            logger.error(f"Duality identity failed on sample {i}: {lhs} != {rhs}")
        counts[intersect_dim(E_s, perp)] += 1
    return dict(sorted(counts.items()))
