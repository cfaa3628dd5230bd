"""Buchberger engine with normal selection and Gebauer–Möller pair elimination.

Indices into the working list ``f`` identify polynomials; the basis and the
critical pairs are kept as ordered lists so that every run on the same input
visits pairs in the same order.
"""
import hashlib
import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field as PydanticField
from sympy.polys.rings import PolyElement

from engines.polycore.orders import MonomialOrder
from engines.polycore.polynomial import Polynomial, format_poly
from engines.polycore.rings import RingSpec
from engines.polycore.scalars import Field
from utils.errors import InhomogeneousInputError, LimitExceededError, RingMismatchError

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


class GroebnerLimits(BaseModel):
    max_pair_degree: int = PydanticField(30, ge=1, description="Largest admissible S-pair degree")
    max_basis_size: int = PydanticField(20000, ge=1, description="Largest admissible intermediate basis")


class GroebnerBasis:
    """Reduced, monic Gröbner basis of a homogeneous ideal"""

    def __init__(
        self,
        spec: RingSpec,
        generators: List[Polynomial],
        inputs: List[Polynomial],
        fingerprint: str,
        stats: Dict[str, int],
    ):
        self.spec = spec
        self.generators = generators
        self.inputs = inputs
        self.fingerprint = fingerprint
        self.stats = stats

    @property
    def order(self) -> MonomialOrder:
        return self.spec.order

    @property
    def field(self) -> Field:
        return self.spec.field

    def leading_monomials(self) -> List[Tuple[int, ...]]:
        return [g.leading_monomial() for g in self.generators]

    def elements(self) -> List[PolyElement]:
        return [g.element for g in self.generators]

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return f"GroebnerBasis({len(self.generators)} elements over {self.spec})"


def ideal_fingerprint(spec: RingSpec, generators: Iterable[Polynomial]) -> str:
    text = "|".join([",".join(spec.names), spec.field.name] + sorted(format_poly(g) for g in generators))
    return hashlib.blake2b(text.encode("utf-8"), digest_size=16).hexdigest()


def spoly(p1: PolyElement, p2: PolyElement) -> PolyElement:
    ring = p1.ring
    lcm12 = ring.monomial_lcm(p1.LM, p2.LM)
    m1 = ring.monomial_div(lcm12, p1.LM)
    m2 = ring.monomial_div(lcm12, p2.LM)
    return p1.mul_monom(m1) * p2.LC - p2.mul_monom(m2) * p1.LC


def _prepare(generators: Sequence[Polynomial], order: Optional[MonomialOrder]) -> Tuple[RingSpec, List[PolyElement]]:
    spec = generators[0].spec
    for g in generators:
        if g.spec.names != spec.names or g.spec.field != spec.field:
            raise RingMismatchError(f"Generators live in different rings: {spec} and {g.spec}")
        if not g.is_homogeneous():
            raise InhomogeneousInputError(f"Generator {format_poly(g)} is not homogeneous")
    if order is not None and order != spec.order:
        spec = spec.with_order(order)
    ring = spec.sympy_ring
    return spec, [ring.from_dict(dict(g.element)) for g in generators if not g.is_zero]


def buchberger(
    generators: Sequence[Polynomial],
    order: Optional[MonomialOrder] = None,
    limits: Optional[GroebnerLimits] = None,
    spec: Optional[RingSpec] = None,
) -> GroebnerBasis:
    """Reduced Gröbner basis of the homogeneous ideal spanned by generators.

    ``spec`` is only needed when the generator list is empty.
    """
    limits = limits or GroebnerLimits()
    if not generators:
        if spec is None:
            raise RingMismatchError("An empty generator list needs an explicit ring")
        spec = spec.with_order(order) if order is not None else spec
        return GroebnerBasis(spec, [], [], ideal_fingerprint(spec, []), {"pairs": 0, "zero_reductions": 0, "max_degree": 0})

    spec, f = _prepare(generators, order)
    ring = spec.sympy_ring
    key = ring.order
    monomial_mul = ring.monomial_mul
    monomial_div = ring.monomial_div
    monomial_lcm = ring.monomial_lcm
    fingerprint = ideal_fingerprint(spec, generators)

    stats = {"pairs": 0, "zero_reductions": 0, "max_degree": 0}

    if not f:
        return GroebnerBasis(spec, [], list(generators), fingerprint, stats)

    # replace f with a reduced list of initial polynomials
    f1 = f[:]
    while True:
        f = f1[:]
        f1 = []
        for i in range(len(f)):
            r = f[i].rem(f[:i])
            if r:
                f1.append(r.monic())
        if f == f1:
            break

    index: Dict[PolyElement, int] = {}

    def normal(g: PolyElement, J: List[int]) -> Optional[Tuple[tuple, int]]:
        h = g.rem([f[j] for j in J])
        if not h:
            return None
        h = h.monic()
        if h not in index:
            index[h] = len(f)
            f.append(h)
            if len(f) > limits.max_basis_size:
                raise LimitExceededError("Basis size cap exceeded", stats["max_degree"], len(CP), len(f))
        return h.LM, index[h]

    def update(G: List[int], B: List[Pair], ih: int) -> Tuple[List[int], List[Pair]]:
        mh = f[ih].LM

        # filter new pairs (h, g), g in G
        C = list(G)
        D: List[Pair] = []
        while C:
            ig = C.pop(0)
            mg = f[ig].LM
            lcm_hg = monomial_lcm(mh, mg)

            def lcm_divides(ip: int) -> bool:
                return monomial_div(lcm_hg, monomial_lcm(mh, f[ip].LM)) is not None

            if monomial_mul(mh, mg) == lcm_hg or (
                not any(lcm_divides(ipx) for ipx in C) and not any(lcm_divides(pr[1]) for pr in D)
            ):
                D.append((ih, ig))

        E = [(i, ig) for i, ig in D if monomial_mul(mh, f[ig].LM) != monomial_lcm(mh, f[ig].LM)]

        # filter old pairs
        B_new: List[Pair] = []
        for ig1, ig2 in B:
            mg1, mg2 = f[ig1].LM, f[ig2].LM
            lcm12 = monomial_lcm(mg1, mg2)
            if (
                monomial_div(lcm12, mh) is None
                or monomial_lcm(mg1, mh) == lcm12
                or monomial_lcm(mg2, mh) == lcm12
            ):
                B_new.append((ig1, ig2))
        B_new.extend(E)

        G_new = [ig for ig in G if monomial_div(f[ig].LM, mh) is None]
        G_new.append(ih)
        return G_new, B_new

    for i, h in enumerate(f):
        index[h] = i

    G: List[int] = []
    CP: List[Pair] = []
    pending = sorted(range(len(f)), key=lambda i: (key(f[i].LM), i))
    for ih in pending:
        G, CP = update(G, CP, ih)

    def pair_key(pair: Pair):
        lcm = monomial_lcm(f[pair[0]].LM, f[pair[1]].LM)
        return (key(lcm), min(pair), max(pair))

    while CP:
        pair = min(CP, key=pair_key)
        CP.remove(pair)
        degree = sum(monomial_lcm(f[pair[0]].LM, f[pair[1]].LM))
        if degree > limits.max_pair_degree:
            raise LimitExceededError("S-pair degree cap exceeded", degree, len(CP) + 1, len(G))
        stats["pairs"] += 1
        stats["max_degree"] = max(stats["max_degree"], degree)

        s = spoly(f[pair[0]], f[pair[1]])
        divisors = sorted(G, key=lambda g: key(f[g].LM))
        reduced = normal(s, divisors)
        if reduced:
            G, CP = update(G, CP, reduced[1])
        else:
            stats["zero_reductions"] += 1

    # now G is a Groebner basis; reduce it
    reduced_basis: List[PolyElement] = []
    for ig in sorted(G):
        result = normal(f[ig], [j for j in G if j != ig])
        if result:
            reduced_basis.append(f[result[1]])

    reduced_basis.sort(key=lambda p: key(p.LM), reverse=True)
    basis = [Polynomial(spec, p) for p in reduced_basis]
    logger.info(
        f"Gröbner basis of {len(generators)} generators in {spec.ngens} variables: "
        f"{len(basis)} elements, {stats['pairs']} pairs, max degree {stats['max_degree']}"
    )
    return GroebnerBasis(spec, basis, list(generators), fingerprint, stats)


def _check_ring(f: Polynomial, gb: GroebnerBasis) -> PolyElement:
    if f.spec.names != gb.spec.names or f.spec.field != gb.spec.field:
        raise RingMismatchError(f"Polynomial ring {f.spec} does not match basis ring {gb.spec}")
    return gb.spec.sympy_ring.from_dict(dict(f.element))


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Remainder of f modulo the basis; zero iff f lies in the ideal"""
    element = _check_ring(f, gb)
    return Polynomial(gb.spec, element.rem(gb.elements()))


def ideal_contains(gb: GroebnerBasis, f: Polynomial) -> bool:
    return normal_form(f, gb).is_zero


def s_pair_certificate(gb: GroebnerBasis) -> bool:
    """Re-check the basis: S-pairs and inputs reduce to zero, monic, auto-reduced"""
    elements = gb.elements()
    ring = gb.spec.sympy_ring
    for i, p in enumerate(elements):
        if p.LC != ring.domain.one:
            return False
        for j, q in enumerate(elements):
            if i != j and ring.monomial_div(q.LM, p.LM) is not None:
                return False
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            if spoly(elements[i], elements[j]).rem(elements):
                return False
    for g in gb.inputs:
        if _check_ring(g, gb).rem(elements):
            return False
    return True
