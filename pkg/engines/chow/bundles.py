import logging
from typing import Dict, Tuple

from engines.chow.chern import ChernPoly, chern_dual, chern_whitney, segre_series
from engines.chow.rings import ChowClass, ChowRing, make_ring
from utils.errors import PreconditionError, RingMismatchError

logger = logging.getLogger(__name__)


class BundleSpec:
    """Vector bundle on a base ring, described by the Chern class of its dual"""

    def __init__(self, name: str, base: ChowRing, rank: int, dual_chern: ChernPoly, section_dim: int):
        if rank < 1:
            raise PreconditionError(f"{name}: rank must be positive, got {rank}")
        if dual_chern.rank != rank:
            raise PreconditionError(f"{name}: Chern data has rank {dual_chern.rank}, bundle has rank {rank}")
        if dual_chern.ring != base:
            raise RingMismatchError(f"{name}: Chern data lives over {dual_chern.ring.name}, base is {base.name}")
        self.name = name
        self.base = base
        self.rank = rank
        self.dual_chern = dual_chern
        self.section_dim = section_dim

    @property
    def chern(self) -> ChernPoly:
        return chern_dual(self.dual_chern)

    def __repr__(self) -> str:
        return f"BundleSpec({self.name}, rank {self.rank} over {self.base.name})"


def pushforward_degree(b: BundleSpec) -> int:
    """Degree of the tautological image: the top Segre class of the bundle, integrated"""
    segre = segre_series(b.chern)
    degree = segre[b.base.dim].integrate()
    logger.info(f"Pushforward degree of {b.name}: {degree}")
    return degree


def canonical_class(b: BundleSpec, minus_KS: ChowClass) -> Tuple[int, ChowClass]:
    """-K of P(F) as (multiple of H, pulled-back base class): (rank F, c_1(F) - K_S)"""
    if minus_KS.ring != b.base:
        raise RingMismatchError(f"-K_S lives in {minus_KS.ring.name}, base is {b.base.name}")
    if minus_KS and minus_KS.codim != 1:
        raise PreconditionError(f"-K_S = {minus_KS} is not of codimension 1")
    return b.rank, b.chern[1] + minus_KS


def projective_bundle_dim(b: BundleSpec) -> int:
    return b.base.dim + b.rank - 1


def exact_sequence_check(E: BundleSpec, E_perp: BundleSpec) -> bool:
    """0 -> E_perp -> V* (x) O -> E* -> 0: c(E*) c(E_perp) = 1 and the ranks add up"""
    if E.base != E_perp.base:
        raise RingMismatchError(f"{E.name} and {E_perp.name} live over different bases")
    if E.section_dim != E_perp.section_dim or E.rank + E_perp.rank != E.section_dim:
        return False
    product = chern_whitney(E.dual_chern, E_perp.chern)
    return product.total() == E.base.one()


def ac_hat_identities() -> Dict[str, int]:
    """Degree-4 intersection numbers of c_A, c_B = c_A - F_a and F_b = c_A - 2 F_a"""
    ring = make_ring("AC_hat")
    c_A = ring["cA"]
    F_a = ring["F"]
    c_B = c_A - F_a
    F_b = c_A - 2 * F_a
    values = {
        "cA^3*cB": (c_A ** 3 * c_B).integrate(),
        "cA*cB^3": (c_A * c_B ** 3).integrate(),
        "cB^4": (c_B ** 4).integrate(),
        "cB^3*Fb": (c_B ** 3 * F_b).integrate(),
        "cB^2*Fb^2": (c_B ** 2 * F_b ** 2).integrate(),
        "Fb^3*cB": (F_b ** 3 * c_B).integrate(),
        "cA^2*cB^2": (c_A ** 2 * c_B ** 2).integrate(),
    }
    # the degree-4 Segre class of the genus-6 C-type bundle reduces to this form
    values["reduced_segre"] = 6 - values["cA^3*cB"] + values["cA*cB^3"]
    return values
