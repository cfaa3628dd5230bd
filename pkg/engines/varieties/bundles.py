"""Chern data of the bundle pairs (E, E-perp), assembled from Euler-sequence pieces.

Each BundleSpec stores the Chern class of the dual bundle: c(E*) for the E side
and c((E-perp)*) for the E-perp side.
"""
from typing import Tuple

from engines.chow.bundles import BundleSpec
from engines.chow.chern import ChernPoly, chern_dual, chern_quotient, chern_sum
from engines.chow.rings import ChowClass, ChowRing, make_ring
from engines.varieties.cases import CaseId, CaseInfo, case_info


def base_ring(info: CaseInfo) -> ChowRing:
    if info.base.startswith("P") and info.base[1:].isdigit():
        return make_ring("Pn", int(info.base[1:]))
    return make_ring(info.base)


def minus_canonical(case: str) -> ChowClass:
    info = case_info(case)
    return base_ring(info).element(info.minus_KS)


def _twisted_tangent(ring: ChowRing, h: ChowClass, n: int) -> ChernPoly:
    """T_{P^n}(-1) restricted along h: the quotient of O^(n+1) by O(-h)"""
    return chern_quotient(ChernPoly.trivial(ring, n + 1), ChernPoly.line(ring, -h))


def _genus4(ring: ChowRing) -> Tuple[ChernPoly, ChernPoly]:
    h1, h2 = ring["h1"], ring["h2"]
    # E* = O(1,0) + O(0,1) + T_{P^7}(-1), E-perp* = T_{P^2}(-1) + T_{P^2}(-1) + O(1,1)
    dual_E = chern_sum([ChernPoly.line(ring, h1), ChernPoly.line(ring, h2), _twisted_tangent(ring, h1 + h2, 7)])
    dual_perp = chern_sum([_twisted_tangent(ring, h1, 2), _twisted_tangent(ring, h2, 2), ChernPoly.line(ring, h1 + h2)])
    return dual_E, dual_perp


def _genus5(ring: ChowRing) -> Tuple[ChernPoly, ChernPoly]:
    h = ring["h"]
    tangent = _twisted_tangent(ring, h, 3)
    dual_E = chern_sum([tangent, tangent, tangent, ChernPoly.line(ring, h)])
    dual_perp = chern_sum([ChernPoly.line(ring, h)] * 3 + [tangent])
    return dual_E, dual_perp


def _genus6q(ring: ChowRing) -> Tuple[ChernPoly, ChernPoly]:
    h, l = ring["h"], ring["l"]
    universal_sub = ChernPoly.from_total(ring, 2, ring.one() - h + l)
    universal_quotient = ChernPoly.from_total(ring, 2, ring.one() + h + l)
    tangent = _twisted_tangent(ring, h, 4)
    dual_E = chern_sum([chern_dual(universal_sub), ChernPoly.line(ring, h), tangent])
    dual_perp = chern_sum([universal_quotient, tangent, ChernPoly.line(ring, h)])
    return dual_E, dual_perp


def _genus6c(ring: ChowRing) -> Tuple[ChernPoly, ChernPoly]:
    c_A = ring["cA"]
    c_B = c_A - ring["F"]
    five_l = 5 * ring["l"]
    dual_E = chern_sum([ChernPoly.line(ring, c_A), _twisted_tangent(ring, c_B, 4)])
    dual_perp = ChernPoly(
        ring,
        8,
        [
            ring.one(),
            c_A + c_B,
            c_A * c_B + c_A ** 2,
            c_A ** 2 * c_B + five_l,
            c_B * five_l + 5 * ring["pt"],
        ],
    )
    return dual_E, dual_perp


def _genus8(ring: ChowRing) -> Tuple[ChernPoly, ChernPoly]:
    H, l = ring["H"], ring["l"]
    universal_sub = ChernPoly.from_total(ring, 2, ring.one() - H + 2 * l)
    universal_quotient = chern_quotient(ChernPoly.trivial(ring, 5), universal_sub)
    dual_E = chern_sum([chern_dual(universal_sub), ChernPoly.line(ring, H)])
    dual_perp = chern_sum([universal_quotient, _twisted_tangent(ring, H, 6)])
    return dual_E, dual_perp


_BUILDERS = {
    CaseId.G4: _genus4,
    CaseId.G5: _genus5,
    CaseId.G6Q: _genus6q,
    CaseId.G6C: _genus6c,
    CaseId.G8: _genus8,
}


def bundle_chern_data(case: str) -> Tuple[BundleSpec, BundleSpec]:
    """(E side, E-perp side) of a case"""
    info = case_info(case)
    ring = base_ring(info)
    dual_E, dual_perp = _BUILDERS[info.case](ring)
    E = BundleSpec(f"{info.case.value}:E", ring, info.rank_E, dual_E, info.section_dim)
    E_perp = BundleSpec(f"{info.case.value}:E_perp", ring, info.rank_E_perp, dual_perp, info.section_dim)
    return E, E_perp
