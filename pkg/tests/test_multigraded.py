import pytest
from pydantic import ValidationError

from engines.multigraded import (
    CISpec,
    canonical_quadric_count,
    ci_curve_invariants,
    ci_hilbert_value,
    hyperelliptic_genus,
    restricted_degree,
    rr_h0,
)
from utils.errors import NotACurveError, PreconditionError

SECTION_CURVE = CISpec(m=2, n=3, bidegrees=[(1, 1), (1, 1), (1, 1), (1, 2)])
PLANE_PAIR_CURVE = CISpec(m=2, n=2, bidegrees=[(1, 1), (2, 1), (1, 2)])


def test_product_of_projective_lines():
    assert ci_hilbert_value(CISpec(m=1, n=1), 2, 3) == 12
    assert ci_hilbert_value(CISpec(m=1, n=1, bidegrees=[(1, 1)]), 2, 3) == 6


def test_conic_in_product_of_lines():
    assert ci_curve_invariants(CISpec(m=1, n=1, bidegrees=[(1, 1)])) == (1, 1, 0)


def test_curves_in_products_of_planes_and_spaces():
    assert ci_curve_invariants(SECTION_CURVE) == (7, 9, 9)
    assert ci_curve_invariants(PLANE_PAIR_CURVE) == (7, 7, 8)


def test_canonical_degree_from_adjunction():
    # K_C = O_C(sum of bidegrees - (m + 1, n + 1))
    assert restricted_degree(SECTION_CURVE, 0, 1) == 2 * 9 - 2 - 7
    assert restricted_degree(SECTION_CURVE, 1, 1) == 16
    assert restricted_degree(PLANE_PAIR_CURVE, 1, 1) == 2 * 8 - 2


def test_surface_is_not_a_curve():
    with pytest.raises(NotACurveError):
        ci_curve_invariants(CISpec(m=2, n=2, bidegrees=[(1, 1), (1, 1)]))


def test_riemann_roch_counts():
    assert rr_h0(25, 9) == 17
    assert canonical_quadric_count(9) == 21
    assert canonical_quadric_count(5) == 3
    with pytest.raises(PreconditionError):
        rr_h0(16, 9)


def test_hyperelliptic_genus():
    assert hyperelliptic_genus(6) == 2
    assert hyperelliptic_genus(2) == 0
    with pytest.raises(PreconditionError):
        hyperelliptic_genus(5)


def test_spec_validation():
    with pytest.raises(ValidationError):
        CISpec(m=1, n=1, bidegrees=[(0, 0)])
    with pytest.raises(ValidationError):
        CISpec(m=1, n=1, bidegrees=[(1, 0), (0, 1), (1, 1)])


def test_degree_of_the_genus_nine_bundle():
    assert restricted_degree(SECTION_CURVE, 1, 2) == 25
    assert rr_h0(restricted_degree(SECTION_CURVE, 1, 2), 9) == 17
