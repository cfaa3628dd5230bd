import pytest

from engines.groebner import (
    GroebnerLimits,
    buchberger,
    hilbert_data,
    hilbert_function,
    ideal_contains,
    jacobian_rank_at,
    locate_point,
    normal_form,
    random_coordinate_change,
    s_pair_certificate,
)
from engines.polycore import MonomialOrder, Polynomial, RingSpec, parse_poly
from engines.varieties import dual_hilbert
from utils.errors import (
    InhomogeneousInputError,
    LimitExceededError,
    NonFiniteSchemeError,
    PointNotOnVarietyError,
    ZeroPointError,
)
from utils.rng import make_rng


def test_twisted_cubic_hilbert_data(twisted_cubic):
    gb = buchberger(twisted_cubic)
    data = hilbert_data(gb)
    assert data.projective_dim == 1
    assert data.degree == 3
    assert data.numerator_coefficients == [1, 2]
    assert str(data.hilbert_polynomial) == "3*t + 1"
    assert data.value(2) == 7
    assert data.span_defect == 0
    assert s_pair_certificate(gb)


def test_twisted_cubic_over_rationals(qq):
    spec = RingSpec(("a", "b", "c", "d"), qq)
    gens = [parse_poly(text, spec) for text in ("a*c - b^2", "a*d - b*c", "b*d - c^2")]
    data = hilbert_data(buchberger(gens))
    assert (data.projective_dim, data.degree) == (1, 3)


def test_basis_is_independent_of_generator_order(twisted_cubic):
    forward = buchberger(twisted_cubic)
    backward = buchberger(list(reversed(twisted_cubic)))
    assert forward.generators == backward.generators


def test_membership(twisted_cubic):
    gb = buchberger(twisted_cubic)
    spec = twisted_cubic[0].spec
    assert ideal_contains(gb, parse_poly("b*(a*c - b^2) + d*(b*d - c^2)", spec))
    assert not ideal_contains(gb, parse_poly("a*b", spec))
    assert normal_form(parse_poly("b^2", spec), gb) == parse_poly("a*c", spec)


def test_elimination_order_basis(twisted_cubic):
    gb = buchberger(twisted_cubic, order=MonomialOrder.block(4, 1))
    assert gb.order.kind == "block"
    assert s_pair_certificate(gb)
    assert hilbert_data(gb).degree == 3


def test_inhomogeneous_input_is_rejected(xyz):
    with pytest.raises(InhomogeneousInputError):
        buchberger([parse_poly("x^2 - y", xyz)])


def test_pair_degree_cap(twisted_cubic):
    with pytest.raises(LimitExceededError) as info:
        buchberger(twisted_cubic, limits=GroebnerLimits(max_pair_degree=2))
    assert info.value.degree == 3


def test_coordinate_change_keeps_hilbert_data(twisted_cubic):
    moved = random_coordinate_change(twisted_cubic, seed=7)
    data = hilbert_data(buchberger(moved))
    assert (data.projective_dim, data.degree) == (1, 3)


def test_jacobian_rank_on_the_curve(twisted_cubic):
    assert jacobian_rank_at(twisted_cubic, [1, 1, 1, 1]) == 2
    assert jacobian_rank_at(twisted_cubic, [1, 2, 4, 8]) == 2


def test_jacobian_rank_rejects_bad_points(twisted_cubic):
    with pytest.raises(PointNotOnVarietyError) as info:
        jacobian_rank_at(twisted_cubic, [1, 0, 1, 0])
    assert info.value.index == 0
    with pytest.raises(ZeroPointError):
        jacobian_rank_at(twisted_cubic, [0, 0, 0, 0])


def test_locate_coordinate_point(fp):
    spec = RingSpec(("x1", "x2", "x3"), fp)
    gb = buchberger([parse_poly("x2", spec), parse_poly("x3", spec)])
    assert locate_point(gb) == [1, 0, 0]


def test_locate_general_point(fp):
    spec = RingSpec(("x1", "x2", "x3"), fp)
    gb = buchberger([parse_poly("x2 - 2*x1", spec), parse_poly("x3 - 3*x1", spec)])
    v = locate_point(gb)
    assert v[1] == v[0] * 2
    assert v[2] == v[0] * 3
    assert v[0] != 0


def test_locate_point_needs_a_finite_scheme(twisted_cubic):
    with pytest.raises(NonFiniteSchemeError):
        locate_point(buchberger(twisted_cubic))


@pytest.mark.slow
def test_genus_four_dual_variety(fp):
    data = dual_hilbert("G4", fp)
    assert (data.projective_dim, data.degree) == (7, 14)
    assert data.span_defect == 1


@pytest.mark.slow
def test_genus_five_dual_variety(fp):
    data = dual_hilbert("G5", fp)
    assert (data.projective_dim, data.degree) == (8, 16)
    assert data.span_defect == 0


def test_basis_of_two_quadrics_in_the_plane(fp):
    spec = RingSpec(("x", "y"), fp)
    gb = buchberger([parse_poly("x^2 - y^2", spec), parse_poly("x*y", spec)])
    expected = [parse_poly(text, spec) for text in ("x*y", "x^2 - y^2", "y^3")]
    assert len(gb) == 3
    assert all(g in expected for g in gb.generators)
    assert s_pair_certificate(gb)


def test_hilbert_function_of_the_twisted_cubic(twisted_cubic):
    data = hilbert_data(buchberger(twisted_cubic))
    assert [hilbert_function(data, d) for d in range(7)] == [3 * d + 1 for d in range(7)]
    assert hilbert_function(data, -1) == 0


def test_coordinate_change_keeps_the_hilbert_series(twisted_cubic):
    before = hilbert_data(buchberger(twisted_cubic))
    for seed in (1, 2, 3):
        after = hilbert_data(buchberger(random_coordinate_change(twisted_cubic, seed=seed)))
        assert after.numerator_coefficients == before.numerator_coefficients
        assert after.summary() == before.summary()


def test_generic_hyperplane_cuts_dimension_and_keeps_degree(twisted_cubic):
    spec = twisted_cubic[0].spec
    form = Polynomial.linear_form(spec, spec.field.random_vector(make_rng(11), spec.ngens))
    data = hilbert_data(buchberger(twisted_cubic + [form]))
    assert (data.projective_dim, data.degree) == (0, 3)


def test_normal_form_is_idempotent_and_linear(twisted_cubic):
    gb = buchberger(twisted_cubic)
    spec = twisted_cubic[0].spec
    f = parse_poly("a^3 + b^2*d - 5*c*d^2", spec)
    g = parse_poly("b^2*c + a*d^2", spec)
    assert normal_form(normal_form(f, gb), gb) == normal_form(f, gb)
    assert normal_form(f + g * 3, gb) == normal_form(f, gb) + normal_form(g, gb) * 3
    assert normal_form(Polynomial.one(spec), gb) == Polynomial.one(spec)
