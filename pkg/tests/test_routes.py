import pytest

from app.claim_service import build_registry
from engines.polycore import Field
from utils.errors import (
    ClaimExecutionError,
    PolynomialParseError,
    PreconditionError,
    UnknownOperationError,
    UnsupportedCaseError,
)
from utils.routing import OperationContext, OperationRegistry, OperationRouter


@pytest.fixture(scope="module")
def registry():
    return build_registry()


@pytest.fixture
def context():
    return OperationContext(Field(32003), global_seed=1, claim_id="T1", samples=5)


def run(registry, op, params, context):
    return registry.get(op)(params, context)


def test_every_engine_registers_its_operations(registry):
    names = registry.names()
    for op in (
        "polycore.normalize",
        "groebner.dual_hilbert",
        "groebner.hilbert_data",
        "groebner.rank_probes",
        "groebner.span_defects",
        "multigraded.ci_curve_invariants",
        "multigraded.riemann_roch",
        "chow.pushforward_degrees",
        "chow.chern_product",
        "chow.canonical_classes",
        "chow.ac_hat_identities",
        "chow.self_duality",
        "lindual.duality_suite",
        "lindual.jump_histogram",
        "varieties.linear_sections",
        "varieties.cor46_round_trip",
        "varieties.singular_loci",
        "varieties.cor63_probe",
        "varieties.lemma42_probes",
        "piclattice.lattice_suites",
    ):
        assert op in names


def test_unknown_operation(registry):
    assert "groebner.nothing" not in registry
    with pytest.raises(UnknownOperationError) as info:
        registry.get("groebner.nothing")
    assert str(info.value) == "unknown operation"
    assert info.value.name == "groebner.nothing"


def test_duplicate_registration_is_rejected():
    router = OperationRouter(prefix="demo")

    @router.operation("echo")
    def echo(params, context):
        return params

    registry = OperationRegistry()
    registry.include_router(router)
    with pytest.raises(ValueError):
        registry.include_router(router)


def test_context_seeds_are_derived_per_claim():
    field = Field(32003)
    a = OperationContext(field, 1, "AC01", 5)
    b = OperationContext(field, 1, "AC02", 5)
    assert a.seed != b.seed
    assert a.seed == OperationContext(field, 1, "AC01", 9).seed
    assert a.trial_seed(0) != a.trial_seed(1)


def test_normalize(registry, context):
    assert run(registry, "polycore.normalize", {"variables": ["x", "y"], "polynomial": "2*x - 4*y"}, context) == "x + 32001*y"


def test_normalize_reports_parse_errors(registry, context):
    with pytest.raises(PolynomialParseError) as info:
        run(registry, "polycore.normalize", {"variables": ["x"], "polynomial": "x +"}, context)
    assert "position" in str(info.value)


def test_missing_parameter_is_wrapped(registry, context):
    with pytest.raises(ClaimExecutionError):
        run(registry, "polycore.normalize", {"variables": ["x"]}, context)


def test_hilbert_data_of_twisted_cubic(registry, context):
    result = run(
        registry,
        "groebner.hilbert_data",
        {"variables": ["a", "b", "c", "d"], "generators": ["a*c - b^2", "a*d - b*c", "b*d - c^2"]},
        context,
    )
    assert result == {
        "projective_dim": 1,
        "degree": 3,
        "span_defect": 0,
        "hilbert_polynomial": "3*t + 1",
        "certificate": True,
    }


def test_rank_probes(registry, context):
    result = run(registry, "groebner.rank_probes", {"probes": [["G5", "vertex"], ["G5", "generic"]], "samples": 4}, context)
    assert result == {"G5:vertex": {"3": 4}, "G5:generic": {"7": 4}}


def test_vertex_probe_needs_genus_five(registry, context):
    with pytest.raises(PreconditionError):
        run(registry, "groebner.rank_probes", {"probes": [["G4", "vertex"]]}, context)


def test_curve_invariants(registry, context):
    curves = {"C": {"m": 2, "n": 2, "bidegrees": [[1, 1], [2, 1], [1, 2]]}}
    assert run(registry, "multigraded.ci_curve_invariants", {"curves": curves}, context) == {
        "C": {"d1": 7, "d2": 7, "genus": 8, "canonical_sum": True}
    }


def test_riemann_roch(registry, context):
    assert run(registry, "multigraded.riemann_roch", {"degree": 25, "genus": 9}, context) == {
        "h0": 17,
        "canonical_quadrics": 21,
    }
    assert run(registry, "multigraded.hyperelliptic_genus", {"branch_points": 6}, context) == 2


def test_chow_operations(registry, context):
    assert run(registry, "chow.pushforward_degrees", {"cases": ["G5", "G8"]}, context) == {"G5": 16, "G8": 2}
    assert run(registry, "chow.canonical_classes", {"cases": ["G6C"]}, context) == {"G6C": [8, "cA"]}
    assert run(registry, "chow.self_duality", {"case": "G6Q"}, context) == {"equal": True, "degree": 10}
    assert run(registry, "chow.bundle_checks", {"cases": ["G5"]}, context) == {
        "G5": {"exact_sequence": True, "projective_bundle_dim": 12}
    }


def test_unknown_case_is_not_wrapped(registry, context):
    with pytest.raises(UnsupportedCaseError):
        run(registry, "chow.pushforward_degrees", {"cases": ["G9"]}, context)


def test_duality_suite(registry, context):
    params = {"configurations": 20, "ambient": 8, "samples": 3, "cases": ["G5", "G8"]}
    assert run(registry, "lindual.duality_suite", params, context) == {
        "identity_failures": 0,
        "orthogonality_failures": {"G5": 0, "G8": 0},
    }


def test_jump_histogram_counts_every_sample(registry, context):
    result = run(registry, "lindual.jump_histogram", {"case": "G5", "lambda_dim": 6, "samples": 6}, context)
    assert sum(result.values()) == 6
    assert all(key.isdigit() for key in result)


def test_singular_loci(registry, context):
    assert run(registry, "varieties.singular_loci", {}, context) == {
        "cubic_identity": True,
        "q=0": True,
        "S_F": True,
        "cone_contains_S_F": True,
        "generic_gradient_nonzero": True,
    }


def test_segre_probes(registry, context):
    assert run(registry, "varieties.lemma42_probes", {"trials": 2}, context) == {
        "line2": {"2": 2},
        "plane3": {"3": 2},
    }


def test_containment(registry, context):
    assert run(registry, "varieties.containment", {"cases": ["G4", "G5"], "samples": 3}, context) == {"G4": 0, "G5": 0}


def test_lattice_operations(registry, context):
    suites = run(registry, "piclattice.lattice_suites", {}, context)
    assert suites["quintic_del_pezzo"]["genus"] == 2
    assert suites["cubic_surface"]["curve_degree"] == 9
    assert run(registry, "piclattice.genus_of_class", {"k": 4, "m": 5, "multiplicities": 2}, context) == 2
