import asyncio

import pytest

from app.claim_service import ClaimService
from db.pool.store import manifest_store
from engines.polycore import Field
from models.claims import ClaimManifest, ClaimRecord, FieldConfig, ResourceCaps

TWISTED_CUBIC = {"variables": ["a", "b", "c", "d"], "generators": ["a*c - b^2", "a*d - b*c", "b*d - c^2"]}


@pytest.fixture(scope="module")
def service():
    return ClaimService()


@pytest.fixture
def mixed_manifest():
    return ClaimManifest(
        name="mixed",
        claims=[
            ClaimRecord(id="P1", op="multigraded.riemann_roch", params={"degree": 25, "genus": 9},
                        expected={"h0": 17, "canonical_quadrics": 21}),
            ClaimRecord(id="F1", op="multigraded.riemann_roch", params={"degree": 25, "genus": 9},
                        expected={"h0": 18, "canonical_quadrics": 21}),
            ClaimRecord(id="U1", op="groebner.nothing", expected=1),
            ClaimRecord(id="L1", op="groebner.hilbert_data", params=TWISTED_CUBIC,
                        caps=ResourceCaps(max_pair_degree=2), expected={}),
            ClaimRecord(id="R1", op="chow.pushforward_degrees", params={"cases": ["G5"]},
                        recorded_expectation={"G5": 16}),
            ClaimRecord(id="E1", op="chow.pushforward_degrees", params={"cases": ["G9"]}, expected={}),
            ClaimRecord(id="T1", op="chow.canonical_classes", params={"cases": ["G6C"]},
                        expected={"G6C": [8, "cA"]}),
        ],
    )


def test_statuses_and_order(service, mixed_manifest):
    reports = asyncio.run(service.run_manifest(mixed_manifest, parallelism=3))
    assert [r.id for r in reports] == ["P1", "F1", "U1", "L1", "R1", "E1", "T1"]
    assert [r.status for r in reports] == ["pass", "fail", "fail", "limit", "report-only", "fail", "pass"]


def test_failure_details(service, mixed_manifest):
    reports = {r.id: r for r in asyncio.run(service.run_manifest(mixed_manifest))}
    assert reports["F1"].computed == {"h0": 17, "canonical_quadrics": 21}
    assert reports["F1"].detail is None
    assert reports["U1"].detail == "unknown operation"
    assert reports["U1"].computed is None
    assert "pair degree" in reports["L1"].detail
    assert reports["R1"].detail == "recorded expectation matched"
    assert reports["R1"].expected == "report-only"
    assert reports["E1"].detail


def test_reports_carry_claim_metadata(service, mixed_manifest):
    report = service.run_claim(mixed_manifest.claims[0], mixed_manifest)
    assert report.op == "multigraded.riemann_roch"
    assert report.elapsed_ms >= 0
    assert report.seed == service.context_for(mixed_manifest.claims[0], mixed_manifest, Field(32003), 5).seed


def test_runs_are_reproducible(service):
    manifest = manifest_store.load("core").select(["AC15"])
    first = asyncio.run(service.run_manifest(manifest))
    second = asyncio.run(service.run_manifest(manifest))
    assert first[0].computed == second[0].computed


def test_parallelism_must_be_positive(service, mixed_manifest):
    with pytest.raises(ValueError):
        asyncio.run(service.run_manifest(mixed_manifest, parallelism=0))


def test_quick_core_claims_pass(service):
    ids = ["AC03", "AC04", "AC05", "AC06", "AC07", "AC08", "AC11", "AC15", "AC16", "AC17"]
    manifest = manifest_store.load("core").select(ids)
    reports = asyncio.run(service.run_manifest(manifest, parallelism=2))
    assert {r.id: r.status for r in reports} == {i: "pass" for i in ids}


def test_rational_field(service):
    manifest = ClaimManifest(
        field=FieldConfig(characteristic="Q"),
        claims=[ClaimRecord(id="Q1", op="polycore.normalize",
                            params={"variables": ["x", "y"], "polynomial": "x/2 - y/3"}, expected="3*x - 2*y")],
    )
    assert asyncio.run(service.run_manifest(manifest))[0].status == "pass"


@pytest.mark.slow
def test_engines_agree_on_dual_degrees(service):
    result = asyncio.run(service.validate_cross_engine(Field(32003)))
    assert result == {
        "G4": {"groebner": 14, "chow": 14, "match": True},
        "G5": {"groebner": 16, "chow": 16, "match": True},
    }


def test_empty_manifest(service):
    assert asyncio.run(service.run_manifest(ClaimManifest())) == []


def test_results_do_not_depend_on_parallelism(service, mixed_manifest):
    serial = asyncio.run(service.run_manifest(mixed_manifest, parallelism=1))
    parallel = asyncio.run(service.run_manifest(mixed_manifest, parallelism=4))
    assert [(r.id, r.status, r.computed, r.seed) for r in serial] == [(r.id, r.status, r.computed, r.seed) for r in parallel]
