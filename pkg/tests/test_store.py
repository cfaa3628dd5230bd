import json

import pytest

from app.claim_service import build_registry
from db.pool.store import ManifestStore, manifest_store
from db.queries.claims import ClaimQueries
from models.claims import ClaimManifest, ClaimRecord


def test_builtin_manifest():
    assert "core" in manifest_store.builtin_names()
    manifest = manifest_store.load("core")
    assert manifest.name == "core"
    assert len(manifest.claims) == 18
    assert manifest.field.characteristic == "p"
    assert manifest_store.load("core") is manifest


def test_core_manifest_answers_to_its_long_name():
    assert manifest_store.load("paper-core") is manifest_store.load("core")
    assert manifest_store.resolve("paper-core").name == "core.json"


def test_core_operations_are_all_registered():
    manifest = manifest_store.load("core")
    assert ClaimQueries.unknown_operations(manifest, build_registry().names()) == []


def test_report_only_claim():
    claim = ClaimQueries.get_claim(manifest_store.load("core"), "AC18")
    assert claim.report_only
    assert claim.recorded_expectation == {"G4": 1, "G5": 0, "G6C": 0}
    assert not ClaimQueries.get_claim(manifest_store.load("core"), "AC01").report_only


def test_claims_for_module():
    manifest = manifest_store.load("core")
    assert [c.id for c in ClaimQueries.claims_for_module(manifest, "piclattice")] == ["AC16"]
    assert ClaimQueries.get_claim(manifest, "AC99") is None
    assert ClaimQueries.listing(manifest)[0] == {"id": "AC01", "op": "groebner.dual_hilbert", "anchor": manifest.claims[0].anchor}


def test_select_keeps_manifest_order():
    manifest = manifest_store.load("core").select(["AC16", "AC08"])
    assert [c.id for c in manifest.claims] == ["AC08", "AC16"]
    with pytest.raises(ValueError):
        manifest_store.load("core").select(["AC99"])


def test_save_and_load(tmp_path):
    store = ManifestStore(data_dir=tmp_path)
    manifest = ClaimManifest(name="small", claims=[ClaimRecord(id="X1", op="chow.ac_hat_identities", expected={"cB^4": 1})])
    store.save(manifest, tmp_path / "small.json")
    assert store.builtin_names() == ["small"]
    assert store.load("small") == manifest


def test_missing_manifest(tmp_path):
    with pytest.raises(FileNotFoundError):
        ManifestStore(data_dir=tmp_path).load("absent")


def test_malformed_manifests(tmp_path):
    store = ManifestStore(data_dir=tmp_path)
    (tmp_path / "broken.json").write_text("{not json", encoding="utf-8")
    with pytest.raises(ValueError):
        store.load("broken")

    duplicate = {"claims": [{"id": "A", "op": "chow.ac_hat_identities"}, {"id": "A", "op": "chow.ac_hat_identities"}]}
    (tmp_path / "dup.json").write_text(json.dumps(duplicate), encoding="utf-8")
    with pytest.raises(ValueError):
        store.load("dup")

    bad_op = {"claims": [{"id": "A", "op": "NotAnOperation"}]}
    (tmp_path / "op.json").write_text(json.dumps(bad_op), encoding="utf-8")
    with pytest.raises(ValueError):
        store.load("op")
