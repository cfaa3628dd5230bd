import json

from app.main import EXIT_FAIL, EXIT_LIMIT, EXIT_OK, EXIT_USAGE, info, main
from models.claims import ClaimManifest, ClaimRecord, ResourceCaps

TWISTED_CUBIC = {"variables": ["a", "b", "c", "d"], "generators": ["a*c - b^2", "a*d - b*c", "b*d - c^2"]}


def write_manifest(path, claims):
    path.write_text(ClaimManifest(name="cli", claims=claims).model_dump_json(), encoding="utf-8")
    return str(path)


def test_list(capsys):
    assert main(["--list"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "AC01" in out
    assert "piclattice.lattice_suites" in out


def test_run_selected_claims_as_json(tmp_path):
    out = tmp_path / "report.json"
    assert main(["--run", "AC16,AC08", "--format", "json", "--out", str(out)]) == EXIT_OK
    document = json.loads(out.read_text(encoding="utf-8"))
    assert [claim["id"] for claim in document["claims"]] == ["AC08", "AC16"]
    assert document["summary"]["passed"] == 2


def test_text_report_on_stdout(capsys):
    assert main(["--run", "AC06"]) == EXIT_OK
    assert "1 pass / 0 fail / 0 limit" in capsys.readouterr().out


def test_usage_errors(tmp_path):
    assert main(["--run", "AC99"]) == EXIT_USAGE
    assert main(["--char", "R"]) == EXIT_USAGE
    assert main(["--samples", "0", "--list"]) == EXIT_USAGE
    assert main(["--manifest", str(tmp_path / "missing.json")]) == EXIT_USAGE
    assert main(["--char", "p", "--prime", "2", "--run", "AC08"]) == EXIT_USAGE


def test_failing_claim_exits_with_one(tmp_path):
    manifest = write_manifest(
        tmp_path / "fail.json",
        [ClaimRecord(id="F1", op="multigraded.riemann_roch", params={"degree": 25, "genus": 9}, expected={"h0": 0})],
    )
    assert main(["--manifest", manifest, "--out", str(tmp_path / "r.txt")]) == EXIT_FAIL


def test_limits_exit_only_when_strict(tmp_path):
    manifest = write_manifest(
        tmp_path / "limit.json",
        [ClaimRecord(id="L1", op="groebner.hilbert_data", params=TWISTED_CUBIC,
                     caps=ResourceCaps(max_pair_degree=2), expected={})],
    )
    out = str(tmp_path / "r.txt")
    assert main(["--manifest", manifest, "--out", out]) == EXIT_OK
    assert main(["--manifest", manifest, "--out", out, "--strict-limits"]) == EXIT_LIMIT


def test_rational_field_flag(tmp_path):
    out = tmp_path / "report.json"
    assert main(["--char", "Q", "--run", "AC16", "--format", "json", "--out", str(out)]) == EXIT_OK
    assert json.loads(out.read_text(encoding="utf-8"))["summary"]["passed"] == 1


def test_info():
    workbench = info()
    assert workbench.version
    assert workbench.caps["max_pair_degree"] >= 1
