import io
import json

import pytest

from app.reporting import REPORT_FIELDS, emit_report, render_json, render_text
from models.reports import ClaimReport, RunSummary


@pytest.fixture
def reports():
    return [
        ClaimReport(id="AC08", status="pass", expected={"h0": 17}, computed={"h0": 17}, elapsed_ms=3, seed=11,
                    op="multigraded.riemann_roch", anchor="Riemann-Roch"),
        ClaimReport(id="AC09", status="fail", expected=14, computed=13, elapsed_ms=40, seed=12,
                    op="varieties.linear_sections"),
        ClaimReport(id="AC01", status="limit", seed=13, op="groebner.dual_hilbert", detail="S-pair degree cap exceeded"),
        ClaimReport(id="AC18", status="report-only", expected="report-only", computed={"G4": 1}, seed=14,
                    op="groebner.span_defects"),
    ]


def test_summary_counts(reports):
    summary = RunSummary.from_reports(reports)
    assert (summary.passed, summary.failed, summary.limited, summary.report_only) == (1, 1, 1, 1)
    assert summary.line() == "1 pass / 1 fail / 1 limit"


def test_json_document(reports):
    document = json.loads(render_json(reports))
    assert document["summary"] == {"passed": 1, "failed": 1, "limited": 1, "report_only": 1}
    assert [claim["id"] for claim in document["claims"]] == ["AC08", "AC09", "AC01", "AC18"]
    assert list(document["claims"][0]) == REPORT_FIELDS
    assert document["claims"][2]["detail"] == "S-pair degree cap exceeded"


def test_text_table(reports):
    text = render_text(reports)
    lines = text.splitlines()
    assert lines[0].startswith("id")
    assert lines[-1] == "1 pass / 1 fail / 1 limit"
    assert any(line.startswith("AC09  fail") for line in lines)
    assert "      expected 14" in lines
    assert "      S-pair degree cap exceeded" in lines


def test_emit_to_stream_and_file(reports, tmp_path):
    buffer = io.StringIO()
    emit_report(reports, "json", buffer)
    assert json.loads(buffer.getvalue())["summary"]["passed"] == 1

    path = tmp_path / "report.txt"
    emit_report(reports, "text", str(path))
    assert path.read_text(encoding="utf-8").rstrip("\n").endswith("1 pass / 1 fail / 1 limit")


def test_emit_to_stdout(reports, capsys):
    emit_report(reports[:1], "text", "-")
    assert "0 fail" in capsys.readouterr().out


def test_unknown_format(reports):
    with pytest.raises(ValueError):
        emit_report(reports, "xml", io.StringIO())
