import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, TextIO, Union

from models.reports import ClaimReport, RunSummary

logger = logging.getLogger(__name__)

REPORT_FIELDS = ["id", "status", "expected", "computed", "elapsed_ms", "seed", "op", "anchor", "detail"]
COLUMNS = [("id", 6), ("status", 12), ("ms", 9), ("op", 34)]


def _compact(value) -> str:
    return json.dumps(value, separators=(",", ":"), ensure_ascii=False)


def render_json(reports: List[ClaimReport]) -> str:
    document = {
        "summary": RunSummary.from_reports(reports).model_dump(),
        "claims": [{key: report.model_dump()[key] for key in REPORT_FIELDS} for report in reports],
    }
    return json.dumps(document, indent=2, ensure_ascii=False)


def render_text(reports: List[ClaimReport]) -> str:
    header = "".join(name.ljust(width) for name, width in COLUMNS) + "computed"
    lines = [header, "-" * len(header)]
    for report in reports:
        row = [
            report.id.ljust(6),
            report.status.ljust(12),
            str(report.elapsed_ms).ljust(9),
            report.op.ljust(34),
            _compact(report.computed),
        ]
        lines.append("".join(row))
        if report.status == "fail":
            lines.append(f"      expected {_compact(report.expected)}")
        if report.detail:
            lines.append(f"      {report.detail}")
    lines.append("")
    lines.append(RunSummary.from_reports(reports).line())
    return "\n".join(lines)


def emit_report(reports: List[ClaimReport], format: str = "text", out: Optional[Union[str, Path, TextIO]] = None) -> None:
    """Write the report as a fixed-width table or a json document"""
    if format not in ("text", "json"):
        raise ValueError(f"Unknown report format: {format}")
    body = render_json(reports) if format == "json" else render_text(reports)
    if out is None or out == "-":
        sys.stdout.write(body + "\n")
    elif hasattr(out, "write"):
        out.write(body + "\n")
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(body + "\n")
        logger.info(f"Report written to {out}")
