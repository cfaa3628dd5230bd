from typing import Any, List, Literal, Optional

from pydantic import BaseModel, Field

ClaimStatus = Literal["pass", "fail", "limit", "report-only"]


class ClaimReport(BaseModel):
    id: str = Field(..., description="Claim identifier")
    status: ClaimStatus = Field(..., description="pass, fail, limit or report-only")
    expected: Any = Field(None, description="Expected value from the manifest")
    computed: Any = Field(None, description="Value computed by the engines")
    elapsed_ms: int = Field(0, ge=0, description="Wall-clock time of the claim")
    seed: int = Field(..., description="Claim seed derived from the global seed")
    op: str = Field("", description="Operation that was run")
    anchor: str = Field("", description="Statement the claim reproduces")
    detail: Optional[str] = Field(None, description="Error message or note")


class RunSummary(BaseModel):
    passed: int = Field(0, ge=0)
    failed: int = Field(0, ge=0)
    limited: int = Field(0, ge=0)
    report_only: int = Field(0, ge=0)

    @classmethod
    def from_reports(cls, reports: List[ClaimReport]) -> "RunSummary":
        statuses = [r.status for r in reports]
        return cls(
            passed=statuses.count("pass"),
            failed=statuses.count("fail"),
            limited=statuses.count("limit"),
            report_only=statuses.count("report-only"),
        )

    def line(self) -> str:
        return f"{self.passed} pass / {self.failed} fail / {self.limited} limit"
