from .claims.claims import REPORT_ONLY, ClaimManifest, ClaimRecord, FieldConfig, ResourceCaps
from .reports.reports import ClaimReport, ClaimStatus, RunSummary
from .common import WorkbenchInfo

__all__ = [
    "REPORT_ONLY",
    "ClaimManifest",
    "ClaimRecord",
    "FieldConfig",
    "ResourceCaps",
    "ClaimReport",
    "ClaimStatus",
    "RunSummary",
    "WorkbenchInfo",
]
