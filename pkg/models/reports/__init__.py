from .reports import ClaimReport, ClaimStatus, RunSummary

__all__ = ["ClaimReport", "ClaimStatus", "RunSummary"]
