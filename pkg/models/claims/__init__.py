from .claims import REPORT_ONLY, ClaimManifest, ClaimRecord, FieldConfig, ResourceCaps

__all__ = ["REPORT_ONLY", "ClaimManifest", "ClaimRecord", "FieldConfig", "ResourceCaps"]
