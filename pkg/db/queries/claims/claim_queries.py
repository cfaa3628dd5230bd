from typing import Dict, List, Optional

from models.claims import ClaimManifest, ClaimRecord


class ClaimQueries:
    """Lookups over a loaded claim manifest"""

    @staticmethod
    def get_claim(manifest: ClaimManifest, claim_id: str) -> Optional[ClaimRecord]:
        return next((claim for claim in manifest.claims if claim.id == claim_id), None)

    @staticmethod
    def claims_for_module(manifest: ClaimManifest, module: str) -> List[ClaimRecord]:
        """Claims whose operation lives in the given engine module"""
        return [claim for claim in manifest.claims if claim.op.split(".", 1)[0] == module]

    @staticmethod
    def unknown_operations(manifest: ClaimManifest, known: List[str]) -> List[str]:
        known_set = set(known)
        return [claim.id for claim in manifest.claims if claim.op not in known_set]

    @staticmethod
    def listing(manifest: ClaimManifest) -> List[Dict[str, str]]:
        """Rows of id, operation and anchor for --list"""
        return [{"id": claim.id, "op": claim.op, "anchor": claim.anchor} for claim in manifest.claims]
