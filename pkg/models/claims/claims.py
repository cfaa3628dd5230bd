import re
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from engines.groebner.buchberger import GroebnerLimits
from engines.polycore.scalars import Field as ScalarField

REPORT_ONLY = "report-only"
OPERATION_NAME = re.compile(r"^[a-z_]+\.[a-z0-9_]+$")


class FieldConfig(BaseModel):
    characteristic: str = Field("p", description="'p' for F_prime, 'Q' for the rationals")
    prime: int = Field(32003, gt=2, description="Prime used when characteristic is 'p'")

    @field_validator("characteristic")
    @classmethod
    def validate_characteristic(cls, v):
        if v not in ("p", "Q"):
            raise ValueError(f"Characteristic must be 'p' or 'Q', got {v!r}")
        return v

    def build(self) -> ScalarField:
        return ScalarField.from_config(self.characteristic, self.prime)


class ResourceCaps(BaseModel):
    max_pair_degree: int = Field(30, ge=1, description="Largest admissible S-pair degree")
    max_basis_size: int = Field(20000, ge=1, description="Largest admissible intermediate basis")

    def limits(self) -> GroebnerLimits:
        return GroebnerLimits(max_pair_degree=self.max_pair_degree, max_basis_size=self.max_basis_size)


class ClaimRecord(BaseModel):
    id: str = Field(..., min_length=1, description="Unique claim identifier")
    op: str = Field(..., description="Operation name, '<module>.<operation>'")
    params: Dict[str, Any] = Field(default_factory=dict, description="Operation parameters")
    expected: Any = Field(REPORT_ONLY, description="Exact expected value, or 'report-only'")
    recorded_expectation: Optional[Any] = Field(None, description="Value recorded for report-only claims")
    anchor: str = Field("", description="Statement the claim reproduces")
    caps: Optional[ResourceCaps] = Field(None, description="Per-claim Gröbner caps")

    @field_validator("op")
    @classmethod
    def validate_op(cls, v):
        if not OPERATION_NAME.match(v):
            raise ValueError(f"Operation name must look like 'module.operation', got {v!r}")
        return v

    @property
    def report_only(self) -> bool:
        return isinstance(self.expected, str) and self.expected == REPORT_ONLY


class ClaimManifest(BaseModel):
    name: str = Field("manifest", description="Manifest name")
    field: FieldConfig = Field(default_factory=FieldConfig, description="Coefficient field")
    seed: int = Field(1, ge=0, lt=2 ** 64, description="Global seed")
    caps: ResourceCaps = Field(default_factory=ResourceCaps, description="Default Gröbner caps")
    claims: List[ClaimRecord] = Field(default_factory=list, description="Claims in run order")

    @model_validator(mode="after")
    def validate_unique_ids(self):
        seen = set()
        for claim in self.claims:
            if claim.id in seen:
                raise ValueError(f"Duplicate claim id: {claim.id}")
            seen.add(claim.id)
        return self

    def select(self, ids: List[str]) -> "ClaimManifest":
        """Copy restricted to the given ids, in manifest order"""
        known = {claim.id for claim in self.claims}
        missing = [i for i in ids if i not in known]
        if missing:
            raise ValueError(f"Unknown claim ids: {', '.join(missing)}")
        wanted = set(ids)
        return self.model_copy(update={"claims": [c for c in self.claims if c.id in wanted]})
