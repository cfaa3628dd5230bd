from typing import Dict

from pydantic import BaseModel, Field


class WorkbenchInfo(BaseModel):
    name: str = Field(..., description="Application name")
    version: str = Field(..., description="Application version")
    description: str = Field(..., description="What the workbench verifies")
    field: str = Field(..., description="Default coefficient field")
    caps: Dict[str, int] = Field(..., description="Default Gröbner resource caps")
