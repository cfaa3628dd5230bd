from enum import Enum
from typing import Dict, List

from pydantic import BaseModel, Field

from engines.polycore.rings import indexed_names, matrix_names
from utils.errors import UnsupportedCaseError


class CaseId(str, Enum):
    G4 = "G4"
    G5 = "G5"
    G6Q = "G6Q"
    G6C = "G6C"
    G8 = "G8"


class CaseInfo(BaseModel):
    """Fixed data of one class of key varieties"""

    case: CaseId = Field(..., description="Case identifier")
    coordinates: List[str] = Field(..., description="Coordinates of the ambient of the dual variety, in ring order")
    section_dim: int = Field(..., description="Dimension of the section space V_E")
    base: str = Field(..., description="Chow ring of the base S")
    rank_E: int = Field(..., description="Rank of E")
    rank_E_perp: int = Field(..., description="Rank of E-perp")
    minus_KS: Dict[str, int] = Field(..., description="Anticanonical class of S in the base ring basis")
    note: str = Field("", description="What is known about the dual variety")


CASES: Dict[CaseId, CaseInfo] = {
    CaseId.G4: CaseInfo(
        case=CaseId.G4,
        coordinates=list(indexed_names("p", 3) + indexed_names("q", 3) + matrix_names("d", 3, 3)),
        section_dim=14,
        base="B6",
        rank_E=9,
        rank_E_perp=5,
        minus_KS={"h1": 2, "h2": 2},
        note="tpD = 0, Dq = 0, adj(D) = 0 and tr D = 0 in 15 coordinates",
    ),
    CaseId.G5: CaseInfo(
        case=CaseId.G5,
        coordinates=list(matrix_names("d", 4, 3) + indexed_names("p", 4)),
        section_dim=16,
        base="P3",
        rank_E=10,
        rank_E_perp=6,
        minus_KS={"h": 4},
        note="tpD = 0 and rank D <= 1 for a 4x3 matrix D",
    ),
    CaseId.G6Q: CaseInfo(
        case=CaseId.G6Q,
        coordinates=list(indexed_names("z", 14)),
        section_dim=14,
        base="Q3",
        rank_E=7,
        rank_E_perp=7,
        minus_KS={"h": 3},
        note="no equations; the dual variety is identified with the key variety by self-duality",
    ),
    CaseId.G6C: CaseInfo(
        case=CaseId.G6C,
        coordinates=list(indexed_names("p", 3) + indexed_names("r", 5) + indexed_names("q", 5)),
        section_dim=13,
        base="AC_hat",
        rank_E=5,
        rank_E_perp=8,
        minus_KS={"cA": 3, "F": -1},
        note="a single cubic hypersurface in P^12",
    ),
    CaseId.G8: CaseInfo(
        case=CaseId.G8,
        coordinates=list(indexed_names("z", 12)),
        section_dim=12,
        base="B5",
        rank_E=3,
        rank_E_perp=9,
        minus_KS={"H": 2},
        note="no equations; the dual variety is all of P^11",
    ),
}


def case_info(case: str) -> CaseInfo:
    try:
        return CASES[CaseId(case)]
    except ValueError:
        raise UnsupportedCaseError(f"Unknown case: {case}") from None
