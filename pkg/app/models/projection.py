"""
Projection data for maps S --> P^2 given by 3-dimensional linear systems
"""

from enum import Enum
from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.models.lattice import PolarizedK3

LocalDatum = Tuple[int, int]


class ProjectionDatum(BaseModel):
    """
    Numerical data of one stratum: map degree d, c2 of the kernel bundle,
    schematic base length m, cycle base degree f and the base colength.

    local_config lists (m_i, f_i) per support point; when given its sums
    must equal m and f.
    """

    model_config = ConfigDict(frozen=True)

    surface: PolarizedK3
    d: int = Field(..., ge=1)
    c2: int
    m: int = Field(..., ge=0)
    f: int
    colength: int
    local_config: Tuple[LocalDatum, ...] = ()

    @model_validator(mode="after")
    def _check_relations(self) -> "ProjectionDatum":
        if self.d != self.c2 - self.f:
            raise ValueError(f"d={self.d} must equal c2 - f = {self.c2 - self.f}")
        if self.colength != self.surface.lsquare - self.c2:
            raise ValueError(
                f"colength={self.colength} must equal L^2 - c2 = "
                f"{self.surface.lsquare - self.c2}"
            )
        if self.f < self.m:
            raise ValueError(f"f={self.f} must be at least m={self.m}")
        if self.local_config:
            for m_i, f_i in self.local_config:
                if m_i < 1 or f_i < m_i:
                    raise ValueError(f"local datum (m={m_i}, f={f_i}) needs f >= m >= 1")
            if sum(m_i for m_i, _ in self.local_config) != self.m:
                raise ValueError("local lengths do not add up to m")
            if sum(f_i for _, f_i in self.local_config) != self.f:
                raise ValueError("local cycle degrees do not add up to f")
        return self

    def to_exact_json(self) -> Dict[str, Any]:
        return {
            "genus": self.surface.genus,
            "d": self.d,
            "c2": self.c2,
            "m": self.m,
            "f": self.f,
            "colength": self.colength,
            "local_config": [list(item) for item in self.local_config],
        }


class VerdictStatus(Enum):
    FEASIBLE = "feasible"
    EXCLUDED = "excluded"
    UNCLASSIFIED = "unclassified"


class FeasibilityVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    status: VerdictStatus
    reason: str = ""
    required_colength: Optional[int] = None
    available_colength: Optional[int] = None

    def to_exact_json(self) -> Any:
        if self.status is VerdictStatus.FEASIBLE:
            return "feasible"
        return f"{self.status.value}({self.reason})"


class StratumRecord(BaseModel):
    """Index record (c, m) of a Brill-Noether stratum W^2_d(S, L)_{c,m}"""

    model_config = ConfigDict(frozen=True)

    c2: int
    m: Optional[int] = None
    dimension: Optional[int] = None
    description: str
    citation: str
