"""
Report schemas: the JSON dossier produced by a scenario run.

Rationals appear as "p/q" strings (integers as ints), never as floats.
"""

from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field


class CheckResult(BaseModel):
    """One line of a report: a computed check or a recorded assumption"""

    model_config = ConfigDict(populate_by_name=True)

    id: str
    kind: Literal["computed", "assumed"]
    check: Optional[str] = Field(None, description="Check kind for computed lines")
    expected: Any = None
    actual: Any = None
    citation: str
    origin: Literal["stated", "derived", "assumed"] = "stated"
    passed: Optional[bool] = Field(None, alias="pass", description="None for assumed lines")


class WallRecord(BaseModel):
    id: str
    labels: List[str]
    pair: List[List[int]]
    kind: str
    equation: str
    coefficients: List[int]
    center_beta: Optional[Union[str, int]] = None
    radius_sq: Optional[Union[str, int]] = None
    line_beta: Optional[Union[str, int]] = None
    endpoints: Any = None


class HoleRecord(BaseModel):
    wall: str
    delta: List[int]
    label: Optional[str] = None
    point: Dict[str, Any]


class ScenarioReport(BaseModel):
    """Full computed dossier for one genus"""

    model_config = ConfigDict(populate_by_name=True)

    genus: int
    title: str = ""
    checks: List[CheckResult] = Field(default_factory=list)
    walls: List[WallRecord] = Field(default_factory=list)
    holes: List[HoleRecord] = Field(default_factory=list)
    theorem: Dict[str, Any] = Field(default_factory=dict)
    green: bool = False

    def failed_checks(self) -> List[CheckResult]:
        return [check for check in self.checks if check.kind == "computed" and not check.passed]

    def derived_checks(self) -> List[CheckResult]:
        return [check for check in self.checks if check.origin == "derived"]
