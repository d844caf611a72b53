"""
Scenario config schemas: the on-disk TOML description of one genus
"""

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator


class ClassRow(BaseModel):
    """A named Mukai vector, written [label, r, c, s] in the config"""

    label: str = Field(..., min_length=1)
    r: int
    c: int
    s: int


class WallSpec(BaseModel):
    id: str = Field(..., min_length=1)
    pair: List[str] = Field(..., min_length=2, max_length=2, description="Two class labels")


class ExpectedRow(BaseModel):
    """One expected value with the statement it reproduces"""

    id: str = Field(..., min_length=1)
    kind: str = Field(..., description="Registered check kind")
    args: Dict[str, Any] = Field(default_factory=dict)
    value: Any
    citation: str = Field(..., min_length=1, description="Quoted source statement")
    origin: Literal["stated", "derived"] = "stated"


class AssumedRow(BaseModel):
    """A recorded, non-computed assertion"""

    id: str = Field(..., min_length=1)
    statement: str = Field(..., min_length=1)
    citation: str = Field(..., min_length=1)


class PlotConfig(BaseModel):
    beta_min: str
    beta_max: str
    alpha_max: str
    walls: List[str] = Field(default_factory=list)
    nu_curves: List[str] = Field(default_factory=list, description="Class labels")
    holes: bool = True
    vertical_lines: List[str] = Field(default_factory=list, description="beta values")


class ScenarioConfig(BaseModel):
    """Parsed gNN.toml"""

    genus: int = Field(..., ge=2)
    title: str = ""
    hole_rmax: int = Field(8, ge=1)
    classes: List[ClassRow] = Field(default_factory=list)
    walls: List[WallSpec] = Field(default_factory=list)
    expected: List[ExpectedRow] = Field(default_factory=list)
    assumed: List[AssumedRow] = Field(default_factory=list)
    plot: Optional[PlotConfig] = None

    @field_validator("classes", mode="before")
    @classmethod
    def _rows_to_classes(cls, value: Any) -> Any:
        rows = []
        for row in value or []:
            if isinstance(row, (list, tuple)):
                if len(row) != 4:
                    raise ValueError(f"class row must be [label, r, c, s], got {row!r}")
                label, r, c, s = row
                rows.append({"label": label, "r": r, "c": c, "s": s})
            else:
                rows.append(row)
        return rows

    @model_validator(mode="after")
    def _check_references(self) -> "ScenarioConfig":
        labels = [row.label for row in self.classes]
        duplicates = sorted({label for label in labels if labels.count(label) > 1})
        if duplicates:
            raise ValueError(f"duplicate class labels: {', '.join(duplicates)}")

        for wall in self.walls:
            unknown = [label for label in wall.pair if label not in labels]
            if unknown:
                raise ValueError(f"wall {wall.id} uses unknown labels: {', '.join(unknown)}")

        for key, ids in (
            ("wall", [wall.id for wall in self.walls]),
            ("check", [row.id for row in self.expected] + [row.id for row in self.assumed]),
        ):
            repeated = sorted({i for i in ids if ids.count(i) > 1})
            if repeated:
                raise ValueError(f"duplicate {key} ids: {', '.join(repeated)}")

        if self.plot is not None:
            wall_ids = {wall.id for wall in self.walls}
            missing = [w for w in self.plot.walls if w not in wall_ids]
            missing += [label for label in self.plot.nu_curves if label not in labels]
            if missing:
                raise ValueError(f"plot references unknown ids: {', '.join(missing)}")
        return self
