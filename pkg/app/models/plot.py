"""
Plot specifications for (alpha, beta)-plane diagrams
"""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.models.tilt import ExactRational
from app.models.walls import Hole, NumericalWall, NuZeroCurve


class ElementKind(Enum):
    WALL = "wall"
    NU_CURVE = "nu_curve"
    HOLE = "hole"
    VERTICAL_LINE = "vertical_line"


class PlotElement(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: ElementKind
    label: str = ""
    color: str = "#000000"
    dashed: bool = False
    wall: Optional[NumericalWall] = None
    curve: Optional[NuZeroCurve] = None
    hole: Optional[Hole] = None
    beta: Optional[ExactRational] = None


class PlotSpec(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    beta_min: ExactRational
    beta_max: ExactRational
    alpha_max: ExactRational
    elements: List[PlotElement] = Field(default_factory=list)
    samples_per_curve: int = 64

    @model_validator(mode="after")
    def _check_window(self) -> "PlotSpec":
        if self.beta_min >= self.beta_max:
            raise ValueError("beta range is empty")
        if self.alpha_max <= 0:
            raise ValueError("alpha_max must be positive")
        if self.samples_per_curve < 16:
            raise ValueError("samples_per_curve must be at least 16")
        return self
