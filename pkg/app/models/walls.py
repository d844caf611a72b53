"""
Numerical walls, holes and nu = 0 curves
"""

from enum import Enum
from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from app.models.lattice import MukaiVector
from app.models.tilt import ExactRational, StabPoint
from app.utils.rational_utils import to_exact_json


class WallKind(Enum):
    SEMICIRCLE = "semicircle"
    VERTICAL = "vertical"
    DEGENERATE = "degenerate"


class NuCurveShape(Enum):
    HYPERBOLA = "hyperbola"
    PAIR_OF_LINES = "pair_of_lines"
    PARABOLA = "parabola"
    VERTICAL_LINE = "vertical_line"
    EMPTY = "empty"


def _term(coefficient: int, symbol: str, first: bool) -> str:
    if coefficient == 0:
        return ""
    sign = "-" if coefficient < 0 else ("" if first else "+")
    magnitude = abs(coefficient)
    if symbol and magnitude == 1:
        return f"{sign}{symbol}"
    return f"{sign}{magnitude}{symbol}"


def format_equation(quad: int, lin: int, const: int) -> str:
    """Render quad(beta^2+alpha^2) + lin beta + const = 0, e.g. 6(β²+α²)+5β+1=0"""
    parts = []
    for coefficient, symbol in ((quad, "(β²+α²)"), (lin, "β"), (const, "")):
        text = _term(coefficient, symbol, first=not parts)
        if text:
            parts.append(text)
    return ("".join(parts) or "0") + "=0"


class NumericalWall(BaseModel):
    """
    Wall nu(v) = nu(w) in the (alpha, beta)-plane.

    The equation quad*(alpha^2 + beta^2) + lin*beta + const = 0 is kept with
    primitive integer coefficients and positive leading coefficient, so two
    walls are equal exactly when their equations are.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: WallKind
    pair: Tuple[MukaiVector, MukaiVector]
    quad: int
    lin: int
    const: int
    center_beta: Optional[ExactRational] = None
    radius_sq: Optional[ExactRational] = None
    line_beta: Optional[ExactRational] = None

    @model_validator(mode="after")
    def _check_geometry(self) -> "NumericalWall":
        if self.kind is WallKind.SEMICIRCLE:
            if self.center_beta is None or self.radius_sq is None or self.radius_sq <= 0:
                raise ValueError("semicircular wall needs a center and a positive radius^2")
        if self.kind is WallKind.VERTICAL and self.line_beta is None:
            raise ValueError("vertical wall needs line_beta")
        return self

    @property
    def equation(self) -> Tuple[int, int, int]:
        return (self.quad, self.lin, self.const)

    def equation_text(self) -> str:
        return format_equation(self.quad, self.lin, self.const)

    def residual(self, p: StabPoint) -> Any:
        """Left-hand side of the wall equation at p; zero iff p lies on the wall"""
        return self.quad * (p.alpha_sq + p.beta**2) + self.lin * p.beta + self.const

    def to_exact_json(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "pair": [list(v.as_tuple()) for v in self.pair],
            "equation": self.equation_text(),
            "coefficients": list(self.equation),
            "center_beta": to_exact_json(self.center_beta),
            "radius_sq": to_exact_json(self.radius_sq),
            "line_beta": to_exact_json(self.line_beta),
        }


class Hole(BaseModel):
    """Point where the central charge of a spherical class vanishes"""

    model_config = ConfigDict(frozen=True)

    delta: MukaiVector
    point: StabPoint

    def to_exact_json(self) -> Dict[str, Any]:
        return {"delta": list(self.delta.as_tuple()), "point": self.point.to_exact_json()}


class NuZeroCurve(BaseModel):
    """
    Re Z(v) = 0 written as
    beta_sq*beta^2 + alpha_sq*alpha^2 + beta_lin*beta + const = 0
    """

    model_config = ConfigDict(frozen=True)

    shape: NuCurveShape
    vector: MukaiVector
    beta_sq: int
    alpha_sq: int
    beta_lin: int
    const: int

    def residual(self, p: StabPoint) -> Any:
        return (
            self.beta_sq * p.beta**2
            + self.alpha_sq * p.alpha_sq
            + self.beta_lin * p.beta
            + self.const
        )

    def to_exact_json(self) -> Dict[str, Any]:
        return {
            "shape": self.shape.value,
            "vector": list(self.vector.as_tuple()),
            "coefficients": [self.beta_sq, self.alpha_sq, self.beta_lin, self.const],
        }


class Nesting(Enum):
    NESTED_1_IN_2 = "nested_1_in_2"
    NESTED_2_IN_1 = "nested_2_in_1"
    DISJOINT = "disjoint"
    CROSSING = "crossing"
    EQUAL = "equal"


class IrrationalEndpoints(BaseModel):
    """Endpoints of a wall whose alpha = 0 restriction has irrational roots"""

    model_config = ConfigDict(frozen=True)

    quad: int
    lin: int
    const: int

    def to_exact_json(self) -> Dict[str, Any]:
        return {"irrational": [self.quad, self.lin, self.const]}
