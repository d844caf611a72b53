"""
Points of the (alpha, beta)-plane and central charge values
"""

from enum import Enum
from typing import Annotated, Any, Dict

from pydantic import BaseModel, BeforeValidator, ConfigDict, field_validator
from sympy import Rational

from app.utils.rational_utils import to_exact_json, to_rational

ExactRational = Annotated[Any, BeforeValidator(to_rational)]


class StabPoint(BaseModel):
    """Tilt-stability point stored by beta and alpha^2"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    beta: ExactRational
    alpha_sq: ExactRational

    @field_validator("alpha_sq")
    @classmethod
    def _positive_alpha(cls, value: Rational) -> Rational:
        if value <= 0:
            raise ValueError(f"alpha^2 must be positive, got {value}")
        return value

    def to_exact_json(self) -> Dict[str, Any]:
        return {"beta": to_exact_json(self.beta), "alpha_sq": to_exact_json(self.alpha_sq)}

    def __str__(self) -> str:
        return f"(beta={self.beta}, alpha^2={self.alpha_sq})"


class ChargeValue(BaseModel):
    """Value of the central charge Z = re + i*im"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    re: ExactRational
    im: ExactRational

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def to_exact_json(self) -> Dict[str, Any]:
        return {"re": to_exact_json(self.re), "im": to_exact_json(self.im)}


class HeartMembership(Enum):
    """Where a mu-stable class sits relative to the tilted heart Coh^beta"""

    SHEAF_IN_HEART = "sheaf_in_heart"
    SHIFT_IN_HEART = "shift_in_heart"
    NEITHER = "neither"
