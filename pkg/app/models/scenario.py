"""
Runtime context of one scenario: the surface, its named classes and computed walls
"""

from typing import Any, Dict

from pydantic import BaseModel, ConfigDict

from app.models.errors import ScenarioConfigError
from app.models.lattice import MukaiVector, PolarizedK3
from app.models.walls import NumericalWall


class ScenarioContext(BaseModel):
    model_config = ConfigDict(frozen=True)

    surface: PolarizedK3
    classes: Dict[str, MukaiVector]
    walls: Dict[str, NumericalWall]

    def vector(self, ref: Any) -> MukaiVector:
        """A class label or a literal [r, c, s] triple"""
        if isinstance(ref, str):
            if ref not in self.classes:
                raise ScenarioConfigError(f"unknown class label '{ref}'")
            return self.classes[ref]
        if isinstance(ref, (list, tuple)) and len(ref) == 3:
            return self.surface.vector(*(int(x) for x in ref))
        raise ScenarioConfigError(f"cannot read a Mukai vector from {ref!r}")

    def wall(self, wall_id: str) -> NumericalWall:
        if wall_id not in self.walls:
            raise ScenarioConfigError(f"unknown wall id '{wall_id}'")
        return self.walls[wall_id]
