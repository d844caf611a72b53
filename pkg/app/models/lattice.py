"""
Mukai lattice types for a polarized K3 surface of Picard rank one
"""

from typing import Iterable, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.models.errors import LatticeMismatchError


class PolarizedK3(BaseModel):
    """Polarized K3 surface (S, L) with Pic(S) = Z.L, recorded by its genus"""

    model_config = ConfigDict(frozen=True)

    genus: int = Field(..., ge=2, description="Genus g, so that L^2 = 2g - 2")

    @property
    def lsquare(self) -> int:
        return 2 * self.genus - 2

    def vector(self, r: int, c: int, s: int) -> "MukaiVector":
        """Build the Mukai vector (r, cL, s) on this surface"""
        return MukaiVector(r=r, c=c, s=s, surface=self)

    def vectors(self, rows: Iterable[Tuple[int, int, int]]) -> list:
        return [self.vector(*row) for row in rows]

    def __str__(self) -> str:
        return f"K3(g={self.genus}, L^2={self.lsquare})"


class MukaiVector(BaseModel):
    """Mukai vector (r, cL, s)"""

    model_config = ConfigDict(frozen=True)

    r: int
    c: int
    s: int
    surface: PolarizedK3

    @model_validator(mode="after")
    def _check_even_square(self) -> "MukaiVector":
        if (self.c * self.c * self.surface.lsquare - 2 * self.r * self.s) % 2:
            raise ValueError(f"odd self-pairing for {self.as_tuple()}")
        return self

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.r, self.c, self.s)

    def to_exact_json(self) -> list:
        return [self.r, self.c, self.s]

    def require_same_surface(self, other: "MukaiVector") -> None:
        if self.surface != other.surface:
            raise LatticeMismatchError(
                f"{self} lives on {self.surface}, {other} lives on {other.surface}"
            )

    def __add__(self, other: "MukaiVector") -> "MukaiVector":
        self.require_same_surface(other)
        return self.surface.vector(self.r + other.r, self.c + other.c, self.s + other.s)

    def __sub__(self, other: "MukaiVector") -> "MukaiVector":
        return self + (-other)

    def __neg__(self) -> "MukaiVector":
        return self.surface.vector(-self.r, -self.c, -self.s)

    def __mul__(self, factor: int) -> "MukaiVector":
        return self.surface.vector(factor * self.r, factor * self.c, factor * self.s)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"({self.r},{self.c},{self.s})"
