"""
Cofinite monomial ideals in k[x, y], stored by their staircase
"""

from typing import Any, Iterable, Tuple

from pydantic import BaseModel, ConfigDict, field_validator

Monomial = Tuple[int, int]


def minimalize(monomials: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    """Drop every monomial divisible by another one; sort by x-exponent"""
    unique = set(monomials)
    minimal = [
        (a, b)
        for (a, b) in unique
        if not any((c, d) != (a, b) and c <= a and d <= b for (c, d) in unique)
    ]
    return tuple(sorted(minimal))


class MonomialIdeal(BaseModel):
    """
    Monomial ideal given by its minimal generators (a, b) ~ x^a y^b,
    sorted by increasing a (hence decreasing b).
    """

    model_config = ConfigDict(frozen=True)

    generators: Tuple[Monomial, ...]

    @field_validator("generators", mode="before")
    @classmethod
    def _staircase(cls, value: Any) -> Tuple[Monomial, ...]:
        monomials = [tuple(int(e) for e in item) for item in value]
        for monomial in monomials:
            if len(monomial) != 2 or min(monomial) < 0:
                raise ValueError(f"bad monomial exponent pair {monomial}")
        staircase = minimalize(monomials)
        if not staircase or staircase[0][0] != 0 or staircase[-1][1] != 0:
            raise ValueError("ideal is not cofinite: needs a pure power of x and of y")
        return staircase

    @classmethod
    def of(cls, *monomials: Monomial) -> "MonomialIdeal":
        return cls(generators=monomials)

    @classmethod
    def unit(cls) -> "MonomialIdeal":
        return cls(generators=((0, 0),))

    @property
    def is_unit(self) -> bool:
        return self.generators == ((0, 0),)

    @property
    def x_power(self) -> int:
        """Smallest a with x^a in the ideal"""
        return self.generators[-1][0]

    @property
    def y_power(self) -> int:
        return self.generators[0][1]

    @property
    def max_degree(self) -> int:
        return max(a + b for a, b in self.generators)

    def __contains__(self, monomial: Monomial) -> bool:
        i, j = monomial
        return any(a <= i and b <= j for a, b in self.generators)

    def __str__(self) -> str:
        if self.is_unit:
            return "1"
        return ", ".join(_monomial_text(a, b) for a, b in reversed(self.generators))


def _monomial_text(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("x" if a == 1 else f"x^{a}")
    if b:
        parts.append("y" if b == 1 else f"y^{b}")
    return "*".join(parts) or "1"
