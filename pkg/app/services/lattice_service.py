"""
LatticeService: Mukai pairing, sphericity, Riemann-Roch counts and spherical search
"""

from math import gcd
from typing import Dict, Iterable, List, Optional, Tuple, Union

from sympy import Rational, ceiling, floor, oo
from sympy.core.numbers import Infinity

from app.models.errors import PrimitivityError
from app.models.lattice import MukaiVector, PolarizedK3
from app.utils.logging_config import app_logger
from app.utils.rational_utils import to_rational

Window = Tuple[Rational, Rational]


class LatticeService:
    """Arithmetic on the Mukai lattice Z + Z.L + Z"""

    @staticmethod
    def pairing(v: MukaiVector, w: MukaiVector) -> int:
        """Mukai pairing c_v c_w L^2 - r_v s_w - r_w s_v"""
        v.require_same_surface(w)
        return v.c * w.c * v.surface.lsquare - v.r * w.s - w.r * v.s

    @staticmethod
    def euler_characteristic(v: MukaiVector, w: MukaiVector) -> int:
        return -LatticeService.pairing(v, w)

    @staticmethod
    def self_pairing(v: MukaiVector) -> int:
        return LatticeService.pairing(v, v)

    @staticmethod
    def is_spherical(v: MukaiVector) -> bool:
        return LatticeService.self_pairing(v) == -2

    @staticmethod
    def is_primitive(v: MukaiVector) -> bool:
        return gcd(gcd(v.r, v.c), v.s) == 1

    @staticmethod
    def moduli_dimension(v: MukaiVector) -> Union[int, str]:
        """Dimension v^2 + 2 of the moduli space, "empty" below v^2 = -2"""
        if not LatticeService.is_primitive(v):
            raise PrimitivityError(f"{v} is not primitive")
        square = LatticeService.self_pairing(v)
        if square < -2:
            return "empty"
        return square + 2

    @staticmethod
    def slope(v: MukaiVector) -> Union[Rational, Infinity]:
        """mu_L = c/r, +oo for torsion classes"""
        if v.r == 0:
            return oo
        return Rational(v.c, v.r)

    @staticmethod
    def dual(v: MukaiVector) -> MukaiVector:
        return v.surface.vector(v.r, -v.c, v.s)

    @staticmethod
    def shift(v: MukaiVector) -> MukaiVector:
        return -v

    @staticmethod
    def class_sum(classes: Iterable[MukaiVector]) -> MukaiVector:
        """Sum of classes along a short exact sequence (or any list)"""
        items = list(classes)
        if not items:
            raise ValueError("class_sum needs at least one class")
        total = items[0]
        for item in items[1:]:
            total = total + item
        return total

    @staticmethod
    def spherical_of_rank(surface: PolarizedK3, r: int, window: Window) -> List[MukaiVector]:
        """Spherical classes of rank r with slope c/r in the closed window"""
        if r < 1:
            raise ValueError(f"rank must be positive, got {r}")
        low, high = to_rational(window[0]), to_rational(window[1])
        if low > high:
            return []
        found = []
        for c in range(int(ceiling(low * r)), int(floor(high * r)) + 1):
            numerator = (surface.genus - 1) * c * c + 1
            if numerator % r == 0:
                found.append(surface.vector(r, c, numerator // r))
        return found

    @staticmethod
    def spherical_enumerate(
        surface: PolarizedK3, r_max: int, beta_window: Window
    ) -> List[MukaiVector]:
        """
        All spherical (r, c, s) with 1 <= r <= r_max and c/r in the closed
        window, sorted by (r, c).
        """
        if r_max < 1:
            raise ValueError(f"r_max must be at least 1, got {r_max}")
        found: List[MukaiVector] = []
        for r in range(1, r_max + 1):
            found.extend(LatticeService.spherical_of_rank(surface, r, beta_window))
        app_logger.debug(
            f"spherical_enumerate g={surface.genus} r_max={r_max} "
            f"window={beta_window} -> {len(found)} classes"
        )
        return found

    @staticmethod
    def resolve_labels(
        classes: Dict[str, MukaiVector], labels: Iterable[str]
    ) -> List[MukaiVector]:
        missing = [label for label in labels if label not in classes]
        if missing:
            raise KeyError(f"unknown class label(s): {', '.join(missing)}")
        return [classes[label] for label in labels]

    @staticmethod
    def find_label(classes: Dict[str, MukaiVector], v: MukaiVector) -> Optional[str]:
        for label, value in classes.items():
            if value == v:
                return label
        return None
