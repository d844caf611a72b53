"""
TiltService: central charge, tilt slope and heart membership on the (alpha, beta)-plane
"""

from typing import Union

from sympy import Rational, oo
from sympy.core.numbers import Infinity

from app.models.errors import ChargeVanishesError, OutsideHeartError
from app.models.lattice import MukaiVector
from app.models.tilt import ChargeValue, HeartMembership, StabPoint
from app.utils.rational_utils import to_rational


class TiltService:
    """Tilt-stability numerics for Mukai vectors"""

    @staticmethod
    def central_charge(v: MukaiVector, p: StabPoint) -> ChargeValue:
        """
        Z(v) = -(s - beta L^2 c + (beta^2 - alpha^2)/2 L^2 r) + i L^2 (c - beta r)
        """
        lsquare = v.surface.lsquare
        beta, alpha_sq = p.beta, p.alpha_sq
        re = -(v.s - beta * lsquare * v.c + (beta**2 - alpha_sq) / 2 * lsquare * v.r)
        im = lsquare * (v.c - beta * v.r)
        return ChargeValue(re=Rational(re), im=Rational(im))

    @staticmethod
    def tilt_slope(v: MukaiVector, p: StabPoint) -> Union[Rational, Infinity]:
        """nu = -Re Z / Im Z"""
        z = TiltService.central_charge(v, p)
        if z.is_zero():
            raise ChargeVanishesError(f"Z({v}) vanishes at {p}")
        if z.im > 0:
            return -z.re / z.im
        if z.im == 0 and z.re < 0:
            return oo
        raise OutsideHeartError(f"{v} is not in Coh^beta at {p} (Z = {z.re} + i{z.im})")

    @staticmethod
    def slopes_agree(v: MukaiVector, w: MukaiVector, p: StabPoint) -> bool:
        """nu(v) = nu(w) by cross-multiplication, defined for any sign of Im Z"""
        zv = TiltService.central_charge(v, p)
        zw = TiltService.central_charge(w, p)
        return zv.re * zw.im - zw.re * zv.im == 0

    @staticmethod
    def heart_membership(
        v: MukaiVector, beta: Union[Rational, int, str], mu_stable: bool = True
    ) -> HeartMembership:
        """
        Position of a mu-stable sheaf of class v (or F[1] with v(F) = -v when r < 0)
        relative to Coh^beta.
        """
        if not mu_stable:
            return HeartMembership.NEITHER
        beta = to_rational(beta)
        if v.r < 0:
            return TiltService.heart_membership(-v, beta, mu_stable)
        if v.r == 0:
            return HeartMembership.SHEAF_IN_HEART
        if beta < Rational(v.c, v.r):
            return HeartMembership.SHEAF_IN_HEART
        return HeartMembership.SHIFT_IN_HEART

    @staticmethod
    def minimal_rank_criterion(v: MukaiVector, beta0: Union[Rational, int, str]) -> bool:
        """Im Z(v) on the line beta = a/b takes the minimal positive value L^2/b"""
        beta0 = to_rational(beta0)
        a, b = beta0.p, beta0.q
        return abs(v.c * b - a * v.r) == 1
