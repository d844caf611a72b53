"""
WallService: numerical walls nu(v) = nu(w), their endpoints, holes and nu = 0 curves
"""

from math import gcd, isqrt
from typing import Iterable, List, Optional, Tuple, Union

from sympy import Rational, ceiling

from app.config.settings import settings
from app.models.errors import (
    DegenerateWallError,
    InvariantViolationError,
    NoEndpointsError,
    PreconditionError,
    UnsupportedWallError,
)
from app.models.lattice import MukaiVector
from app.models.tilt import StabPoint
from app.models.walls import (
    Hole,
    IrrationalEndpoints,
    Nesting,
    NuCurveShape,
    NuZeroCurve,
    NumericalWall,
    WallKind,
)
from app.services.lattice_service import LatticeService
from app.utils.logging_config import app_logger, log_error_with_context
from app.utils.rational_utils import to_rational

Endpoints = Union[Tuple[Rational, Rational], IrrationalEndpoints]


def _normalize(quad: int, lin: int, const: int) -> Tuple[int, int, int]:
    # primitive: divide out the content of the triple
    divisor = gcd(gcd(quad, lin), const) or 1
    quad, lin, const = quad // divisor, lin // divisor, const // divisor
    # sign: first non-zero coefficient positive
    leading = quad if quad != 0 else (lin if lin != 0 else const)
    if leading < 0:
        quad, lin, const = -quad, -lin, -const
    return quad, lin, const


def _proportional(v: MukaiVector, w: MukaiVector) -> bool:
    return (
        v.r * w.c == v.c * w.r
        and v.r * w.s == v.s * w.r
        and v.c * w.s == v.s * w.c
    )


class WallService:
    """Closed-form wall geometry in the (alpha, beta)-plane"""

    @staticmethod
    def master_coefficients(v: MukaiVector, w: MukaiVector) -> Tuple[int, int, int]:
        """(D, B, C) of -(L^2/2) D (alpha^2 + beta^2) + B beta + C = 0"""
        v.require_same_surface(w)
        d = v.c * w.r - w.c * v.r
        b = v.s * w.r - w.s * v.r
        c = w.s * v.c - v.s * w.c
        return d, b, c

    @staticmethod
    def wall_between(v: MukaiVector, w: MukaiVector) -> NumericalWall:
        """Numerical wall where the tilt slopes of v and w agree"""
        if _proportional(v, w):
            error = DegenerateWallError(f"{v} and {w} are proportional")
            log_error_with_context(app_logger, error, {"v": v, "w": w})
            raise error

        d, b, c = WallService.master_coefficients(v, w)
        lsquare = v.surface.lsquare
        # L^2 is even, so -(L^2/2) D stays integral
        quad, lin, const = _normalize(-(lsquare // 2) * d, b, c)

        if d != 0:
            # completing the square: (beta - center)^2 + alpha^2 = R^2
            center = Rational(b, lsquare * d)
            radius_sq = center**2 + Rational(2 * c, lsquare * d)
            if radius_sq > 0:
                return NumericalWall(
                    kind=WallKind.SEMICIRCLE,
                    pair=(v, w),
                    quad=quad,
                    lin=lin,
                    const=const,
                    center_beta=center,
                    radius_sq=radius_sq,
                )
        elif b != 0:
            return NumericalWall(
                kind=WallKind.VERTICAL,
                pair=(v, w),
                quad=quad,
                lin=lin,
                const=const,
                line_beta=Rational(-c, b),
            )

        app_logger.debug(f"wall between {v} and {w} has no point with alpha > 0")
        return NumericalWall(
            kind=WallKind.DEGENERATE, pair=(v, w), quad=quad, lin=lin, const=const
        )

    @staticmethod
    def vertical_wall_of(v: MukaiVector) -> NumericalWall:
        """The distinguished vertical wall beta = c/r of a class with r != 0"""
        if v.r == 0:
            raise PreconditionError(f"{v} has rank 0 and no vertical wall")
        return WallService.wall_between(v, v.surface.vector(0, 0, 1))

    @staticmethod
    def walls_equal(first: NumericalWall, second: NumericalWall) -> bool:
        return first.equation == second.equation

    @staticmethod
    def _require_semicircle(wall: NumericalWall, operation: str) -> None:
        if wall.kind is WallKind.VERTICAL and operation == "wall_endpoints":
            raise NoEndpointsError(f"vertical wall {wall.equation_text()} has no endpoints")
        if wall.kind is not WallKind.SEMICIRCLE:
            raise UnsupportedWallError(
                f"{operation} needs a semicircular wall, got {wall.kind.value}"
            )

    @staticmethod
    def wall_endpoints(wall: NumericalWall) -> Endpoints:
        """Roots of the alpha = 0 restriction, or the quadratic when they are irrational"""
        WallService._require_semicircle(wall, "wall_endpoints")
        discriminant = wall.lin**2 - 4 * wall.quad * wall.const
        root = isqrt(discriminant)
        if root * root != discriminant:
            return IrrationalEndpoints(quad=wall.quad, lin=wall.lin, const=wall.const)
        left = Rational(-wall.lin - root, 2 * wall.quad)
        right = Rational(-wall.lin + root, 2 * wall.quad)
        return (left, right)

    @staticmethod
    def top_point(wall: NumericalWall) -> StabPoint:
        WallService._require_semicircle(wall, "top_point")
        return StabPoint(beta=wall.center_beta, alpha_sq=wall.radius_sq)

    @staticmethod
    def wall_meets_line(wall: NumericalWall, beta0: Union[Rational, int, str]) -> Optional[Rational]:
        """alpha^2 of the point where a semicircle meets {beta = beta0}, or None"""
        WallService._require_semicircle(wall, "wall_meets_line")
        beta0 = to_rational(beta0)
        alpha_sq = wall.radius_sq - (beta0 - wall.center_beta) ** 2
        return alpha_sq if alpha_sq > 0 else None

    @staticmethod
    def hole_point(delta: MukaiVector) -> StabPoint:
        """Point (c/r, -delta^2 / (L^2 r^2)) where Z(delta) vanishes"""
        if delta.r == 0:
            raise PreconditionError(f"{delta} has rank 0; Z never vanishes")
        alpha_sq = Rational(
            -LatticeService.self_pairing(delta), delta.surface.lsquare * delta.r**2
        )
        if alpha_sq <= 0:
            raise PreconditionError(f"Z({delta}) does not vanish for alpha > 0")
        return StabPoint(beta=Rational(delta.c, delta.r), alpha_sq=alpha_sq)

    @staticmethod
    def holes_on_wall(wall: NumericalWall, r_max: Optional[int] = None) -> List[Hole]:
        """Spherical classes of rank 1..r_max whose charge vanishes on the wall"""
        r_max = settings.DEFAULT_RMAX if r_max is None else r_max
        if r_max < 1:
            raise PreconditionError(f"r_max must be at least 1, got {r_max}")
        if wall.kind is WallKind.DEGENERATE:
            return []

        surface = wall.pair[0].surface
        holes = []
        for r in range(1, r_max + 1):
            if wall.kind is WallKind.SEMICIRCLE:
                spread = isqrt(int(ceiling(wall.radius_sq * r * r))) + 1
                middle = int(ceiling(wall.center_beta * r))
                window = (Rational(middle - spread - 1, r), Rational(middle + spread, r))
            else:
                window = (wall.line_beta, wall.line_beta)
            for delta in LatticeService.spherical_of_rank(surface, r, window):
                point = WallService.hole_point(delta)
                if wall.residual(point) == 0:
                    holes.append(Hole(delta=delta, point=point))

        app_logger.debug(
            f"holes on {wall.equation_text()} with r_max={r_max}: "
            f"{[str(hole.delta) for hole in holes]}"
        )
        return holes

    @staticmethod
    def nu_zero_curve(v: MukaiVector) -> NuZeroCurve:
        """Re Z(v) = 0 scaled by -2: L^2 r beta^2 - L^2 r alpha^2 - 2 L^2 c beta + 2 s = 0"""
        lsquare = v.surface.lsquare
        square = LatticeService.self_pairing(v)
        if v.r == 0:
            shape = NuCurveShape.VERTICAL_LINE if v.c != 0 else NuCurveShape.EMPTY
        elif square > 0:
            shape = NuCurveShape.HYPERBOLA
        elif square == 0:
            shape = NuCurveShape.PAIR_OF_LINES
        else:
            shape = NuCurveShape.PARABOLA
        return NuZeroCurve(
            shape=shape,
            vector=v,
            beta_sq=lsquare * v.r,
            alpha_sq=-lsquare * v.r,
            beta_lin=-2 * lsquare * v.c,
            const=2 * v.s,
        )

    @staticmethod
    def nesting_relation(first: NumericalWall, second: NumericalWall) -> Nesting:
        """Exact relative position of two semicircular walls of the same class"""
        for wall in (first, second):
            WallService._require_semicircle(wall, "nesting_relation")
        if first.pair[0] != second.pair[0]:
            raise PreconditionError("nesting_relation compares walls of one class v")

        distance_sq = (first.center_beta - second.center_beta) ** 2
        r1_sq, r2_sq = first.radius_sq, second.radius_sq
        if distance_sq == 0 and r1_sq == r2_sq:
            return Nesting.EQUAL

        gap = distance_sq - r1_sq - r2_sq
        # two transversal intersection points; tangency happens on the beta-axis
        if gap**2 < 4 * r1_sq * r2_sq:
            return Nesting.CROSSING
        if gap < 0:
            return Nesting.NESTED_1_IN_2 if r1_sq < r2_sq else Nesting.NESTED_2_IN_1
        return Nesting.DISJOINT

    @staticmethod
    def common_point_check(v: MukaiVector, sample_w: Iterable[MukaiVector]) -> StabPoint:
        """Point where Z(v) = 0, after checking every wall of v passes through it"""
        if LatticeService.self_pairing(v) >= 0:
            raise PreconditionError(f"{v} has v^2 >= 0; its walls need not meet")
        samples = list(sample_w)
        if not samples:
            raise PreconditionError("common_point_check needs at least one w")

        point = WallService.hole_point(v)
        for w in samples:
            wall = WallService.wall_between(v, w)
            if wall.kind is WallKind.DEGENERATE or wall.residual(point) != 0:
                error = InvariantViolationError(
                    f"wall {wall.equation_text()} of {v} and {w} misses {point}"
                )
                log_error_with_context(app_logger, error, {"v": v, "w": w})
                raise error
        return point
