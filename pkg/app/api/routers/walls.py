"""
Wall commands: wall, holes
"""

import argparse

from app.config.settings import settings
from app.models.lattice import PolarizedK3
from app.models.walls import IrrationalEndpoints, WallKind
from app.services.wall_service import WallService
from app.utils.rational_utils import format_rational
from app.utils.staircase_parser import parse_vector


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("wall", help="numerical wall between v and w")
    parser.add_argument("genus", type=int)
    parser.add_argument("v")
    parser.add_argument("w")
    parser.set_defaults(handler=wall)

    parser = subparsers.add_parser("holes", help="spherical holes on the wall between v and w")
    parser.add_argument("genus", type=int)
    parser.add_argument("v")
    parser.add_argument("w")
    parser.add_argument("--rmax", type=int, default=settings.DEFAULT_RMAX)
    parser.set_defaults(handler=holes)


def _wall_from(args: argparse.Namespace):
    surface = PolarizedK3(genus=args.genus)
    return WallService.wall_between(
        surface.vector(*parse_vector(args.v)), surface.vector(*parse_vector(args.w))
    )


def wall(args: argparse.Namespace) -> int:
    numerical_wall = _wall_from(args)
    print(f"equation: {numerical_wall.equation_text()}")
    print(f"kind: {numerical_wall.kind.value}")
    if numerical_wall.kind is WallKind.SEMICIRCLE:
        print(f"center: {format_rational(numerical_wall.center_beta)}")
        print(f"radius^2: {format_rational(numerical_wall.radius_sq)}")
        endpoints = WallService.wall_endpoints(numerical_wall)
        if isinstance(endpoints, IrrationalEndpoints):
            quadratic = f"{endpoints.quad}β²{endpoints.lin:+d}β{endpoints.const:+d}=0"
            print(f"endpoints: irrational roots of {quadratic}")
        else:
            print(f"endpoints: {format_rational(endpoints[0])}, {format_rational(endpoints[1])}")
    elif numerical_wall.kind is WallKind.VERTICAL:
        print(f"line: β={format_rational(numerical_wall.line_beta)}")
    return 0


def holes(args: argparse.Namespace) -> int:
    found = WallService.holes_on_wall(_wall_from(args), args.rmax)
    if not found:
        print(f"no holes with rank <= {args.rmax}")
    for hole in found:
        print(
            f"{hole.delta} at beta={format_rational(hole.point.beta)}, "
            f"alpha^2={format_rational(hole.point.alpha_sq)}"
        )
    return 0
