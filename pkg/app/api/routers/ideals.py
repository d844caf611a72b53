"""
Ideal commands: min-colength, product, colength
"""

import argparse

from app.services.ideal_service import IdealService
from app.utils.staircase_parser import parse_staircase


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("ideal", help="monomial ideal staircases")
    commands = parser.add_subparsers(dest="ideal_command", required=True)

    search = commands.add_parser("min-colength", help="least colength of a subideal with few generators")
    search.add_argument("ideal", help='staircase like "x^3, x^2*y, x*y^3, y^5"')
    search.add_argument("--max-gens", type=int, default=3)
    search.add_argument("--horizon", type=int, default=None)
    search.set_defaults(handler=min_colength)

    product = commands.add_parser("product", help="product of two ideals")
    product.add_argument("first")
    product.add_argument("second")
    product.set_defaults(handler=product_of)

    colength = commands.add_parser("colength", help="colength of an ideal")
    colength.add_argument("ideal")
    colength.set_defaults(handler=colength_of)


def min_colength(args: argparse.Namespace) -> int:
    ideal = parse_staircase(args.ideal)
    print(IdealService.min_colength_subideal(ideal, args.max_gens, args.horizon))
    return 0


def product_of(args: argparse.Namespace) -> int:
    print(IdealService.product(parse_staircase(args.first), parse_staircase(args.second)))
    return 0


def colength_of(args: argparse.Namespace) -> int:
    print(IdealService.colength(parse_staircase(args.ideal)))
    return 0
