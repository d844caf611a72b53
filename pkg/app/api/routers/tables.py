"""
Table command: admissible and minimal c2 per genus and degree
"""

import argparse

from app.models.lattice import PolarizedK3
from app.services.irrationality_service import IrrationalityService
from app.utils.staircase_parser import parse_genus_range, parse_int_list


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("table", help="admissible c2 table")
    parser.add_argument("--genus", default="7..14", help="range like 7..14 or list like 7,9")
    parser.add_argument("--degrees", default="3,4", help="comma-separated map degrees")
    parser.set_defaults(handler=table)


def format_row(genus: int, degrees) -> str:
    surface = PolarizedK3(genus=genus)
    cells = []
    for d in degrees:
        values = ", ".join(str(c2) for c2 in IrrationalityService.admissible_c2(surface, d))
        cells.append(f"d={d}: {{{values}}}")
    minimal = IrrationalityService.minimal_c2(surface)
    return f"g={genus:<3d} L^2={surface.lsquare:<4d} min c2={minimal:<3d} " + "  ".join(cells)


def table(args: argparse.Namespace) -> int:
    degrees = parse_int_list(args.degrees)
    for genus in parse_genus_range(args.genus):
        print(format_row(genus, degrees))
    return 0
