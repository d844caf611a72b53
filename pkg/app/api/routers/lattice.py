"""
Lattice commands: pairing
"""

import argparse

from app.models.lattice import PolarizedK3
from app.services.lattice_service import LatticeService
from app.utils.staircase_parser import parse_vector


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("pairing", help="Mukai pairing <v, w> and chi(v, w)")
    parser.add_argument("genus", type=int)
    parser.add_argument("v", help='Mukai vector "r,c,s"')
    parser.add_argument("w", help='Mukai vector "r,c,s"')
    parser.set_defaults(handler=pairing)


def pairing(args: argparse.Namespace) -> int:
    surface = PolarizedK3(genus=args.genus)
    v = surface.vector(*parse_vector(args.v))
    w = surface.vector(*parse_vector(args.w))
    print(f"pairing: {LatticeService.pairing(v, w)}")
    print(f"chi: {LatticeService.euler_characteristic(v, w)}")
    return 0
