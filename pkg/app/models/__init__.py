from .lattice import MukaiVector, PolarizedK3
from .tilt import ChargeValue, HeartMembership, StabPoint
from .walls import Hole, IrrationalEndpoints, Nesting, NumericalWall, NuZeroCurve, WallKind
from .ideals import MonomialIdeal
from .projection import FeasibilityVerdict, ProjectionDatum, StratumRecord, VerdictStatus

__all__ = [
    "PolarizedK3",
    "MukaiVector",
    "StabPoint",
    "ChargeValue",
    "HeartMembership",
    "NumericalWall",
    "WallKind",
    "Hole",
    "NuZeroCurve",
    "Nesting",
    "IrrationalEndpoints",
    "MonomialIdeal",
    "ProjectionDatum",
    "FeasibilityVerdict",
    "VerdictStatus",
    "StratumRecord",
]
