from .lattice_service import LatticeService
from .tilt_service import TiltService
from .wall_service import WallService
from .ideal_service import IdealService
from .irrationality_service import IrrationalityService

__all__ = [
    "LatticeService",
    "TiltService",
    "WallService",
    "IdealService",
    "IrrationalityService",
]
