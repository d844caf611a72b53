"""
Error types raised by the toolkit.

All of them are ValueErrors so callers catching ValueError keep working.
"""


class K3WallsError(ValueError):
    """Base class for every toolkit error"""


class LatticeMismatchError(K3WallsError):
    """Two Mukai vectors live on different surfaces"""


class PrimitivityError(K3WallsError):
    """A vector that must be primitive is divisible"""


class OutsideHeartError(K3WallsError):
    """The class is not in the tilted heart at the given point"""


class ChargeVanishesError(K3WallsError):
    """The central charge is zero (the point is a hole of the class)"""


class DegenerateWallError(K3WallsError):
    """The two classes are proportional and define no wall"""


class NoEndpointsError(K3WallsError):
    """Vertical walls do not meet the beta-axis"""


class UnsupportedWallError(K3WallsError):
    """Operation defined only for semicircular walls"""


class InvariantViolationError(K3WallsError):
    """A structural invariant failed; signals an arithmetic bug"""


class HorizonError(K3WallsError):
    """The search horizon cannot contain any candidate"""


class PreconditionError(K3WallsError):
    """An operation precondition does not hold"""


class NotCoveredError(K3WallsError):
    """The input lies outside the covered range (e.g. even genus)"""


class InconsistencyError(K3WallsError):
    """Numerical data contradicts a recorded assumption"""


class UnknownGenusError(K3WallsError):
    """No scenario or summary exists for this genus"""


class ScenarioConfigError(K3WallsError):
    """A scenario config file is malformed"""


class UsageError(K3WallsError):
    """Malformed command-line input"""
