"""
Check kinds on the Mukai lattice and the tilt plane
"""

from typing import Any, Dict

from app.models.scenario import ScenarioContext
from app.services.lattice_service import LatticeService
from app.services.tilt_service import TiltService
from app.tools.registry import check_registry


@check_registry.register(
    name="pairing", description="Mukai pairing <v, w>", arguments=["v", "w"]
)
def check_pairing(ctx: ScenarioContext, args: Dict[str, Any]) -> int:
    return LatticeService.pairing(ctx.vector(args["v"]), ctx.vector(args["w"]))


@check_registry.register(
    name="ext_count",
    description="ext^1(v, w) = <v, w> when hom and ext^2 vanish",
    arguments=["v", "w"],
)
def check_ext_count(ctx: ScenarioContext, args: Dict[str, Any]) -> int:
    return LatticeService.pairing(ctx.vector(args["v"]), ctx.vector(args["w"]))


@check_registry.register(
    name="euler_characteristic", description="chi(v, w) = -<v, w>", arguments=["v", "w"]
)
def check_euler_characteristic(ctx: ScenarioContext, args: Dict[str, Any]) -> int:
    return LatticeService.euler_characteristic(ctx.vector(args["v"]), ctx.vector(args["w"]))


@check_registry.register(name="spherical", description="v^2 = -2", arguments=["v"])
def check_spherical(ctx: ScenarioContext, args: Dict[str, Any]) -> bool:
    return LatticeService.is_spherical(ctx.vector(args["v"]))


@check_registry.register(
    name="moduli_dimension", description="v^2 + 2 or empty", arguments=["v"]
)
def check_moduli_dimension(ctx: ScenarioContext, args: Dict[str, Any]) -> Any:
    return LatticeService.moduli_dimension(ctx.vector(args["v"]))


@check_registry.register(name="slope", description="mu_L(v) = c/r", arguments=["v"])
def check_slope(ctx: ScenarioContext, args: Dict[str, Any]) -> Any:
    return LatticeService.slope(ctx.vector(args["v"]))


@check_registry.register(
    name="class_sum",
    description="sum of the listed classes (additivity along an exact sequence)",
    arguments=["classes"],
)
def check_class_sum(ctx: ScenarioContext, args: Dict[str, Any]) -> Any:
    return LatticeService.class_sum(ctx.vector(ref) for ref in args["classes"])


@check_registry.register(
    name="spherical_count",
    description="number of spherical classes of a given rank (or ranks up to r_max) in a slope window",
    arguments=["window", "rank|r_max"],
)
def check_spherical_count(ctx: ScenarioContext, args: Dict[str, Any]) -> int:
    window = tuple(args["window"])
    if "rank" in args:
        found = LatticeService.spherical_of_rank(ctx.surface, int(args["rank"]), window)
    else:
        found = LatticeService.spherical_enumerate(ctx.surface, int(args["r_max"]), window)
    return len(found)


@check_registry.register(
    name="heart",
    description="position of a mu-stable class relative to Coh^beta",
    arguments=["v", "beta"],
)
def check_heart(ctx: ScenarioContext, args: Dict[str, Any]) -> str:
    membership = TiltService.heart_membership(
        ctx.vector(args["v"]), args["beta"], bool(args.get("mu_stable", True))
    )
    return membership.value


@check_registry.register(
    name="minimal_rank",
    description="minimal imaginary part on the line beta = beta0",
    arguments=["v", "beta"],
)
def check_minimal_rank(ctx: ScenarioContext, args: Dict[str, Any]) -> bool:
    return TiltService.minimal_rank_criterion(ctx.vector(args["v"]), args["beta"])
