"""
Check kinds on numerical walls, holes and nu = 0 curves
"""

from typing import Any, Dict, List

from app.models.scenario import ScenarioContext
from app.services.wall_service import WallService
from app.tools.registry import check_registry


@check_registry.register(
    name="wall_equation",
    description="primitive coefficients (q, l, k) of q(beta^2+alpha^2) + l beta + k = 0",
    arguments=["wall"],
)
def check_wall_equation(ctx: ScenarioContext, args: Dict[str, Any]) -> List[int]:
    return list(ctx.wall(args["wall"]).equation)


@check_registry.register(name="wall_kind", description="semicircle, vertical or degenerate", arguments=["wall"])
def check_wall_kind(ctx: ScenarioContext, args: Dict[str, Any]) -> str:
    return ctx.wall(args["wall"]).kind.value


@check_registry.register(
    name="wall_endpoints",
    description="beta-coordinates where a semicircle meets alpha = 0",
    arguments=["wall"],
)
def check_wall_endpoints(ctx: ScenarioContext, args: Dict[str, Any]) -> Any:
    return WallService.wall_endpoints(ctx.wall(args["wall"]))


@check_registry.register(name="top_point", description="(center, radius^2) of a semicircle", arguments=["wall"])
def check_top_point(ctx: ScenarioContext, args: Dict[str, Any]) -> Any:
    return WallService.top_point(ctx.wall(args["wall"]))


@check_registry.register(
    name="top_on_nu_curve",
    description="the top point of a wall of v lies on nu(v) = 0",
    arguments=["wall"],
)
def check_top_on_nu_curve(ctx: ScenarioContext, args: Dict[str, Any]) -> bool:
    wall = ctx.wall(args["wall"])
    curve = WallService.nu_zero_curve(wall.pair[0])
    return curve.residual(WallService.top_point(wall)) == 0


@check_registry.register(
    name="holes",
    description="spherical classes of rank <= r_max whose charge vanishes on the wall",
    arguments=["wall", "r_max"],
)
def check_holes(ctx: ScenarioContext, args: Dict[str, Any]) -> List[Any]:
    holes = WallService.holes_on_wall(ctx.wall(args["wall"]), args.get("r_max"))
    return [hole.delta for hole in holes]


@check_registry.register(name="hole_point", description="point where Z(v) = 0", arguments=["v"])
def check_hole_point(ctx: ScenarioContext, args: Dict[str, Any]) -> Any:
    return WallService.hole_point(ctx.vector(args["v"]))


@check_registry.register(
    name="walls_equal", description="two walls have the same equation", arguments=["walls"]
)
def check_walls_equal(ctx: ScenarioContext, args: Dict[str, Any]) -> bool:
    first, second = (ctx.wall(wall_id) for wall_id in args["walls"])
    return WallService.walls_equal(first, second)


@check_registry.register(
    name="wall_meets_line",
    description="alpha^2 where a semicircle meets beta = beta0",
    arguments=["wall", "beta"],
)
def check_wall_meets_line(ctx: ScenarioContext, args: Dict[str, Any]) -> Any:
    return WallService.wall_meets_line(ctx.wall(args["wall"]), args["beta"])


@check_registry.register(
    name="nu_zero_shape", description="shape of the curve nu(v) = 0", arguments=["v"]
)
def check_nu_zero_shape(ctx: ScenarioContext, args: Dict[str, Any]) -> str:
    return WallService.nu_zero_curve(ctx.vector(args["v"])).shape.value


@check_registry.register(
    name="nesting", description="relative position of two walls of one class", arguments=["walls"]
)
def check_nesting(ctx: ScenarioContext, args: Dict[str, Any]) -> str:
    first, second = (ctx.wall(wall_id) for wall_id in args["walls"])
    return WallService.nesting_relation(first, second).value


@check_registry.register(
    name="common_point",
    description="common point of all walls of a class with v^2 < 0",
    arguments=["v", "sample"],
)
def check_common_point(ctx: ScenarioContext, args: Dict[str, Any]) -> Any:
    return WallService.common_point_check(
        ctx.vector(args["v"]), [ctx.vector(ref) for ref in args["sample"]]
    )
