"""
Check kinds on projection degrees, kernel bundles and Brill-Noether strata
"""

from typing import Any, Dict, List

from app.models.scenario import ScenarioContext
from app.services.irrationality_service import IrrationalityService
from app.tools.registry import check_registry


def same_status(actual: Any, expected: Any) -> bool:
    """ "excluded(reason)" matches an expected "excluded" """
    return isinstance(actual, str) and actual.split("(", 1)[0] == expected


@check_registry.register(
    name="h0", description="h^0 = r + s for a class with h^1 = h^2 = 0", arguments=["v"]
)
def check_h0(ctx: ScenarioContext, args: Dict[str, Any]) -> int:
    return IrrationalityService.expected_h0(ctx.vector(args["v"]))


@check_registry.register(
    name="kernel_vector", description="v(E) = (2, L, g + 1 - c2)", arguments=["c2"]
)
def check_kernel_vector(ctx: ScenarioContext, args: Dict[str, Any]) -> Any:
    return IrrationalityService.kernel_mukai_vector(ctx.surface, int(args["c2"]))


@check_registry.register(name="minimal_c2", description="floor((g + 3)/2)")
def check_minimal_c2(ctx: ScenarioContext, args: Dict[str, Any]) -> int:
    return IrrationalityService.minimal_c2(ctx.surface)


@check_registry.register(
    name="admissible_c2", description="c2 values allowed for maps of degree d", arguments=["d"]
)
def check_admissible_c2(ctx: ScenarioContext, args: Dict[str, Any]) -> List[int]:
    return IrrationalityService.admissible_c2(ctx.surface, int(args["d"]))


@check_registry.register(
    name="polarization_genus", description="genus of the polarization on the moduli space M"
)
def check_polarization_genus(ctx: ScenarioContext, args: Dict[str, Any]) -> int:
    return IrrationalityService.moduli_polarization_genus(ctx.surface.genus)


@check_registry.register(name="degree", description="d = c2 - f", arguments=["c2", "f"])
def check_degree(ctx: ScenarioContext, args: Dict[str, Any]) -> int:
    return IrrationalityService.degree_from_chern(int(args["c2"]), int(args["f"]))


@check_registry.register(
    name="hs_bound", description="L^2 - 4/3 colength", arguments=["colength"]
)
def check_hs_bound(ctx: ScenarioContext, args: Dict[str, Any]) -> Any:
    return IrrationalityService.hs_degree_lower_bound(ctx.surface, int(args["colength"]))


@check_registry.register(
    name="stratum_feasibility",
    description="feasible, excluded(reason) or unclassified(reason) for a local configuration",
    arguments=["d", "c2", "config"],
    compare=same_status,
)
def check_stratum_feasibility(ctx: ScenarioContext, args: Dict[str, Any]) -> Any:
    datum = IrrationalityService.make_datum(
        ctx.surface, int(args["d"]), int(args["c2"]), args.get("config", [])
    )
    return IrrationalityService.stratum_feasibility(datum)
