"""
Check kinds on monomial ideals and local base-ideal targets
"""

from typing import Any, Dict, List

from app.models.scenario import ScenarioContext
from app.services.ideal_service import IdealService
from app.tools.registry import check_registry
from app.utils.staircase_parser import parse_staircase


def same_ideals(actual: Any, expected: Any) -> bool:
    """Compare staircase texts (or lists of them) as ideals"""
    if isinstance(actual, list) and isinstance(expected, list):
        return len(actual) == len(expected) and all(
            same_ideals(a, e) for a, e in zip(actual, expected)
        )
    if not isinstance(actual, str) or not isinstance(expected, str):
        return False
    return parse_staircase(actual) == parse_staircase(expected)


def at_least(actual: Any, expected: Any) -> bool:
    return isinstance(actual, int) and actual >= expected


def _k(args: Dict[str, Any]) -> int:
    return int(args.get("k", 3))


@check_registry.register(name="colength", description="monomials outside the ideal", arguments=["ideal"])
def check_colength(ctx: ScenarioContext, args: Dict[str, Any]) -> int:
    return IdealService.colength(parse_staircase(args["ideal"]))


@check_registry.register(
    name="min_generators", description="number of minimal generators", arguments=["ideal"]
)
def check_min_generators(ctx: ScenarioContext, args: Dict[str, Any]) -> int:
    return IdealService.min_generators(parse_staircase(args["ideal"]))


@check_registry.register(
    name="ideal_product",
    description="product of two ideals, minimalized",
    arguments=["ideals"],
    compare=same_ideals,
    textual=True,
)
def check_ideal_product(ctx: ScenarioContext, args: Dict[str, Any]) -> str:
    first, second = (parse_staircase(text) for text in args["ideals"])
    return str(IdealService.product(first, second))


@check_registry.register(
    name="ideallemma",
    description="local targets (x, y^m) and (x^ceil((f-i)/m) y^i) of a base datum (m, f)",
    arguments=["m", "f"],
    compare=same_ideals,
    textual=True,
)
def check_ideallemma(ctx: ScenarioContext, args: Dict[str, Any]) -> List[str]:
    first, second = IdealService.ideallemma_target(int(args["m"]), int(args["f"]))
    return [str(first), str(second)]


@check_registry.register(
    name="local_target",
    description="product of the two ideallemma targets of a base datum (m, f)",
    arguments=["m", "f"],
    compare=same_ideals,
    textual=True,
)
def check_local_target(ctx: ScenarioContext, args: Dict[str, Any]) -> str:
    return str(IdealService.local_target(int(args["m"]), int(args["f"])))


@check_registry.register(
    name="min_colength",
    description="least colength of a subideal with at most k generators",
    arguments=["ideal", "k", "horizon"],
)
def check_min_colength(ctx: ScenarioContext, args: Dict[str, Any]) -> int:
    return IdealService.min_colength_subideal(
        parse_staircase(args["ideal"]), _k(args), args.get("horizon")
    )


@check_registry.register(
    name="min_colength_at_least",
    description="least subideal colength is at least the stated bound",
    arguments=["ideal", "k", "horizon"],
    compare=at_least,
)
def check_min_colength_at_least(ctx: ScenarioContext, args: Dict[str, Any]) -> int:
    return check_min_colength(ctx, args)


@check_registry.register(
    name="hs_multiplicity", description="4/3 colength bound on e_p", arguments=["colength"]
)
def check_hs_multiplicity(ctx: ScenarioContext, args: Dict[str, Any]) -> Any:
    return IdealService.hs_multiplicity_bound(int(args["colength"]))
