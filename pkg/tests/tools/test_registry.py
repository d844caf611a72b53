from app.models.lattice import PolarizedK3
from app.models.scenario import ScenarioContext
from app.services.wall_service import WallService
from app.tools.ideal_checks import at_least, same_ideals
from app.tools.irrationality_checks import same_status
from app.tools.registry import CheckRegistry, check_registry, load_check_modules


def _context():
    surface = PolarizedK3(genus=7)
    classes = {"I_xi": surface.vector(1, 0, -1), "Edual_shift": surface.vector(-2, 1, -3)}
    walls = {"W": WallService.wall_between(classes["I_xi"], classes["Edual_shift"])}
    return ScenarioContext(surface=surface, classes=classes, walls=walls)


def test_check_modules_register_their_kinds():
    load_check_modules()
    kinds = check_registry.list_checks()

    for kind in ("pairing", "wall_equation", "holes", "min_colength", "stratum_feasibility"):
        assert kind in kinds
    assert all(d["description"] for d in check_registry.get_check_definitions())


def test_execute_check_compares_exact_values():
    load_check_modules()
    ctx = _context()

    outcome = check_registry.execute_check("wall_meets_line", ctx, {"wall": "W", "beta": "-3/7"}, "1/147")
    assert outcome.passed
    assert outcome.actual == "1/147"

    outcome = check_registry.execute_check("wall_equation", ctx, {"wall": "W"}, [6, 5, 2])
    assert not outcome.passed
    assert outcome.actual == [6, 5, 1]


def test_execute_check_never_raises():
    load_check_modules()
    outcome = check_registry.execute_check("wall_equation", _context(), {"wall": "nope"}, [6, 5, 1])

    assert not outcome.passed
    assert outcome.error == "ScenarioConfigError"
    assert outcome.actual.startswith("error:")

    unknown = check_registry.execute_check("no_such_check", _context(), {}, 1)
    assert unknown.error == "unknown"


def test_custom_comparator():
    registry = CheckRegistry()

    @registry.register(name="answer", description="always 42", compare=at_least)
    def answer(ctx, args):
        return 42

    assert registry.execute_check("answer", None, {}, 40).passed
    assert not registry.execute_check("answer", None, {}, 43).passed
    assert registry.check_descriptions["answer"]["source"].endswith(".answer")


def test_comparators():
    assert same_status("excluded(local colength 7 exceeds L^2 - c2 = 6)", "excluded")
    assert not same_status("feasible", "excluded")
    assert same_ideals("y^5, x^3, x*y^3, x^2*y", "x^3, x^2*y, x*y^3, y^5")
    assert same_ideals(["x, y"], ["y, x"])
    assert not same_ideals("x^2, y", "x, y^2")
    assert not at_least("error: boom", 3)


def test_unit_ideal_stays_a_staircase():
    load_check_modules()
    ctx = _context()

    outcome = check_registry.execute_check("ideal_product", ctx, {"ideals": ["1", "1"]}, "1")
    assert outcome.passed
    assert outcome.actual == "1"
    assert outcome.expected == "1"

    outcome = check_registry.execute_check("ideal_product", ctx, {"ideals": ["1", "x, y"]}, "y, x")
    assert outcome.passed
    assert same_ideals("1", "1")
