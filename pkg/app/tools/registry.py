from typing import Any, Callable, Dict, List, Optional

from app.utils.logging_config import app_logger as logger
from app.utils.rational_utils import to_exact_json

Comparator = Callable[[Any, Any], bool]


def exact_equal(actual: Any, expected: Any) -> bool:
    return actual == expected


class CheckOutcome:
    """Result of executing one check kind: exact JSON value or the error text"""

    def __init__(self, actual: Any, passed: bool, error: Optional[str] = None, expected: Any = None):
        self.actual = actual
        self.passed = passed
        self.error = error
        self.expected = expected


class CheckRegistry:
    def __init__(self):
        self.checks: Dict[str, Callable] = {}
        self.comparators: Dict[str, Comparator] = {}
        self.textual: Dict[str, bool] = {}
        self.check_descriptions: Dict[str, Dict[str, Any]] = {}

    def register(
        self,
        name: str,
        description: str = "",
        arguments: Optional[List[str]] = None,
        compare: Comparator = exact_equal,
        textual: bool = False,
    ):
        """textual=True keeps string values as written (staircases such as "1")"""

        def decorator(func: Callable):
            self.checks[name] = func
            self.comparators[name] = compare
            self.textual[name] = textual
            self.check_descriptions[name] = {
                "name": name,
                "description": description,
                "arguments": arguments if arguments is not None else [],
                "source": f"{func.__module__}.{func.__name__}",
            }
            return func

        return decorator

    def normalize(self, name: str, value: Any) -> Any:
        if self.textual.get(name):
            return _as_text(value)
        return to_exact_json(value)

    def execute_check(self, name: str, context: Any, args: Dict[str, Any], expected: Any) -> CheckOutcome:
        """Run a check kind and compare its value with the expected one; never raises"""
        expected = self.normalize(name, expected)
        if name not in self.checks:
            return CheckOutcome(f"error: unknown check kind '{name}'", False, "unknown", expected)

        try:
            actual = self.normalize(name, self.checks[name](context, dict(args)))
            passed = bool(self.comparators[name](actual, expected))
            return CheckOutcome(actual, passed, expected=expected)
        except Exception as e:
            logger.debug(f"check {name} with {args} raised {type(e).__name__}: {e}")
            return CheckOutcome(f"error: {e}", False, type(e).__name__, expected)

    def get_check_definitions(self) -> List[Dict[str, Any]]:
        return list(self.check_descriptions.values())

    def list_checks(self) -> List[str]:
        return sorted(self.checks.keys())


def _as_text(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return [_as_text(item) for item in value]
    if isinstance(value, str):
        return value
    return to_exact_json(value)


# Global registry instance
check_registry = CheckRegistry()


def load_check_modules() -> None:
    """Import every check module so its kinds register themselves"""
    from app.tools import ideal_checks, irrationality_checks, lattice_checks, wall_checks  # noqa: F401

    logger.debug(f"Registered check kinds: {', '.join(check_registry.list_checks())}")
