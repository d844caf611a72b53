"""
Exact rational helpers shared by the services, the report layer and the CLI.

Rationals travel as sympy Rationals inside the toolkit and as "p/q" strings
outside of it.
"""

import re
from typing import Any, Union

from sympy import N, Rational, oo
from sympy.core.numbers import Infinity

RationalLike = Union[int, str, Rational]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


def to_rational(value: Any) -> Rational:
    """Convert ints, "p/q" strings and sympy numbers to an exact Rational"""
    if isinstance(value, bool):
        raise ValueError(f"not a rational number: {value!r}")
    if isinstance(value, Rational):
        return value
    if isinstance(value, int):
        return Rational(value)
    if isinstance(value, str):
        match = _RATIONAL_RE.match(value.replace("−", "-"))
        if not match:
            raise ValueError(f"not a rational number: {value!r}")
        num, den = match.group(1), match.group(2)
        if den is not None and int(den) == 0:
            raise ValueError(f"zero denominator in {value!r}")
        return Rational(int(num), int(den) if den is not None else 1)
    raise ValueError(f"not a rational number: {value!r}")


def is_rational_text(value: str) -> bool:
    return bool(_RATIONAL_RE.match(value.replace("−", "-")))


def format_rational(value: Union[Rational, int, Infinity]) -> str:
    """Exact "p/q" text; integers print without denominator"""
    if value is oo or value == oo:
        return "+oo"
    value = Rational(value)
    if value.q == 1:
        return str(value.p)
    return f"{value.p}/{value.q}"


def to_exact_json(value: Any) -> Any:
    """
    Canonical JSON form used by reports and check comparisons:
    integral Rationals become ints, other Rationals "p/q" strings,
    containers are converted recursively.
    """
    if isinstance(value, bool) or value is None:
        return value
    if value is oo:
        return "+oo"
    if isinstance(value, Rational):
        return int(value.p) if value.q == 1 else f"{value.p}/{value.q}"
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        if is_rational_text(value):
            return to_exact_json(to_rational(value))
        return value
    if isinstance(value, (list, tuple)):
        return [to_exact_json(item) for item in value]
    if isinstance(value, dict):
        return {str(k): to_exact_json(v) for k, v in value.items()}
    if hasattr(value, "to_exact_json"):
        return value.to_exact_json()
    return str(value)


def decimal_text(expr: Any, digits: int = 12) -> str:
    """Decimal approximation for SVG coordinates only"""
    return format(float(N(expr, digits)), f".{digits}g")
