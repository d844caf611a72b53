"""
Parsers for command-line and config text: staircases, Mukai triples, genus ranges
"""

import re
from typing import List, Tuple

from app.models.errors import UsageError
from app.models.ideals import MonomialIdeal

# "*" only joins an x factor to a following y factor
_MONOMIAL_RE = re.compile(r"^(?:x(?:\^(\d+))?(?:\*?(?=y))?)?(?:y(?:\^(\d+))?)?$")


def _exponent(group) -> int:
    return 1 if group is None else int(group)


def parse_monomial(term: str, position: int = 0) -> Tuple[int, int]:
    """Read "x^2*y", "x^2y", "xy^3", "y^5" or "1" as an exponent pair"""
    compact = re.sub(r"\s+", "", term)
    if compact == "1":
        return (0, 0)
    match = _MONOMIAL_RE.match(compact)
    if not compact or not match:
        raise UsageError(f"bad monomial {term.strip()!r} at position {position}")
    a = _exponent(match.group(1)) if compact.startswith("x") else 0
    b = _exponent(match.group(2)) if "y" in compact else 0
    return (a, b)


def parse_staircase(text: str) -> MonomialIdeal:
    """Comma-separated generator list such as "x^3, x^2*y, x*y^3, y^5" """
    monomials = []
    position = 0
    for term in text.split(","):
        monomials.append(parse_monomial(term, position + len(term) - len(term.lstrip())))
        position += len(term) + 1
    try:
        return MonomialIdeal(generators=monomials)
    except ValueError as e:
        raise UsageError(f"bad staircase {text!r}: {e}") from e


def parse_vector(text: str) -> Tuple[int, int, int]:
    """Mukai triple "r,c,s" (unicode minus accepted)"""
    parts = text.replace("−", "-").strip().strip("()").split(",")
    if len(parts) != 3:
        raise UsageError(f"expected a triple r,c,s, got {text!r}")
    values = []
    position = 0
    for part in parts:
        try:
            values.append(int(part))
        except ValueError:
            raise UsageError(f"bad integer {part.strip()!r} at position {position} in {text!r}")
        position += len(part) + 1
    return (values[0], values[1], values[2])


def parse_genus_range(text: str) -> List[int]:
    """ "7..14" or "7,9,11" """
    text = text.strip()
    try:
        if ".." in text:
            low, high = text.split("..", 1)
            return list(range(int(low), int(high) + 1))
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"bad genus range {text!r}; use 7..14 or 7,9,11")


def parse_int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"bad integer list {text!r}")
