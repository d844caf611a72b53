"""
IdealService: staircase arithmetic and the minimal-colength subideal search
"""

import time
from functools import lru_cache
from itertools import combinations
from typing import Optional

from sympy import Rational, ceiling

from app.config.settings import settings
from app.models.errors import HorizonError, PreconditionError
from app.models.ideals import MonomialIdeal
from app.utils.logging_config import app_logger, log_performance_metric


class IdealService:
    """Operations on cofinite monomial ideals in two variables"""

    @staticmethod
    def colength(ideal: MonomialIdeal) -> int:
        """Number of monomials outside the ideal"""
        staircase = ideal.generators
        return sum(
            (staircase[i + 1][0] - staircase[i][0]) * staircase[i][1]
            for i in range(len(staircase) - 1)
        )

    @staticmethod
    def product(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
        return MonomialIdeal(
            generators=[
                (a + c, b + d) for a, b in first.generators for c, d in second.generators
            ]
        )

    @staticmethod
    def intersection(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
        return MonomialIdeal(
            generators=[
                (max(a, c), max(b, d))
                for a, b in first.generators
                for c, d in second.generators
            ]
        )

    @staticmethod
    def contains(first: MonomialIdeal, second: MonomialIdeal) -> bool:
        """True iff second is a subideal of first"""
        return all(monomial in first for monomial in second.generators)

    @staticmethod
    def maximal_power(k: int) -> MonomialIdeal:
        """(x, y)^k"""
        if k < 0:
            raise PreconditionError(f"power must be non-negative, got {k}")
        return MonomialIdeal(generators=[(i, k - i) for i in range(k + 1)])

    @staticmethod
    def min_generators(ideal: MonomialIdeal) -> int:
        return len(ideal.generators)

    @staticmethod
    def hs_multiplicity_bound(colength: int) -> Rational:
        """Upper bound 4/3 colength for e_p of an ideal with at most three generators"""
        return Rational(4, 3) * colength

    @staticmethod
    def ideallemma_target(m: int, f: int) -> tuple:
        """
        Local targets for a curvilinear base scheme of length m carrying a
        cycle of degree f: A = (x, y^m) and
        B = (x^ceil(f/m), x^ceil((f-1)/m) y, ..., y^f).
        """
        if m < 1:
            raise PreconditionError(f"base length m must be at least 1, got {m}")
        if f < m:
            raise PreconditionError(f"cycle degree f={f} is smaller than m={m}")
        first = MonomialIdeal.of((1, 0), (0, m))
        second = MonomialIdeal(
            generators=[(int(ceiling(Rational(f - i, m))), i) for i in range(f + 1)]
        )
        return first, second

    @staticmethod
    def local_target(m: int, f: int) -> MonomialIdeal:
        """Product of the two ideallemma targets, the ideal the base ideal lands in"""
        first, second = IdealService.ideallemma_target(m, f)
        return IdealService.product(first, second)

    @staticmethod
    def default_horizon(ideal: MonomialIdeal, k: int) -> int:
        return ideal.max_degree + k + settings.HORIZON_SLACK

    @staticmethod
    def min_colength_subideal(
        ideal: MonomialIdeal, k: int, degree_bound: Optional[int] = None
    ) -> int:
        """
        Smallest colength of a cofinite monomial ideal I inside the given one,
        with at most k minimal generators of degree at most degree_bound.
        """
        if k < 1:
            raise PreconditionError(f"generator count must be at least 1, got {k}")
        if degree_bound is None:
            degree_bound = IdealService.default_horizon(ideal, k)

        started = time.perf_counter()
        result = _search(ideal, k, degree_bound)
        log_performance_metric(
            app_logger,
            "min_colength_subideal",
            (time.perf_counter() - started) * 1000,
            ideal=str(ideal),
            k=k,
            horizon=degree_bound,
            result=result,
        )
        return result

    @staticmethod
    def search_cache_info():
        return _search.cache_info()

    @staticmethod
    def clear_search_cache() -> None:
        _search.cache_clear()


@lru_cache(maxsize=256)
def _search(ideal: MonomialIdeal, k: int, degree_bound: int) -> int:
    if ideal.is_unit:
        return 0
    if k == 1:
        raise HorizonError(f"no cofinite ideal with one generator lies in ({ideal})")

    a0, b0 = ideal.x_power, ideal.y_power
    if a0 > degree_bound or b0 > degree_bound:
        raise HorizonError(
            f"horizon {degree_bound} cannot hold the pure powers x^{a0}, y^{b0} of ({ideal})"
        )

    # colength only grows with the pure powers, so x^a0 and y^b0 are optimal
    # and take two of the k generators; the rest are mixed monomials of J
    # strictly inside the box a0 x b0 and under the horizon
    mixed = [
        (i, j)
        for i in range(1, a0)
        for j in range(1, b0)
        if i + j <= degree_bound and (i, j) in ideal
    ]

    # the box (x^a0, y^b0) is always available
    best = IdealService.colength(MonomialIdeal.of((a0, 0), (0, b0)))
    for size in range(1, min(k - 2, len(mixed)) + 1):
        for chosen in combinations(mixed, size):
            candidate = MonomialIdeal(generators=[(a0, 0), (0, b0), *chosen])
            # chosen monomials may divide each other; count the minimal ones
            if len(candidate.generators) <= k:
                best = min(best, IdealService.colength(candidate))
    return best
