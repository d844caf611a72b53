"""
IrrationalityService: degree of projections, Hilbert-Samuel bound, admissible c2
and kernel-bundle numerics
"""

from typing import Dict, Iterable, List, Optional

from sympy import Rational

from app.config.theorem_catalog import is_classified
from app.models.errors import InconsistencyError, NotCoveredError, PreconditionError
from app.models.lattice import MukaiVector, PolarizedK3
from app.models.projection import (
    FeasibilityVerdict,
    LocalDatum,
    ProjectionDatum,
    VerdictStatus,
)
from app.services.ideal_service import IdealService
from app.utils.logging_config import app_logger

# the 4/3 colength bound applies to ideals with at most three local generators
LOCAL_GENERATORS = 3


class IrrationalityService:
    """Numerics of 3-dimensional linear systems V in H^0(L) and their kernel bundles"""

    @staticmethod
    def degree_from_chern(c2: int, f: int) -> int:
        if f < 0:
            raise PreconditionError(f"cycle degree must be non-negative, got {f}")
        if f > c2:
            raise PreconditionError(f"f={f} exceeds c2={c2}: the map is not dominant")
        return c2 - f

    @staticmethod
    def hs_degree_lower_bound(surface: PolarizedK3, colength: int) -> Rational:
        """L^2 - 4/3 colength"""
        if colength < 0:
            raise PreconditionError(f"colength must be non-negative, got {colength}")
        return surface.lsquare - IdealService.hs_multiplicity_bound(colength)

    @staticmethod
    def minimal_c2(surface: PolarizedK3) -> int:
        return (surface.genus + 3) // 2

    @staticmethod
    def admissible_c2(surface: PolarizedK3, d: int) -> List[int]:
        """All c2 with floor((g+3)/2) <= c2 <= floor((3d + L^2)/4)"""
        if d < 1:
            raise PreconditionError(f"degree must be at least 1, got {d}")
        upper = (3 * d + surface.lsquare) // 4
        return list(range(IrrationalityService.minimal_c2(surface), upper + 1))

    @staticmethod
    def kernel_mukai_vector(surface: PolarizedK3, c2: int) -> MukaiVector:
        """v(E) = (2, L, g + 1 - c2)"""
        if c2 < IrrationalityService.minimal_c2(surface):
            raise PreconditionError(
                f"c2={c2} is below the minimal value {IrrationalityService.minimal_c2(surface)}"
            )
        return surface.vector(2, 1, surface.genus + 1 - c2)

    @staticmethod
    def expected_h0(v: MukaiVector) -> int:
        """chi(O_S, E) = r + s, equal to h^0 when h^1 = h^2 = 0"""
        h0 = v.r + v.s
        if h0 < 0:
            raise InconsistencyError(f"{v} has chi = {h0} < 0 but h^1 = h^2 = 0 was assumed")
        return h0

    @staticmethod
    def moduli_polarization_genus(genus: int) -> int:
        """Genus of the natural polarization on the 2-dimensional moduli space M"""
        if genus % 2 == 0:
            raise NotCoveredError(f"genus {genus} is even; only odd genera are covered")
        if genus % 4 == 3:
            return genus
        return (genus + 3) // 4

    @staticmethod
    def make_datum(
        surface: PolarizedK3, d: int, c2: int, local_config: Iterable[LocalDatum]
    ) -> ProjectionDatum:
        """Datum with f = c2 - d and m, colength derived from the configuration"""
        config = tuple(tuple(item) for item in local_config)
        return ProjectionDatum(
            surface=surface,
            d=d,
            c2=c2,
            m=sum(m_i for m_i, _ in config),
            f=c2 - d,
            colength=surface.lsquare - c2,
            local_config=config,
        )

    @staticmethod
    def local_bound(m: int, f: int) -> int:
        """Least colength of a base ideal inside the target of one local datum"""
        target = IdealService.local_target(m, f)
        return IdealService.min_colength_subideal(target, LOCAL_GENERATORS)

    @staticmethod
    def stratum_feasibility(
        datum: ProjectionDatum, ideal_bounds: Optional[Dict[LocalDatum, int]] = None
    ) -> FeasibilityVerdict:
        """Apply the admissibility, Hilbert-Samuel and local colength bounds to a datum"""
        available = datum.colength

        admissible = IrrationalityService.admissible_c2(datum.surface, datum.d)
        if datum.c2 not in admissible:
            return FeasibilityVerdict(
                status=VerdictStatus.EXCLUDED,
                reason=f"c2={datum.c2} outside admissible range {admissible} for d={datum.d}",
                available_colength=available,
            )

        hs_bound = IrrationalityService.hs_degree_lower_bound(datum.surface, available)
        if hs_bound > datum.d:
            return FeasibilityVerdict(
                status=VerdictStatus.EXCLUDED,
                reason=f"Hilbert-Samuel bound {hs_bound} exceeds d={datum.d}",
                available_colength=available,
            )

        bounds = dict(ideal_bounds or {})
        required = 0
        unclassified = []
        for local in datum.local_config:
            if not is_classified(local):
                unclassified.append(local)
                continue
            if local not in bounds:
                bounds[local] = IrrationalityService.local_bound(*local)
            required += bounds[local]

        if required > available:
            verdict = FeasibilityVerdict(
                status=VerdictStatus.EXCLUDED,
                reason=f"local colength {required} exceeds L^2 - c2 = {available}",
                required_colength=required,
                available_colength=available,
            )
        elif unclassified:
            verdict = FeasibilityVerdict(
                status=VerdictStatus.UNCLASSIFIED,
                reason=f"no case analysis for local data {unclassified}",
                required_colength=required,
                available_colength=available,
            )
        else:
            verdict = FeasibilityVerdict(
                status=VerdictStatus.FEASIBLE,
                required_colength=required,
                available_colength=available,
            )

        app_logger.debug(f"stratum {datum.to_exact_json()} -> {verdict.to_exact_json()}")
        return verdict
