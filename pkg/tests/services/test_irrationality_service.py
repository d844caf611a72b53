import random

import pytest
from sympy import Rational

from app.models.errors import InconsistencyError, NotCoveredError, PreconditionError
from app.models.lattice import PolarizedK3
from app.models.projection import ProjectionDatum, VerdictStatus
from app.services.irrationality_service import IrrationalityService


@pytest.mark.parametrize(
    "genus, minimal, d3, d4",
    [
        (7, 5, [5], [5, 6]),
        (8, 5, [5], [5, 6]),
        (9, 6, [6], [6, 7]),
        (10, 6, [6], [6, 7]),
        (11, 7, [7], [7, 8]),
        (12, 7, [7], [7, 8]),
        (13, 8, [8], [8, 9]),
        (14, 8, [8], [8, 9]),
    ],
)
def test_admissible_c2(genus, minimal, d3, d4):
    surface = PolarizedK3(genus=genus)
    assert IrrationalityService.minimal_c2(surface) == minimal
    assert IrrationalityService.admissible_c2(surface, 3) == d3
    assert IrrationalityService.admissible_c2(surface, 4) == d4


def test_kernel_bundle_numerics():
    g7 = PolarizedK3(genus=7)
    kernel = IrrationalityService.kernel_mukai_vector(g7, 5)

    assert kernel.as_tuple() == (2, 1, 3)
    assert IrrationalityService.expected_h0(kernel) == 5
    assert IrrationalityService.expected_h0(PolarizedK3(genus=12).vector(2, 1, 6)) == 8
    with pytest.raises(PreconditionError):
        IrrationalityService.kernel_mukai_vector(g7, 4)
    with pytest.raises(InconsistencyError):
        IrrationalityService.expected_h0(g7.vector(1, 0, -3))


def test_moduli_polarization_genus():
    assert IrrationalityService.moduli_polarization_genus(7) == 7
    assert IrrationalityService.moduli_polarization_genus(9) == 3
    assert IrrationalityService.moduli_polarization_genus(11) == 11
    assert IrrationalityService.moduli_polarization_genus(13) == 4
    with pytest.raises(NotCoveredError):
        IrrationalityService.moduli_polarization_genus(8)


def test_degree_from_chern():
    assert IrrationalityService.degree_from_chern(7, 3) == 4
    with pytest.raises(PreconditionError):
        IrrationalityService.degree_from_chern(5, 6)
    with pytest.raises(PreconditionError):
        IrrationalityService.degree_from_chern(5, -1)


def test_hs_degree_lower_bound():
    assert IrrationalityService.hs_degree_lower_bound(PolarizedK3(genus=7), 6) == 4
    assert IrrationalityService.hs_degree_lower_bound(PolarizedK3(genus=7), 7) == Rational(8, 3)
    with pytest.raises(PreconditionError):
        IrrationalityService.hs_degree_lower_bound(PolarizedK3(genus=7), -1)


def test_make_datum_derives_m_f_and_colength():
    datum = IrrationalityService.make_datum(PolarizedK3(genus=9), 4, 7, [(1, 2), (1, 1)])
    assert (datum.m, datum.f, datum.colength) == (2, 3, 9)


def test_datum_relations_are_validated():
    with pytest.raises(ValueError):
        IrrationalityService.make_datum(PolarizedK3(genus=7), 4, 6, [(1, 3)])
    with pytest.raises(ValueError):
        IrrationalityService.make_datum(PolarizedK3(genus=7), 4, 6, [(3, 2)])


def test_genus_7_strata():
    g7 = PolarizedK3(genus=7)
    excluded = IrrationalityService.stratum_feasibility(
        IrrationalityService.make_datum(g7, 4, 6, [(1, 2)])
    )
    feasible = IrrationalityService.stratum_feasibility(
        IrrationalityService.make_datum(g7, 4, 5, [(1, 1)])
    )

    assert excluded.status is VerdictStatus.EXCLUDED
    assert excluded.required_colength == 7
    assert excluded.available_colength == 6
    assert excluded.to_exact_json().startswith("excluded(")
    assert feasible.status is VerdictStatus.FEASIBLE
    assert feasible.to_exact_json() == "feasible"


def test_c2_outside_admissible_range_is_excluded():
    verdict = IrrationalityService.stratum_feasibility(
        IrrationalityService.make_datum(PolarizedK3(genus=7), 3, 6, [(1, 3)])
    )
    assert verdict.status is VerdictStatus.EXCLUDED
    assert "admissible" in verdict.reason


def test_genus_11_strata():
    g11 = PolarizedK3(genus=11)
    for config in ([(1, 4)], [(1, 2), (1, 2)], [(2, 4)], [(3, 4)]):
        verdict = IrrationalityService.stratum_feasibility(
            IrrationalityService.make_datum(g11, 4, 8, config)
        )
        assert verdict.status is VerdictStatus.EXCLUDED, config


def test_unanalysed_local_data_is_unclassified():
    verdict = IrrationalityService.stratum_feasibility(
        IrrationalityService.make_datum(PolarizedK3(genus=11), 4, 8, [(4, 4)])
    )
    assert verdict.status is VerdictStatus.UNCLASSIFIED
    assert verdict.to_exact_json().startswith("unclassified(")


def test_precomputed_bounds_are_used():
    datum = IrrationalityService.make_datum(PolarizedK3(genus=7), 4, 6, [(1, 2)])
    verdict = IrrationalityService.stratum_feasibility(datum, {(1, 2): 0})
    assert verdict.status is VerdictStatus.FEASIBLE


def _consistent(surface, d, c2, m, f, colength, config):
    if d < 1 or m < 0 or d != c2 - f or colength != surface.lsquare - c2 or f < m:
        return False
    if config:
        if any(m_i < 1 or f_i < m_i for m_i, f_i in config):
            return False
        if sum(m_i for m_i, _ in config) != m or sum(f_i for _, f_i in config) != f:
            return False
    return True


@pytest.mark.parametrize("genus", range(7, 15))
def test_projection_data_validate_or_raise(genus):
    rng = random.Random(genus)
    surface = PolarizedK3(genus=genus)
    accepted = 0
    for _ in range(300):
        d, c2 = rng.randint(0, 6), rng.randint(3, 12)
        config = tuple(
            (rng.randint(0, 3), rng.randint(0, 4)) for _ in range(rng.randint(0, 3))
        )
        m = sum(m_i for m_i, _ in config) + rng.choice([0, 0, 1])
        f = c2 - d + rng.choice([0, 0, -1])
        colength = surface.lsquare - c2 + rng.choice([0, 0, 1])
        fields = dict(surface=surface, d=d, c2=c2, m=m, f=f, colength=colength, local_config=config)

        if _consistent(surface, d, c2, m, f, colength, config):
            datum = ProjectionDatum(**fields)
            assert datum.d == datum.c2 - datum.f
            assert datum.colength == surface.lsquare - datum.c2
            assert datum.f >= datum.m >= 0
            accepted += 1
        else:
            with pytest.raises(ValueError):
                ProjectionDatum(**fields)

        if _consistent(surface, d, c2, sum(m_i for m_i, _ in config), c2 - d, surface.lsquare - c2, config):
            datum = IrrationalityService.make_datum(surface, d, c2, config)
            assert (datum.m, datum.f, datum.colength) == (
                sum(m_i for m_i, _ in config),
                c2 - d,
                surface.lsquare - c2,
            )
        else:
            with pytest.raises(ValueError):
                IrrationalityService.make_datum(surface, d, c2, config)
    assert accepted


@pytest.mark.parametrize("genus", range(5, 15))
def test_admissible_c2_grows_with_degree(genus):
    surface = PolarizedK3(genus=genus)
    for d in range(1, 12):
        current = IrrationalityService.admissible_c2(surface, d)
        following = IrrationalityService.admissible_c2(surface, d + 1)

        assert set(current) <= set(following)
        if current:
            assert max(following) - max(current) in (0, 1)


@pytest.mark.parametrize("genus", range(5, 15))
def test_hs_bound_never_exceeds_an_admissible_degree(genus):
    surface = PolarizedK3(genus=genus)
    for d in range(1, 9):
        for c2 in IrrationalityService.admissible_c2(surface, d):
            bound = IrrationalityService.hs_degree_lower_bound(surface, surface.lsquare - c2)
            assert bound <= d

            if c2 - d >= 1:
                datum = IrrationalityService.make_datum(surface, d, c2, [(1, c2 - d)])
                verdict = IrrationalityService.stratum_feasibility(datum)
                if verdict.status is VerdictStatus.FEASIBLE:
                    assert bound <= datum.d


@pytest.mark.parametrize("genus", range(5, 15))
def test_expected_h0_of_minimal_kernel_bundle(genus):
    surface = PolarizedK3(genus=genus)
    kernel = IrrationalityService.kernel_mukai_vector(surface, IrrationalityService.minimal_c2(surface))

    assert kernel.as_tuple() == (2, 1, genus + 1 - (genus + 3) // 2)
    assert IrrationalityService.expected_h0(kernel) == genus + 3 - (genus + 3) // 2
