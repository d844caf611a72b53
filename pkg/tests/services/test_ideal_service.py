import random

import pytest
from sympy import Rational

from app.models.errors import HorizonError, PreconditionError
from app.models.ideals import MonomialIdeal, minimalize
from app.services.ideal_service import IdealService


def test_staircase_is_minimal_and_sorted():
    ideal = MonomialIdeal(generators=[(0, 5), (3, 0), (2, 1), (1, 3), (2, 2), (3, 3)])
    assert ideal.generators == ((0, 5), (1, 3), (2, 1), (3, 0))
    assert str(ideal) == "x^3, x^2*y, x*y^3, y^5"
    assert minimalize([(1, 1), (2, 2), (1, 1)]) == ((1, 1),)


def test_ideal_must_be_cofinite():
    with pytest.raises(ValueError):
        MonomialIdeal.of((1, 1), (2, 0))
    with pytest.raises(ValueError):
        MonomialIdeal.of((1, -1))


def test_colength():
    assert IdealService.colength(MonomialIdeal.unit()) == 0
    assert IdealService.colength(IdealService.maximal_power(3)) == 6
    assert IdealService.colength(IdealService.maximal_power(5)) == 15
    assert IdealService.colength(MonomialIdeal.of((3, 0), (2, 1), (1, 4), (0, 7))) == 12


def test_product_intersection_and_containment():
    m = IdealService.maximal_power(1)
    m2 = IdealService.maximal_power(2)

    assert IdealService.product(m, m) == m2
    assert IdealService.intersection(m, m2) == m2
    assert IdealService.contains(m, m2)
    assert not IdealService.contains(m2, m)
    assert (1, 1) in m2
    assert (1, 0) not in m2


def test_maximal_power_rejects_negative_exponent():
    with pytest.raises(PreconditionError):
        IdealService.maximal_power(-1)


def test_ideallemma_targets():
    first, second = IdealService.ideallemma_target(1, 3)
    assert str(first) == "x, y"
    assert str(second) == "x^3, x^2*y, x*y^2, y^3"

    first, second = IdealService.ideallemma_target(2, 3)
    assert str(first) == "x, y^2"
    assert str(second) == "x^2, x*y, y^3"

    with pytest.raises(PreconditionError):
        IdealService.ideallemma_target(3, 2)
    with pytest.raises(PreconditionError):
        IdealService.ideallemma_target(0, 2)


@pytest.mark.parametrize(
    "local, staircase",
    [
        ((1, 1), "x^2, x*y, y^2"),
        ((1, 2), "x^3, x^2*y, x*y^2, y^3"),
        ((2, 3), "x^3, x^2*y, x*y^3, y^5"),
        ((2, 4), "x^3, x^2*y^2, x*y^4, y^6"),
        ((3, 4), "x^3, x^2*y, x*y^4, y^7"),
    ],
)
def test_local_targets(local, staircase):
    assert str(IdealService.local_target(*local)) == staircase


@pytest.mark.parametrize(
    "local, expected",
    [
        ((1, 1), 3),
        ((1, 2), 7),
        ((1, 3), 12),
        ((1, 4), 19),
        ((2, 3), 11),
        ((2, 4), 14),
        ((3, 4), 15),
    ],
)
def test_min_colength_of_local_targets(local, expected):
    target = IdealService.local_target(*local)
    assert IdealService.min_colength_subideal(target, 3) == expected


def test_min_colength_of_pure_powers_and_unit():
    assert IdealService.min_colength_subideal(MonomialIdeal.unit(), 1) == 0
    assert IdealService.min_colength_subideal(IdealService.maximal_power(3), 2) == 9
    assert IdealService.min_colength_subideal(IdealService.maximal_power(2), 4) <= 3


def test_min_colength_errors():
    target = IdealService.local_target(2, 3)
    with pytest.raises(HorizonError):
        IdealService.min_colength_subideal(target, 1)
    with pytest.raises(HorizonError):
        IdealService.min_colength_subideal(target, 3, degree_bound=2)
    with pytest.raises(PreconditionError):
        IdealService.min_colength_subideal(target, 0)


def test_repeated_searches_hit_the_cache():
    target = IdealService.local_target(2, 4)
    IdealService.min_colength_subideal(target, 3)
    hits = IdealService.search_cache_info().hits
    IdealService.min_colength_subideal(target, 3)
    assert IdealService.search_cache_info().hits == hits + 1


def test_hs_multiplicity_bound():
    assert IdealService.hs_multiplicity_bound(9) == 12
    assert IdealService.hs_multiplicity_bound(2) == Rational(8, 3)
    assert IdealService.min_generators(IdealService.local_target(2, 3)) == 4


LOCAL_DATA = [(1, 1), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]


def _random_ideal(rng):
    mixed = [(rng.randint(1, 5), rng.randint(1, 5)) for _ in range(rng.randint(0, 3))]
    return MonomialIdeal(generators=[(rng.randint(1, 6), 0), (0, rng.randint(1, 6)), *mixed])


@pytest.mark.parametrize("local", LOCAL_DATA)
def test_min_colength_is_horizon_stable(local):
    target = IdealService.local_target(*local)
    horizon = IdealService.default_horizon(target, 3)
    expected = IdealService.min_colength_subideal(target, 3, horizon)

    for extra in (1, 3, 6):
        assert IdealService.min_colength_subideal(target, 3, horizon + extra) == expected


def test_min_colength_of_random_staircases_is_horizon_stable():
    rng = random.Random(7)
    for _ in range(40):
        ideal = _random_ideal(rng)
        horizon = IdealService.default_horizon(ideal, 3)
        assert IdealService.min_colength_subideal(ideal, 3, horizon) == (
            IdealService.min_colength_subideal(ideal, 3, horizon + 4)
        )


def test_product_lies_in_both_factors():
    rng = random.Random(11)
    for _ in range(100):
        first, second = _random_ideal(rng), _random_ideal(rng)
        product = IdealService.product(first, second)
        meet = IdealService.intersection(first, second)

        assert IdealService.contains(first, product)
        assert IdealService.contains(second, product)
        assert IdealService.contains(meet, product)
        assert IdealService.colength(product) >= max(
            IdealService.colength(first), IdealService.colength(second)
        )
        assert IdealService.colength(meet) >= max(
            IdealService.colength(first), IdealService.colength(second)
        )


def test_min_colength_does_not_grow_with_more_generators():
    rng = random.Random(13)
    ideals = [IdealService.local_target(*local) for local in LOCAL_DATA]
    ideals += [_random_ideal(rng) for _ in range(20)]
    for ideal in ideals:
        values = [IdealService.min_colength_subideal(ideal, k) for k in range(2, 6)]
        assert values == sorted(values, reverse=True), str(ideal)
        assert values[-1] >= IdealService.colength(ideal)


def test_min_colength_equals_colength_when_generators_suffice():
    rng = random.Random(17)
    ideals = [IdealService.local_target(*local) for local in LOCAL_DATA]
    ideals += [_random_ideal(rng) for _ in range(15)]
    for ideal in ideals:
        k = IdealService.min_generators(ideal)
        assert IdealService.min_colength_subideal(ideal, max(k, 2)) == IdealService.colength(ideal)
        assert IdealService.min_colength_subideal(ideal, k + 1) == IdealService.colength(ideal)


@pytest.mark.parametrize("m, f", [(m, f) for f in range(1, 8) for m in range(1, f + 1)])
def test_ideallemma_second_target_has_both_pure_powers(m, f):
    first, second = IdealService.ideallemma_target(m, f)

    assert first.generators == ((0, m), (1, 0))
    assert (-(-f // m), 0) in second.generators
    assert (0, f) in second.generators
    assert second.x_power == -(-f // m)
    assert second.y_power == f
