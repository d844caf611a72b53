import random

import pytest
from sympy import Rational, oo

from app.models.errors import ChargeVanishesError, OutsideHeartError
from app.models.lattice import PolarizedK3
from app.models.tilt import HeartMembership, StabPoint
from app.services.lattice_service import LatticeService
from app.services.tilt_service import TiltService
from app.services.wall_service import WallService


@pytest.fixture
def g7():
    return PolarizedK3(genus=7)


def test_central_charge_of_ideal_sheaf(g7):
    z = TiltService.central_charge(g7.vector(1, 0, -1), StabPoint(beta="-1/2", alpha_sq="1/4"))
    assert z.re == 1
    assert z.im == 6
    assert TiltService.tilt_slope(g7.vector(1, 0, -1), StabPoint(beta="-1/2", alpha_sq="1/4")) == Rational(-1, 6)


def test_skyscraper_has_infinite_slope(g7):
    assert TiltService.tilt_slope(g7.vector(0, 0, 1), StabPoint(beta=0, alpha_sq=1)) == oo


def test_charge_vanishes_at_hole(g7):
    hole = StabPoint(beta="-2/5", alpha_sq="1/150")
    assert TiltService.central_charge(g7.vector(5, -2, 5), hole).is_zero()
    with pytest.raises(ChargeVanishesError):
        TiltService.tilt_slope(g7.vector(5, -2, 5), hole)


def test_class_outside_heart(g7):
    with pytest.raises(OutsideHeartError):
        TiltService.tilt_slope(g7.vector(1, 0, -1), StabPoint(beta="1/2", alpha_sq=1))


def test_slopes_agree_at_top_of_wall(g7):
    top = StabPoint(beta="-5/12", alpha_sq="1/144")
    assert TiltService.slopes_agree(g7.vector(1, 0, -1), g7.vector(-2, 1, -3), top)
    assert not TiltService.slopes_agree(
        g7.vector(1, 0, -1), g7.vector(-2, 1, -3), StabPoint(beta="-5/12", alpha_sq="1/100")
    )


def test_heart_membership(g7):
    assert TiltService.heart_membership(g7.vector(1, 0, -1), "-5/12") is HeartMembership.SHEAF_IN_HEART
    assert TiltService.heart_membership(g7.vector(-2, 1, -3), "-5/12") is HeartMembership.SHIFT_IN_HEART
    assert TiltService.heart_membership(g7.vector(2, -1, 3), "-1/2") is HeartMembership.SHIFT_IN_HEART
    assert TiltService.heart_membership(g7.vector(0, 0, 1), 5) is HeartMembership.SHEAF_IN_HEART
    assert (
        TiltService.heart_membership(g7.vector(1, 0, -1), 0, mu_stable=False)
        is HeartMembership.NEITHER
    )


def test_minimal_rank_criterion(g7):
    assert TiltService.minimal_rank_criterion(g7.vector(2, -1, 3), "-3/7")
    assert not TiltService.minimal_rank_criterion(g7.vector(1, 0, -1), "-3/7")
    assert TiltService.minimal_rank_criterion(g7.vector(1, 0, -1), "-1/3")


def test_point_needs_positive_alpha():
    with pytest.raises(ValueError):
        StabPoint(beta=0, alpha_sq=0)


def _random_vector(rng, surface, min_rank=-5):
    return surface.vector(rng.randint(min_rank, 5), rng.randint(-4, 4), rng.randint(-15, 15))


def _random_beta(rng):
    return Rational(rng.randint(-12, 12), rng.randint(1, 7))


@pytest.mark.parametrize("genus", range(7, 15))
def test_heart_membership_flips_at_the_slope(genus):
    rng = random.Random(genus)
    surface = PolarizedK3(genus=genus)
    for _ in range(200):
        v = _random_vector(rng, surface, min_rank=1)
        beta = _random_beta(rng)
        membership = TiltService.heart_membership(v, beta)
        point = StabPoint(beta=beta, alpha_sq=1)

        assert membership in (HeartMembership.SHEAF_IN_HEART, HeartMembership.SHIFT_IN_HEART)
        assert TiltService.heart_membership(-v, beta) is membership
        assert (membership is HeartMembership.SHEAF_IN_HEART) == bool(beta < LatticeService.slope(v))
        if beta != LatticeService.slope(v):
            in_heart = v if membership is HeartMembership.SHEAF_IN_HEART else -v
            assert TiltService.central_charge(in_heart, point).im > 0

        on_slope = TiltService.heart_membership(v, LatticeService.slope(v))
        assert on_slope is HeartMembership.SHIFT_IN_HEART


@pytest.mark.parametrize("genus", range(7, 15))
def test_minimal_rank_criterion_under_shift_and_dual(genus):
    rng = random.Random(100 + genus)
    surface = PolarizedK3(genus=genus)
    for _ in range(200):
        v = _random_vector(rng, surface)
        beta0 = _random_beta(rng)
        holds = TiltService.minimal_rank_criterion(v, beta0)

        assert TiltService.minimal_rank_criterion(LatticeService.shift(v), beta0) == holds
        assert TiltService.minimal_rank_criterion(LatticeService.dual(v), -beta0) == holds


@pytest.mark.parametrize("genus", range(7, 15))
def test_minimal_rank_walls_meet_the_line_once(genus):
    rng = random.Random(200 + genus)
    surface = PolarizedK3(genus=genus)
    checked = 0
    while checked < 100:
        v, w = _random_vector(rng, surface), _random_vector(rng, surface)
        beta0 = _random_beta(rng)
        if not TiltService.minimal_rank_criterion(v, beta0):
            continue
        if v.r * w.c == v.c * w.r and v.r * w.s == v.s * w.r and v.c * w.s == v.s * w.c:
            continue
        checked += 1

        quad, lin, const = WallService.wall_between(v, w).equation
        # on beta = beta0 the wall reads quad * alpha^2 + rest = 0
        rest = quad * beta0**2 + lin * beta0 + const
        assert quad != 0 or rest != 0
