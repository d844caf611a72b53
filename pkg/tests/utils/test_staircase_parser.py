import pytest

from app.models.errors import UsageError
from app.models.ideals import MonomialIdeal
from app.utils.staircase_parser import (
    parse_genus_range,
    parse_int_list,
    parse_monomial,
    parse_staircase,
    parse_vector,
)


def test_parse_monomials():
    assert parse_monomial("x^2*y") == (2, 1)
    assert parse_monomial("x^2y") == (2, 1)
    assert parse_monomial("xy^3") == (1, 3)
    assert parse_monomial(" y^5 ") == (0, 5)
    assert parse_monomial("x") == (1, 0)
    assert parse_monomial("1") == (0, 0)


@pytest.mark.parametrize("term", ["", "z", "x^", "y*x", "*", "2x", "x*", "x^2*", "*y", "x**y"])
def test_bad_monomials(term):
    with pytest.raises(UsageError):
        parse_monomial(term)


def test_parse_staircase():
    ideal = parse_staircase("x^3, x^2*y, x*y^3, y^5")
    assert ideal == MonomialIdeal.of((3, 0), (2, 1), (1, 3), (0, 5))
    assert parse_staircase("y^5, x^3, x*y^3, x^2*y") == ideal


def test_staircase_error_names_position():
    with pytest.raises(UsageError, match="position 5"):
        parse_staircase("x^3, z^2")
    with pytest.raises(UsageError, match="not cofinite"):
        parse_staircase("x*y, y^2")


def test_parse_vector():
    assert parse_vector("1,0,-1") == (1, 0, -1)
    assert parse_vector("(-2, 1, -3)") == (-2, 1, -3)
    assert parse_vector(" −2,1,−3") == (-2, 1, -3)
    with pytest.raises(UsageError):
        parse_vector("1,2")
    with pytest.raises(UsageError, match="bad integer"):
        parse_vector("1,a,2")


def test_parse_ranges():
    assert parse_genus_range("7..14") == list(range(7, 15))
    assert parse_genus_range("7,9,11") == [7, 9, 11]
    assert parse_int_list("3,4") == [3, 4]
    with pytest.raises(UsageError):
        parse_genus_range("seven")
    with pytest.raises(UsageError):
        parse_int_list("3;4")


def test_dangling_star_is_rejected_with_its_position():
    with pytest.raises(UsageError, match="position 5"):
        parse_staircase("y^2, x*")
    assert parse_monomial("x*y") == (1, 1)
    assert parse_monomial("x^3*y^2") == (3, 2)
