from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ecpatterns import IDENTITY, Curve, Point
from ecpatterns.algebra import INF
from ecpatterns.maps import CoordinateMap, MobiusMap
from ecpatterns.membership import g_membership, is_square, naive_point_search, x_candidates, y_candidates

from conftest import BREMNER_X, ORBIT_TABLE

X = CoordinateMap.x()


@pytest.mark.parametrize("r, root", [(Fraction(4, 9), Fraction(2, 3)), (-1, None), (49, 7), (0, 0),
                                     (Fraction(2, 1), None), (Fraction(1, 8), None)])
def test_is_square(r, root):
    assert is_square(r) == root


@settings(max_examples=200)
@given(st.fractions(max_denominator=10**6))
def test_is_square_of_square(r):
    assert is_square(r * r) == abs(r)


def test_y_candidates(e5077, e234446):
    assert y_candidates(e5077, 0) == {2, -3}
    assert y_candidates(e5077, 1) == {0, -1}
    assert y_candidates(e5077, 5) == set()
    assert y_candidates(e234446, -10)


def test_x_candidates(e5077):
    assert 2 in x_candidates(e5077, 0) and -3 in x_candidates(e5077, 0)
    assert 4 in x_candidates(e5077, 6)


def test_membership_examples(e234446, e5077):
    assert g_membership(e234446, X, 13) is not None
    assert g_membership(e234446, X, 2) is None
    assert g_membership(e5077, X, INF) == IDENTITY
    assert g_membership(Curve(0, 0, 0, -1, 0), X, INF) == IDENTITY


@pytest.mark.parametrize("x", BREMNER_X)
def test_bremner_values_are_x_coordinates(e234446, x):
    P = g_membership(e234446, X, x)
    assert P is not None and P.x == x and e234446.contains(P)


def test_membership_through_post_map(e234446):
    g = X.then(MobiusMap.translation(1))
    for x in BREMNER_X:
        assert g_membership(e234446, g, x + 1).x == x
    assert g_membership(e234446, g, 3) is None


def test_membership_y_base(e5077):
    g = CoordinateMap.y()
    P = g_membership(e5077, g, 6)
    assert P == Point(Fraction(4), Fraction(6))


def test_naive_search_examples(e5077, e234446):
    pts = naive_point_search(e5077, 13, 1)
    for x, y in ORBIT_TABLE:
        assert Point(Fraction(x), Fraction(y)) in pts
    xs = {P.x for P in naive_point_search(e234446, 13, 1) if not P.is_identity}
    assert set(BREMNER_X) <= xs
    assert IDENTITY in naive_point_search(Curve(0, 0, 0, 0, 1), 1, 1)


def test_naive_search_closed_under_negation(e5077, e234446):
    for E in (e5077, e234446):
        pts = set(naive_point_search(E, 20, 3))
        assert all(E.contains(P) for P in pts)
        assert {E.neg(P) for P in pts} == pts


def test_naive_search_rational_coefficients():
    E = Curve(0, 0, 0, 0, Fraction(1, 64))  # y^2 = x^3 + 1 scaled down by 2
    pts = naive_point_search(E, 2, 1)  # the box lives on the integral model
    assert Point(Fraction(1, 2), Fraction(3, 8)) in pts
    assert all(E.contains(P) for P in pts)
