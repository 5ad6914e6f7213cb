import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ecpatterns import IDENTITY, Curve, Point, naive_point_search
from ecpatterns.errors import NotOnCurve, SingularCurve
from oracles import chord_sum, repeated_sum_order

from conftest import ORBIT_TABLE


def test_example_curves_are_nonsingular(e234446, e5077):
    assert e234446.discriminant != 0
    assert e5077.discriminant == 5077


def test_cusp_is_singular():
    with pytest.raises(SingularCurve):
        Curve(0, 0, 0, 0, 0)


def test_b_invariants_5077(e5077):
    assert (e5077.b2, e5077.b4, e5077.b6) == (0, -14, 25)


@pytest.mark.parametrize("x, y", ORBIT_TABLE)
def test_orbit_table_points(e5077, x, y):
    assert e5077.point(x, y) == Point(Fraction(x), Fraction(y))


def test_not_on_curve_reports_residual(e5077):
    with pytest.raises(NotOnCurve) as info:
        e5077.point(1, 1)
    assert info.value.residual == 2


def test_negation(e5077, congruent):
    assert e5077.neg(e5077.point(0, 2)) == e5077.point(0, -3)
    assert e5077.neg(IDENTITY) == IDENTITY
    assert congruent.neg(congruent.point(0, 0)) == congruent.point(0, 0)


def test_chord_against_line_substitution(e5077):
    P, Q = e5077.point(0, 2), e5077.point(2, 0)
    assert e5077.add(P, Q) == chord_sum(e5077, P, Q) == e5077.point(-1, -4)


def test_neutral_and_inverse(e5077):
    for x, y in ORBIT_TABLE:
        P = e5077.point(x, y)
        assert e5077.add(P, IDENTITY) == P == e5077.add(IDENTITY, P)
        assert e5077.add(P, e5077.neg(P)) == IDENTITY


def test_mul_small_cases(e5077):
    P = e5077.point(0, 2)
    assert e5077.mul(0, P) == IDENTITY
    assert e5077.mul(-1, P) == e5077.neg(P)
    assert e5077.mul(1, P) == P


def test_mul_is_repeated_addition(e5077, e234446):
    for E in (e5077, e234446):
        for P in naive_point_search(E, 5, 1)[1:6]:
            Q = IDENTITY
            for n in range(25):
                assert E.mul(n, P) == Q
                assert E.contains(Q)
                Q = E.add(Q, P)


def test_torsion_x3_plus_1(e_x3_plus_1):
    E = e_x3_plus_1
    T = E.torsion_points()
    expected = [IDENTITY] + [E.point(x, y) for x, y in [(-1, 0), (0, -1), (0, 1), (2, -3), (2, 3)]]
    assert set(T) == set(expected)
    assert repeated_sum_order(E, E.point(2, 3)) == 6


def test_torsion_full_two_torsion(congruent):
    assert set(congruent.torsion_points()) == {IDENTITY, Point(Fraction(0), Fraction(0)),
                                               Point(Fraction(1), Fraction(0)), Point(Fraction(-1), Fraction(0))}


def test_torsion_trivial_for_example_curves(e5077, e234446):
    assert e5077.torsion_points() == [IDENTITY]
    assert e234446.torsion_points() == [IDENTITY]


@pytest.mark.parametrize("ainvs, order", [
    ((0, 0, 0, -2, 0), 2),       # y^2 = x^3 - 2x
    ((0, 0, 0, 4, 0), 4),        # y^2 = x^3 + 4x
    ((0, 0, 0, 0, -432), 3),     # y^2 = x^3 - 432
    ((1, 0, 1, -1, 0), 6),       # conductor 14, general model with a1, a3
    ((0, -1, 1, -10, -20), 5),   # 11.a1
    ((1, 1, 1, -10, -10), 8),    # conductor 15, Z/4 x Z/2
    ((1, 1, 1, -135, -660), 4),  # conductor 15, Z/4
])
def test_torsion_orders(ainvs, order):
    E = Curve(*ainvs)
    T = E.torsion_points()
    assert len(T) == order
    for P in T:
        for Q in T:
            assert E.add(P, Q) in T
        assert E.neg(P) in T


def test_torsion_rational_coefficients():
    # y^2 = x^3 + 1 rescaled by u = 2: coefficients a4 = 0, a6 = 1/64
    E = Curve(0, 0, 0, 0, Fraction(1, 64))
    assert len(E.torsion_points()) == 6


def _random_points(E, count, rng):
    base = naive_point_search(E, 6, 1)[1:]
    pts = []
    while len(pts) < count:
        P = IDENTITY
        for G in rng.sample(base, 2):
            P = E.add(P, E.mul(rng.randint(-3, 3), G))
        pts.append(P)
    return pts


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_group_law_axioms(seed):
    rng = random.Random(seed)
    E = Curve(0, 0, 1, -7, 6)
    P, Q, R = _random_points(E, 3, rng)
    assert E.add(E.add(P, Q), R) == E.add(P, E.add(Q, R))
    assert E.add(P, Q) == E.add(Q, P)
    assert E.add(P, E.neg(P)) == IDENTITY
    for S in (E.add(P, Q), E.neg(R), E.mul(3, P)):
        assert E.contains(S)
