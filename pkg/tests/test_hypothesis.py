import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ecpatterns import Curve
from ecpatterns.algebra import INF, UniPoly
from ecpatterns.hypothesis import (BranchSet, Verdict, branch_set, branch_set_x, branch_sets_equal,
                                   check_pattern_hypothesis, critical_values, lattes_duplication,
                                   mobius_image_branch_set, ratfunc_image_branch_set)
from ecpatterns.maps import CoordinateMap, MobiusMap, RationalFunction
from ecpatterns.membership import naive_point_search
from oracles import wronskian_critical_values

from conftest import ORBIT_MAP

X = CoordinateMap.x()
T3_MINUS_T = UniPoly([0, -1, 0, 1])
CURVES = [(0, 0, 0, -1, 0), (0, 0, 0, 0, 1), (0, 0, 1, -7, 6), (1, -1, 0, -79, 289), (0, 0, 1, -1, 0),
          (0, 0, 0, 0, -2)]


def test_branch_set_x_examples(congruent, e_x3_plus_1, e5077):
    assert branch_set_x(congruent) == BranchSet(T3_MINUS_T, True)
    assert branch_set_x(e_x3_plus_1) == BranchSet(UniPoly([1, 0, 0, 1]), True)
    assert branch_set_x(e5077).locus == UniPoly([Fraction(25, 4), -7, 0, 1])


@pytest.mark.parametrize("ainvs", CURVES)
def test_branch_count_at_least_three(ainvs):
    assert branch_set_x(Curve(*ainvs)).count >= 3


def test_mobius_image_examples(congruent):
    B = branch_set_x(congruent)
    moved = mobius_image_branch_set(B, MobiusMap.translation(5))
    assert moved == BranchSet(UniPoly.from_roots([4, 5, 6]), True)
    assert not branch_sets_equal(B, moved)
    assert branch_sets_equal(B, mobius_image_branch_set(B, MobiusMap(0, 1, 1, 0)))
    zero_inf = BranchSet(UniPoly([0, 1]), True)
    assert mobius_image_branch_set(zero_inf, MobiusMap.identity()) == zero_inf


entries = st.integers(-4, 4)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(CURVES), st.tuples(entries, entries, entries, entries).filter(
    lambda e: e[0] * e[3] != e[1] * e[2]))
def test_mobius_image_inverse_roundtrip(ainvs, e):
    m = MobiusMap(*e)
    B = branch_set_x(Curve(*ainvs))
    assert mobius_image_branch_set(mobius_image_branch_set(B, m), m.inverse()) == B


def test_lattes_congruent(congruent):
    F = lattes_duplication(congruent)
    assert F == RationalFunction(UniPoly([1, 0, 2, 0, 1]), UniPoly([0, -4, 0, 4]))
    for e in (-1, 0, 1):
        assert F(e) is INF


def test_lattes_identity_at_table_point(e5077):
    P = e5077.point(0, 2)
    assert lattes_duplication(e5077)(P.x) == e5077.mul(2, P).x


@pytest.mark.parametrize("ainvs", CURVES)
def test_lattes_identity_many_points(ainvs):
    E = Curve(*ainvs)
    F = lattes_duplication(E)
    for P in naive_point_search(E, 10, 2)[1:]:
        Q = E.mul(2, P)
        if not Q.is_identity:
            assert F(P.x) == Q.x


def test_critical_values_of_orbit_map():
    # a quadratic polynomial has one finite critical value (the vertex) plus infinity
    f = RationalFunction.polynomial(ORBIT_MAP)
    B = critical_values(f)
    vertex = f(Fraction(-7, 2))
    assert B == BranchSet(UniPoly([-vertex, 1]), True)


def test_critical_values_of_square():
    assert critical_values(RationalFunction.polynomial([0, 0, 1])) == BranchSet(UniPoly([0, 1]), True)
    assert critical_values(RationalFunction.identity()) == BranchSet(UniPoly([1]), False)


def _random_ratfunc(rng, deg):
    while True:
        num = UniPoly([rng.randint(-4, 4) for _ in range(deg + 1)])
        den = UniPoly([rng.randint(-4, 4) for _ in range(rng.randint(1, deg + 1))])
        if den.is_zero() or num.is_zero():
            continue
        f = RationalFunction(num, den)
        if f.degree >= 2:
            return f


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 4))
def test_critical_values_match_wronskian(seed, deg):
    f = _random_ratfunc(random.Random(seed), deg)
    B = critical_values(f)
    locus, inf = wronskian_critical_values(f)
    assert (B.locus, B.contains_infinity) == (locus, inf)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_image_branch_set_pointwise(seed):
    rng = random.Random(seed)
    roots = {Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(3)}
    B = BranchSet(UniPoly.from_roots(roots), rng.random() < 0.5)
    f = _random_ratfunc(rng, rng.randint(2, 3))
    expected = BranchSet(UniPoly([1]), False)
    for r in roots | ({INF} if B.contains_infinity else set()):
        expected = expected.with_value(f(r))
    assert ratfunc_image_branch_set(B, f) == expected


def test_branch_set_composite_is_exact(congruent):
    # branch(H o x) for H = t^2: H maps {-1, 0, 1, inf} to {1, 0, inf}; critical values {0, inf}
    g = X.then(RationalFunction.polynomial([0, 0, 1]))
    assert branch_set(congruent, g) == BranchSet(UniPoly.from_roots([0, 1]), True)
    assert branch_set(congruent, CoordinateMap.y()) is None


def test_ladder_examples(congruent, e5077):
    r = check_pattern_hypothesis(e5077, X, MobiusMap.translation(1))
    assert r.verdict is Verdict.SATISFIED and r.case == 1
    r = check_pattern_hypothesis(congruent, X, lattes_duplication(congruent))
    assert r.verdict is Verdict.VIOLATED and r.case == 3
    assert r.branch_g == r.branch_Fg == BranchSet(T3_MINUS_T, True)
    r = check_pattern_hypothesis(congruent, X, MobiusMap(0, 1, 1, 0))
    assert r.verdict is Verdict.VIOLATED and r.case == 2
    r = check_pattern_hypothesis(e5077, CoordinateMap.y(), RationalFunction.polynomial(ORBIT_MAP))
    assert r.verdict is Verdict.UNKNOWN and r.case == 4


def test_orbit_map_satisfies_hypothesis(e5077):
    r = check_pattern_hypothesis(e5077, X, RationalFunction.polynomial(ORBIT_MAP))
    assert r.verdict is Verdict.SATISFIED and r.case == 3


def test_torsion_mobius_that_moves_branch_values(e5077):
    r = check_pattern_hypothesis(e5077, X, MobiusMap.scaling(-1))
    assert r.verdict is Verdict.SATISFIED and r.case == 2


@pytest.mark.parametrize("ainvs", CURVES)
def test_flagship_specializations(ainvs):
    E = Curve(*ainvs)
    for a in (1, -2, Fraction(3, 7)):
        assert check_pattern_hypothesis(E, X, MobiusMap.translation(a)).verdict is Verdict.SATISFIED
    for q in (2, -3, Fraction(1, 5)):
        assert check_pattern_hypothesis(E, X, MobiusMap.scaling(q)).verdict is Verdict.SATISFIED
