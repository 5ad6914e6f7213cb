"""Deciding whether a value lies in g(E(Q)) by solving the fiber exactly."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Optional

from .algebra import INF, P1Value, UniPoly, p1_key, rat, rational_roots
from .curve import IDENTITY, Curve, Point, sorted_points
from .maps import CoordinateMap, ratfunc_preimages


def is_square(r) -> Optional[Fraction]:
    """The nonnegative square root of r if r is the square of a rational, else None."""
    r = rat(r)
    if r < 0:
        return None
    p, q = r.numerator, r.denominator
    sp, sq = isqrt(p), isqrt(q)
    if sp * sp == p and sq * sq == q:
        return Fraction(sp, sq)
    return None


def y_candidates(curve: Curve, x0) -> set:
    """Rational y with (x0, y) on the curve."""
    x0 = rat(x0)
    lin = curve.a1 * x0 + curve.a3
    disc = lin * lin + 4 * curve.rhs(x0)
    root = is_square(disc)
    if root is None:
        return set()
    return {(-lin + root) / 2, (-lin - root) / 2}


def x_candidates(curve: Curve, y0) -> set:
    """Rational x with (x, y0) on the curve (roots of a monic cubic)."""
    y0 = rat(y0)
    cubic = UniPoly([
        curve.a6 - y0 * y0 - curve.a3 * y0,
        curve.a4 - curve.a1 * y0,
        curve.a2,
        1,
    ])
    return rational_roots(cubic)


def g_membership(curve: Curve, g: CoordinateMap, v: P1Value) -> Optional[Point]:
    """A point P in E(Q) with g(P) = v, or None if there is none."""
    for t in sorted(ratfunc_preimages(g.post, v), key=p1_key):
        if t is INF:
            return IDENTITY
        if g.base == "x":
            ys = y_candidates(curve, t)
            if ys:
                return Point(t, min(ys))
        else:
            xs = x_candidates(curve, t)
            if xs:
                return Point(min(xs), t)
    return None


def naive_point_search(curve: Curve, num_bound: int, den_bound: int) -> list:
    """All points with x = m/e^2, gcd(m, e) = 1, e <= den_bound, |m| <= num_bound e^2.

    For curves with non-integral coefficients the box is searched on the
    integral model (x, y) -> (u^2 x, u^3 y) and mapped back.  The identity is
    always included.  Output is sorted.
    """
    if num_bound < 1 or den_bound < 1:
        raise ValueError("search bounds must be at least 1")
    u = 1
    while any((c * u**i).denominator != 1 for c, i in zip(curve.ainvs, (1, 2, 3, 4, 6))):
        u += 1
    model = curve if u == 1 else Curve(*(c * u**i for c, i in zip(curve.ainvs, (1, 2, 3, 4, 6))))
    found = {IDENTITY}
    for e in range(1, den_bound + 1):
        e2 = e * e
        for m in range(-num_bound * e2, num_bound * e2 + 1):
            if gcd(m, e) != 1:
                continue
            x = Fraction(m, e2)
            for y in y_candidates(model, x):
                found.add(Point(x / u**2, y / u**3))
    return sorted_points(found)
