"""Elliptic curves over Q in general Weierstrass form and their group law."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import isqrt
from typing import Optional

from .algebra import divisors, rat
from .errors import NotOnCurve, SingularCurve


@dataclass(frozen=True)
class Point:
    """A rational point; ``x is None`` encodes the identity (point at infinity)."""

    x: Optional[Fraction] = None
    y: Optional[Fraction] = None

    @property
    def is_identity(self) -> bool:
        return self.x is None

    def sort_key(self):
        if self.x is None:
            return (0, Fraction(0), Fraction(0))
        return (1, self.x, self.y)

    def __repr__(self):
        return "Identity" if self.x is None else f"({self.x}, {self.y})"


IDENTITY = Point()


def sorted_points(points) -> list:
    return sorted(points, key=Point.sort_key)


@dataclass(frozen=True)
class Curve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q."""

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, rat(getattr(self, name)))
        if self.discriminant == 0:
            raise SingularCurve(f"discriminant of {self.ainvs} vanishes")

    @classmethod
    def from_ainvs(cls, ainvs, label=None) -> "Curve":
        if len(ainvs) != 5:
            raise ValueError("expected five Weierstrass coefficients [a1, a2, a3, a4, a6]")
        return cls(*ainvs, label=label)

    @property
    def ainvs(self) -> tuple:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @cached_property
    def b2(self):
        return self.a1**2 + 4 * self.a2

    @cached_property
    def b4(self):
        return 2 * self.a4 + self.a1 * self.a3

    @cached_property
    def b6(self):
        return self.a3**2 + 4 * self.a6

    @cached_property
    def b8(self):
        a1, a2, a3, a4, a6 = self.ainvs
        return a1**2 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3**2 - a4**2

    @cached_property
    def c4(self):
        return self.b2**2 - 24 * self.b4

    @cached_property
    def c6(self):
        return -self.b2**3 + 36 * self.b2 * self.b4 - 216 * self.b6

    @cached_property
    def discriminant(self):
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def __str__(self):
        a1, a2, a3, a4, a6 = self.ainvs
        lhs = "y^2" + (f" + ({a1})xy" if a1 else "") + (f" + ({a3})y" if a3 else "")
        rhs = "x^3" + (f" + ({a2})x^2" if a2 else "") + (f" + ({a4})x" if a4 else "")
        rhs += f" + ({a6})" if a6 else ""
        return f"{lhs} = {rhs}"

    # -- points --------------------------------------------------------------

    def residual(self, x, y) -> Fraction:
        a1, a2, a3, a4, a6 = self.ainvs
        return y * y + a1 * x * y + a3 * y - (x**3 + a2 * x * x + a4 * x + a6)

    def contains(self, P: Point) -> bool:
        return P.is_identity or self.residual(P.x, P.y) == 0

    def point(self, x, y) -> Point:
        x, y = rat(x), rat(y)
        r = self.residual(x, y)
        if r != 0:
            raise NotOnCurve(x, y, r)
        return Point(x, y)

    def rhs(self, x) -> Fraction:
        return x**3 + self.a2 * x * x + self.a4 * x + self.a6

    def neg(self, P: Point) -> Point:
        if P.is_identity:
            return P
        return Point(P.x, -P.y - self.a1 * P.x - self.a3)

    def add(self, P: Point, Q: Point) -> Point:
        if P.is_identity:
            return Q
        if Q.is_identity:
            return P
        a1, a2, a3, a4, _ = self.ainvs
        x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
        if x1 == x2:
            if y1 + y2 + a1 * x2 + a3 == 0:
                return IDENTITY
            lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / (2 * y1 + a1 * x1 + a3)
        else:
            lam = (y2 - y1) / (x2 - x1)
        nu = y1 - lam * x1
        x3 = lam * lam + a1 * lam - a2 - x1 - x2
        y3 = -(lam + a1) * x3 - nu - a3
        return Point(x3, y3)

    def mul(self, n: int, P: Point) -> Point:
        if n < 0:
            return self.mul(-n, self.neg(P))
        result, addend = IDENTITY, P
        while n:
            if n & 1:
                result = self.add(result, addend)
            addend = self.add(addend, addend)
            n >>= 1
        return result

    def order(self, P: Point, limit: int = 12) -> Optional[int]:
        """Order of P if it is at most ``limit``, otherwise None."""
        Q = P
        for n in range(1, limit + 1):
            if Q.is_identity:
                return n
            Q = self.add(Q, P)
        return None

    # -- torsion -------------------------------------------------------------

    def _short_integral_model(self):
        """(A, B, u) with Y^2 = X^3 + A X + B integral, X = u^2 (36x + 3 b2)."""
        A, B = -27 * self.c4, -54 * self.c6
        u = 1
        while (A * u**4).denominator != 1 or (B * u**6).denominator != 1:
            u += 1
        return int(A * u**4), int(B * u**6), u

    def torsion_points(self) -> list:
        """All rational torsion points, sorted.

        Candidates come from the Nagell-Lutz theorem on an integral short
        model; each is kept only if one of its first 12 multiples is the
        identity (Mazur's bound).
        """
        A, B, u = self._short_integral_model()
        D = 4 * A**3 + 27 * B**2
        candidates = set()
        for X in _integer_roots_depressed_cubic(A, B):
            candidates.add((X, 0))
        for d in divisors(D):
            Y = isqrt(d)
            if Y * Y != d:
                continue
            for X in _integer_roots_depressed_cubic(A, B - d):
                candidates.update({(X, Y), (X, -Y)})
        found = {IDENTITY}
        for X, Y in candidates:
            X, Y = Fraction(X, u**2), Fraction(Y, u**3)
            x = (X - 3 * self.b2) / 36
            y = (Y / 108 - self.a1 * x - self.a3) / 2
            P = Point(x, y)
            if self.contains(P) and self.order(P) is not None:
                found.add(P)
        return sorted_points(found)


def _integer_roots_depressed_cubic(A: int, C: int) -> set:
    """Integer roots of X^3 + A X + C, by bisection on monotone pieces."""

    def f(X):
        return X**3 + A * X + C

    bound = 1 + max(abs(A), abs(C))
    if A >= 0:
        pieces = [(-bound, bound)]
    else:
        r = isqrt(-A // 3) + 1
        pieces = [(-bound, -r), (1 - r, r - 1), (r, bound)]
    roots = set()
    for lo, hi in pieces:
        if lo > hi:
            continue
        increasing = f(hi) >= f(lo)
        a, b = lo, hi
        while a < b:
            mid = (a + b) // 2
            value = f(mid)
            if (value < 0) if increasing else (value > 0):
                a = mid + 1
            else:
                b = mid
        if f(a) == 0:
            roots.add(a)
    return roots
