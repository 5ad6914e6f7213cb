"""Möbius transformations, rational functions of one variable and the
coordinate maps g = H o x or H o y on an elliptic curve."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Optional, Union

from .algebra import INF, P1Value, UniPoly, poly_eval, poly_gcd, rat, rational_roots
from .curve import Curve, Point
from .errors import SingularMap


@dataclass(frozen=True, init=False)
class MobiusMap:
    """t -> (a t + b) / (c t + d), stored in canonical projective form.

    The entries are scaled to coprime integers whose first nonzero entry is
    positive, so two matrices defining the same element of PGL2(Q) compare
    equal.
    """

    a: int
    b: int
    c: int
    d: int

    def __init__(self, a, b, c, d):
        entries = [rat(v) for v in (a, b, c, d)]
        if entries[0] * entries[3] - entries[1] * entries[2] == 0:
            raise SingularMap(f"matrix [[{a}, {b}], [{c}, {d}]] is not invertible")
        den = reduce(lcm, (e.denominator for e in entries), 1)
        ints = [int(e * den) for e in entries]
        g = reduce(gcd, ints)
        ints = [v // g for v in ints]
        if next(v for v in ints if v) < 0:
            ints = [-v for v in ints]
        for name, v in zip("abcd", ints):
            object.__setattr__(self, name, v)

    @classmethod
    def identity(cls) -> "MobiusMap":
        return cls(1, 0, 0, 1)

    @classmethod
    def translation(cls, shift) -> "MobiusMap":
        return cls(1, rat(shift), 0, 1)

    @classmethod
    def scaling(cls, factor) -> "MobiusMap":
        return cls(rat(factor), 0, 0, 1)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def is_identity(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    def __call__(self, v: P1Value) -> P1Value:
        return mobius_apply(self, v)

    def __matmul__(self, other: "MobiusMap") -> "MobiusMap":
        return mobius_compose(self, other)

    def inverse(self) -> "MobiusMap":
        return MobiusMap(self.d, -self.b, -self.c, self.a)

    def power(self, n: int) -> "MobiusMap":
        result = MobiusMap.identity()
        for _ in range(n):
            result = result @ self
        return result

    def torsion_order(self) -> Optional[int]:
        return mobius_torsion_order(self)

    def to_ratfunc(self) -> "RationalFunction":
        return RationalFunction(UniPoly([self.b, self.a]), UniPoly([self.d, self.c]))

    def __repr__(self):
        return f"MobiusMap([[{self.a}, {self.b}], [{self.c}, {self.d}]])"


def mobius_apply(m: MobiusMap, v: P1Value) -> P1Value:
    if v is INF:
        return INF if m.c == 0 else Fraction(m.a, m.c)
    den = m.c * v + m.d
    if den == 0:
        return INF
    return (m.a * v + m.b) / den


def mobius_compose(m: MobiusMap, n: MobiusMap) -> MobiusMap:
    """The map t -> m(n(t))."""
    return MobiusMap(
        m.a * n.a + m.b * n.c,
        m.a * n.b + m.b * n.d,
        m.c * n.a + m.d * n.c,
        m.c * n.b + m.d * n.d,
    )


# trace^2/det of a non-scalar torsion element of PGL2(Q), by order
_TORSION_BY_INVARIANT = {Fraction(0): 2, Fraction(1): 3, Fraction(2): 4, Fraction(3): 6}


def mobius_torsion_order(m: MobiusMap) -> Optional[int]:
    """Order of m in PGL2(Q), or None when m has infinite order.

    An element of finite order n has eigenvalue ratio a primitive n-th root
    of unity z, and trace^2/det = 2 + z + 1/z must be rational, which only
    happens for n in {1, 2, 3, 4, 6}.
    """
    if m.is_identity():
        return 1
    return _TORSION_BY_INVARIANT.get(Fraction(m.trace**2, m.det))


class RationalFunction:
    """H(t) = num(t) / den(t) in lowest terms, with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, UniPoly) else UniPoly(num)
        den = UniPoly([1]) if den is None else (den if isinstance(den, UniPoly) else UniPoly(den))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        g = poly_gcd(num, den) if not num.is_zero() else den.monic()
        if g.degree > 0:
            num, den = num // g, den // g
        lc = den.lc
        self.num = num.scale(1 / lc)
        self.den = den.scale(1 / lc)

    @classmethod
    def identity(cls) -> "RationalFunction":
        return cls(UniPoly([0, 1]))

    @classmethod
    def polynomial(cls, coeffs) -> "RationalFunction":
        return cls(UniPoly(coeffs))

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    def is_identity(self) -> bool:
        return self.num == UniPoly([0, 1]) and self.den == UniPoly([1])

    def as_mobius(self) -> Optional[MobiusMap]:
        if self.degree != 1:
            return None
        return MobiusMap(self.num.coeff(1), self.num.coeff(0), self.den.coeff(1), self.den.coeff(0))

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num!r} / {self.den!r})"

    def __call__(self, v: P1Value) -> P1Value:
        return ratfunc_apply(self, v)

    def compose(self, inner: "RationalFunction") -> "RationalFunction":
        """self(inner(t))."""
        n = self.degree
        p, q = inner.num, inner.den
        top, bottom = UniPoly(), UniPoly()
        for k in range(n + 1):
            term = p**k * q ** (n - k)
            top = top + term * self.num.coeff(k)
            bottom = bottom + term * self.den.coeff(k)
        return RationalFunction(top, bottom)


def ratfunc_apply(h: RationalFunction, v: P1Value) -> P1Value:
    if v is INF:
        if h.num.degree > h.den.degree:
            return INF
        if h.num.degree == h.den.degree:
            return h.num.lc / h.den.lc
        return Fraction(0)
    den = poly_eval(h.den, v)
    if den == 0:
        return INF
    return poly_eval(h.num, v) / den


def ratfunc_preimages(h: RationalFunction, v: P1Value) -> set:
    """All t in P^1(Q) with h(t) = v."""
    if v is INF:
        found = set(rational_roots(h.den)) if h.den.degree > 0 else set()
        if h.num.degree > h.den.degree:
            found.add(INF)
        return found
    v = rat(v)
    eq = h.num - h.den.scale(v)
    found = set() if eq.is_zero() or eq.degree == 0 else set(rational_roots(eq))
    if h.num.degree == h.den.degree and h.num.lc / h.den.lc == v:
        found.add(INF)
    elif h.num.degree < h.den.degree and v == 0:
        found.add(INF)
    return found


MapLike = Union[MobiusMap, RationalFunction]


def as_ratfunc(f: MapLike) -> RationalFunction:
    return f.to_ratfunc() if isinstance(f, MobiusMap) else f


def apply_map(f: MapLike, v: P1Value) -> P1Value:
    return mobius_apply(f, v) if isinstance(f, MobiusMap) else ratfunc_apply(f, v)


@dataclass(frozen=True)
class CoordinateMap:
    """g = post o base, where base is the x- or y-coordinate of the curve."""

    base: str = "x"
    post: RationalFunction = None

    def __post_init__(self):
        if self.base not in ("x", "y"):
            raise ValueError(f"base must be 'x' or 'y', not {self.base!r}")
        if self.post is None:
            object.__setattr__(self, "post", RationalFunction.identity())
        elif isinstance(self.post, MobiusMap):
            object.__setattr__(self, "post", self.post.to_ratfunc())
        if self.post.degree < 1:
            raise ValueError("the post-composed function must be non-constant")

    @classmethod
    def x(cls) -> "CoordinateMap":
        return cls("x")

    @classmethod
    def y(cls) -> "CoordinateMap":
        return cls("y")

    @property
    def degree(self) -> int:
        return self.post.degree * (2 if self.base == "x" else 3)

    def then(self, f: MapLike) -> "CoordinateMap":
        """The coordinate map f o self."""
        return CoordinateMap(self.base, as_ratfunc(f).compose(self.post))

    def __call__(self, curve: Curve, P: Point) -> P1Value:
        return coordmap_apply(curve, self, P)


def coordmap_apply(curve: Curve, g: CoordinateMap, P: Point) -> P1Value:
    if P.is_identity:
        t = INF
    else:
        t = P.x if g.base == "x" else P.y
    return ratfunc_apply(g.post, t)
