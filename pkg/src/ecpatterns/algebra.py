"""Exact scalars, points of the projective line and dense polynomials over Q.

Rationals are plain :class:`fractions.Fraction` values, which are always
stored reduced with a positive denominator, so set membership is structural.
The point at infinity of P^1 is the singleton :data:`INF`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, isqrt, lcm
from typing import Iterable, Sequence, Union

from .errors import SingularMap, ZeroPolynomial

Rational = Fraction


class Infinity:
    """The point at infinity of the projective line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()

P1Value = Union[Fraction, Infinity]


def rat(value) -> Fraction:
    """Coerce ints, strings such as ``"-7/6"`` and Fractions to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot convert {value!r} to a rational")


def p1(value) -> P1Value:
    if value is INF or value == "inf":
        return INF
    return rat(value)


def is_inf(value) -> bool:
    return value is INF


def p1_key(value: P1Value):
    """Total order on P^1(Q): finite values numerically, then infinity."""
    if value is INF:
        return (1, Fraction(0))
    return (0, value)


def sorted_p1(values: Iterable[P1Value]) -> list:
    return sorted(values, key=p1_key)


# -- polynomials -------------------------------------------------------------


class UniPoly:
    """Dense univariate polynomial with rational coefficients, constant first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "UniPoly":
        return cls([0] * degree + [coeff])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UniPoly":
        p = cls([1])
        for r in roots:
            p = p * cls([-rat(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "UniPoly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' if mono else ''}{mono}")
        return "UniPoly(" + " + ".join(reversed(terms)).replace("+ -", "- ") + ")"

    @staticmethod
    def _lift(other) -> "UniPoly":
        return other if isinstance(other, UniPoly) else UniPoly([other])

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = UniPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return UniPoly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        inv_lc = 1 / other.lc
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] * inv_lc
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return UniPoly(quot), UniPoly(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, v):
        return poly_eval(self, v)

    def derivative(self) -> "UniPoly":
        return UniPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        inv = 1 / self.lc
        return UniPoly(c * inv for c in self.coeffs)

    def scale(self, c) -> "UniPoly":
        c = rat(c)
        return UniPoly(x * c for x in self.coeffs)

    def compose(self, other: "UniPoly") -> "UniPoly":
        """self(other(t))."""
        result = UniPoly()
        for c in reversed(self.coeffs):
            result = result * other + c
        return result

    def integer_coeffs(self) -> list:
        """Primitive integer multiple of self (same roots), constant first."""
        if self.is_zero():
            return []
        den = reduce(lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(gcd, ints, 0)
        return [c // g for c in ints]


def poly_eval(p: UniPoly, v) -> Fraction:
    """Horner evaluation at a rational point."""
    v = rat(v)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * v + c
    return acc


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd (zero only if both inputs are zero)."""
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def squarefree_part(p: UniPoly) -> UniPoly:
    """p / gcd(p, p'), made monic: same roots, each with multiplicity one."""
    if p.is_zero():
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    if p.degree == 0:
        return UniPoly([1])
    return (p // poly_gcd(p, p.derivative())).monic()


# -- integer helpers ---------------------------------------------------------


def divisors(n: int) -> list:
    """Positive divisors of a nonzero integer."""
    n = abs(n)
    if n == 0:
        raise ValueError("0 has infinitely many divisors")
    if n < 10**6:
        small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
        return sorted(set(small + [n // d for d in small]))
    from sympy import factorint

    divs = [1]
    for prime, mult in factorint(n).items():
        divs = [d * prime**e for d in divs for e in range(mult + 1)]
    return sorted(divs)


def _integer_poly_value(ints: Sequence[int], u: int, v: int) -> int:
    """v^n * p(u/v) for an integer polynomial p of degree n (constant first)."""
    n = len(ints) - 1
    acc = 0
    for k in range(n, -1, -1):
        acc = acc * u + ints[k] * v ** (n - k)
    return acc


def _roots_by_divisors(ints: Sequence[int]) -> set:
    # ints has nonzero constant and leading terms
    lead = ints[-1]
    # Cauchy bound, scaled: |u/v| <= 1 + max|c_k / c_n|
    bound = 1 + max(abs(c) for c in ints[:-1]) // abs(lead) + 1
    at_one, at_minus_one = sum(ints), sum(c if k % 2 == 0 else -c for k, c in enumerate(ints))
    roots = set()
    for v in divisors(lead):
        for u in divisors(ints[0]):
            if u > bound * v:
                break
            if gcd(u, v) != 1:
                continue
            for s in (u, -u):
                # a root u/v in lowest terms forces (v - u) | p(1) and (v + u) | p(-1)
                if at_one and v != s and at_one % (v - s):
                    continue
                if at_minus_one and v != -s and at_minus_one % (v + s):
                    continue
                if _integer_poly_value(ints, s, v) == 0:
                    roots.add(Fraction(s, v))
    return roots


def rational_roots(p: UniPoly) -> set:
    """All rational roots of p, without multiplicity.

    Uses the rational root theorem on the primitive integer multiple of p,
    after stripping powers of t.  Linear and quadratic remainders are solved
    in closed form.
    """
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has every rational as a root")
    ints = p.integer_coeffs()
    roots = set()
    low = next(k for k, c in enumerate(ints) if c)
    if low:
        roots.add(Fraction(0))
        ints = ints[low:]
    if len(ints) == 2:
        roots.add(Fraction(-ints[0], ints[1]))
    elif len(ints) == 3:
        c, b, a = ints
        disc = b * b - 4 * a * c
        if disc >= 0 and isqrt(disc) ** 2 == disc:
            s = isqrt(disc)
            roots.update({Fraction(-b + s, 2 * a), Fraction(-b - s, 2 * a)})
    elif len(ints) > 3:
        roots |= _roots_by_divisors(ints)
    return roots


# -- elimination -------------------------------------------------------------


def determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by Gaussian elimination over Q."""
    m = [list(map(rat, r)) for r in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        pv = m[col][col]
        det *= pv
        for r in range(col + 1, n):
            f = m[r][col] / pv
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


def sylvester_matrix(p: Sequence, q: Sequence, deg_p: int, deg_q: int) -> list:
    """Sylvester matrix for formal degrees (coefficient lists constant first)."""
    size = deg_p + deg_q
    pc = [rat(c) for c in p] + [Fraction(0)] * (deg_p + 1 - len(p))
    qc = [rat(c) for c in q] + [Fraction(0)] * (deg_q + 1 - len(q))
    rows = []
    for i in range(deg_q):
        row = [Fraction(0)] * size
        for k in range(deg_p + 1):
            row[i + k] = pc[deg_p - k]
        rows.append(row)
    for i in range(deg_p):
        row = [Fraction(0)] * size
        for k in range(deg_q + 1):
            row[i + k] = qc[deg_q - k]
        rows.append(row)
    return rows


def resultant(p: UniPoly, q: UniPoly, deg_p: int | None = None, deg_q: int | None = None) -> Fraction:
    """Resultant of p and q taken at the given formal degrees."""
    deg_p = p.degree if deg_p is None else deg_p
    deg_q = q.degree if deg_q is None else deg_q
    if deg_p < 0 or deg_q < 0:
        return Fraction(0)
    if deg_p + deg_q == 0:
        return Fraction(1)
    return determinant(sylvester_matrix(p.coeffs, q.coeffs, deg_p, deg_q))


def interpolate(points: Sequence[tuple]) -> UniPoly:
    """The polynomial of degree < len(points) through the (x, y) pairs."""
    xs = [rat(x) for x, _ in points]
    coef = [rat(y) for _, y in points]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    result = UniPoly()
    for i in range(n - 1, -1, -1):
        result = result * UniPoly([-xs[i], 1]) + coef[i]
    return result


def eliminate(build, degree_bound: int) -> UniPoly:
    """Recover a polynomial in v of degree <= degree_bound from samples.

    ``build(v)`` must return the exact value of the polynomial at v.
    """
    samples = [(Fraction(k), build(Fraction(k))) for k in range(degree_bound + 1)]
    return interpolate(samples)


# -- fractional-linear substitution -----------------------------------------


def substitute_mobius(p: UniPoly, m) -> tuple:
    """Transport the root set of p through a Möbius map m.

    Returns ``(q, lost_to_infinity, image_of_infinity)`` where the roots of q
    are exactly the finite images m(r) of the roots r of p,
    ``lost_to_infinity`` says whether some root of p is sent to infinity and
    ``image_of_infinity`` is m(INF), which callers adjoin when infinity was a
    member of the transported set.
    """
    if p.is_zero():
        raise ZeroPolynomial("cannot transport the roots of the zero polynomial")
    a, b, c, d = m.a, m.b, m.c, m.d
    if a * d - b * c == 0:
        raise SingularMap(f"determinant of {m} is zero")
    # inverse map t -> (d t - b) / (-c t + a)
    top, bottom = UniPoly([-b, d]), UniPoly([a, -c])
    n = p.degree
    q = UniPoly()
    for k, coeff in enumerate(p.coeffs):
        if coeff:
            q = q + top**k * bottom ** (n - k) * coeff
    lost = c != 0 and poly_eval(p, Fraction(-d) / c) == 0
    image_inf = INF if c == 0 else Fraction(a) / c
    return q, lost, image_inf
