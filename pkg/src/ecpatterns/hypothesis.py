"""Branch values of coordinate maps and the hypothesis of the pattern principle.

A set of branch values in P^1 is stored as a monic squarefree polynomial
whose complex roots are the finite branch values, plus a flag for infinity.
Two such sets agree exactly when the polynomials and flags agree, so every
comparison is exact without algebraic-number arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import INF, UniPoly, eliminate, poly_gcd, resultant, squarefree_part, substitute_mobius
from .curve import Curve
from .maps import CoordinateMap, MapLike, MobiusMap, RationalFunction, mobius_torsion_order


@dataclass(frozen=True)
class BranchSet:
    locus: UniPoly
    contains_infinity: bool

    def __post_init__(self):
        object.__setattr__(self, "locus", squarefree_part(self.locus))

    @property
    def count(self) -> int:
        return self.locus.degree + int(self.contains_infinity)

    def union(self, other: "BranchSet") -> "BranchSet":
        return BranchSet(self.locus * other.locus, self.contains_infinity or other.contains_infinity)

    def with_value(self, v) -> "BranchSet":
        if v is INF:
            return BranchSet(self.locus, True)
        return BranchSet(self.locus * UniPoly([-v, 1]), self.contains_infinity)

    def __str__(self):
        return f"{self.locus!r}{' + inf' if self.contains_infinity else ''}"


def two_division_polynomial(curve: Curve) -> UniPoly:
    """4t^3 + b2 t^2 + 2 b4 t + b6: vanishes at x(P) for the points of order two."""
    return UniPoly([curve.b6, 2 * curve.b4, curve.b2, 4])


def branch_set_x(curve: Curve) -> BranchSet:
    """Branch values of the degree-2 map x: the 2-torsion x-values and infinity."""
    return BranchSet(two_division_polynomial(curve), True)


def mobius_image_branch_set(B: BranchSet, m: MobiusMap) -> BranchSet:
    q, lost, image_inf = substitute_mobius(B.locus, m)
    image = BranchSet(q, lost)
    return image.with_value(image_inf) if B.contains_infinity else image


def branch_sets_equal(B1: BranchSet, B2: BranchSet) -> bool:
    return B1.locus == B2.locus and B1.contains_infinity == B2.contains_infinity


def lattes_duplication(curve: Curve) -> RationalFunction:
    """The degree-4 map F with F(x(P)) = x(2P) whenever 2P is not the identity."""
    num = UniPoly([-curve.b8, -2 * curve.b6, -curve.b4, 0, 1])
    return RationalFunction(num, two_division_polynomial(curve))


def _pencil(f: RationalFunction, v: Fraction, n: int) -> list:
    """Coefficients of num(t) - v den(t) up to formal degree n."""
    return [f.num.coeff(k) - v * f.den.coeff(k) for k in range(n + 1)]


def critical_values(f: RationalFunction) -> BranchSet:
    """Branch values of f : P^1 -> P^1.

    The resultant in t of P_v = num - v den and dP_v/dt (formal degrees n and
    n - 1) equals the leading coefficient of P_v times the discriminant of
    P_v as a binary form.  That discriminant has degree 2n - 2 in v; its
    roots are the finite critical values and its degree drop is the
    multiplicity of infinity as a critical value.
    """
    n = f.degree
    if n <= 1:
        return BranchSet(UniPoly([1]), False)

    def res(v):
        p = _pencil(f, v, n)
        dp = [k * p[k] for k in range(1, n + 1)]
        return resultant(UniPoly(p), UniPoly(dp), n, n - 1)

    full = eliminate(res, 2 * n - 1)
    lead = UniPoly([f.num.coeff(n), -f.den.coeff(n)])
    disc, rem = divmod(full, lead)
    assert rem.is_zero(), "leading coefficient must divide the resultant"
    return BranchSet(disc, disc.degree < 2 * n - 2)


def ratfunc_image_branch_set(B: BranchSet, f: RationalFunction) -> BranchSet:
    """The set-image f(B) of a branch set under a rational function."""
    n = f.degree
    L = B.locus
    if L.degree > 0:
        # lc(L)^n prod over roots b of L of (num(b) - v den(b))
        norm = eliminate(lambda v: resultant(L, UniPoly(_pencil(f, v, n)), L.degree, n), L.degree)
        image = BranchSet(norm, poly_gcd(L, f.den).degree > 0)
    else:
        image = BranchSet(UniPoly([1]), False)
    if B.contains_infinity:
        image = image.with_value(f(INF))
    return image


def branch_set(curve: Curve, g: CoordinateMap) -> Optional[BranchSet]:
    """Branch values of g = H o x, i.e. H(branch values of x) plus the critical values of H.

    Maps built on the y-coordinate are not handled and give None.
    """
    if g.base != "x":
        return None
    base = branch_set_x(curve)
    if g.post.is_identity():
        return base
    return ratfunc_image_branch_set(base, g.post).union(critical_values(g.post))


class Verdict(enum.Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class HypothesisResult:
    verdict: Verdict
    case: int
    reason: str
    branch_g: Optional[BranchSet] = None
    branch_Fg: Optional[BranchSet] = None


def check_pattern_hypothesis(curve: Curve, g: CoordinateMap, F: MapLike) -> HypothesisResult:
    """Decide whether g and F o g have different sets of branch values.

    1. F Möbius of infinite order: satisfied, since F cannot permute the
       (at least three) branch values of g.
    2. F Möbius of finite order: compare branch(g) with F(branch(g)).
    3. F of degree >= 2 and g built on x: compare branch(g) with
       branch(F o g) = F(branch(g)) plus the critical values of F.
    4. Anything else: unknown.
    """
    if isinstance(F, RationalFunction) and F.degree == 1:
        F = F.as_mobius()
    if isinstance(F, MobiusMap):
        order = mobius_torsion_order(F)
        if order is None:
            return HypothesisResult(Verdict.SATISFIED, 1, "F is a Möbius map of infinite order")
        B = branch_set(curve, g)
        if B is None:
            return HypothesisResult(Verdict.UNKNOWN, 4, "branch values of y-based maps are not computed")
        image = mobius_image_branch_set(B, F)
        if branch_sets_equal(B, image):
            return HypothesisResult(Verdict.VIOLATED, 2, f"F has order {order} and permutes the branch values of g",
                                    B, image)
        return HypothesisResult(Verdict.SATISFIED, 2, f"F has order {order} but moves the branch values of g",
                                B, image)
    if F.degree < 1:
        return HypothesisResult(Verdict.UNKNOWN, 4, "F is constant")
    B = branch_set(curve, g)
    if B is None:
        return HypothesisResult(Verdict.UNKNOWN, 4, "branch values of y-based maps are not computed")
    composite = ratfunc_image_branch_set(B, F).union(critical_values(F))
    if branch_sets_equal(B, composite):
        return HypothesisResult(Verdict.VIOLATED, 3, "g and F o g have the same branch values", B, composite)
    return HypothesisResult(Verdict.SATISFIED, 3, "g and F o g have different branch values", B, composite)
