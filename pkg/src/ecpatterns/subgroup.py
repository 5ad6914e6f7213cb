"""Finite pieces of a finite-rank subgroup and their images under g."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .algebra import INF, sorted_p1
from .curve import IDENTITY, Curve, Point, sorted_points
from .errors import GeneratorNotOnCurve
from .maps import CoordinateMap, coordmap_apply


@dataclass(frozen=True)
class GammaSpec:
    """Generators of a subgroup, whether to adjoin torsion, and its rank if known."""

    generators: tuple = ()
    include_torsion: bool = False
    declared_rank: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if self.declared_rank is not None and self.declared_rank < 0:
            raise ValueError("rank must be nonnegative")

    @property
    def rank(self) -> int:
        """The declared rank, falling back to the number of generators."""
        return len(self.generators) if self.declared_rank is None else self.declared_rank

    @property
    def rank_is_proxy(self) -> bool:
        return self.declared_rank is None


@dataclass(frozen=True)
class ValueSet:
    """A finite set of P^1(Q) values together with where it came from."""

    values: frozenset
    provenance: str = "explicit list"

    def __post_init__(self):
        object.__setattr__(self, "values", frozenset(self.values))

    @classmethod
    def of(cls, values: Iterable, provenance: str = "explicit list") -> "ValueSet":
        return cls(frozenset(values), provenance)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, v):
        return v in self.values

    def sorted(self) -> list:
        return sorted_p1(self.values)

    def finite(self) -> "ValueSet":
        return ValueSet(frozenset(v for v in self.values if v is not INF), self.provenance)


def enumerate_gamma(curve: Curve, spec: GammaSpec, coeff_bound: int) -> list:
    """All sums n_1 G_1 + ... + n_r G_r + T with |n_i| <= coeff_bound.

    T runs over the torsion subgroup when ``spec.include_torsion`` is set,
    otherwise T is the identity.
    """
    if coeff_bound < 0:
        raise ValueError("coefficient bound must be nonnegative")
    for G in spec.generators:
        if not curve.contains(G):
            raise GeneratorNotOnCurve(G.x, G.y, curve.residual(G.x, G.y))
    combos = {IDENTITY}
    for G in spec.generators:
        multiples = [IDENTITY]
        pos, neg = IDENTITY, IDENTITY
        minus_G = curve.neg(G)
        for _ in range(coeff_bound):
            pos, neg = curve.add(pos, G), curve.add(neg, minus_G)
            multiples += [pos, neg]
        combos = {curve.add(P, M) for P in combos for M in multiples}
    if spec.include_torsion:
        torsion = curve.torsion_points()
        combos = {curve.add(P, T) for P in combos for T in torsion}
    return sorted_points(combos)


def image_set(curve: Curve, g: CoordinateMap, points: Iterable[Point], keep_infinity: bool = False,
              provenance: str = "image of a point set") -> ValueSet:
    values = {coordmap_apply(curve, g, P) for P in points}
    if not keep_infinity:
        values.discard(INF)
    return ValueSet(frozenset(values), provenance)


def intersect_images(curve1: Curve, g1: CoordinateMap, points1, curve2: Curve, g2: CoordinateMap, points2,
                     keep_infinity: bool = False) -> ValueSet:
    left = image_set(curve1, g1, points1, keep_infinity)
    right = image_set(curve2, g2, points2, keep_infinity)
    return ValueSet(left.values & right.values, "intersection of two images")
