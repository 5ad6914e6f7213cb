"""Pattern detectors over finite value sets.

Every detector returns a :class:`PatternReport` whose witnesses can be
replayed against the declared recurrence or containment.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .algebra import INF, p1_key, rat
from .errors import BadRatio, EmptySet, ZeroShift
from .maps import MapLike, MobiusMap, RationalFunction, apply_map
from .subgroup import ValueSet


class PatternKind(enum.Enum):
    AP = "AP"
    GP = "GP"
    ORBIT = "Orbit"
    ADDITIVE_SHIFT = "AdditiveShift"
    MULTIPLICATIVE_SHIFT = "MultiplicativeShift"
    INTERSECTION = "Intersection"


@dataclass(frozen=True)
class PatternReport:
    kind: PatternKind
    length: int
    witnesses: tuple
    parameter: Union[Fraction, MobiusMap, RationalFunction, None] = None
    implied_constant: Optional[float] = None

    def with_rank(self, rank: Optional[int]) -> "PatternReport":
        if rank is None or self.length < 1:
            return self
        return PatternReport(self.kind, self.length, self.witnesses, self.parameter,
                             implied_constant(self.length, rank))

    def replay(self, values: Optional[Iterable] = None) -> bool:
        """Check the witnesses against the recurrence (and against ``values``)."""
        w = self.witnesses
        if len(w) != self.length or len(set(w)) != len(w):
            return False
        pool = None if values is None else set(values)
        if pool is not None and self.kind is not PatternKind.INTERSECTION and not set(w) <= pool:
            return False
        p = self.parameter
        if self.kind is PatternKind.AP:
            return p is None and len(w) <= 1 or p != 0 and all(b - a == p for a, b in zip(w, w[1:]))
        if self.kind is PatternKind.GP:
            if p is None:
                return len(w) <= 1 and 0 not in w
            return p not in (0, 1, -1) and 0 not in w and all(b == a * p for a, b in zip(w, w[1:]))
        if self.kind is PatternKind.ORBIT:
            return all(apply_map(p, a) == b for a, b in zip(w, w[1:]))
        if self.kind is PatternKind.ADDITIVE_SHIFT:
            return p != 0 and (pool is None or all(v + p in pool for v in w))
        if self.kind is PatternKind.MULTIPLICATIVE_SHIFT:
            return p not in (0, 1, -1) and (pool is None or all(v * p in pool for v in w))
        return pool is None or set(w) <= pool


def implied_constant(n: int, rank: int) -> float:
    """n^(1/(1+rank)) to six decimals: the least constant compatible with a pattern of length n."""
    if n < 1 or rank < 0:
        raise ValueError("need n >= 1 and rank >= 0")
    return round(n ** (1.0 / (1 + rank)), 6)


def _finite_values(X) -> list:
    values = X.values if isinstance(X, ValueSet) else set(X)
    if any(v is INF for v in values):
        raise ValueError("arithmetic patterns need finite values; drop infinity first")
    return sorted(rat(v) for v in values)


def longest_ap(X) -> PatternReport:
    """Longest non-constant arithmetic progression inside X.

    Dynamic programming over pairs of the sorted values.  The progression is
    reported increasing; ties go to the smaller difference, then the smaller
    first term.
    """
    xs = _finite_values(X)
    n = len(xs)
    if n == 0:
        raise EmptySet("longest_ap of an empty set")
    if n == 1:
        return PatternReport(PatternKind.AP, 1, (xs[0],))
    index = {v: i for i, v in enumerate(xs)}
    run = [[0] * n for _ in range(n)]
    best = None
    for j in range(1, n):
        for i in range(j):
            step = xs[j] - xs[i]
            k = index.get(xs[i] - step)
            length = run[k][i] + 1 if k is not None else 2
            run[i][j] = length
            key = (-length, step, xs[j] - (length - 1) * step)
            if best is None or key < best:
                best = key
    length, step, start = -best[0], best[1], best[2]
    return PatternReport(PatternKind.AP, length, tuple(start + k * step for k in range(length)), step)


def longest_gp(X) -> PatternReport:
    """Longest geometric progression in X without 0 and with ratio not in {0, 1, -1}.

    Reported with |ratio| > 1; ties go to the smaller ratio, then the smaller
    first term.
    """
    ys = sorted((v for v in _finite_values(X) if v != 0), key=lambda v: (abs(v), v))
    n = len(ys)
    if n == 0:
        raise EmptySet("longest_gp needs a nonzero value")
    index = {v: i for i, v in enumerate(ys)}
    run = [[0] * n for _ in range(n)]
    best = (-1, Fraction(0), min(ys))
    for j in range(1, n):
        for i in range(j):
            if abs(ys[i]) == abs(ys[j]):
                continue
            ratio = ys[j] / ys[i]
            k = index.get(ys[i] / ratio)
            length = run[k][i] + 1 if k is not None else 2
            run[i][j] = length
            key = (-length, ratio, ys[j] / ratio ** (length - 1))
            if key < best:
                best = key
    if best[0] == -1:
        return PatternReport(PatternKind.GP, 1, (best[2],))
    length, ratio, start = -best[0], best[1], best[2]
    return PatternReport(PatternKind.GP, length, tuple(start * ratio**k for k in range(length)), ratio)


def longest_orbit(X, F: MapLike) -> PatternReport:
    """Longest segment a, F(a), F(F(a)), ... of distinct elements of X.

    X is read as the vertex set of the functional graph v -> F(v).  A walk
    that closes a cycle inside X counts each cycle vertex once.  Ties go to
    the smallest starting value.
    """
    vertices = X.values if isinstance(X, ValueSet) else frozenset(X)
    if not vertices:
        raise EmptySet("longest_orbit of an empty set")
    succ = {}
    for v in vertices:
        w = apply_map(F, v)
        if w in vertices:
            succ[v] = w

    reach = {}
    for root in sorted(vertices, key=p1_key):
        if root in reach:
            continue
        path, position = [], {}
        v = root
        while v is not None and v not in reach and v not in position:
            position[v] = len(path)
            path.append(v)
            v = succ.get(v)
        if v is None:
            tail_value = 0
            cut = len(path)
        elif v in reach:
            tail_value = reach[v]
            cut = len(path)
        else:
            # closed a cycle: every cycle vertex sees exactly the cycle
            cut = position[v]
            cycle_len = len(path) - cut
            for u in path[cut:]:
                reach[u] = cycle_len
            tail_value = cycle_len
        for u in reversed(path[:cut]):
            tail_value += 1
            reach[u] = tail_value

    start = min(vertices, key=lambda v: (-reach[v], p1_key(v)))
    seq = [start]
    while len(seq) < reach[start]:
        seq.append(succ[seq[-1]])
    return PatternReport(PatternKind.ORBIT, len(seq), tuple(seq), F)


def shift_intersection(X, a) -> ValueSet:
    """The largest S inside X with S + a inside X."""
    a = rat(a)
    if a == 0:
        raise ZeroShift("additive shift must be nonzero")
    values = set(_finite_values(X))
    return ValueSet.of((v for v in values if v + a in values), f"shift by {a}")


def scaling_intersection(X, q, exclude_fixed: bool = False) -> ValueSet:
    """The largest S inside X with q * S inside X; 0 is dropped if ``exclude_fixed``."""
    q = rat(q)
    if q in (0, 1, -1):
        raise BadRatio(f"scaling factor {q} is excluded (must avoid 0, 1, -1)")
    values = set(_finite_values(X))
    S = {v for v in values if v * q in values}
    if exclude_fixed:
        S.discard(Fraction(0))
    return ValueSet.of(S, f"scaling by {q}")


def best_additive_shift(X) -> tuple:
    """(a, S): the positive shift a with the largest shift set, smallest a on ties."""
    xs = _finite_values(X)
    if len(xs) < 2:
        raise EmptySet("need at least two values to shift")
    counts = Counter(b - a for i, a in enumerate(xs) for b in xs[i + 1:])
    a = min(counts, key=lambda d: (-counts[d], d))
    return a, shift_intersection(xs, a)


def best_multiplicative_shift(X, exclude_fixed: bool = True) -> tuple:
    """(q, S): the ratio |q| > 1 with the largest scaling set, smallest q on ties."""
    xs = [v for v in _finite_values(X) if v != 0]
    counts = Counter(b / a for a in xs for b in xs if abs(b) > abs(a))
    if not counts:
        raise EmptySet("no admissible ratio between two nonzero values")
    q = min(counts, key=lambda r: (-counts[r], r))
    return q, scaling_intersection(X, q, exclude_fixed)


def shift_report(S: ValueSet, a) -> PatternReport:
    w = tuple(S.sorted())
    return PatternReport(PatternKind.ADDITIVE_SHIFT, len(w), w, rat(a))


def scaling_report(S: ValueSet, q) -> PatternReport:
    w = tuple(S.sorted())
    return PatternReport(PatternKind.MULTIPLICATIVE_SHIFT, len(w), w, rat(q))


def intersection_report(S: ValueSet) -> PatternReport:
    w = tuple(S.sorted())
    return PatternReport(PatternKind.INTERSECTION, len(w), w)
