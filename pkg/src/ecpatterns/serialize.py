"""JSON forms of every value the command line reads or writes.

Rationals travel as strings ("p/q", or "p" when q = 1) and the point at
infinity as "inf", so nothing passes through floating point.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import INF, UniPoly
from .curve import IDENTITY, Curve, Point
from .errors import ParseError, PatternError
from .hypothesis import BranchSet, HypothesisResult
from .maps import CoordinateMap, MobiusMap, RationalFunction
from .patterns import PatternKind, PatternReport
from .subgroup import GammaSpec, ValueSet


def rat_to_json(r: Fraction) -> str:
    return str(r)


def rat_from_json(s) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise ParseError(f"expected a rational string, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {s!r}") from exc


def p1_to_json(v) -> str:
    return "inf" if v is INF else rat_to_json(v)


def p1_from_json(s):
    return INF if s == "inf" else rat_from_json(s)


def point_to_json(P: Point):
    if P.is_identity:
        return "identity"
    return {"x": rat_to_json(P.x), "y": rat_to_json(P.y)}


def point_from_json(obj) -> Point:
    if obj == "identity":
        return IDENTITY
    try:
        return Point(rat_from_json(obj["x"]), rat_from_json(obj["y"]))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad point {obj!r}") from exc


def curve_to_json(E: Curve) -> dict:
    out = {"a": [rat_to_json(c) for c in E.ainvs]}
    if E.label:
        out["label"] = E.label
    return out


def curve_from_json(obj) -> Curve:
    try:
        coeffs = [rat_from_json(c) for c in obj["a"]]
    except (KeyError, TypeError) as exc:
        raise ParseError("curve JSON needs an 'a' list of five coefficients") from exc
    if len(coeffs) != 5:
        raise ParseError(f"curve JSON needs five coefficients, got {len(coeffs)}")
    try:
        return Curve(*coeffs, label=obj.get("label"))
    except PatternError as exc:
        raise ParseError(str(exc)) from exc


def poly_to_json(p: UniPoly) -> list:
    return [rat_to_json(c) for c in p.coeffs] or ["0"]


def poly_from_json(obj) -> UniPoly:
    if not isinstance(obj, list):
        raise ParseError(f"expected a coefficient list, got {obj!r}")
    return UniPoly(rat_from_json(c) for c in obj)


def map_to_json(f) -> dict:
    if isinstance(f, MobiusMap):
        return {"m": [[str(f.a), str(f.b)], [str(f.c), str(f.d)]]}
    return {"num": poly_to_json(f.num), "den": poly_to_json(f.den)}


def map_from_json(obj):
    """A MobiusMap for {"m": ...}, a RationalFunction for {"num": ..., "den": ...}."""
    if not isinstance(obj, dict):
        raise ParseError(f"expected a map object, got {obj!r}")
    try:
        if "m" in obj:
            (a, b), (c, d) = obj["m"]
            return MobiusMap(*(rat_from_json(v) for v in (a, b, c, d)))
        return RationalFunction(poly_from_json(obj["num"]), poly_from_json(obj.get("den", ["1"])))
    except (KeyError, ValueError, TypeError, ZeroDivisionError, PatternError) as exc:
        raise ParseError(f"bad map {obj!r}: {exc}") from exc


def coordmap_to_json(g: CoordinateMap) -> dict:
    return {"base": g.base, "post": map_to_json(g.post)}


def coordmap_from_json(obj) -> CoordinateMap:
    try:
        post = obj.get("post")
        return CoordinateMap(obj.get("base", "x"), None if post is None else map_from_json(post))
    except (AttributeError, ValueError) as exc:
        raise ParseError(f"bad coordinate map {obj!r}: {exc}") from exc


def gamma_to_json(spec: GammaSpec) -> dict:
    out = {"generators": [point_to_json(G) for G in spec.generators], "include_torsion": spec.include_torsion}
    if spec.declared_rank is not None:
        out["rank"] = spec.declared_rank
    return out


def gamma_from_json(obj) -> GammaSpec:
    try:
        rank = obj.get("rank")
        if rank is not None and (isinstance(rank, bool) or not isinstance(rank, int)):
            raise ParseError(f"rank must be an integer, got {rank!r}")
        return GammaSpec(
            tuple(point_from_json(p) for p in obj.get("generators", [])),
            bool(obj.get("include_torsion", False)),
            rank,
        )
    except (AttributeError, ValueError) as exc:
        raise ParseError(f"bad gamma spec: {exc}") from exc


def values_to_json(values) -> list:
    if isinstance(values, ValueSet):
        values = values.sorted()
    return [p1_to_json(v) for v in values]


def branch_set_to_json(B: BranchSet) -> dict:
    return {"locus": poly_to_json(B.locus), "contains_infinity": B.contains_infinity}


def hypothesis_to_json(result: HypothesisResult) -> dict:
    out = {"verdict": result.verdict.value, "case": result.case, "reason": result.reason}
    if result.branch_g is not None:
        out["branch_g"] = branch_set_to_json(result.branch_g)
    if result.branch_Fg is not None:
        out["branch_Fg"] = branch_set_to_json(result.branch_Fg)
    return out


def report_to_json(report: PatternReport) -> dict:
    out = {
        "kind": report.kind.value,
        "length": report.length,
        "witnesses": [p1_to_json(w) for w in report.witnesses],
    }
    p = report.parameter
    if p is not None:
        out["parameter"] = map_to_json(p) if isinstance(p, (MobiusMap, RationalFunction)) else rat_to_json(p)
    if report.implied_constant is not None:
        out["implied_constant"] = report.implied_constant
    return out


def report_from_json(obj) -> PatternReport:
    try:
        kind = PatternKind(obj["kind"])
        param = obj.get("parameter")
        if isinstance(param, dict):
            param = map_from_json(param)
        elif param is not None:
            param = rat_from_json(param)
        return PatternReport(kind, int(obj["length"]), tuple(p1_from_json(w) for w in obj["witnesses"]),
                             param, obj.get("implied_constant"))
    except (KeyError, ValueError, TypeError) as exc:
        raise ParseError(f"bad pattern report: {exc}") from exc


def dumps(obj) -> str:
    """One canonical JSON line."""
    return json.dumps(obj, ensure_ascii=False, separators=(", ", ": "))


def load_json_file(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
