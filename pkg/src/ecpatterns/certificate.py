"""Bundled fixtures and verification of pattern certificates.

A certificate is a JSON object naming a curve, a coordinate map and the
claims to check: points on the curve, values in the image g(E(Q)), an orbit
of a map, and additive or multiplicative shift sets.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .algebra import p1_key
from .curve import Curve
from .errors import NotOnCurve, ParseError, VerificationFailed
from .maps import CoordinateMap, apply_map
from .membership import g_membership
from .patterns import longest_orbit, scaling_intersection, shift_intersection
from .serialize import (coordmap_from_json, curve_from_json, load_json_file, map_from_json, p1_from_json,
                        p1_to_json, point_to_json, rat_from_json, values_to_json)


def fixture_names() -> list:
    root = resources.files("ecpatterns") / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_fixture(name: str) -> dict:
    path = resources.files("ecpatterns") / "fixtures" / f"{name}.json"
    if not path.is_file():
        raise ParseError(f"no bundled fixture named {name!r} (have: {', '.join(fixture_names())})")
    return json.loads(path.read_text(encoding="utf-8"))


def load_certificate(fixture_or_file: str) -> dict:
    """A bundled fixture by name, otherwise a JSON file on disk."""
    if Path(fixture_or_file).is_file():
        return load_json_file(fixture_or_file)
    return load_fixture(fixture_or_file)


def _require_member(E: Curve, g: CoordinateMap, v, what: str):
    P = g_membership(E, g, v)
    if P is None:
        raise VerificationFailed(f"{what}: {p1_to_json(v)} is not in g(E(Q))")
    return P


def verify_certificate(cert: dict) -> list:
    """Check every claim, returning one record per check.

    Raises VerificationFailed at the first claim that does not hold; the
    records gathered so far are attached as ``exc.records``.
    """
    records = []
    try:
        _verify(cert, records)
    except VerificationFailed as exc:
        exc.records = records
        raise
    return records


def _verify(cert: dict, records: list):
    try:
        E = curve_from_json(cert["curve"])
    except KeyError as exc:
        raise ParseError("certificate needs a 'curve'") from exc
    g = coordmap_from_json(cert.get("map", {"base": "x"}))

    for obj in cert.get("points", []):
        try:
            x, y = rat_from_json(obj["x"]), rat_from_json(obj["y"])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad point {obj!r}") from exc
        try:
            E.point(x, y)
        except NotOnCurve as exc:
            raise VerificationFailed(f"point ({x}, {y}) is not on the curve: residual {exc.residual}") from exc
        records.append({"check": "point", "point": obj, "status": "ok"})

    values = [p1_from_json(v) for v in cert.get("values", [])]
    for v in values:
        P = _require_member(E, g, v, "membership")
        records.append({"check": "membership", "value": p1_to_json(v), "witness": point_to_json(P), "status": "ok"})

    orbit = cert.get("orbit")
    if orbit is not None:
        F = map_from_json(orbit["map"])
        seq = [p1_from_json(v) for v in orbit["sequence"]]
        if len(set(seq)) != len(seq):
            raise VerificationFailed("orbit terms are not pairwise distinct")
        for a, b in zip(seq, seq[1:]):
            image = apply_map(F, a)
            if image != b:
                raise VerificationFailed(f"orbit step F({p1_to_json(a)}) = {p1_to_json(image)}, "
                                         f"expected {p1_to_json(b)}")
            records.append({"check": "recurrence", "from": p1_to_json(a), "to": p1_to_json(b), "status": "ok"})
        for v in seq:
            _require_member(E, g, v, "orbit term")
        found = longest_orbit(seq, F)
        if list(found.witnesses) != seq:
            raise VerificationFailed(f"longest orbit in the sequence is {values_to_json(found.witnesses)}")
        records.append({"check": "orbit", "length": found.length, "status": "ok"})

    for claim in cert.get("shifts", []):
        a = rat_from_json(claim["a"])
        S = [rat_from_json(v) for v in claim["S"]]
        for v in S:
            _require_member(E, g, v, "shift set")
            _require_member(E, g, v + a, f"shift set + {a}")
        if claim.get("maximal"):
            best = shift_intersection(values, a)
            if best.values != set(S):
                raise VerificationFailed(f"shift by {a}: maximal set is {values_to_json(best)}")
        records.append({"check": "shift", "a": str(a), "size": len(S), "status": "ok"})

    for claim in cert.get("scalings", []):
        q = rat_from_json(claim["q"])
        S = [rat_from_json(v) for v in claim["S"]]
        for v in S:
            _require_member(E, g, v, "scaling set")
            _require_member(E, g, v * q, f"scaling set * {q}")
        if claim.get("maximal"):
            best = scaling_intersection(values, q, bool(claim.get("exclude_fixed", False)))
            if best.values != set(S):
                raise VerificationFailed(f"scaling by {q}: maximal set is {values_to_json(best)}")
        records.append({"check": "scaling", "q": str(q), "size": len(S), "status": "ok"})


def certificate_values(cert: dict) -> list:
    """The claimed image values of a certificate (values, else orbit terms), sorted."""
    raw = cert.get("values") or cert.get("orbit", {}).get("sequence", [])
    return sorted({p1_from_json(v) for v in raw}, key=p1_key)
