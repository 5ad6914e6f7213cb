"""Optional download of curve data from the public LMFDB API.

Nothing else in the package touches the network; the fetched data is
written to a local curve file and read back like any other input.
"""

from __future__ import annotations

import json
import re
import urllib.error
import urllib.parse
import urllib.request
from fractions import Fraction

from .errors import NetworkError, SchemaMismatch, UnknownLabel

API_ROOT = "https://www.lmfdb.org/api"
LABEL_RE = re.compile(r"^\d+\.[a-z]+\d+$")


def _get_json(url: str, opener, timeout: float):
    try:
        with opener(url, timeout=timeout) as response:
            return json.loads(response.read().decode("utf-8"))
    except urllib.error.URLError as exc:
        raise NetworkError(f"cannot reach {url}: {exc}") from exc
    except (OSError, TimeoutError) as exc:
        raise NetworkError(f"cannot reach {url}: {exc}") from exc
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise SchemaMismatch(f"{url} did not return JSON") from exc


def _query(table: str, label: str, opener, timeout: float):
    query = urllib.parse.urlencode({"lmfdb_label": label, "_format": "json"})
    payload = _get_json(f"{API_ROOT}/{table}/?{query}", opener, timeout)
    if not isinstance(payload, dict) or not isinstance(payload.get("data"), list):
        raise SchemaMismatch(f"{table}: response has no 'data' list")
    return payload["data"]


def _parse_generator(gen):
    """[X, Y, Z] integers or "(X:Y:Z)" text; None when the shape is not recognised."""
    if isinstance(gen, str):
        parts = re.split(r"[:,]", gen.strip("()[] "))
    elif isinstance(gen, (list, tuple)):
        parts = list(gen)
    else:
        return None
    try:
        nums = [int(p) for p in parts]
    except (TypeError, ValueError):
        return None
    if len(nums) == 2:
        nums.append(1)
    if len(nums) != 3 or nums[2] == 0:
        return None
    X, Y, Z = nums
    # projective (X : Y : Z) with x = X/Z, y = Y/Z
    return {"x": str(Fraction(X, Z)), "y": str(Fraction(Y, Z))}


def fetch_curve(label: str, opener=urllib.request.urlopen, timeout: float = 30.0) -> dict:
    """Curve-file JSON for an LMFDB label: coefficients, plus rank and generators when published."""
    if not LABEL_RE.match(label):
        raise UnknownLabel(f"{label!r} is not an LMFDB elliptic curve label such as '5077.a1'")
    rows = _query("ec_curvedata", label, opener, timeout)
    if not rows:
        raise UnknownLabel(f"LMFDB has no curve labelled {label}")
    row = rows[0]
    ainvs = row.get("ainvs")
    if not isinstance(ainvs, list) or len(ainvs) != 5:
        raise SchemaMismatch(f"ec_curvedata row for {label} has no five-entry 'ainvs'")
    try:
        coeffs = [str(int(c)) for c in ainvs]
    except (TypeError, ValueError) as exc:
        raise SchemaMismatch(f"non-integer ainvs {ainvs!r}") from exc
    out = {"a": coeffs, "label": label}
    if isinstance(row.get("rank"), int):
        out["rank"] = row["rank"]
    gens = row.get("gens")
    if gens is None:
        try:
            extra = _query("ec_mwbsd", label, opener, timeout)
        except SchemaMismatch:
            extra = []
        gens = extra[0].get("gens") if extra else None
    if isinstance(gens, list):
        parsed = [_parse_generator(G) for G in gens]
        if parsed and all(p is not None for p in parsed):
            out["generators"] = parsed
    return out
