import io
import json
import urllib.error
import urllib.parse

import pytest

from ecpatterns.errors import NetworkError, SchemaMismatch, UnknownLabel
from ecpatterns.lmfdb import fetch_curve


class FakeResponse(io.BytesIO):
    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def fake_api(tables):
    """An opener answering LMFDB table queries from a dict table -> label -> row."""
    def opener(url, timeout=None):
        parsed = urllib.parse.urlparse(url)
        table = parsed.path.strip("/").split("/")[-1]
        label = urllib.parse.parse_qs(parsed.query)["lmfdb_label"][0]
        row = tables.get(table, {}).get(label)
        body = {"data": [row] if row else []}
        return FakeResponse(json.dumps(body).encode())
    return opener


API = fake_api({
    "ec_curvedata": {
        "5077.a1": {"ainvs": [0, 0, 1, -7, 6], "rank": 3},
        "234446.a1": {"ainvs": [1, -1, 0, -79, 289], "rank": 4},
    },
    "ec_mwbsd": {
        "5077.a1": {"gens": [[0, 0, 1], [2, 0, 1], [-3, 0, 1]]},
    },
})


def test_fetch_5077():
    out = fetch_curve("5077.a1", opener=API)
    assert out["a"] == ["0", "0", "1", "-7", "6"] and out["rank"] == 3
    assert out["generators"][1] == {"x": "2", "y": "0"}


def test_fetch_234446_without_generators():
    out = fetch_curve("234446.a1", opener=API)
    assert out == {"a": ["1", "-1", "0", "-79", "289"], "label": "234446.a1", "rank": 4}


def test_bad_labels():
    with pytest.raises(UnknownLabel):
        fetch_curve("not-a-label", opener=API)
    with pytest.raises(UnknownLabel):
        fetch_curve("11.a1", opener=API)


def test_schema_and_network_errors():
    def garbage(url, timeout=None):
        return FakeResponse(b"<html>")

    def shape(url, timeout=None):
        return FakeResponse(b'{"rows": []}')

    def offline(url, timeout=None):
        raise urllib.error.URLError("no route")

    with pytest.raises(SchemaMismatch):
        fetch_curve("5077.a1", opener=garbage)
    with pytest.raises(SchemaMismatch):
        fetch_curve("5077.a1", opener=shape)
    with pytest.raises(NetworkError):
        fetch_curve("5077.a1", opener=offline)


def test_projective_string_generators():
    api = fake_api({"ec_curvedata": {"37.a1": {"ainvs": [0, 0, 1, -1, 0], "gens": ["(0:0:1)"]}}})
    assert fetch_curve("37.a1", opener=api)["generators"] == [{"x": "0", "y": "0"}]
