import json

from direction_space import __version__
from direction_space.instances.exception import ParseError
from direction_space.profile import TruncationProfile
from direction_space.report import delta_rows, envelope, error_payload, rows_to_csv, to_json

ROWS = [{"n": 1, "k": 0, "index": "2", "value": 1.0, "slack": 0.0}]


def test_envelope():
    profile = TruncationProfile()

    payload = envelope("scale", profile, {"value": 2})

    assert payload["command"] == "scale"
    assert payload["version"] == __version__
    assert payload["profile"] == profile.to_dict()
    assert payload["value"] == 2


def test_json_output_is_deterministic():
    first = to_json({"b": 1, "a": [1, 2], "δ": 0.5})
    second = to_json({"δ": 0.5, "a": [1, 2], "b": 1})

    assert first == second
    assert json.loads(first) == {"a": [1, 2], "b": 1, "δ": 0.5}
    assert "δ" in first


def test_error_payload():
    payload = error_payload(ParseError(3, "unexpected token"))

    assert payload == {"error": "line 3: unexpected token", "type": "ParseError"}


def test_delta_rows_tag_directions():
    rows = delta_rows({"rows": ROWS, "rows_ba": ROWS})

    assert [row["direction"] for row in rows] == ["ab", "ba"]


def test_delta_rows_of_a_direction_report():
    result = {
        "pairs": [
            {"pair": [0, 2], "delta": {"rows": ROWS, "rows_ba": []}},
            {"pair": [0, 1], "delta": None},
        ]
    }

    rows = delta_rows(result)

    assert len(rows) == 1
    assert rows[0]["pair"] == "0-2"


def test_rows_to_csv():
    text = rows_to_csv(delta_rows({"rows": ROWS, "rows_ba": []}))

    header, line = text.splitlines()
    assert header == "direction,n,k,index,value,slack"
    assert line == "ab,1,0,2,1.0,0.0"
