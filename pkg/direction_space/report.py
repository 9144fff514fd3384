import csv
import io
import json
from typing import Any, Dict, List, Sequence

from direction_space import __version__
from direction_space.profile import TruncationProfile

ROW_COLUMNS = ["n", "k", "index", "value", "slack"]


def envelope(command: str, profile: TruncationProfile, result: Dict[str, Any]) -> Dict[str, Any]:
    """`result` with the command, the profile and the library version alongside."""
    return {**result, "command": command, "profile": profile.to_dict(), "version": __version__}


def error_payload(error: BaseException) -> Dict[str, Any]:
    return {"error": str(error), "type": type(error).__name__}


def to_json(payload: Dict[str, Any]) -> str:
    # NOTE: sorted keys and a fixed separator keep identical runs byte-identical
    return json.dumps(payload, sort_keys=True, ensure_ascii=False, separators=(",", ": "), indent=2)


def rows_to_csv(rows: Sequence[Dict[str, Any]], columns: List[str] = ROW_COLUMNS) -> str:
    """Row dicts as CSV with the JSON row keys as columns, extra keys first."""
    extra = sorted({key for row in rows for key in row} - set(columns))
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=extra + columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()


def delta_rows(result: Dict[str, Any]) -> List[Dict[str, Any]]:
    """Flatten the δ rows of a `delta` or `directions` result, tagged with their direction."""
    if "pairs" in result:
        rows = []
        for entry in result["pairs"]:
            if entry.get("delta") is not None:
                pair = "-".join(str(i) for i in entry["pair"])
                rows.extend({**row, "pair": pair} for row in delta_rows(entry["delta"]))
        return rows

    return [{**row, "direction": "ab"} for row in result.get("rows", [])] + [
        {**row, "direction": "ba"} for row in result.get("rows_ba", [])
    ]
