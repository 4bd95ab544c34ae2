"""
Report rendering: deterministic JSON on stdout, or a table with --pretty.
"""

import json
from typing import Any, Dict, List, Optional

import pandas as pd

# list-valued report keys rendered as one row per entry
TABLE_KEYS = ("records", "components", "points", "failures")


def to_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def _cell(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return ", ".join(str(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, ensure_ascii=False)
    return "" if value is None else str(value)


def _table_key(payload: Dict[str, Any]) -> Optional[str]:
    for key in TABLE_KEYS:
        rows = payload.get(key)
        if isinstance(rows, list) and rows and all(isinstance(row, dict) for row in rows):
            return key
    return None


def to_table(payload: Dict[str, Any]) -> str:
    """Scalar fields as a two-column frame, then the main list (if any) as a frame of its own."""
    key = _table_key(payload)
    scalars = [(name, _cell(value)) for name, value in payload.items() if name != key]
    blocks: List[str] = []
    if scalars:
        frame = pd.DataFrame(scalars, columns=["field", "value"])
        blocks.append(frame.to_string(index=False))
    if key is not None:
        rows = [{name: _cell(value) for name, value in row.items()} for row in payload[key]]
        blocks.append(f"{key}:\n" + pd.DataFrame(rows).to_string(index=False))
    return "\n\n".join(blocks) + "\n"


def render(payload: Dict[str, Any], pretty: bool = False) -> str:
    return to_table(payload) if pretty else to_json(payload)
