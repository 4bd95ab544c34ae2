"""
JSON quadruple files.

    {
      "field": "Z",
      "vars": ["x"],
      "relations": ["x^6 - 1"],
      "comul": {"x": "x'*x''"},
      "antipode": {"x": "x^5"},
      "counit": {"x": "1"}
    }

`dump_quadruple` reproduces shipped catalog files byte for byte.
"""

import json
from pathlib import Path
from typing import Any, Dict, Optional, Union

from src.hopf.quadruple import HopfQuadruple, quadruple_from_strings
from src.polyalg.fields import FieldSpec
from src.utils.errors import InvalidParameter

REQUIRED_KEYS = ("field", "vars", "relations", "comul", "antipode", "counit")


def quadruple_from_dict(data: Dict[str, Any], name: Optional[str] = None) -> HopfQuadruple:
    missing = [key for key in REQUIRED_KEYS if key not in data]
    if missing:
        raise InvalidParameter(f"quadruple file is missing {', '.join(missing)}", stage="load")
    return quadruple_from_strings(
        FieldSpec.from_string(data["field"]),
        data["vars"],
        data["relations"],
        data["comul"],
        data["antipode"],
        data["counit"],
        name=name,
    )


def quadruple_to_dict(H: HopfQuadruple) -> Dict[str, Any]:
    variables = list(H.ring.variables)
    return {
        "field": str(H.field),
        "vars": variables,
        "relations": [str(f) for f in H.relations],
        "comul": {v: str(H.comultiplication[v]) for v in variables},
        "antipode": {v: str(H.antipode[v]) for v in variables},
        "counit": {v: H.field.format(H.counit[v]) for v in variables},
    }


def dump_quadruple(H: HopfQuadruple) -> str:
    return json.dumps(quadruple_to_dict(H), indent=2, ensure_ascii=False) + "\n"


def load_quadruple(path: Union[str, Path]) -> HopfQuadruple:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise InvalidParameter(f"{path} is not valid JSON: {e}", stage="load")
    return quadruple_from_dict(data, name=path.stem)


def save_quadruple(H: HopfQuadruple, path: Union[str, Path]):
    Path(path).write_text(dump_quadruple(H), encoding="utf-8")
