"""
Serialization helpers shared by the library reports and the command line.
"""

import csv
import io
import json
import math
from typing import Any, Iterable, Sequence

import numpy as np
from pydantic import BaseModel

from .config import JSON_SCHEMA_VERSION, PYDANTIC_MAJOR_VERSION


def model_to_dict(model: BaseModel) -> dict:
    if PYDANTIC_MAJOR_VERSION == 1:
        return model.dict()
    return model.model_dump()


def format_float(x: float) -> str:
    """
    17 significant digits, enough for a float64 to round-trip.
    """
    x = float(x)
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    return format(x, ".17g")


def _to_json(obj: Any, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(obj, BaseModel):
        obj = model_to_dict(obj)
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(obj)
    if isinstance(obj, (bytes, bytearray)):
        obj = obj.hex()
    if isinstance(obj, str):
        return _json_string(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f"{pad}{_json_string(str(k))}: {_to_json(obj[k], indent, level + 1)}"
            for k in sorted(obj, key=str)
        ]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [f"{pad}{_to_json(v, indent, level + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"Cannot serialize {type(obj)} to JSON")


def _json_string(s: str) -> str:
    return json.dumps(s)


def dumps_json(obj: Any, indent: int = 2) -> str:
    """
    Deterministic JSON: sorted keys, floats with 17 significant digits and a
    top-level "schema" field when obj is a mapping.
    """
    if isinstance(obj, BaseModel):
        obj = model_to_dict(obj)
    if isinstance(obj, dict):
        obj = dict(obj)
        obj.setdefault("schema", JSON_SCHEMA_VERSION)
    return _to_json(obj, indent, 0)


def dumps_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(
            [
                format_float(v) if isinstance(v, (float, np.floating)) else v
                for v in row
            ]
        )
    return out.getvalue()
