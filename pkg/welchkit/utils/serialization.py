"""
JSON rendering for reports.

json.dumps writes floats with repr, the shortest decimal that round-trips
to the same binary64 value, so reports are stable across platforms.
"""

import json
import math
from enum import Enum
from typing import Any

import numpy as np
from pydantic import BaseModel


def to_jsonable(value: Any) -> Any:
    """
    Convert models, numpy values and enums into plain JSON types.

    Non-finite floats become None; complex numbers become [re, im].
    """
    if isinstance(value, BaseModel):
        return to_jsonable(value.model_dump(mode="python"))
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    if isinstance(value, np.ndarray):
        return [to_jsonable(item) for item in value.tolist()]
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        return [to_jsonable(float(value.real)), to_jsonable(float(value.imag))]
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def dumps(value: Any, indent: int = 2) -> str:
    """Render a report as indented JSON with a trailing newline."""
    return json.dumps(to_jsonable(value), indent=indent, ensure_ascii=False, allow_nan=False) + "\n"
