"""
Number rendering for tables and report files.

Python's float repr is the shortest decimal string that round-trips to the
same binary64 value, so it is used for every number we print or serialize.
"""

import math
from typing import Optional, Any


def format_number(value: Optional[Any]) -> str:
    """
    Render a number with shortest round-trip formatting.

    Args:
        value: A float, int, bool or None

    Returns:
        str: "n/a" for None, the shortest round-trip decimal otherwise
    """
    if value is None:
        return "n/a"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def finite_or_none(value: Optional[float]) -> Optional[float]:
    """Map inf/nan to None so reports stay valid JSON."""
    if value is None or not math.isfinite(value):
        return None
    return float(value)


def parse_number_list(text: str, cast=float) -> list:
    """
    Parse a comma separated list such as "1,2,3".

    Args:
        text: The raw option value
        cast: Conversion applied to every item

    Returns:
        list: Parsed values (empty for an empty string)
    """
    items = [item.strip() for item in text.split(",")]
    return [cast(item) for item in items if item]
