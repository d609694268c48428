"""
Utils package initialization.
"""

from .summation import stable_sum, weighted_double_sum
from .formatting import format_number, finite_or_none, parse_number_list
from .serialization import to_jsonable, dumps

__all__ = [
    'stable_sum', 'weighted_double_sum', 'format_number', 'finite_or_none', 'parse_number_list',
    'to_jsonable', 'dumps',
]
