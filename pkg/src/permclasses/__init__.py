"""Permutation groups and exact conjugacy class counts."""

__version__ = "0.1.0"

from .classes import DEFAULT_LIMIT, LimitExceeded, class_count
from .constructions import GroupSpecError, parse_group_spec
from .core import Permutation, PermGroup
from .partitions import partition_number

__all__ = [
    "DEFAULT_LIMIT",
    "GroupSpecError",
    "LimitExceeded",
    "PermGroup",
    "Permutation",
    "__version__",
    "class_count",
    "parse_group_spec",
    "partition_number",
]
