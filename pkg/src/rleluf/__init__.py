"""Longest unbordered factors of run-length encoded strings.

The compute pipeline operates on the run-length encoding alone: its work and
memory depend on the number of runs, never on the decoded length.
"""

from .rle import (
    SENTINEL,
    Occurrence,
    RleString,
    decode_text,
    factor_rle,
    from_pairs,
    is_rle_bounded,
    reverse,
    rle_decode,
    rle_encode,
    run_of_position,
)
from .borders import (
    PseudoPeriodResult,
    border_array,
    border_group_array,
    rsbord,
    window_longest_border,
)
from .counters import COUNTERS
from .driver import LufResult, block_partition, longest_short_ub, longest_unbordered_factors

__all__ = [
    "SENTINEL",
    "Occurrence",
    "RleString",
    "decode_text",
    "factor_rle",
    "from_pairs",
    "is_rle_bounded",
    "reverse",
    "rle_decode",
    "rle_encode",
    "run_of_position",
    "PseudoPeriodResult",
    "border_array",
    "border_group_array",
    "rsbord",
    "window_longest_border",
    "COUNTERS",
    "LufResult",
    "block_partition",
    "longest_short_ub",
    "longest_unbordered_factors",
]
