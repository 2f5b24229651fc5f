"""Run-length encoded strings and factor arithmetic.

Symbols are small non-negative integers (characters and bytes are mapped via
``ord``).  ``SENTINEL`` is a reserved out-of-band value that never appears in
user input; it sorts below every real symbol.

Run indices and text positions are 1-based throughout, matching the usual
stringology conventions.  The per-run arrays ``chars``, ``exps``, ``beg`` and
``end`` are padded with a dummy entry at index 0 so that formulas can be
written directly against 1-based indices.
"""

import os
from bisect import bisect_left
from itertools import groupby
from typing import Iterable, List, NamedTuple, Sequence, Tuple, Union

from .errors import (
    DecodeTooLargeError,
    EmptyInputError,
    InvalidSymbolError,
    PositionOutOfRangeError,
)

SENTINEL = -1

MAX_N = 2**63 - 1

_DEFAULT_DECODE_CAP = 2**26

Text = Union[str, bytes, Sequence[int]]


def _default_decode_cap():
    value = os.environ.get("LUF_MAX_DECODE")
    return int(value) if value else _DEFAULT_DECODE_CAP


class Occurrence(NamedTuple):
    """A factor T[start..end], 1-based and inclusive."""

    start: int
    end: int

    @property
    def length(self):
        return self.end - self.start + 1


class RleString:
    """Immutable run-length encoded string."""

    __slots__ = ("m", "n", "chars", "exps", "beg", "end", "_end_flat")

    def __init__(self, runs: Sequence[Tuple[int, int]]):
        if not runs:
            raise EmptyInputError("an RLE string needs at least one run")
        chars = [None]
        exps = [None]
        beg = [None]
        end = [None]
        pos = 1
        prev = None
        for c, e in runs:
            if e < 1:
                raise InvalidSymbolError("run exponents must be positive")
            if c == prev:
                raise InvalidSymbolError("adjacent runs must differ")
            prev = c
            chars.append(c)
            exps.append(e)
            beg.append(pos)
            pos += e
            end.append(pos - 1)
        self.m = len(runs)
        self.n = pos - 1
        if self.n > MAX_N:
            raise InvalidSymbolError("total length exceeds 2**63-1")
        self.chars = chars
        self.exps = exps
        self.beg = beg
        self.end = end
        self._end_flat = end[1:]

    @property
    def runs(self) -> List[Tuple[int, int]]:
        return list(zip(self.chars[1:], self.exps[1:]))

    def __eq__(self, other):
        return isinstance(other, RleString) and self.runs == other.runs

    def __hash__(self):
        return hash(tuple(zip(self.chars[1:], self.exps[1:])))

    def __repr__(self):
        inner = " ".join(f"{_show(c)}^{e}" for c, e in self.runs)
        return f"RleString({inner})"


def _show(c):
    if isinstance(c, int) and 32 <= c < 127:
        return chr(c)
    return str(c)


def normalize_text(text: Text) -> List[int]:
    """Map str/bytes/int-sequence input to a list of symbol codes."""
    if isinstance(text, str):
        return [ord(c) for c in text]
    if isinstance(text, (bytes, bytearray)):
        return list(text)
    return list(text)


def rle_encode(text: Text) -> RleString:
    """Encode a symbol sequence into its maximal-run representation."""
    symbols = normalize_text(text)
    if not symbols:
        raise EmptyInputError("cannot encode an empty string")
    for s in symbols:
        if not isinstance(s, int) or s < 0:
            raise InvalidSymbolError(f"symbol {s!r} is outside the alphabet")
    return RleString([(c, len(list(g))) for c, g in groupby(symbols)])


def from_pairs(pairs: Iterable[Tuple[int, int]], merge=False) -> RleString:
    """Build an RleString from (symbol, exponent) pairs.

    With ``merge=True`` adjacent equal-symbol pairs are coalesced, which makes
    externally supplied run lists safe to ingest.
    """
    out = []
    for c, e in pairs:
        if not isinstance(c, int) or c < 0:
            raise InvalidSymbolError(f"symbol {c!r} is outside the alphabet")
        if merge and out and out[-1][0] == c:
            out[-1] = (c, out[-1][1] + e)
        else:
            out.append((c, e))
    return RleString(out)


def rle_decode(r: RleString, max_n=None) -> List[int]:
    """Materialize the symbol sequence; guarded so compute paths never rely on it."""
    cap = _default_decode_cap() if max_n is None else max_n
    if r.n > cap:
        raise DecodeTooLargeError(f"decoding {r.n} symbols exceeds the cap of {cap}")
    out = []
    for c, e in zip(r.chars[1:], r.exps[1:]):
        out.extend([c] * e)
    return out


def decode_text(r: RleString, max_n=None) -> str:
    return "".join(chr(c) for c in rle_decode(r, max_n))


def run_of_position(r: RleString, pos: int) -> int:
    """Index of the run containing text position ``pos`` (binary search)."""
    if pos < 1 or pos > r.n:
        raise PositionOutOfRangeError(f"position {pos} not in [1, {r.n}]")
    return bisect_left(r._end_flat, pos) + 1


def is_rle_bounded(r: RleString, occ: Occurrence) -> bool:
    """True iff the factor starts at some Beg_i and ends at some End_j."""
    i = run_of_position(r, occ.start)
    j = run_of_position(r, occ.end)
    return occ.start == r.beg[i] and occ.end == r.end[j]


def factor_rle(r: RleString, occ: Occurrence) -> RleString:
    """RLE of the factor T[start..end]; boundary runs are truncated."""
    if occ.start > occ.end:
        raise PositionOutOfRangeError("empty factor")
    i = run_of_position(r, occ.start)
    j = run_of_position(r, occ.end)
    if i == j:
        return RleString([(r.chars[i], occ.end - occ.start + 1)])
    runs = [(r.chars[i], r.end[i] - occ.start + 1)]
    runs.extend((r.chars[k], r.exps[k]) for k in range(i + 1, j))
    runs.append((r.chars[j], occ.end - r.beg[j] + 1))
    return RleString(runs)


def reverse(r: RleString) -> RleString:
    """RLE of the reversed string (the run list reversed)."""
    return RleString(list(zip(reversed(r.chars[1:]), reversed(r.exps[1:]))))
