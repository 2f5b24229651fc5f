"""Removal of candidates that carry a long border.

Every border with run count > s of a factor ending at End_j must end (as a
prefix-occurrence) with a full copy of the marker string S_j: a suffix of the
text ending at End_j, at least as long as the last s runs, whose run-level
pseudo period exceeds s/2 - 1.  That pseudo-period bound keeps the number of
occurrences of S_j in the text at O(sqrt m), so scanning a candidate list
against the occurrence list with one longest-common-suffix probe per step is
cheap.  A probe whose common suffix spans a candidate's start position
certifies a border; exhausting the occurrence list certifies there is none.
"""

from typing import List, NamedTuple, Optional

from .borders import window_longest_border
from .counters import COUNTERS
from .errors import StageRangeError
from .index import ReversedIndex, TruncatedRleIndex, find_occurrences
from .rle import Occurrence, RleString, factor_rle

KIND_WINDOW = "window"
KIND_SUFFIX = "suffix"
KIND_SENTINEL_PREFIXED = "sentinel"


class SjRecord(NamedTuple):
    j: int
    kind: str
    start: Optional[int]   # None for the sentinel-prefixed form
    occ_ends: List[int]    # proper occurrence end positions, ascending


def compute_sj(T: RleString, gidx: TruncatedRleIndex, ridx: ReversedIndex,
               j: int, s: int) -> SjRecord:
    """Marker string for run end j and its proper occurrences.

    Starts from the window of the last s runs; when the window's pseudo period
    is small the window's periodicity is extended leftward by one reversed-
    index lcs call, and the marker is that maximal periodic suffix plus one
    more character (or the sentinel-prefixed whole prefix when the periodicity
    reaches position 1).
    """
    if j <= s:
        raise StageRangeError(f"marker strings need j > {s}")
    w0 = T.beg[j - s + 1]
    endj = T.end[j]
    res = window_longest_border(T, Occurrence(w0, endj))
    if 2 * res.pp > s - 2:
        kind, start = KIND_WINDOW, w0
    else:
        ext = ridx.lcs(w0 - 1, endj - res.border_len)
        sigma = w0 - ext
        if sigma == 1:
            return SjRecord(j, KIND_SENTINEL_PREFIXED, None, [])
        kind, start = KIND_SUFFIX, sigma - 1
    pattern = factor_rle(T, Occurrence(start, endj))
    length = endj - start + 1
    ends = [st + length - 1 for st in find_occurrences(gidx, pattern)
            if st + length - 1 != endj]
    return SjRecord(j, kind, start, ends)


def rm_long_bordered(T: RleString, gidx: TruncatedRleIndex, ridx: ReversedIndex,
                     geometry, s: int, C: List[Occurrence]) -> List[Occurrence]:
    """Per run end j, the longest candidate ending at End_j with no long
    border; every returned occurrence is unbordered given that candidates
    carry no short border."""
    x, y, z = geometry
    by_end = {}
    for c in sorted(C):
        by_end.setdefault(c.end, []).append(c)
    out = []
    for j in range(y, z + 1):
        endj = T.end[j]
        lst = by_end.get(endj)
        if not lst:
            continue
        sj = compute_sj(T, gidx, ridx, j, s)
        # occurrences ending at or past End_j cannot be border prefix-occurrences
        occ_ends = [zeta for zeta in sj.occ_ends if zeta < endj]
        ci = 0
        oi = 0
        while ci < len(lst):
            if oi >= len(occ_ends):
                out.append(lst[ci])  # no occurrence certifies a border: unbordered
                break
            zeta = occ_ends[oi]
            start = lst[ci].start
            if zeta < start:
                oi += 1
                continue
            lam = ridx.lcs(endj, zeta)
            COUNTERS.bump()
            if zeta - lam + 1 <= start:
                # T[start..zeta] recurs as a suffix of T[1..zeta]: bordered;
                # every candidate starting at or before zeta is bordered too
                while ci < len(lst) and lst[ci].start <= zeta:
                    ci += 1
            else:
                oi += 1
    return out
