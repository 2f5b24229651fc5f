"""Border machinery at the character level and at the run level.

The run-level pieces treat an RLE string as a token string over
(symbol, exponent) pairs.  A border of the full string whose run count is at
least 3 always consists of a full copy of the first run, a token-level border
of the inner token string, and a full copy of the last run; the two boundary
runs impose character-equality and exponent-dominance conditions on the runs
adjacent to the inner border's occurrences.  Borders of run count 1 and 2 are
handled as explicit special cases.
"""

from typing import List, NamedTuple, Optional, Sequence, Tuple

from .counters import COUNTERS
from .errors import EmptyInputError, PositionOutOfRangeError
from .rle import Occurrence, RleString, run_of_position


def border_array(seq: Sequence) -> List[int]:
    """bord[k] = longest-border length of seq[:k+1]; linear-time failure function."""
    if len(seq) == 0:
        raise EmptyInputError("border_array of empty sequence")
    n = len(seq)
    bord = [0] * n
    k = 0
    steps = 0
    for i in range(1, n):
        while k > 0 and seq[i] != seq[k]:
            k = bord[k - 1]
            steps += 1
        if seq[i] == seq[k]:
            k += 1
        else:
            k = 0
        bord[i] = k
        steps += 1
    COUNTERS.bump(steps)
    return bord


def border_group_array(seq: Sequence, bord: Optional[List[int]] = None) -> List[int]:
    """bg[k] = length of the shortest border of seq[:k+1] whose smallest period
    equals that of seq[:k+1], or k+1 if no border qualifies.

    Uses: the borders sharing the prefix's smallest period p form a chain
    segment below the longest border b = (k+1) - p, and b itself qualifies
    exactly when its own smallest period is p.
    """
    if bord is None:
        bord = border_array(seq)
    n = len(seq)
    bg = [0] * n
    for ell in range(1, n + 1):
        b = bord[ell - 1]
        if b == 0:
            bg[ell - 1] = ell
            continue
        p = ell - b
        if b < p or b - bord[b - 1] != p:
            bg[ell - 1] = ell
        else:
            bg[ell - 1] = bg[b - 1]
    COUNTERS.bump(n)
    return bg


def border_groups(bord: List[int], bg: List[int], ell: int):
    """Yield (longest, shortest) member lengths per border group of the prefix
    of length ``ell``, in decreasing length order.  Singleton groups yield
    longest == shortest."""
    lam = bord[ell - 1]
    while lam > 0:
        g = bg[lam - 1]
        if g > lam:
            g = lam
        yield lam, g
        COUNTERS.bump()
        lam = bord[g - 1]


def _tokens(r: RleString) -> List[Tuple[int, int]]:
    return list(zip(r.chars[1:], r.exps[1:]))


def rsbord(r: RleString) -> List[int]:
    """values[i-1] = run count of the shortest border of T[1..End_i], 0 if that
    prefix is unbordered.

    Borders of run count >= 3 are found by scanning the border groups of the
    inner token string; within a group only the longest and the shortest member
    need testing, because all non-longest members share the runs adjacent to
    their occurrences.
    """
    m = r.m
    chars, exps = r.chars, r.exps
    out = [0] * m
    out[0] = 1 if exps[1] >= 2 else 0
    if m == 1:
        return out
    inner = _tokens(r)[1:-1]  # runs 2..m-1 as tokens
    if inner:
        bord = border_array(inner)
        bg = border_group_array(inner, bord)
    for i in range(2, m + 1):
        if chars[1] == chars[i]:
            out[i - 1] = 1
            continue
        if (i >= 3 and chars[i - 1] == chars[1] and exps[i - 1] >= exps[1]
                and chars[2] == chars[i] and exps[2] >= exps[i]):
            out[i - 1] = 2
            continue
        if i < 4:
            continue
        ell = i - 2
        ci, ei = chars[i], exps[i]
        c1, e1 = chars[1], exps[1]
        best = 0
        for lam, g in border_groups(bord, bg, ell):
            for cand in ((g, lam) if g < lam else (lam,)):
                # follower of the prefix-occurrence is run cand+2,
                # preceder of the suffix-occurrence is run i-1-cand
                fc, fe = inner[cand]
                pc, pe = inner[ell - cand - 1]
                COUNTERS.bump(2)
                if fc == ci and fe >= ei and pc == c1 and pe >= e1:
                    if best == 0 or cand + 2 < best:
                        best = cand + 2
                    break  # shorter member wins within the group
        out[i - 1] = best
    return out


class PseudoPeriodResult(NamedTuple):
    pp: int            # run count of the window minus run count of its border
    border_len: int    # character length of the longest border (0 if none)
    border_rle: int    # run count of the longest border (0 if none)


def window_longest_border(r: RleString, occ: Occurrence) -> PseudoPeriodResult:
    """Longest border of the run-bounded window ``occ`` and its pseudo period.

    Works entirely on the window's run tokens; the border itself may start or
    end mid-run, which only ever happens for borders of run count 1 or 2.
    """
    u = run_of_position(r, occ.start)
    v = run_of_position(r, occ.end)
    if occ.start != r.beg[u] or occ.end != r.end[v]:
        raise PositionOutOfRangeError("window must be run-bounded")
    chars, exps = r.chars, r.exps
    omega = v - u + 1
    if omega == 1:
        if exps[u] >= 2:
            return PseudoPeriodResult(0, exps[u] - 1, 1)
        return PseudoPeriodResult(1, 0, 0)
    best_len = 0
    best_rle = 0
    if chars[u] == chars[v]:
        best_len = min(exps[u], exps[v])
        best_rle = 1
    if (omega >= 3 and chars[v] == chars[u + 1] and exps[v] <= exps[u + 1]
            and chars[v - 1] == chars[u] and exps[v - 1] >= exps[u]):
        cand = exps[u] + exps[v]
        if cand > best_len:
            best_len, best_rle = cand, 2
    if omega >= 4:
        inner = [(chars[k], exps[k]) for k in range(u + 1, v)]
        bord = border_array(inner)
        bg = border_group_array(inner, bord)
        ell = omega - 2
        prefix_chars = [0] * (ell + 1)
        for k in range(ell):
            prefix_chars[k + 1] = prefix_chars[k] + inner[k][1]
        found = None
        for lam, g in border_groups(bord, bg, ell):
            fc, fe = inner[lam]
            pc, pe = inner[ell - lam - 1]
            COUNTERS.bump(2)
            if fc == chars[v] and fe >= exps[v] and pc == chars[u] and pe >= exps[u]:
                found = lam
                break
            if g < lam:
                fc, fe = inner[g]
                pc, pe = inner[ell - g - 1]
                COUNTERS.bump(2)
                if fc == chars[v] and fe >= exps[v] and pc == chars[u] and pe >= exps[u]:
                    found = bord[lam - 1]  # longest non-top member of the group
                    break
        if found is not None:
            cand = exps[u] + prefix_chars[found] + exps[v]
            if cand > best_len:
                best_len, best_rle = cand, found + 2
    return PseudoPeriodResult(omega - best_rle, best_len, best_rle)
