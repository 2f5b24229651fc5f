"""Character-level brute-force reference implementations.

Everything here works on decoded text and is deliberately independent of the
run-level compute path: no function in this module calls into the fast
index/border/stage machinery.  These are the oracles the test suite trusts.
"""

import math
from typing import List, Optional, Sequence, Set, Tuple

from .errors import BudgetExceededError
from .rle import Occurrence, RleString, rle_decode, run_of_position

DEFAULT_MAX_N = 2**20


def _check_budget(text, max_n=DEFAULT_MAX_N):
    if len(text) > max_n:
        raise BudgetExceededError(f"oracle input of length {len(text)} exceeds {max_n}")


def border_array_naive(text: Sequence) -> List[int]:
    """bord[i] = length of the longest border of text[:i+1], by definition."""
    n = len(text)
    out = []
    for ln in range(1, n + 1):
        best = 0
        for k in range(ln - 1, 0, -1):
            if text[:k] == text[ln - k:ln]:
                best = k
                break
        out.append(best)
    return out


def _kmp_border_array(text: Sequence) -> List[int]:
    # linear-time border array; used only to keep the O(n^2) oracle at O(n^2)
    n = len(text)
    bord = [0] * n
    k = 0
    for i in range(1, n):
        while k > 0 and text[i] != text[k]:
            k = bord[k - 1]
        if text[i] == text[k]:
            k += 1
        else:
            k = 0
        bord[i] = k
    return bord


def naive_is_unbordered(text: Sequence) -> bool:
    return naive_shortest_border(text) == 0


def naive_shortest_border(text: Sequence) -> int:
    """Length of the shortest border, or 0 if unbordered."""
    n = len(text)
    for k in range(1, n):
        if text[:k] == text[n - k:]:
            return k
    return 0


def naive_longest_border(text: Sequence) -> int:
    n = len(text)
    for k in range(n - 1, 0, -1):
        if text[:k] == text[n - k:]:
            return k
    return 0


def run_count(text: Sequence) -> int:
    r = 0
    prev = object()
    for c in text:
        if c != prev:
            r += 1
            prev = c
    return r


def naive_pp(text: Sequence) -> int:
    """Run count of the string minus the run count of its longest border."""
    b = naive_longest_border(text)
    return run_count(text) - (run_count(text[:b]) if b else 0)


def naive_rsbord(text: Sequence) -> List[int]:
    """Per run-end prefix: run count of its shortest border (0 if unbordered)."""
    _check_budget(text)
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        end = pos
        while end + 1 < n and text[end + 1] == text[pos]:
            end += 1
        prefix = text[:end + 1]
        sb = naive_shortest_border(prefix)
        out.append(run_count(prefix[:sb]) if sb else 0)
        pos = end + 1
    return out


def naive_luf(text: Sequence, max_n=DEFAULT_MAX_N) -> Tuple[int, Set[Tuple[int, int]]]:
    """Exact longest-unbordered-factor answer via one border array per suffix.

    Returns (length, set of 1-based (start, end) occurrences).  Unary strings
    are canonicalized to the single occurrence (1, 1).
    """
    _check_budget(text, max_n)
    n = len(text)
    if n == 0:
        raise BudgetExceededError("empty input")
    if all(c == text[0] for c in text):
        return 1, {(1, 1)}
    best = 0
    occs = set()
    for i in range(n):
        bord = _kmp_border_array(text[i:])
        for ln in range(best, n - i + 1):
            if ln >= 1 and bord[ln - 1] == 0:
                if ln > best:
                    best = ln
                    occs = set()
                occs.add((i + 1, i + ln))
    return best, occs


def naive_lcp(a: Sequence, b: Sequence) -> int:
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def naive_lcs(a: Sequence, b: Sequence) -> int:
    return naive_lcp(a[::-1], b[::-1])


def naive_occurrences(text: Sequence, pattern: Sequence) -> List[int]:
    """All 1-based start positions of pattern in text, by direct scan."""
    n, k = len(text), len(pattern)
    return [i + 1 for i in range(n - k + 1) if text[i:i + k] == pattern]


def naive_wlsq(segments, v, w1, w2) -> Optional[Tuple[int, int]]:
    """Lowest segment stabbed by x=v with weight in [w1, w2]; ties by id."""
    best = None
    for s in segments:
        if s.x_lo <= v <= s.x_hi and w1 <= s.weight <= w2:
            key = (s.y, s.id)
            if best is None or key < best:
                best = key
    if best is None:
        return None
    return best[1], best[0]


def _borders_of(text: Sequence) -> List[int]:
    """All border lengths of text, descending, via the border-array chain."""
    if not text:
        return []
    bord = _kmp_border_array(text)
    out = []
    k = bord[-1]
    while k > 0:
        out.append(k)
        k = bord[k - 1]
    return out


def naive_m_table(T: RleString, x: int, y: int, z: int, tau: int):
    """The per-run-end short-border table, straight from its definition.

    Entry [r][j] (1-based row r, column j) holds the maximum full-run exponent
    of the T-run containing the first character of the suffix-occurrence, over
    the borders of  T[End_tau..End_z] $ T[Beg_x..End_{y+j-1}]  whose run count
    is at most r; 0 if there is no such border; math.inf for columns where the
    pieces share first and last characters.  Rows run 1..s with s = isqrt(m).
    """
    text = rle_decode(T)
    s = math.isqrt(T.m)
    cols = z - y + 1
    left = text[T.end[tau] - 1:T.end[z]]
    table = [[0] * (cols + 1) for _ in range(s + 1)]
    for j in range(1, cols + 1):
        jp = y + j - 1
        if T.chars[jp] == T.chars[tau]:
            for r in range(1, s + 1):
                table[r][j] = math.inf
            continue
        right = text[T.beg[x] - 1:T.end[jp]]
        f = left + [-1] + right
        for lam in _borders_of(f):
            rb = run_count(f[:lam])
            if rb > s:
                continue
            pos = T.end[jp] - lam + 1  # first char of the suffix-occurrence
            e_s = T.exps[run_of_position(T, pos)]
            for r in range(rb, s + 1):
                if table[r][j] < e_s:
                    table[r][j] = e_s
    return table


def naive_candidate(T: RleString, x: int, y: int, z: int, s: int, i: int):
    """Longest factor T[Beg_i..End_j'] (y <= j' <= z) with no border of run
    count <= s, scanning run-end endings right to left; None if all endings
    are short-bordered."""
    text = rle_decode(T)
    v = text[T.beg[i] - 1:T.end[z]]
    bord = _kmp_border_array(v)
    for jp in range(z, y - 1, -1):
        ln = T.end[jp] - T.beg[i] + 1
        k = bord[ln - 1]
        short = False
        while k > 0:
            if run_of_position(T, T.beg[i] + k - 1) - i + 1 <= s:
                short = True
                break
            k = bord[k - 1]
        if not short:
            return Occurrence(T.beg[i], T.end[jp])
    return None


def naive_sj(T: RleString, j: int, s: int):
    """Shortest suffix of $T[1..End_j], no shorter than the last s runs, whose
    run-level pseudo period exceeds s/2 - 1.  Returns (kind, start, pp) with
    kind in {"window", "suffix", "sentinel"}; start is absent for sentinel."""
    text = rle_decode(T)
    w0 = T.beg[j - s + 1]
    endj = T.end[j]
    for sigma in range(w0, 0, -1):
        pp = naive_pp(text[sigma - 1:endj])
        if 2 * pp > s - 2:
            if sigma == w0:
                return "window", sigma, pp
            return "suffix", sigma, pp
    # $-prefixed string: unbordered, so its pseudo period is its run count
    return "sentinel", None, run_count(text[:endj]) + 1
