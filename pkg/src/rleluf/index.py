"""Truncated suffix indexing for RLE strings.

The index sorts the m suffixes that start at run ends, T[End_1..n] ...
T[End_m..n], entirely at run level: the comparison walker consumes whole runs
and never touches decoded characters, so build work depends on m only.  On
top of the sorted order sit

 * an O(1) lcp between any two in-run positions (``rlelcp``),
 * longest-common-suffix queries via the index of the reversed string,
 * pattern occurrence listing, and
 * per-window "best anchored match" queries (``LongestPrefIndex``), built
   over the conceptual concatenation  T . sentinel . window-copy  but stored
   as a merge of the global order with the few window suffixes.
"""

from functools import cmp_to_key
from typing import List, Optional, Tuple

from .counters import COUNTERS
from .errors import OffsetOutOfRangeError, PositionOutOfRangeError
from .rle import RleString, reverse, run_of_position
from .rmq import range_max, range_min


def _cmp_suffixes(T: RleString, a: int, b: int) -> Tuple[int, int]:
    """Compare T[End_a..n] with T[End_b..n]; returns (sign, lcp in characters).

    Pieces are (char, remaining) pairs: one character of run a resp. b, then
    whole runs.  Each loop iteration retires at least one piece.
    """
    chars, exps, m = T.chars, T.exps, T.m
    ia, ra = a, 1
    ib, rb = b, 1
    lcp = 0
    steps = 0
    while True:
        steps += 1
        ca, cb = chars[ia], chars[ib]
        if ca != cb:
            COUNTERS.bump(steps)
            return (-1 if ca < cb else 1), lcp
        step = ra if ra < rb else rb
        lcp += step
        ra -= step
        rb -= step
        a_done = ra == 0 and ia == m
        b_done = rb == 0 and ib == m
        if a_done or b_done:
            COUNTERS.bump(steps)
            if a_done and b_done:
                return 0, lcp
            return (-1 if a_done else 1), lcp
        if ra == 0:
            ia += 1
            ra = exps[ia]
        if rb == 0:
            ib += 1
            rb = exps[ib]


class TruncatedRleIndex:
    """Sorted run-end suffixes of one RLE string, with lcp and range support."""

    def __init__(self, host: RleString):
        self.host = host
        m = host.m
        order = sorted(range(1, m + 1),
                       key=cmp_to_key(lambda a, b: _cmp_suffixes(host, a, b)[0]))
        self.sa = order                       # rank (0-based) -> run index
        isa = [0] * (m + 1)
        for rank, h in enumerate(order):
            isa[h] = rank
        self.isa = isa                        # run index -> rank
        lcp = [-1] * m
        for rank in range(1, m):
            lcp[rank] = _cmp_suffixes(host, order[rank], order[rank - 1])[1]
        self.lcp = lcp
        self.rmq_lcp = range_min(lcp)
        self.prec_exp = [host.exps[h] for h in order]
        self.rmq_prec = range_max(self.prec_exp)
        COUNTERS.alloc(4 * m)

    def rlelcp(self, i: int, p: int, j: int, q: int) -> int:
        """lcp of T[Beg_i+p-1..n] and T[Beg_j+q-1..n] in O(1)."""
        T = self.host
        if not (1 <= i <= T.m and 1 <= j <= T.m):
            raise PositionOutOfRangeError("run index out of range")
        if not (1 <= p <= T.exps[i] and 1 <= q <= T.exps[j]):
            raise OffsetOutOfRangeError("offset outside its run")
        COUNTERS.bump()
        if i == j and p == q:
            return T.n - (T.beg[i] + p - 1) + 1
        if T.chars[i] != T.chars[j]:
            return 0
        ai = T.exps[i] - p + 1
        aj = T.exps[j] - q + 1
        if ai != aj:
            return ai if ai < aj else aj
        r1, r2 = self.isa[i], self.isa[j]
        if r1 > r2:
            r1, r2 = r2, r1
        return ai - 1 + self.rmq_lcp.value(r1 + 1, r2)


def build_index(r: RleString) -> TruncatedRleIndex:
    return TruncatedRleIndex(r)


class ReversedIndex:
    """Index of the reversed string, exposing longest-common-suffix queries
    between prefixes of the original string."""

    def __init__(self, host: RleString):
        self.host = host
        self.rev = reverse(host)
        self.idx = TruncatedRleIndex(self.rev)

    def lcs(self, a: int, b: int) -> int:
        """Length of the longest common suffix of T[1..a] and T[1..b]."""
        if a < 1 or b < 1:
            return 0
        if a == b:
            return a
        n = self.host.n
        rev = self.rev
        pa, pb = n - a + 1, n - b + 1
        ia = run_of_position(rev, pa)
        ib = run_of_position(rev, pb)
        return self.idx.rlelcp(ia, pa - rev.beg[ia] + 1, ib, pb - rev.beg[ib] + 1)


def build_reversed_index(r: RleString) -> ReversedIndex:
    return ReversedIndex(r)


def _cmp_suffix_vs_pieces(T: RleString, h: int, pieces) -> int:
    """Order T[End_h..n] against an explicit piece list.

    Returns -1 if the suffix sorts strictly before every string prefixed by
    the pieces, 0 if the pieces are a prefix of the suffix, +1 otherwise.
    """
    chars, exps, m = T.chars, T.exps, T.m
    ia, ra = h, 1
    k = 0
    rb = pieces[0][1]
    steps = 0
    while True:
        steps += 1
        ca = chars[ia]
        cb = pieces[k][0]
        if ca != cb:
            COUNTERS.bump(steps)
            return -1 if ca < cb else 1
        step = ra if ra < rb else rb
        ra -= step
        rb -= step
        if rb == 0:
            k += 1
            if k == len(pieces):
                COUNTERS.bump(steps)
                return 0
            rb = pieces[k][1]
        if ra == 0:
            if ia == m:
                COUNTERS.bump(steps)
                return -1  # suffix exhausted: proper prefix of the pattern
            ia += 1
            ra = exps[ia]


def find_occurrences(idx: TruncatedRleIndex, pattern: RleString,
                     first_at_least=True, last_at_least=True) -> List[int]:
    """All 1-based start positions of ``pattern`` in the host string.

    Interior pattern runs must coincide with host runs; the boundary runs land
    inside host runs of the same character with exponent at least the
    pattern's (or exactly equal when the corresponding flag is False).
    """
    T = idx.host
    pm = pattern.m
    out = []
    if pm == 1:
        c, e = pattern.chars[1], pattern.exps[1]
        for i in range(1, T.m + 1):
            if T.chars[i] == c and T.exps[i] >= e:
                out.extend(range(T.beg[i], T.end[i] - e + 2))
        return out
    e1 = pattern.exps[1]
    pieces = [(pattern.chars[1], 1)]
    pieces.extend((pattern.chars[k], pattern.exps[k]) for k in range(2, pm + 1))
    m = T.m
    lo, hi = 0, m
    while lo < hi:  # first rank with suffix >= pattern-prefix class
        mid = (lo + hi) // 2
        if _cmp_suffix_vs_pieces(T, idx.sa[mid], pieces) < 0:
            lo = mid + 1
        else:
            hi = mid
    start = lo
    hi = m
    while lo < hi:  # first rank beyond the prefix class
        mid = (lo + hi) // 2
        if _cmp_suffix_vs_pieces(T, idx.sa[mid], pieces) <= 0:
            lo = mid + 1
        else:
            hi = mid
    stop = lo
    if start >= stop:
        return []
    stack = [(start, stop - 1)]
    prec = idx.prec_exp
    while stack:  # range-max reporting of entries with first-run exponent >= e1
        a, b = stack.pop()
        if a > b:
            continue
        k = idx.rmq_prec.query(a, b)
        COUNTERS.bump()
        if prec[k] < e1:
            continue
        h = idx.sa[k]
        ok = prec[k] == e1 if not first_at_least else True
        if ok and not last_at_least and T.exps[h + pm - 2] != pattern.exps[pm]:
            ok = False
        if ok:
            out.append(T.end[h] - e1 + 1)
        stack.append((a, k - 1))
        stack.append((k + 1, b))
    out.sort()
    return out


class LongestPrefIndex:
    """Anchored-match queries for one window of runs [x..y].

    ``query(h, cap)`` returns, among runs z in [x..y], the one whose truncated
    factor T[End_z..End_y] has the longest common prefix with T[End_h..n]
    subject to that lcp being at most ``cap`` (None means unbounded), plus the
    lcp value itself; ties go to the smaller run index.  Returns None when
    every z exceeds the cap.
    """

    def __init__(self, T: RleString, gidx: TruncatedRleIndex, x: int, y: int):
        if not (1 <= x <= y <= T.m):
            raise PositionOutOfRangeError("invalid window")
        self.T = T
        self.x = x
        self.y = y
        m = T.m
        copies = list(range(x, y + 1))
        copies.sort(key=cmp_to_key(lambda a, b: self._cmp_copies(a, b)))
        merged = [0]  # 0 encodes the sentinel entry, smallest of all
        lcp = [-1]
        gi = 0
        ci = 0
        order = gidx.sa
        while gi < m or ci < len(copies):
            if gi == m:
                take_copy = True
            elif ci == len(copies):
                take_copy = False
            else:
                sign, _ = self._cmp_orig_copy(order[gi], copies[ci])
                take_copy = sign > 0
            if take_copy:
                merged.append(-copies[ci])  # negative encodes window copies
                ci += 1
            else:
                merged.append(order[gi])
                gi += 1
        M = len(merged)
        self.merged = merged
        pos_of_run = [0] * (m + 1)
        grank = [0] * M
        for rank in range(1, M):
            e = merged[rank]
            if e > 0:
                pos_of_run[e] = rank
                grank[rank] = gidx.isa[e]
        self.pos_of_run = pos_of_run
        for rank in range(1, M):
            a, b = merged[rank - 1], merged[rank]
            if a > 0 and b > 0:
                lcp.append(gidx.lcp[grank[rank]])
            elif a == 0:
                lcp.append(0)
            else:
                lcp.append(self._lcp_pair(a, b))
        self.lcp = lcp
        self.rmq_lcp = range_min(lcp)
        prev_copy = [-1] * M
        last = -1
        for rank in range(M):
            if merged[rank] < 0:
                last = rank
            prev_copy[rank] = last
        next_copy = [M] * M
        nxt = M
        for rank in range(M - 1, -1, -1):
            if merged[rank] < 0:
                nxt = rank
            next_copy[rank] = nxt
        self.prev_copy = prev_copy
        self.next_copy = next_copy
        self.words = 5 * M
        COUNTERS.alloc(self.words)

    def _copy_pieces(self, z):
        T = self.T
        pieces = [(T.chars[z], 1)]
        pieces.extend((T.chars[k], T.exps[k]) for k in range(z + 1, self.y + 1))
        return pieces

    def _cmp_copies(self, a, b):
        sign, _ = _cmp_pieces(self._copy_pieces(a), self._copy_pieces(b))
        return sign

    def _cmp_orig_copy(self, h, z):
        """Original entry T[End_h..n]-with-tail vs window copy T[End_z..End_y].

        The conceptual tail (sentinel + window copy) sorts below every real
        symbol, so on full equality or original-exhaustion the original wins
        the 'smaller' side; on copy-exhaustion the copy is the prefix and is
        smaller.
        """
        T = self.T
        chars, exps, m = T.chars, T.exps, T.m
        ia, ra = h, 1
        pieces = self._copy_pieces(z)
        k = 0
        rb = pieces[0][1]
        lcp = 0
        steps = 0
        while True:
            steps += 1
            ca = chars[ia]
            cb = pieces[k][0]
            if ca != cb:
                COUNTERS.bump(steps)
                return (-1 if ca < cb else 1), lcp
            step = ra if ra < rb else rb
            lcp += step
            ra -= step
            rb -= step
            a_done = ra == 0 and ia == m
            b_done = rb == 0 and k == len(pieces) - 1
            if a_done or b_done:
                COUNTERS.bump(steps)
                if a_done and b_done:
                    return 1, lcp  # the original's sentinel tail continues past the copy
                return (-1 if a_done else 1), lcp
            if ra == 0:
                ia += 1
                ra = exps[ia]
            if rb == 0:
                k += 1
                rb = pieces[k][1]

    def _lcp_pair(self, a, b):
        """lcp of two adjacent merged entries where at least one is a copy."""
        if a < 0 and b < 0:
            return _cmp_pieces(self._copy_pieces(-a), self._copy_pieces(-b))[1]
        if a < 0:
            return self._cmp_orig_copy(b, -a)[1]
        return self._cmp_orig_copy(a, -b)[1]

    def _lcp_between(self, ra, rb):
        if ra == rb:
            return self.T.n + 1  # effectively infinite: same entry
        if ra > rb:
            ra, rb = rb, ra
        return self.rmq_lcp.value(ra + 1, rb)

    def query(self, h: int, cap: Optional[int]) -> Optional[Tuple[int, int]]:
        # h usually precedes the window, but anchored re-queries from inside
        # the window (h in [x..y]) are meaningful and allowed
        if not (1 <= h <= self.T.m):
            raise PositionOutOfRangeError("query run out of range")
        r_h = self.pos_of_run[h]
        M = len(self.merged)
        if cap is None:
            r1 = r2 = r_h
        else:
            lo, hi = 0, r_h
            while lo < hi:  # leftmost rank still sharing more than cap with r_h
                mid = (lo + hi) // 2
                COUNTERS.bump()
                if self._lcp_between(mid, r_h) >= cap + 1:
                    hi = mid
                else:
                    lo = mid + 1
            r1 = lo
            lo, hi = r_h, M - 1
            while lo < hi:
                mid = (lo + hi + 1) // 2
                COUNTERS.bump()
                if self._lcp_between(r_h, mid) >= cap + 1:
                    lo = mid
                else:
                    hi = mid - 1
            r2 = lo
        r3 = self.prev_copy[r1 - 1] if r1 >= 1 else -1
        r4 = self.next_copy[r2 + 1] if r2 + 1 < M else M
        best = None
        if r3 >= 0:
            z3 = -self.merged[r3]
            best = (self._lcp_between(r3, r_h), -z3)
        if r4 < M:
            z4 = -self.merged[r4]
            cand = (self._lcp_between(r_h, r4), -z4)
            if best is None or cand > best:
                best = cand
        if best is None:
            return None
        return -best[1], best[0]


def _cmp_pieces(pa, pb) -> Tuple[int, int]:
    """Lexicographic comparison of two finite piece lists; prefix sorts first."""
    ka = kb = 0
    ra = pa[0][1]
    rb = pb[0][1]
    lcp = 0
    steps = 0
    while True:
        steps += 1
        ca, cb = pa[ka][0], pb[kb][0]
        if ca != cb:
            COUNTERS.bump(steps)
            return (-1 if ca < cb else 1), lcp
        step = ra if ra < rb else rb
        lcp += step
        ra -= step
        rb -= step
        a_done = ra == 0 and ka == len(pa) - 1
        b_done = rb == 0 and kb == len(pb) - 1
        if a_done or b_done:
            COUNTERS.bump(steps)
            if a_done and b_done:
                return 0, lcp
            return (-1 if a_done else 1), lcp
        if ra == 0:
            ka += 1
            ra = pa[ka][1]
        if rb == 0:
            kb += 1
            rb = pb[kb][1]


def build_longest_pref(T: RleString, gidx: TruncatedRleIndex, x: int, y: int) -> LongestPrefIndex:
    return LongestPrefIndex(T, gidx, x, y)
