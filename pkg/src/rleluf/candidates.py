"""Per-stage candidate computation.

A stage k works on the window D = J_{k-1} J_k of two adjacent blocks of
floor(sqrt(m)) runs each.  For a start run i, the candidate query returns the
longest factor T[Beg_i..End_j'] ending at a run end inside J_k that has no
border of run count <= s, or None when every such factor has one.

The short-border structure of all factors ending in J_k is encoded, per
anchor run tau in the window, as a family of weighted segments over
(border run count, column) coordinates: column j carries, for each row r, the
largest full-run exponent seen at the start of a suffix-occurrence of a
border with run count <= r of the two-part string
T[End_tau..End_z] <sep> T[Beg_x..End_{y+j-1}].  Columns are step functions
with few distinct values, so each becomes a handful of segments, and the
rightmost column that stays below a queried exponent is found by one weighted
lowest-stabbing query (columns are numbered so that right means low).
"""

from typing import Dict, List, Optional

from .borders import border_array, border_group_array, border_groups
from .counters import COUNTERS
from .errors import StageRangeError
from .index import LongestPrefIndex, TruncatedRleIndex
from .rle import Occurrence, RleString, run_of_position
from .wlsq import WeightedSegment, WlsqIndex

_SEP = (-2, 0)  # token that never equals any (char, exp) run token


class StageContext:
    def __init__(self, T: RleString, gidx: TruncatedRleIndex, k: int, s: int,
                 x: int, y: int, z: int):
        self.T = T
        self.gidx = gidx
        self.k = k
        self.s = s
        self.x = x
        self.y = y
        self.z = z
        self.lp = LongestPrefIndex(T, gidx, x, z)
        self._segments: Dict[int, List[WeightedSegment]] = {}
        self._wlsq: Dict[int, WlsqIndex] = {}

    def segments_for(self, tau: int) -> List[WeightedSegment]:
        if tau not in self._segments:
            self._segments[tau] = _build_segments(self, tau)
        return self._segments[tau]

    def wlsq_for(self, tau: int) -> WlsqIndex:
        if tau not in self._wlsq:
            self._wlsq[tau] = WlsqIndex(self.segments_for(tau), max(self.s, 1))
        return self._wlsq[tau]

    def release(self):
        COUNTERS.free(self.lp.words)
        for w in self._wlsq.values():
            w.release()


def build_stage(T: RleString, gidx: TruncatedRleIndex, k: int, s: int, blocks) -> StageContext:
    if not (5 <= k <= len(blocks)):
        raise StageRangeError(f"stage {k} outside [5, {len(blocks)}]")
    x = blocks[k - 2][0]
    y, z = blocks[k - 1]
    return StageContext(T, gidx, k, s, x, y, z)


def _build_segments(ctx: StageContext, tau: int) -> List[WeightedSegment]:
    """Weighted segments encoding the short-border table anchored at tau.

    Adapts the run-level shortest-border scan: per column, the border groups
    of the two-part token string contribute at most two (run count, exponent)
    pairs each, and the column's non-decreasing step function is the running
    maximum of those pairs by run count.
    """
    T, x, y, z, s = ctx.T, ctx.x, ctx.y, ctx.z, ctx.s
    chars, exps = T.chars, T.exps
    a_tau = chars[tau]
    left_len = z - tau
    K = [(chars[q], exps[q]) for q in range(tau + 1, z + 1)]
    K.append(_SEP)
    K.extend((chars[q], exps[q]) for q in range(x, z))
    bord = border_array(K)
    bg = border_group_array(K, bord)
    segments = []
    sid = 0
    cols = z - y + 1
    for j in range(1, cols + 1):
        jp = y + j - 1
        if chars[jp] == a_tau:
            continue  # the factor's last character equals its first: always bordered
        breaks = {}
        cj, ej = chars[jp], exps[jp]
        if (s >= 2 and tau + 1 <= z and cj == chars[tau + 1] and ej <= exps[tau + 1]
                and chars[jp - 1] == a_tau):
            breaks[2] = exps[jp - 1]
        ell = left_len + 1 + (jp - x)
        for lam, g in border_groups(bord, bg, ell):
            if g + 2 > s:
                continue
            for cand in ((lam,) if g == lam else (lam, g)):
                if cand + 2 > s or cand + 1 > left_len:
                    continue
                fc, fe = K[cand]
                pos = ell - cand - 1
                if pos <= left_len:
                    continue  # preceder would be the separator or the left part
                pc, pe = K[pos]
                COUNTERS.bump(2)
                if fc == cj and fe >= ej and pc == a_tau:
                    q = cand + 2
                    if breaks.get(q, -1) < pe:
                        breaks[q] = pe
        ycoord = (z - y + 2) - j
        cur = 0
        seg_start = 1
        for q in sorted(breaks):
            val = breaks[q]
            if val > cur:
                if q > seg_start:
                    segments.append(WeightedSegment(seg_start, q - 1, ycoord, cur, sid))
                    sid += 1
                seg_start = q
                cur = val
        segments.append(WeightedSegment(seg_start, s, ycoord, cur, sid))
        sid += 1
    return segments


def candidate(ctx: StageContext, i: int) -> Optional[Occurrence]:
    """Longest factor T[Beg_i..End_j'] ending at a run end in block k with no
    short border; None when all such factors are short-bordered."""
    T, s = ctx.T, ctx.s
    x, y, z = ctx.x, ctx.y, ctx.z
    if not (1 <= i <= (ctx.k - 4) * s):
        raise StageRangeError(f"start run {i} outside [1, {(ctx.k - 4) * s}]")
    chars, exps, beg, end = T.chars, T.exps, T.beg, T.end
    alpha, lcp_a = ctx.lp.query(i, None)
    if lcp_a == 0:
        # the first character never recurs in the window: nothing can border
        return Occurrence(beg[i], end[z])
    g = run_of_position(T, end[i] + lcp_a - 1)
    p = g - i + 1
    if p == 1:
        if chars[z] != chars[i]:
            return Occurrence(beg[i], end[z])
        if z - 1 >= y:
            return Occurrence(beg[i], end[z - 1])
        return None
    au_len = beg[g] - end[i]
    e1 = lcp_a - au_len
    if exps[alpha + p - 1] == e1:
        t = alpha
        p_eff = p if p < s else s
    else:
        bres = ctx.lp.query(alpha, lcp_a)
        assert bres is not None  # adjacent run ends differ, so some z' stays under the cap
        beta = bres[0]
        L = ctx.gidx.rlelcp(i, exps[i], beta, exps[beta])
        if L <= au_len:
            t = alpha
            p_eff = (p - 1) if p - 1 < s else s
        else:
            t = beta
            p_eff = p if p < s else s
    hit = ctx.wlsq_for(t).query(p_eff, 0, exps[i] - 1)
    if hit is None:
        return None
    jstar = (z - y + 2) - hit[1]
    return Occurrence(beg[i], end[y + jstar - 1])
