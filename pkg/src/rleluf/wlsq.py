"""Weighted lowest stabbing queries.

Horizontal segments with integer weights live on an N x N grid.  A query
(v, w1, w2) asks for the lowest segment crossed by the vertical line x = v
whose weight lies in [w1, w2]; ties on height go to the smaller id.

Structure: a segment tree over x with each segment stored in its canonical
node cover, node lists kept in weight order, a range-minimum structure over
each node's heights, and fractional cascading over the weight lists so that
after one binary search at the root every node on the query path locates the
weight window in O(1).  A ``cascade=False`` build replaces the cascading
bridges with per-node binary searches, for differential testing.
"""

from typing import List, NamedTuple, Optional, Tuple

from .counters import COUNTERS
from .errors import GridBoundsError


class WeightedSegment(NamedTuple):
    x_lo: int
    x_hi: int
    y: int
    weight: int
    id: int


class _YMin:
    """Range-min over (y, id) pairs; sparse table above a small cutoff."""

    __slots__ = ("keys", "table")

    def __init__(self, keys):
        self.keys = keys
        n = len(keys)
        if n <= 8:
            self.table = None
            return
        table = [list(range(n))]
        span = 1
        while 2 * span <= n:
            prev = table[-1]
            row = [0] * (n - 2 * span + 1)
            for i in range(len(row)):
                a, b = prev[i], prev[i + span]
                row[i] = a if keys[a] <= keys[b] else b
            table.append(row)
            span *= 2
        self.table = table

    def argmin(self, i, j):
        keys = self.keys
        if self.table is None:
            best = i
            for k in range(i + 1, j + 1):
                if keys[k] < keys[best]:
                    best = k
            return best
        k = (j - i + 1).bit_length() - 1
        row = self.table[k]
        a = row[i]
        b = row[j - (1 << k) + 1]
        return a if keys[a] <= keys[b] else b

    @property
    def words(self):
        if self.table is None:
            return 2 * len(self.keys)
        return 2 * len(self.keys) + sum(len(r) for r in self.table)


class WlsqIndex:
    def __init__(self, segments: List[WeightedSegment], grid_size: int, cascade=True):
        if grid_size < 1:
            raise GridBoundsError("grid size must be positive")
        for s in segments:
            if not (1 <= s.x_lo <= s.x_hi <= grid_size):
                raise GridBoundsError(f"segment {s} outside the {grid_size}x{grid_size} grid")
        self.grid = grid_size
        self.cascade = cascade
        leaf = 1
        while leaf < grid_size:
            leaf *= 2
        self.leaf = leaf
        nn = 2 * leaf
        node_w = [None] * nn
        node_y = [None] * nn
        node_id = [None] * nn
        for s in sorted(segments, key=lambda s: (s.weight, s.id)):
            self._insert(node_w, node_y, node_id, 1, 1, leaf, s)
        self.node_w = [w or [] for w in node_w]
        self.node_y = [y or [] for y in node_y]
        self.node_id = [i or [] for i in node_id]
        self.ymin = [None] * nn
        words = 0
        for u in range(1, nn):
            if self.node_w[u]:
                keys = list(zip(self.node_y[u], self.node_id[u]))
                self.ymin[u] = _YMin(keys)
                words += 3 * len(keys) + self.ymin[u].words
        if cascade:
            self.aug = aug = [None] * nn
            self.bridge_own = [None] * nn
            self.bridge_lc = [None] * nn
            self.bridge_rc = [None] * nn
            for u in range(nn - 1, 0, -1):
                own = self.node_w[u]
                lc = aug[2 * u][1::2] if 2 * u < nn and aug[2 * u] else []
                rc = aug[2 * u + 1][1::2] if 2 * u + 1 < nn and aug[2 * u + 1] else []
                merged = sorted(own + lc + rc)
                aug[u] = merged
                self.bridge_own[u] = _bridges(merged, own)
                if 2 * u < nn:
                    self.bridge_lc[u] = _bridges(merged, aug[2 * u] or [])
                    self.bridge_rc[u] = _bridges(merged, aug[2 * u + 1] or [])
                words += 4 * len(merged) + 4
        self.size = len(segments)
        self.words = words
        self.last_visits = 0
        self.last_steps = 0
        COUNTERS.alloc(words)

    def _insert(self, node_w, node_y, node_id, u, lo, hi, s):
        if s.x_lo <= lo and hi <= s.x_hi:
            if node_w[u] is None:
                node_w[u] = []
                node_y[u] = []
                node_id[u] = []
            node_w[u].append(s.weight)
            node_y[u].append(s.y)
            node_id[u].append(s.id)
            return
        mid = (lo + hi) // 2
        if s.x_lo <= mid:
            self._insert(node_w, node_y, node_id, 2 * u, lo, mid, s)
        if s.x_hi > mid:
            self._insert(node_w, node_y, node_id, 2 * u + 1, mid + 1, hi, s)

    def _locate(self, arr, key):
        """First index with arr[i] >= key, counting loop steps."""
        if not arr or key <= arr[0]:
            return 0
        lo, hi = 0, len(arr)
        steps = 0
        while lo < hi:
            steps += 1
            mid = (lo + hi) // 2
            if arr[mid] < key:
                lo = mid + 1
            else:
                hi = mid
        self.last_steps += steps
        return lo

    def query(self, v: int, w1: int, w2: int) -> Optional[Tuple[int, int]]:
        """(id, y) of the lowest stabbed segment with weight in [w1, w2]."""
        self.last_visits = 0
        self.last_steps = 0
        best = None
        if w1 > w2 or v < 1 or v > self.grid or self.size == 0:
            return None
        k1, k2 = w1, w2 + 1
        u, lo, hi = 1, 1, self.leaf
        if self.cascade:
            t1 = self._locate(self.aug[1], k1)
            t2 = self._locate(self.aug[1], k2)
        while True:
            self.last_visits += 1
            if self.cascade:
                a = self.bridge_own[u][t1]
                b = self.bridge_own[u][t2] - 1
            else:
                own = self.node_w[u]
                a = self._locate(own, k1)
                b = self._locate(own, k2) - 1
            if a <= b:
                k = self.ymin[u].argmin(a, b)
                key = self.ymin[u].keys[k]
                if best is None or key < best:
                    best = key
            if lo == hi:
                break
            mid = (lo + hi) // 2
            child = 2 * u if v <= mid else 2 * u + 1
            if self.cascade:
                t1 = self._adjust(child, self.bridge_lc[u] if v <= mid else self.bridge_rc[u], t1, k1)
                t2 = self._adjust(child, self.bridge_lc[u] if v <= mid else self.bridge_rc[u], t2, k2)
            if v <= mid:
                u, hi = child, mid
            else:
                u, lo = child, mid + 1
        COUNTERS.wlsq_visits += self.last_visits
        COUNTERS.wlsq_steps += self.last_steps
        if best is None:
            return None
        return best[1], best[0]

    def _adjust(self, child, bridge, t, key):
        tc = bridge[t]
        arr = self.aug[child]
        while tc > 0 and arr[tc - 1] >= key:
            tc -= 1
            self.last_steps += 1
        return tc

    def release(self):
        COUNTERS.free(self.words)


def _bridges(merged, target):
    """bridge[t] = first index in target with value >= merged[t]; sentinel at the end."""
    out = [0] * (len(merged) + 1)
    j = 0
    for t, w in enumerate(merged):
        while j < len(target) and target[j] < w:
            j += 1
        out[t] = j
    out[len(merged)] = len(target)
    return out


def wlsq_build(segments, grid_size, cascade=True) -> WlsqIndex:
    return WlsqIndex(segments, grid_size, cascade)


def wlsq_query(idx: WlsqIndex, v, w1, w2):
    return idx.query(v, w1, w2)
