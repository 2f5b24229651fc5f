"""Sparse-table range-minimum / range-maximum structures.

O(N log N) build, O(1) query, returning an index that attains the optimum
(ties resolved to the smallest index).  Tiny inputs fall back to a direct
scan to avoid per-table overhead; behaviour is identical.
"""

import numpy as np

from .counters import COUNTERS

_SCAN_CUTOFF = 8


class _Scan:
    __slots__ = ("vals", "_want_min")

    def __init__(self, vals, want_min):
        self.vals = list(vals)
        self._want_min = want_min

    def query(self, i, j):
        vals = self.vals
        best = i
        if self._want_min:
            for k in range(i + 1, j + 1):
                if vals[k] < vals[best]:
                    best = k
        else:
            for k in range(i + 1, j + 1):
                if vals[k] > vals[best]:
                    best = k
        return best

    def value(self, i, j):
        return self.vals[self.query(i, j)]


class _Sparse:
    __slots__ = ("vals", "table", "logs", "_want_min")

    def __init__(self, vals, want_min):
        self.vals = list(vals)
        self._want_min = want_min
        n = len(vals)
        arr = np.asarray(vals, dtype=np.int64)
        idx = np.arange(n, dtype=np.int64)
        table = [idx]
        span = 1
        while 2 * span <= n:
            prev = table[-1]
            a = prev[: n - 2 * span + 1]
            b = prev[span: n - span + 1]
            va, vb = arr[a], arr[b]
            if want_min:
                take_b = (vb < va) | ((vb == va) & (b < a))
            else:
                take_b = (vb > va) | ((vb == va) & (b < a))
            table.append(np.where(take_b, b, a))
            span *= 2
        self.table = table
        logs = [0] * (n + 1)
        for k in range(2, n + 1):
            logs[k] = logs[k >> 1] + 1
        self.logs = logs
        COUNTERS.alloc(sum(len(t) for t in table) + n)

    def query(self, i, j):
        k = self.logs[j - i + 1]
        row = self.table[k]
        a = int(row[i])
        b = int(row[j - (1 << k) + 1])
        va, vb = self.vals[a], self.vals[b]
        if va == vb:
            return min(a, b)
        if (vb < va) == self._want_min:
            return b
        return a

    def value(self, i, j):
        return self.vals[self.query(i, j)]


def range_min(vals):
    """Structure answering argmin over vals[i..j] inclusive in O(1)."""
    if len(vals) <= _SCAN_CUTOFF:
        return _Scan(vals, True)
    return _Sparse(vals, True)


def range_max(vals):
    """Structure answering argmax over vals[i..j] inclusive in O(1)."""
    if len(vals) <= _SCAN_CUTOFF:
        return _Scan(vals, False)
    return _Sparse(vals, False)
