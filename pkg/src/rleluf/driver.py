"""End-to-end computation of all longest unbordered factors.

Work splits by run count of the answer: factors spanning at most 4*sqrt(m)
runs are found by running the run-level shortest-border construction over
every window of that many runs; longer factors are found stage by stage,
where stage k collects candidates ending in block k via the stage query and
then removes the ones carrying a long border.  Every step works on runs
alone, so time and memory depend on m and never on the decoded length.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Set, Tuple

from .borders import rsbord
from .candidates import build_stage, candidate
from .counters import COUNTERS
from .errors import EmptyInputError
from .index import build_index, build_reversed_index
from .long_border import rm_long_bordered
from .rle import Occurrence, RleString, factor_rle


@dataclass
class LufResult:
    length: int
    occurrences: List[Occurrence]
    factors_rle: List[Tuple[Tuple[int, int], ...]] = field(default_factory=list)

    @property
    def occurrence_set(self) -> Set[Tuple[int, int]]:
        return {(o.start, o.end) for o in self.occurrences}


def block_partition(m: int, s: int) -> List[Tuple[int, int]]:
    """Consecutive blocks of exactly s runs; the final block may be shorter."""
    return [(a, min(a + s - 1, m)) for a in range(1, m + 1, s)]


def longest_short_ub(T: RleString) -> LufResult:
    """Longest unbordered factors among those spanning at most 4*sqrt(m) runs.

    Every such factor is a prefix of the window of 4*sqrt(m) runs at its start
    run, so scanning each window's run-level shortest-border array and keeping
    the zero entries finds them all, with every occurrence.
    """
    m = T.m
    if m == 1:
        return _unary_result(T)
    s = math.isqrt(m)
    span = 4 * s
    best = 0
    occs = set()
    chars, exps, beg, end = T.chars, T.exps, T.beg, T.end
    for i in range(1, m + 1):
        hi = min(i + span - 1, m)
        window = RleString([(chars[k], exps[k]) for k in range(i, hi + 1)])
        vals = rsbord(window)
        for off, v in enumerate(vals):
            if v == 0:
                j = i + off
                ln = end[j] - beg[i] + 1
                if ln > best:
                    best = ln
                    occs = set()
                if ln == best:
                    occs.add(Occurrence(beg[i], end[j]))
    return _assemble(T, best, occs)


def _unary_result(T: RleString) -> LufResult:
    # a unary string's longest unbordered factor is one character; reporting
    # all n occurrences would be output linear in n, so canonicalize to (1, 1)
    return LufResult(1, [Occurrence(1, 1)], [((T.chars[1], 1),)])


def _run_stage(T, gidx, ridx, k, s, blocks):
    ctx = build_stage(T, gidx, k, s, blocks)
    C = []
    for i in range(1, (k - 4) * s + 1):
        ans = candidate(ctx, i)
        if ans is not None:
            C.append(ans)
    U = rm_long_bordered(T, gidx, ridx, (ctx.x, ctx.y, ctx.z), s, C)
    ctx.release()
    return U


def longest_unbordered_factors(T: RleString, threads: int = 1) -> LufResult:
    """All occurrences of all longest unbordered factors of T."""
    if T.m == 0:
        raise EmptyInputError("empty input")
    if T.m == 1:
        return _unary_result(T)
    seed = longest_short_ub(T)
    best = seed.length
    occs = set(seed.occurrences)
    m = T.m
    s = math.isqrt(m)
    blocks = block_partition(m, s)
    nb = len(blocks)
    if nb >= 5:
        gidx = build_index(T)
        ridx = build_reversed_index(T)
        stages = range(5, nb + 1)
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(
                    lambda k: (k, _run_stage(T, gidx, ridx, k, s, blocks)), stages))
        else:
            results = [(k, _run_stage(T, gidx, ridx, k, s, blocks)) for k in stages]
        for _, U in sorted(results):
            if not U:
                continue
            ell = max(o.length for o in U)
            if ell < best:
                continue
            if ell > best:
                best = ell
                occs = set()
            occs.update(o for o in U if o.length == ell)
    return _assemble(T, best, occs)


def _assemble(T: RleString, best: int, occs) -> LufResult:
    ordered = sorted(occs)
    seen = {}
    for o in ordered:
        key = tuple(factor_rle(T, o).runs)
        if key not in seen:
            seen[key] = o
    factors = [k for k, _ in sorted(seen.items(), key=lambda kv: kv[1])]
    return LufResult(best, ordered, factors)
