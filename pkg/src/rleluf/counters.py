"""Global instrumentation: run-level operation counts and memory-word accounting.

Counters are deterministic for single-threaded runs; the driver's optional
thread pool merges per-stage deltas so totals stay reproducible.
"""

from dataclasses import dataclass


@dataclass
class Counters:
    run_cmp: int = 0        # run-level comparisons / walk steps across all layers
    wlsq_visits: int = 0    # segment-tree nodes visited by stabbing queries
    wlsq_steps: int = 0     # binary-search plus bridge-adjust steps in stabbing queries
    words: int = 0          # currently live auxiliary memory, in machine words
    words_peak: int = 0

    def bump(self, n=1):
        self.run_cmp += n

    def alloc(self, nwords):
        self.words += nwords
        if self.words > self.words_peak:
            self.words_peak = self.words

    def free(self, nwords):
        self.words -= nwords

    def add(self, other):
        self.run_cmp += other.run_cmp
        self.wlsq_visits += other.wlsq_visits
        self.wlsq_steps += other.wlsq_steps
        # memory of merged workers is treated as if it were live simultaneously
        self.alloc(other.words_peak)
        self.free(other.words_peak)

    def reset(self):
        self.run_cmp = 0
        self.wlsq_visits = 0
        self.wlsq_steps = 0
        self.words = 0
        self.words_peak = 0

    def snapshot(self):
        return {
            "run_cmp": self.run_cmp,
            "wlsq_visits": self.wlsq_visits,
            "wlsq_steps": self.wlsq_steps,
            "words_peak": self.words_peak,
        }


COUNTERS = Counters()
