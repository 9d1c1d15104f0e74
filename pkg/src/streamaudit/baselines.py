"""Naive label-only classifiers: incremental majority, persistence, and
the rho-parameterized random-restart majority, plus the rho sweep.

The random-restart classifier keeps label counts over a window since its
last restart, predicts the windowed majority, and after observing each
instance fires a restart with probability rho. A restart clears the
window and re-inserts the just-observed label, so the classifier
"continues training on the most recent data". That reading makes the two
endpoints exact identities rather than approximations:

    rho = 0  ->  incremental majority over the whole history
    rho = 1  ->  persistence (window always holds just the last label)

None of these classifiers look at features; they exist to show how much
accuracy label autocorrelation alone can buy.
"""

import io
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .diagnostics import FIRST_LABEL
from .errors import EmptyStream, InvalidRho
from .rng import SplitMix64, derive_seed


@dataclass(frozen=True)
class RestartPolicy:
    """Per-instance restart probability and the seed driving the draws."""

    rho: float
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.rho <= 1.0:
            raise InvalidRho(f"rho must be in [0, 1], got {self.rho}")


@dataclass(frozen=True)
class SweepConfig:
    rho_grid: tuple
    repetitions: int = 10
    master_seed: int = 42

    def __post_init__(self):
        grid = tuple(self.rho_grid)
        object.__setattr__(self, "rho_grid", grid)
        if any(not 0.0 <= r <= 1.0 for r in grid):
            raise InvalidRho("grid values must lie in [0, 1]")
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise ValueError("rho grid must be strictly increasing")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")


@dataclass(frozen=True)
class SweepResult:
    """All (rho, repetition, accuracy) rows plus per-rho summaries."""

    rows: tuple  # (rho, rep index, accuracy)
    config: SweepConfig

    def accuracies(self, rho: float) -> list:
        return [acc for r, _, acc in self.rows if r == rho]

    def summary(self) -> list:
        """Per-rho (rho, mean, min, max, stddev), in grid order."""
        out = []
        for rho in self.config.rho_grid:
            accs = self.accuracies(rho)
            mean = sum(accs) / len(accs)
            var = sum((a - mean) ** 2 for a in accs) / len(accs)
            out.append((rho, mean, min(accs), max(accs), math.sqrt(var)))
        return out

    def to_csv(self) -> str:
        out = io.StringIO()
        out.write(f"# master_seed={self.config.master_seed}\n")
        out.write("rho,rep,accuracy\n")
        for rho, rep, acc in self.rows:
            out.write(f"{rho!r},{rep},{acc!r}\n")
        return out.getvalue()

    def summary_to_csv(self) -> str:
        out = io.StringIO()
        out.write(f"# master_seed={self.config.master_seed}\n")
        out.write("rho,mean,min,max,stddev\n")
        for rho, mean, lo, hi, sd in self.summary():
            out.write(f"{rho!r},{mean!r},{lo!r},{hi!r},{sd!r}\n")
        return out.getvalue()


class _WindowedMajority:
    """Label counts since the last restart, with most-recent tie-breaking."""

    def __init__(self):
        self.counts = {}
        self.last_seen = {}
        self.last_label = None
        self._t = 0

    def observe(self, label):
        self._t += 1
        self.counts[label] = self.counts.get(label, 0) + 1
        self.last_seen[label] = self._t
        self.last_label = label

    def restart(self):
        label = self.last_label
        self.counts = {}
        if label is not None:
            self.counts[label] = 1

    def predict(self, cold_start):
        if not self.counts:
            if self.last_label is not None:
                return self.last_label
            return cold_start  # only reachable at t=1; resolved by caller
        best = None
        for label, count in self.counts.items():
            key = (count, self.last_seen[label])
            if best is None or key > best[0]:
                best = (key, label)
        return best[1]


def _trace(labels, rho, rng, cold_start):
    """Prediction trace of the windowed restart classifier. rho=0 with any
    rng reproduces the incremental majority; rho=1 reproduces persistence."""
    if len(labels) == 0:
        raise EmptyStream("cannot run a baseline on an empty stream")
    window = _WindowedMajority()
    predictions = []
    for t, label in enumerate(labels):
        if t == 0:
            pred = labels[0] if cold_start == FIRST_LABEL else cold_start
        else:
            pred = window.predict(cold_start)
        predictions.append(pred)
        window.observe(label)
        if rho > 0.0 and rng.bernoulli(rho):
            window.restart()
    return predictions


def _score(labels, predictions) -> float:
    return sum(p == y for p, y in zip(predictions, labels)) / len(labels)


def majority_baseline(labels: Sequence, cold_start=FIRST_LABEL) -> float:
    """Prequential incremental-majority accuracy: at each step predict the
    majority class of everything seen so far, ties toward the most
    recently observed label."""
    return _score(labels, majority_trace(labels, cold_start=cold_start))


def majority_trace(labels: Sequence, cold_start=FIRST_LABEL) -> list:
    return _trace(labels, 0.0, None, cold_start)


def random_restart_run(labels: Sequence, policy: RestartPolicy,
                       cold_start=FIRST_LABEL) -> float:
    """Accuracy of one seeded run of the random-restart classifier."""
    return _score(labels, random_restart_trace(labels, policy,
                                               cold_start=cold_start))


def random_restart_trace(labels: Sequence, policy: RestartPolicy,
                         cold_start=FIRST_LABEL) -> list:
    """Full prediction trace of one seeded run (audit mode)."""
    return _trace(labels, policy.rho, SplitMix64(policy.seed), cold_start)


def rho_sweep(labels: Sequence, config: SweepConfig,
              cold_start=FIRST_LABEL) -> SweepResult:
    """Run the restart classifier over the whole (rho, repetition) grid.

    Each cell gets an independent seed derived from (master_seed, rho
    index, repetition index), so the sweep is reproducible and cells are
    order-independent.
    """
    rows = []
    for i, rho in enumerate(config.rho_grid):
        for rep in range(config.repetitions):
            seed = derive_seed(config.master_seed, i, rep)
            acc = random_restart_run(labels, RestartPolicy(rho, seed),
                                     cold_start=cold_start)
            rows.append((rho, rep, acc))
    return SweepResult(tuple(rows), config)
