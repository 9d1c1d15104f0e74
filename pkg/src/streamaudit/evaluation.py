"""Prequential (interleaved test-then-train) evaluation and the audit
protocol that grades accuracy figures against the naive bars.

A classifier is anything with predict/update/reset. Each instance is
predicted first and trained on second, in stream order, with no lookahead;
accuracy accumulates from the first instance (no warm-up exclusion, no
fading factor).

The audit verdict compares a subject accuracy against three label-only
bars computed from the same stream: the incremental-majority bar, the
independence bar (sum of squared priors) and the persistence bar. A
classifier only demonstrates adaptation worth having when it lands
strictly above the persistence bar; matching it proves nothing, so ties
grade as BelowPersistence.
"""

import csv
import enum
import io
import json
import math
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from . import baselines, diagnostics
from .errors import EmptyLog, EmptyStream, LabelMismatch, SchemaMismatch
from .rng import SplitMix64
from .stream_io import StreamDataset


class Classifier:
    """Behavioral contract: predict is read-only; update/reset mutate.

    After reset() the classifier behaves like a freshly constructed one.
    Subclasses bound to a dataset schema set self.schema so that
    prequential_eval can reject evaluation on a different dataset.
    """

    name = "classifier"
    schema = None

    def predict(self, features):
        raise NotImplementedError

    def update(self, features, label):
        raise NotImplementedError

    def reset(self):
        raise NotImplementedError


@dataclass(frozen=True)
class EvalReport:
    classifier: str
    n: int
    correct: int
    confusion: dict  # (true, predicted) -> count
    wall_time: float

    @property
    def accuracy(self) -> float:
        return self.correct / self.n

    def to_json(self, indent=2) -> str:
        # wall_time deliberately omitted: identical runs must serialize
        # byte-identically.
        confusion = {}
        for (true, pred), count in sorted(self.confusion.items()):
            confusion.setdefault(str(true), {})[str(pred)] = count
        return json.dumps({
            "classifier": self.classifier,
            "n": self.n,
            "correct": self.correct,
            "accuracy": self.accuracy,
            "confusion": confusion,
        }, indent=indent)


class Verdict(enum.Enum):
    ABOVE_PERSISTENCE = "AbovePersistence"
    BELOW_PERSISTENCE = "BelowPersistence"
    BELOW_MAJORITY = "BelowMajority"


@dataclass(frozen=True)
class AuditVerdict:
    subject_accuracy: float
    persistence_bar: float
    independence_bar: float
    majority_bar: float

    @property
    def margin(self) -> float:
        return self.subject_accuracy - self.persistence_bar

    @property
    def verdict(self) -> Verdict:
        if self.subject_accuracy > self.persistence_bar:
            return Verdict.ABOVE_PERSISTENCE
        if self.subject_accuracy < self.majority_bar:
            return Verdict.BELOW_MAJORITY
        return Verdict.BELOW_PERSISTENCE

    def to_json(self, n: Optional[int] = None,
                confusion: Optional[dict] = None, indent=2) -> str:
        conf = None
        if confusion is not None:
            conf = {}
            for (true, pred), count in sorted(confusion.items()):
                conf.setdefault(str(true), {})[str(pred)] = count
        return json.dumps({
            "n": n,
            "accuracy": self.subject_accuracy,
            "confusion": conf,
            "bars": {
                "majority": self.majority_bar,
                "independence": self.independence_bar,
                "persistence": self.persistence_bar,
            },
            "margin": self.margin,
            "verdict": self.verdict.value,
        }, indent=indent)


def prequential_eval(classifier: Classifier, ds: StreamDataset) -> EvalReport:
    """Single-pass test-then-train over the whole stream."""
    if ds.n_instances == 0:
        raise EmptyStream("cannot evaluate on an empty stream")
    bound = getattr(classifier, "schema", None)
    if bound is not None and bound != ds.schema:
        raise SchemaMismatch(
            f"classifier {classifier.name!r} is bound to a different schema")
    class_values = ds.class_values
    correct = 0
    confusion = {}
    start = time.perf_counter()
    for inst in ds.instances:
        true = class_values[inst.label]
        pred = classifier.predict(inst.features)
        if pred == true:
            correct += 1
        key = (true, pred)
        confusion[key] = confusion.get(key, 0) + 1
        classifier.update(inst.features, true)
    elapsed = time.perf_counter() - start
    return EvalReport(classifier.name, ds.n_instances, correct, confusion,
                      elapsed)


class NaiveBayesLearner(Classifier):
    """Streaming naive Bayes: per-class Gaussians for numeric features
    (mean/variance maintained incrementally, variance floored at 1e-9),
    per-class frequency tables with add-one smoothing for nominal
    features, add-one-smoothed class priors. Ties break toward the
    earlier class in schema order.
    """

    name = "naive-bayes"
    VARIANCE_FLOOR = 1e-9

    def __init__(self, ds: StreamDataset):
        self.schema = ds.schema
        self._features = ds.feature_schema()
        self._classes = ds.class_values
        self.reset()

    def reset(self):
        k = len(self._classes)
        self._n = 0
        self._class_counts = [0] * k
        # numeric: (count, mean, M2) Welford accumulators per (feature, class)
        self._gauss = [[[0, 0.0, 0.0] for _ in range(k)]
                       if not a.is_nominal else None for a in self._features]
        self._tables = [[[0] * len(a.values) for _ in range(k)]
                        if a.is_nominal else None for a in self._features]

    def _class_index(self, label):
        return self._classes.index(label)

    def update(self, features, label):
        c = self._class_index(label)
        self._n += 1
        self._class_counts[c] += 1
        for f, value in enumerate(features):
            if self._gauss[f] is not None:
                acc = self._gauss[f][c]
                acc[0] += 1
                delta = value - acc[1]
                acc[1] += delta / acc[0]
                acc[2] += delta * (value - acc[1])
            else:
                self._tables[f][c][value] += 1

    def predict(self, features):
        k = len(self._classes)
        best_c = 0
        best_score = None
        for c in range(k):
            # a class never seen in training has no likelihood model; it
            # cannot outscore trained classes just by skipping the penalty
            if self._class_counts[c] == 0 and self._n > 0:
                continue
            score = math.log((self._class_counts[c] + 1) / (self._n + k))
            for f, value in enumerate(features):
                if self._gauss[f] is not None:
                    count, mean, m2 = self._gauss[f][c]
                    if count == 0:
                        continue  # no evidence from this feature yet
                    var = max(m2 / count, self.VARIANCE_FLOOR)
                    score -= 0.5 * (math.log(2.0 * math.pi * var)
                                    + (value - mean) ** 2 / var)
                else:
                    table = self._tables[f][c]
                    score += math.log((table[value] + 1)
                                      / (sum(table) + len(table)))
            if best_score is None or score > best_score:
                best_score = score
                best_c = c
        return self._classes[best_c]


class PersistenceLearner(Classifier):
    """Predicts the most recently observed label; cold_start before any."""

    name = "persistence"

    def __init__(self, cold_start):
        self._cold_start = cold_start
        self.reset()

    def reset(self):
        self._last = None

    def predict(self, features):
        return self._last if self._last is not None else self._cold_start

    def update(self, features, label):
        self._last = label


class RandomRestartLearner(Classifier):
    """The rho-parameterized restart classifier behind the Classifier
    contract; equals baselines.random_restart_run on the same stream,
    seed and cold start."""

    def __init__(self, rho: float, seed: int, cold_start):
        self._policy = baselines.RestartPolicy(rho, seed)
        self._cold_start = cold_start
        self.name = f"restart:{rho:g}"
        self.reset()

    def reset(self):
        self._window = baselines._WindowedMajority()
        self._rng = SplitMix64(self._policy.seed)
        self._seen_any = False

    def predict(self, features):
        if not self._seen_any:
            return self._cold_start
        return self._window.predict(self._cold_start)

    def update(self, features, label):
        self._seen_any = True
        self._window.observe(label)
        if self._policy.rho > 0.0 and self._rng.bernoulli(self._policy.rho):
            self._window.restart()


class MajorityLearner(RandomRestartLearner):
    """Incremental majority = the restart classifier that never restarts."""

    def __init__(self, cold_start):
        super().__init__(0.0, 0, cold_start)
        self.name = "majority"


def audit_accuracy(subject_accuracy: float, ds_or_labels,
                   cold_start=diagnostics.FIRST_LABEL) -> AuditVerdict:
    """Grade an accuracy figure against the bars of the given stream."""
    if not 0.0 <= subject_accuracy <= 1.0:
        raise ValueError("subject accuracy must be in [0, 1]")
    labels = ds_or_labels.labels() if hasattr(ds_or_labels, "labels") \
        else list(ds_or_labels)
    if len(labels) == 0:
        raise EmptyStream("cannot audit against an empty stream")
    dist = diagnostics.label_distribution(labels)
    return AuditVerdict(
        subject_accuracy=subject_accuracy,
        persistence_bar=diagnostics.persistence_accuracy(labels, cold_start),
        independence_bar=diagnostics.independence_bar(dist),
        majority_bar=baselines.majority_baseline(labels, cold_start),
    )


def audit_prediction_log(log: Sequence, ds_labels: Optional[Sequence] = None,
                         cold_start=diagnostics.FIRST_LABEL):
    """Audit an externally produced (true, predicted) log.

    When ds_labels is supplied the log's true-label column must match it
    exactly; the bars are computed from that column either way. Returns
    (AuditVerdict, EvalReport).
    """
    log = list(log)
    if not log:
        raise EmptyLog("prediction log has no rows")
    true_col = [t for t, _ in log]
    if ds_labels is not None:
        ds_labels = list(ds_labels)
        if len(ds_labels) != len(true_col):
            raise LabelMismatch(min(len(ds_labels), len(true_col)),
                                "<length mismatch>", "<length mismatch>")
        for i, (a, b) in enumerate(zip(ds_labels, true_col)):
            if a != b:
                raise LabelMismatch(i, a, b)
    correct = 0
    confusion = {}
    for true, pred in log:
        if true == pred:
            correct += 1
        key = (true, pred)
        confusion[key] = confusion.get(key, 0) + 1
    report = EvalReport("prediction-log", len(log), correct, confusion, 0.0)
    verdict = audit_accuracy(report.accuracy, true_col, cold_start=cold_start)
    return verdict, report


def read_prediction_log(source) -> list:
    """Read a 'true,predicted' CSV (header required) into (true, pred) pairs."""
    if isinstance(source, str):
        with open(source, "r", encoding="utf-8", newline="") as fh:
            return read_prediction_log(fh)
    reader = csv.reader(source)
    rows = [row for row in reader if row]
    if not rows or [c.strip() for c in rows[0]] != ["true", "predicted"]:
        raise EmptyLog("expected a CSV with header 'true,predicted'")
    return [(t.strip(), p.strip()) for t, p in rows[1:]]


def write_prediction_log(log: Sequence) -> str:
    out = io.StringIO()
    out.write("true,predicted\n")
    for true, pred in log:
        out.write(f"{true},{pred}\n")
    return out.getvalue()
