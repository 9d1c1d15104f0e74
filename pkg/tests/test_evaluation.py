import io
import json
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from streamaudit import (AttributeSchema, Classifier, EmptyLog, EmptyStream,
                         Instance, LabelMismatch, MajorityLearner,
                         NaiveBayesLearner, PersistenceLearner,
                         RandomRestartLearner, RestartPolicy, SchemaMismatch,
                         StreamDataset, Verdict, audit_accuracy,
                         audit_prediction_log, gen_markov_labels,
                         majority_baseline, persistence_accuracy,
                         prequential_eval, random_restart_run,
                         read_prediction_log, write_prediction_log)
from streamaudit.synth import MarkovLabelModel, labels_to_dataset


def numeric_dataset(points, class_values=("A", "B")):
    schema = (AttributeSchema("x", None),
              AttributeSchema("cls", tuple(class_values)))
    instances = tuple(Instance((float(x),), class_values.index(c))
                      for x, c in points)
    return StreamDataset(schema, instances, 1)


def test_naive_bayes_single_class_updates():
    ds = numeric_dataset([(0.0, "A"), (1.0, "A")])
    nb = NaiveBayesLearner(ds)
    for inst in ds.instances:
        nb.update(inst.features, "A")
    assert nb.predict((5.0,)) == "A"
    assert nb.predict((-100.0,)) == "A"


def test_naive_bayes_hand_gaussians():
    ds = numeric_dataset([(0.0, "A"), (1.0, "A"), (10.0, "B"), (11.0, "B")])
    nb = NaiveBayesLearner(ds)
    for inst in ds.instances:
        nb.update(inst.features, ds.class_values[inst.label])
    # both classes: mean 0.5 / 10.5, variance 0.25; equal priors, so the
    # posterior is decided by squared distance to the class mean
    assert nb.predict((0.5,)) == "A"
    assert nb.predict((10.5,)) == "B"
    assert nb.predict((5.49,)) == "A"
    assert nb.predict((5.51,)) == "B"


def test_naive_bayes_before_any_update_uses_class_order():
    ds = numeric_dataset([(0.0, "A")])
    nb = NaiveBayesLearner(ds)
    assert nb.predict((3.0,)) == "A"  # all-equal scores tie to first class


def test_naive_bayes_nominal_features():
    schema = (AttributeSchema("color", ("red", "blue")),
              AttributeSchema("cls", ("A", "B")))
    instances = tuple(Instance((f,), c) for f, c in
                      [(0, 0), (0, 0), (1, 1), (1, 1), (0, 0)])
    ds = StreamDataset(schema, instances, 1)
    report = prequential_eval(NaiveBayesLearner(ds), ds)
    assert report.n == 5
    nb = NaiveBayesLearner(ds)
    for inst in ds.instances:
        nb.update(inst.features, ds.class_values[inst.label])
    assert nb.predict((0,)) == "A"
    assert nb.predict((1,)) == "B"


def test_naive_bayes_reset_restores_fresh_state():
    ds = numeric_dataset([(0.0, "A"), (9.0, "B")])
    nb = NaiveBayesLearner(ds)
    first = prequential_eval(nb, ds)
    nb.reset()
    second = prequential_eval(nb, ds)
    assert first.correct == second.correct
    assert first.confusion == second.confusion


def test_naive_bayes_argmax_rescaling_invariance():
    # adding a constant to every class log-score cannot change the argmax;
    # equivalently the prediction only depends on score differences
    ds = numeric_dataset([(0.0, "A"), (1.0, "A"), (4.0, "B")])
    nb = NaiveBayesLearner(ds)
    for inst in ds.instances:
        nb.update(inst.features, ds.class_values[inst.label])
    for x in (-2.0, 0.5, 2.0, 3.9, 7.0):
        pred = nb.predict((x,))
        again = nb.predict((x,))
        assert pred == again  # predict is read-only


def test_prequential_empty_stream():
    ds = numeric_dataset([])
    with pytest.raises(EmptyStream):
        prequential_eval(PersistenceLearner("A"), ds)


def test_prequential_schema_mismatch():
    ds_a = numeric_dataset([(0.0, "A")])
    ds_b = numeric_dataset([(0.0, "A")], class_values=("A", "C"))
    nb = NaiveBayesLearner(ds_a)
    with pytest.raises(SchemaMismatch):
        prequential_eval(nb, ds_b)


def test_prequential_single_instance():
    ds = numeric_dataset([(1.0, "B")])
    report = prequential_eval(PersistenceLearner("A"), ds)
    assert report.n == 1 and report.accuracy in (0.0, 1.0)


class _Spy(Classifier):
    name = "spy"

    def __init__(self):
        self.events = []

    def predict(self, features):
        self.events.append(("predict", features))
        return "A"

    def update(self, features, label):
        self.events.append(("update", features, label))

    def reset(self):
        self.events = []


def test_prequential_is_single_pass_test_then_train():
    ds = numeric_dataset([(1.0, "A"), (2.0, "B"), (3.0, "A")])
    spy = _Spy()
    prequential_eval(spy, ds)
    expected = []
    for inst in ds.instances:
        expected.append(("predict", inst.features))
        expected.append(("update", inst.features, ds.class_values[inst.label]))
    assert spy.events == expected


@given(st.lists(st.sampled_from("DU"), min_size=1, max_size=40),
       st.integers(0, 2**32))
@settings(max_examples=40, deadline=None)
def test_wrapped_learners_match_label_only_functions(labels, seed):
    ds = labels_to_dataset([0 if lab == "D" else 1 for lab in labels])
    names = ds.labels()
    cold = ds.class_values[0]
    assert prequential_eval(PersistenceLearner(cold), ds).accuracy == \
        persistence_accuracy(names, cold_start=cold)
    assert prequential_eval(MajorityLearner(cold), ds).accuracy == \
        majority_baseline(names, cold_start=cold)
    rho = (seed % 11) / 10
    assert prequential_eval(RandomRestartLearner(rho, seed, cold), ds).accuracy \
        == random_restart_run(names, RestartPolicy(rho, seed), cold_start=cold)


def test_confusion_reconstructs_accuracy():
    labels = gen_markov_labels(MarkovLabelModel(0.6, 0.5, 300, seed=4))
    ds = labels_to_dataset(labels)
    report = prequential_eval(MajorityLearner(ds.class_values[0]), ds)
    diagonal = sum(c for (t, p), c in report.confusion.items() if t == p)
    assert diagonal / report.n == report.accuracy
    assert sum(report.confusion.values()) == report.n


def test_eval_report_json_fields():
    ds = labels_to_dataset([0, 1, 0, 0])
    report = prequential_eval(PersistenceLearner("0"), ds)
    doc = json.loads(report.to_json())
    assert set(doc) == {"classifier", "n", "correct", "accuracy", "confusion"}
    assert doc["n"] == 4


def autocorrelated_labels(n=4000, seed=1):
    return ["UP" if x else "DOWN"
            for x in gen_markov_labels(MarkovLabelModel(0.42, 0.85, n,
                                                        seed=seed))]


def test_audit_verdicts():
    labels = autocorrelated_labels()
    bar = persistence_accuracy(labels)
    assert audit_accuracy(min(1.0, bar + 0.03), labels).verdict is \
        Verdict.ABOVE_PERSISTENCE
    assert audit_accuracy(bar, labels).verdict is Verdict.BELOW_PERSISTENCE
    assert audit_accuracy(0.30, labels).verdict is Verdict.BELOW_MAJORITY
    verdict = audit_accuracy(bar - 0.01, labels)
    assert verdict.verdict is Verdict.BELOW_PERSISTENCE
    assert verdict.margin == pytest.approx(-0.01)


def test_audit_json_fields():
    verdict = audit_accuracy(0.9, autocorrelated_labels())
    doc = json.loads(verdict.to_json(n=4000))
    assert set(doc) == {"n", "accuracy", "confusion", "bars", "margin",
                        "verdict"}
    assert set(doc["bars"]) == {"majority", "independence", "persistence"}


def test_audit_empty_stream():
    with pytest.raises(EmptyStream):
        audit_accuracy(0.5, [])


def test_audit_prediction_log_self_comparison():
    labels = autocorrelated_labels(n=1000, seed=3)
    preds = [labels[0]] + labels[:-1]  # replicate persistence with a
    log = list(zip(labels, preds))     # first-label cold start
    verdict, report = audit_prediction_log(log, labels)
    assert report.accuracy == pytest.approx(persistence_accuracy(labels))
    assert verdict.margin == pytest.approx(0.0)
    assert verdict.verdict is Verdict.BELOW_PERSISTENCE  # ties don't count


def test_audit_prediction_log_always_majority():
    labels = autocorrelated_labels(n=1000, seed=4)
    log = [(lab, "DOWN") for lab in labels]
    verdict, report = audit_prediction_log(log)
    down = sum(lab == "DOWN" for lab in labels) / len(labels)
    assert report.accuracy == pytest.approx(down)
    assert verdict.verdict is not Verdict.ABOVE_PERSISTENCE


def test_audit_prediction_log_mismatch_index():
    labels = list("DDUUDDUU")
    log = [(lab, "D") for lab in labels]
    wrong = labels.copy()
    wrong[7] = "X"
    with pytest.raises(LabelMismatch) as err:
        audit_prediction_log(log, wrong)
    assert err.value.index == 7


def test_audit_prediction_log_empty():
    with pytest.raises(EmptyLog):
        audit_prediction_log([])


def test_prediction_log_csv_round_trip():
    log = [("UP", "DOWN"), ("DOWN", "DOWN"), ("UP", "UP")]
    text = write_prediction_log(log)
    assert text.splitlines()[0] == "true,predicted"
    assert read_prediction_log(io.StringIO(text)) == log


def test_prediction_log_requires_header():
    with pytest.raises(EmptyLog):
        read_prediction_log(io.StringIO("UP,DOWN\n"))
