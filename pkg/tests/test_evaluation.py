import random

import pytest

from fanlex.config import RunConfig
from fanlex.corpus import Dataset, Label
from fanlex.errors import LeakageError
from fanlex.evaluation import (
    ConfusionMatrix,
    confusion,
    cross_validate,
    evaluate_models,
    metrics,
)
from fanlex.lexicon import CountMode, ModelClass
from synth import analyzed_corpus, separable_corpus

ALL_CLASSES = list(ModelClass)
F, V = Label.FAKE, Label.VALID


def test_confusion_counts():
    cm = confusion([F, V, F, V], [F, F, V, V])
    assert (cm.tp, cm.fn, cm.fp, cm.tn) == (1, 1, 1, 1)
    assert cm.total == 4
    cm = confusion([F, F, F], [F, F, F])
    assert (cm.tp, cm.fn, cm.fp, cm.tn) == (3, 0, 0, 0)


def test_confusion_rejects():
    with pytest.raises(ValueError):
        confusion([F], [F, V])
    with pytest.raises(ValueError):
        confusion([], [])


def test_metrics_reference_counts():
    # 140 documents, 70 per label; 65 true positives, 16 false alarms.
    m = metrics(ConfusionMatrix(tp=65, fn=5, fp=16, tn=54))
    assert m.precision == pytest.approx(65 / 81)
    assert m.recall == pytest.approx(65 / 70)
    assert m.accuracy == pytest.approx(119 / 140)
    assert m.f1 == pytest.approx(2 * (65 / 81) * (65 / 70) / (65 / 81 + 65 / 70))
    assert m.precision == pytest.approx(0.802469, abs=5e-7)
    assert m.recall == pytest.approx(0.928571, abs=5e-7)
    assert m.accuracy == pytest.approx(0.85)
    assert m.f1 == pytest.approx(130 / 151, abs=5e-7)
    assert m.f1 == pytest.approx(0.860927, abs=5e-7)


def test_metrics_zero_denominators():
    nothing_flagged = metrics(ConfusionMatrix(tp=0, fn=5, fp=0, tn=5))
    assert nothing_flagged.precision == 0.0
    assert nothing_flagged.recall == 0.0
    assert nothing_flagged.f1 == 0.0
    assert nothing_flagged.accuracy == 0.5
    no_positives = metrics(ConfusionMatrix(tp=0, fn=0, fp=3, tn=7))
    assert no_positives.recall == 0.0
    assert no_positives.precision == 0.0
    with pytest.raises(ValueError):
        metrics(ConfusionMatrix(tp=0, fn=0, fp=0, tn=0))


def test_evaluate_models_separable():
    rng = random.Random(4)
    train = separable_corpus(rng, 12, 12, prefix="tr")
    test = separable_corpus(rng, 6, 6, prefix="te")
    results = evaluate_models(
        train.filter(F), train.filter(V), test, ALL_CLASSES
    )
    assert set(results) == set(ALL_CLASSES)
    for model_class, result in results.items():
        assert result.metrics.accuracy == 1.0, model_class
        assert result.confusion.tp == 6
        assert result.confusion.tn == 6
        assert result.confusion.fp == result.confusion.fn == 0


def test_evaluate_models_respects_config():
    rng = random.Random(8)
    train = separable_corpus(rng, 8, 8, prefix="tr")
    test = separable_corpus(rng, 4, 4, prefix="te")
    config = RunConfig(count_mode=CountMode.DOC_PRESENCE, smoothing=0.5)
    results = evaluate_models(
        train.filter(F), train.filter(V), test, [ModelClass.ROOT], config
    )
    # Smoothing leaks a little mass to the other side but cannot flip
    # a fully separable corpus.
    assert results[ModelClass.ROOT].metrics.accuracy == 1.0


def test_evaluate_models_rejects_leakage():
    rng = random.Random(4)
    train = separable_corpus(rng, 5, 5, prefix="x")
    test = Dataset(train.documents[:3])
    with pytest.raises(LeakageError) as err:
        evaluate_models(train.filter(F), train.filter(V), test, [ModelClass.RAW])
    assert "xf0" in str(err.value)


def test_evaluate_models_rejects_duplicate_classes():
    rng = random.Random(4)
    train = separable_corpus(rng, 4, 4, prefix="tr")
    test = separable_corpus(rng, 2, 2, prefix="te")
    with pytest.raises(ValueError):
        evaluate_models(
            train.filter(F), train.filter(V), test, [ModelClass.RAW, ModelClass.RAW]
        )


def test_evaluate_models_order_independent():
    rng = random.Random(14)
    train = analyzed_corpus(rng, 10, 10, vocab=6, prefix="tr")
    test = analyzed_corpus(rng, 8, 8, vocab=6, prefix="te")
    shuffled = list(test.documents)
    random.Random(1).shuffle(shuffled)
    one = evaluate_models(train.filter(F), train.filter(V), test, ALL_CLASSES)
    two = evaluate_models(
        train.filter(F), train.filter(V), Dataset(tuple(shuffled)), ALL_CLASSES
    )
    for model_class in ALL_CLASSES:
        assert one[model_class].confusion == two[model_class].confusion


def test_cross_validate_separable():
    rng = random.Random(6)
    ds = separable_corpus(rng, 10, 10)
    report = cross_validate(ds, 5, ALL_CLASSES, seed=3)
    assert len(report.per_fold) == 5 * len(ALL_CLASSES)
    for fold in report.per_fold:
        assert fold.metrics.accuracy == 1.0
    for mean in report.means.values():
        assert mean.accuracy == 1.0
        assert mean.f1 == 1.0


def test_cross_validate_deterministic():
    rng = random.Random(19)
    ds = analyzed_corpus(rng, 15, 15, vocab=8)
    one = cross_validate(ds, 3, [ModelClass.RAW, ModelClass.SUFFIX], seed=7)
    two = cross_validate(ds, 3, [ModelClass.RAW, ModelClass.SUFFIX], seed=7)
    assert one == two


def test_cross_validate_means_are_fold_averages():
    rng = random.Random(23)
    ds = analyzed_corpus(rng, 12, 12, vocab=6)
    k = 4
    report = cross_validate(ds, k, ALL_CLASSES, seed=2)
    for model_class in ALL_CLASSES:
        rows = [f.metrics for f in report.per_fold if f.model_class is model_class]
        assert len(rows) == k
        mean = report.means[model_class]
        assert mean.precision == pytest.approx(sum(r.precision for r in rows) / k)
        assert mean.recall == pytest.approx(sum(r.recall for r in rows) / k)
        assert mean.accuracy == pytest.approx(sum(r.accuracy for r in rows) / k)
        assert mean.f1 == pytest.approx(sum(r.f1 for r in rows) / k)


def test_cross_validate_fold_indices():
    rng = random.Random(29)
    ds = analyzed_corpus(rng, 8, 8, vocab=5)
    report = cross_validate(ds, 2, [ModelClass.RAW], seed=0)
    assert [f.fold for f in report.per_fold] == [0, 1]
