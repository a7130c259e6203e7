import random

import pytest

import oracle
from fanlex.corpus import Dataset, Document, Label
from fanlex.errors import ModelMismatchError
from fanlex.lexicon import CountMode, ModelClass, build_lexicon
from fanlex.morph import MorphAnalysis
from fanlex.scorer import TermSetMode, explain, score_batch, score_document
from synth import analyzed_corpus

ALL_CLASSES = list(ModelClass)


def raw_doc(doc_id, label, terms):
    analyses = tuple(MorphAnalysis(raw=t, root=t, pos="X") for t in terms)
    return Document(id=doc_id, text=" ".join(terms), label=label, analyses=analyses)


@pytest.fixture
def mini_lexicon():
    fake = Dataset((raw_doc("f1", Label.FAKE, ["a", "c"]),))
    valid = Dataset(
        (
            raw_doc("v1", Label.VALID, ["a", "b"]),
            raw_doc("v2", Label.VALID, ["a"]),
        )
    )
    return build_lexicon(fake, valid, ModelClass.RAW)


def test_score_document_distinct(mini_lexicon):
    doc = raw_doc("q", Label.VALID, ["b", "a"])
    score = score_document(doc, mini_lexicon)
    assert score.fake_score == pytest.approx(0.5)
    assert score.valid_score == pytest.approx(1.0)
    assert score.label is Label.VALID
    assert score.unknown_terms == 0
    assert score.model_class is ModelClass.RAW


def test_score_document_repeats_and_unknowns(mini_lexicon):
    doc = raw_doc("q", Label.VALID, ["a", "a", "b", "z", "z"])
    distinct = score_document(doc, mini_lexicon, TermSetMode.DISTINCT)
    assert distinct.fake_score == pytest.approx(0.5)
    assert distinct.valid_score == pytest.approx(1.0)
    assert distinct.unknown_terms == 1
    multiset = score_document(doc, mini_lexicon, TermSetMode.MULTISET)
    assert multiset.fake_score == pytest.approx(1.0)
    assert multiset.valid_score == pytest.approx(2 * (2 / 3) + 1 / 3)
    assert multiset.unknown_terms == 2


def test_score_empty_document_is_fake(mini_lexicon):
    doc = Document(id="q", text="", label=Label.VALID, analyses=())
    score = score_document(doc, mini_lexicon)
    assert score.fake_score == 0.0
    assert score.valid_score == 0.0
    assert score.label is Label.FAKE
    assert score.unknown_terms == 0


def test_score_all_unknown_is_exactly_zero(mini_lexicon):
    doc = raw_doc("q", Label.VALID, ["x", "y", "z"])
    score = score_document(doc, mini_lexicon)
    assert score.fake_score == 0.0
    assert score.valid_score == 0.0
    assert score.label is Label.FAKE
    assert score.unknown_terms == 3


def test_tie_goes_to_fake():
    lex = build_lexicon(
        Dataset((raw_doc("f1", Label.FAKE, ["x"]),)),
        Dataset((raw_doc("v1", Label.VALID, ["x"]),)),
        ModelClass.RAW,
    )
    score = score_document(raw_doc("q", Label.VALID, ["x"]), lex)
    assert score.fake_score == score.valid_score == 1.0
    assert score.label is Label.FAKE


@pytest.mark.parametrize("model_class", ALL_CLASSES)
def test_scores_match_oracle(model_class):
    rng = random.Random(50 + ALL_CLASSES.index(model_class))
    train = analyzed_corpus(rng, 10, 10, vocab=7, prefix="tr")
    probe = analyzed_corpus(rng, 6, 6, vocab=7, prefix="pr")
    lex = build_lexicon(
        train.filter(Label.FAKE), train.filter(Label.VALID), model_class
    )
    _, _, _, _, fs, vs = oracle.build_scores(
        train.filter(Label.FAKE).documents,
        train.filter(Label.VALID).documents,
        model_class.value,
    )
    for doc in probe.documents:
        fake, valid, label = oracle.score_doc(doc, model_class.value, fs, vs)
        score = score_document(doc, lex)
        assert score.fake_score == pytest.approx(fake, abs=1e-12)
        assert score.valid_score == pytest.approx(valid, abs=1e-12)
        if abs(fake - valid) > 1e-9:
            assert score.label.value == label


def test_explain_ranking(mini_lexicon):
    doc = raw_doc("q", Label.VALID, ["a", "b", "c", "z"])
    top = explain(doc, mini_lexicon, 10)
    assert [c.term for c in top] == ["c", "b", "a"]
    assert top[0].delta == pytest.approx(0.5)
    assert top[1].delta == pytest.approx(-1 / 3)
    assert top[2].delta == pytest.approx(0.5 - 2 / 3)
    assert explain(doc, mini_lexicon, 2) == top[:2]
    assert explain(doc, mini_lexicon, 0) == []
    with pytest.raises(ValueError):
        explain(doc, mini_lexicon, -1)


def test_explain_breaks_ties_alphabetically():
    lex = build_lexicon(
        Dataset((raw_doc("f1", Label.FAKE, ["p", "q"]),)),
        Dataset((raw_doc("v1", Label.VALID, ["r", "r"]),)),
        ModelClass.RAW,
    )
    doc = raw_doc("x", Label.FAKE, ["q", "p", "r"])
    assert [c.term for c in explain(doc, lex, 3)] == ["r", "p", "q"]


def test_score_batch_shape(mini_lexicon):
    other = build_lexicon(
        Dataset((raw_doc("f1", Label.FAKE, ["a", "c"]),)),
        Dataset((raw_doc("v1", Label.VALID, ["a", "b"]),)),
        ModelClass.ROOT,
    )
    docs = Dataset(
        (
            raw_doc("d2", Label.VALID, ["a"]),
            raw_doc("d1", Label.FAKE, ["c"]),
        )
    )
    table = score_batch(docs, [mini_lexicon, other])
    assert list(table) == ["d2", "d1"]
    assert list(table["d2"]) == [ModelClass.RAW, ModelClass.ROOT]
    lone = score_document(docs.documents[1], mini_lexicon)
    assert table["d1"][ModelClass.RAW] == lone


def test_score_batch_rejects_duplicate_classes(mini_lexicon):
    with pytest.raises(ModelMismatchError):
        score_batch(Dataset(()), [mini_lexicon, mini_lexicon])


def test_score_uses_mini_example_values(mini_lexicon):
    # The two training splits themselves score as expected.
    fake_doc = raw_doc("f", Label.FAKE, ["a", "c"])
    score = score_document(fake_doc, mini_lexicon)
    assert score.fake_score == pytest.approx(1.0)
    assert score.valid_score == pytest.approx(2 / 3)
    assert score.label is Label.FAKE
