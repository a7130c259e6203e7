"""Synthetic corpus generators shared across the test suite."""

import random

from fanlex.corpus import Dataset, Document, Label, Split
from fanlex.morph import MorphAnalysis

POS_TAGS = ["Noun", "Verb", "Adj", "Adv"]
SUFFIX_TAGS = ["A3pl", "Dat", "Loc", "Gen", "Acc", "Abl", "Narr", "Past"]


def make_analysis(rng, roots, tags=SUFFIX_TAGS, poses=POS_TAGS, max_suffixes=3):
    """A random analysis whose raw form is already normalized."""
    root = rng.choice(roots)
    count = rng.randint(0, max_suffixes)
    suffixes = tuple(rng.choice(tags) for _ in range(count))
    raw = root + "".join(tag.lower() for tag in suffixes)
    return MorphAnalysis(raw=raw, root=root, pos=rng.choice(poses), suffixes=suffixes)


def analyzed_doc(rng, doc_id, label, roots, n_tokens, **kwargs):
    analyses = tuple(make_analysis(rng, roots, **kwargs) for _ in range(n_tokens))
    text = " ".join(a.raw for a in analyses)
    return Document(id=doc_id, text=text, label=label, analyses=analyses)


def analyzed_corpus(
    rng, n_fake, n_valid, vocab=20, tokens=(3, 12), prefix="d", **kwargs
):
    """A mixed-label corpus of pre-analyzed documents."""
    roots = [f"k{i}" for i in range(vocab)]
    docs = []
    for i in range(n_fake):
        docs.append(
            analyzed_doc(
                rng, f"{prefix}f{i}", Label.FAKE, roots, rng.randint(*tokens), **kwargs
            )
        )
    for i in range(n_valid):
        docs.append(
            analyzed_doc(
                rng, f"{prefix}v{i}", Label.VALID, roots, rng.randint(*tokens), **kwargs
            )
        )
    return Dataset(tuple(docs))


def separable_corpus(rng, n_fake, n_valid, prefix="s"):
    """Fake and valid documents with fully disjoint vocabularies.

    Disjoint under every model class: roots, raw forms and suffix tags
    never overlap between the labels, and every document carries a
    per-class core token so any training subset knows at least one of
    its terms.
    """
    fake_roots = [f"fraud{i}" for i in range(12)]
    valid_roots = [f"verity{i}" for i in range(12)]
    fake_tags = ["FA", "FB", "FC"]
    valid_tags = ["VA", "VB", "VC"]
    docs = []
    for i in range(n_fake):
        analyses = [
            MorphAnalysis(raw="fraudcore", root="fraudcore", pos="Noun", suffixes=("FA",))
        ]
        for _ in range(rng.randint(3, 8)):
            analyses.append(
                make_analysis(rng, fake_roots, tags=fake_tags, max_suffixes=2)
            )
        docs.append(
            Document(
                id=f"{prefix}f{i}",
                text=" ".join(a.raw for a in analyses),
                label=Label.FAKE,
                analyses=tuple(analyses),
            )
        )
    for i in range(n_valid):
        analyses = [
            MorphAnalysis(raw="veritycore", root="veritycore", pos="Noun", suffixes=("VA",))
        ]
        for _ in range(rng.randint(3, 8)):
            analyses.append(
                make_analysis(rng, valid_roots, tags=valid_tags, max_suffixes=2)
            )
        docs.append(
            Document(
                id=f"{prefix}v{i}",
                text=" ".join(a.raw for a in analyses),
                label=Label.VALID,
                analyses=tuple(analyses),
            )
        )
    return Dataset(tuple(docs))


def text_corpus(rng, n_docs, label, prefix, n_tokens=100, vocab_size=4000):
    """Plain-text documents without pre-computed analyses."""
    vocab = [f"kelime{i}" for i in range(vocab_size)]
    docs = []
    for i in range(n_docs):
        words = rng.choices(vocab, k=n_tokens)
        pieces = []
        for j, word in enumerate(words):
            pieces.append(word)
            if j % 12 == 11:
                pieces[-1] += "."
        docs.append(
            Document(id=f"{prefix}{i}", text=" ".join(pieces), label=label)
        )
    return Dataset(tuple(docs), Split.TRAIN)
