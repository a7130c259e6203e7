"""Labeled document corpora: loading, statistics, verification, folds.

Documents live in JSONL files, one JSON object per line with fields
id, optional title, text, label (FAKE or VALID), optional source and
optional pre-computed analyses. Datasets are immutable after load.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from fanlex._kernels import normalize_token, normalized_tokens
from fanlex.errors import (
    CorpusParseError,
    DomainError,
    DuplicateDocumentError,
    FoldSizeError,
    InputError,
    NoSentencesError,
)
from fanlex.morph import Locale, MorphAnalysis, compose_text, tokenize


class Label(Enum):
    FAKE = "FAKE"
    VALID = "VALID"


class Split(Enum):
    TRAIN = "TRAIN"
    TEST = "TEST"
    UNSPLIT = "UNSPLIT"


class Format(Enum):
    JSONL = "jsonl"


# Words that end with a period without ending a sentence. Compared
# lowercase against the word left of a single period.
DEFAULT_ABBREVIATIONS = frozenset(
    {
        "dr",
        "prof",
        "doç",
        "av",
        "alb",
        "gen",
        "say",
        "no",
        "tel",
        "st",
        "sk",
        "mah",
        "cad",
        "apt",
        "bkz",
        "vb",
        "vs",
        "örn",
        "yy",
    }
)

_BOUNDARY = re.compile(r"[.!?…]+(?=\s|$)")


@dataclass(frozen=True)
class Document:
    """One news item with a gold label."""

    id: str
    text: str
    label: Label
    title: str | None = None
    source: str | None = None
    analyses: tuple[MorphAnalysis, ...] | None = None


@dataclass(frozen=True)
class Dataset:
    """An ordered, id-unique collection of documents."""

    documents: tuple[Document, ...]
    split: Split = Split.UNSPLIT

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for doc in self.documents:
            if doc.id in seen:
                raise DuplicateDocumentError(f"duplicate document id {doc.id!r}")
            seen.add(doc.id)

    def __len__(self) -> int:
        return len(self.documents)

    def ids(self) -> set[str]:
        return {doc.id for doc in self.documents}

    def filter(self, label: Label) -> "Dataset":
        """Documents carrying the given label, order preserved."""
        return Dataset(
            tuple(doc for doc in self.documents if doc.label is label), self.split
        )


@dataclass(frozen=True)
class CorpusStats:
    doc_count_by_label: dict[Label, int]
    mean_tokens_per_doc: float
    mean_sentences_per_doc: float
    token_total: int


@dataclass(frozen=True)
class VerificationReport:
    """Per-sentence slang and misspelling rates over a dataset."""

    slang_per_sentence: float
    misspelling_per_sentence: float


_DOCUMENT_KEYS = {"id", "title", "text", "label", "source", "analyses"}


def _parse_analyses(listed: object, where: str) -> tuple[MorphAnalysis, ...]:
    if not isinstance(listed, list):
        raise CorpusParseError(f"{where}: 'analyses' must be a list")
    out = []
    for i, item in enumerate(listed):
        if not isinstance(item, dict):
            raise CorpusParseError(f"{where}: analysis {i} must be an object")
        for key in ("raw", "root", "pos"):
            if not isinstance(item.get(key), str):
                raise CorpusParseError(f"{where}: analysis {i} needs string {key!r}")
        suffixes = item.get("suffixes", [])
        if not isinstance(suffixes, list) or any(
            not isinstance(s, str) for s in suffixes
        ):
            raise CorpusParseError(
                f"{where}: analysis {i} 'suffixes' must be a list of strings"
            )
        extra = set(item) - {"raw", "root", "pos", "suffixes"}
        if extra:
            raise CorpusParseError(
                f"{where}: analysis {i} has unknown fields {sorted(extra)}"
            )
        try:
            out.append(
                MorphAnalysis(
                    raw=item["raw"],
                    root=item["root"],
                    pos=item["pos"],
                    suffixes=tuple(suffixes),
                )
            )
        except ValueError as exc:
            raise CorpusParseError(f"{where}: analysis {i}: {exc}") from exc
    return tuple(out)


def _parse_document(obj: object, where: str) -> Document:
    if not isinstance(obj, dict):
        raise CorpusParseError(f"{where}: expected a JSON object")
    extra = set(obj) - _DOCUMENT_KEYS
    if extra:
        raise CorpusParseError(f"{where}: unknown fields {sorted(extra)}")
    for key in ("id", "text", "label"):
        if key not in obj:
            raise CorpusParseError(f"{where}: missing required field {key!r}")
    if not isinstance(obj["id"], str) or not obj["id"]:
        raise CorpusParseError(f"{where}: 'id' must be a non-empty string")
    if not isinstance(obj["text"], str):
        raise CorpusParseError(f"{where}: 'text' must be a string")
    try:
        label = Label(obj["label"])
    except ValueError:
        raise CorpusParseError(
            f"{where}: 'label' must be 'FAKE' or 'VALID', got {obj['label']!r}"
        ) from None
    for key in ("title", "source"):
        if key in obj and not isinstance(obj[key], str):
            raise CorpusParseError(f"{where}: {key!r} must be a string")
    analyses = None
    if "analyses" in obj:
        analyses = _parse_analyses(obj["analyses"], where)
    return Document(
        id=obj["id"],
        text=obj["text"],
        label=label,
        title=obj.get("title"),
        source=obj.get("source"),
        analyses=analyses,
    )


def load_corpus(path: str, fmt: Format = Format.JSONL) -> Dataset:
    """Load a JSONL corpus; errors name the offending file and line."""
    if fmt is not Format.JSONL:
        raise InputError(f"unsupported corpus format {fmt!r}")
    docs: list[Document] = []
    seen: dict[str, int] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusParseError(
                    f"{path}:{lineno}: invalid JSON ({exc.msg})"
                ) from exc
            doc = _parse_document(obj, f"{path}:{lineno}")
            if doc.id in seen:
                raise DuplicateDocumentError(
                    f"{path}:{lineno}: duplicate document id {doc.id!r} "
                    f"(first seen on line {seen[doc.id]})"
                )
            seen[doc.id] = lineno
            docs.append(doc)
    return Dataset(tuple(docs), Split.UNSPLIT)


def document_to_json(doc: Document) -> str:
    """Canonical single-line JSON for a document."""
    obj: dict[str, object] = {"id": doc.id}
    if doc.title is not None:
        obj["title"] = doc.title
    obj["text"] = doc.text
    obj["label"] = doc.label.value
    if doc.source is not None:
        obj["source"] = doc.source
    if doc.analyses is not None:
        obj["analyses"] = [
            {"raw": a.raw, "root": a.root, "pos": a.pos, "suffixes": list(a.suffixes)}
            for a in doc.analyses
        ]
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


def save_corpus(ds: Dataset, path: str) -> None:
    """Write a dataset back out as canonical JSONL."""
    with open(path, "w", encoding="utf-8") as fh:
        for doc in ds.documents:
            fh.write(document_to_json(doc))
            fh.write("\n")


def split_sentences(
    text: str, abbreviations: frozenset[str] | set[str] = DEFAULT_ABBREVIATIONS
) -> list[str]:
    """Split text into sentences on terminal punctuation.

    A run of . ! ? or an ellipsis followed by whitespace or the end of
    the text closes a sentence, except when a lone period follows a
    known abbreviation. Text without terminal punctuation is a single
    sentence; empty strings are never returned.
    """
    sentences: list[str] = []
    start = 0
    for match in _BOUNDARY.finditer(text):
        if match.group() == ".":
            before = text[start : match.start()].split()
            if before and before[-1].lower() in abbreviations:
                continue
        piece = text[start : match.end()].strip()
        if piece:
            sentences.append(piece)
        start = match.end()
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


def corpus_stats(ds: Dataset, *, include_title: bool = True) -> CorpusStats:
    """Document counts per label plus token and sentence means."""
    counts = {Label.FAKE: 0, Label.VALID: 0}
    token_total = 0
    sentence_total = 0
    for doc in ds.documents:
        counts[doc.label] += 1
        text = compose_text(doc.title, doc.text, include_title)
        token_total += len(tokenize(text))
        sentence_total += len(split_sentences(text))
    n = len(ds.documents)
    return CorpusStats(
        doc_count_by_label=counts,
        mean_tokens_per_doc=token_total / n if n else 0.0,
        mean_sentences_per_doc=sentence_total / n if n else 0.0,
        token_total=token_total,
    )


def load_word_list(path: str, locale: Locale = Locale.TURKISH) -> list[str]:
    """Load a one-entry-per-line UTF-8 word list.

    Lines starting with # and blank lines are skipped; entries are
    normalized word by word at load and de-duplicated, order kept.
    Entries may contain several words (phrases).
    """
    turkish = locale is Locale.TURKISH
    entries: list[str] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            body = line.strip()
            if not body or body.startswith("#"):
                continue
            words = [normalize_token(w, turkish) for w in body.split()]
            words = [w for w in words if w]
            if not words:
                continue
            entry = " ".join(words)
            if entry not in seen:
                seen.add(entry)
                entries.append(entry)
    return entries


def verify_stats(
    ds: Dataset,
    slang: Sequence[str],
    dictionary: Iterable[str],
    *,
    locale: Locale = Locale.TURKISH,
    include_title: bool = True,
) -> VerificationReport:
    """Slang and misspelling rates per sentence across a dataset.

    Slang entries may span several words; multi-word phrases are
    matched greedily left to right and count one occurrence per match.
    A normalized token counts as misspelled when it is in neither the
    dictionary nor the slang list, unless it is all digits.
    """
    if not slang:
        raise DomainError("slang list is empty")
    turkish = locale is Locale.TURKISH
    singles: set[str] = set()
    phrases: set[tuple[str, ...]] = set()
    for entry in slang:
        words = tuple(w for w in (normalize_token(p, turkish) for p in entry.split()) if w)
        if not words:
            continue
        if len(words) == 1:
            singles.add(words[0])
        else:
            phrases.add(words)
    phrase_lengths = sorted({len(p) for p in phrases}, reverse=True)
    dict_words = {
        w for e in dictionary for w in (normalize_token(p, turkish) for p in e.split()) if w
    }
    if not dict_words:
        raise DomainError("dictionary is empty")

    sentence_total = 0
    slang_hits = 0
    misspelled = 0
    for doc in ds.documents:
        text = compose_text(doc.title, doc.text, include_title)
        sentence_total += len(split_sentences(text))
        tokens = normalized_tokens(text, turkish)
        i = 0
        n = len(tokens)
        while i < n:
            hit = 0
            for length in phrase_lengths:
                if length <= n - i and tuple(tokens[i : i + length]) in phrases:
                    hit = length
                    break
            if hit:
                slang_hits += 1
                i += hit
                continue
            tok = tokens[i]
            if tok in singles:
                slang_hits += 1
            elif tok not in dict_words and not tok.isdigit():
                misspelled += 1
            i += 1
    if sentence_total == 0:
        raise NoSentencesError("no sentences in dataset")
    return VerificationReport(
        slang_per_sentence=slang_hits / sentence_total,
        misspelling_per_sentence=misspelled / sentence_total,
    )


def stratified_folds(
    ds: Dataset, k: int, seed: int
) -> list[tuple[Dataset, Dataset]]:
    """Deterministic stratified k-fold split.

    Documents of each label are shuffled with the seeded generator and
    dealt round-robin, so per-fold label counts differ by at most one.
    Returns (train, test) pairs; each pair is disjoint and covers the
    dataset.
    """
    if k < 2:
        raise FoldSizeError(f"need at least 2 folds, got {k}")
    rng = random.Random(seed)
    fold_of: dict[int, int] = {}
    for label in (Label.FAKE, Label.VALID):
        positions = [i for i, doc in enumerate(ds.documents) if doc.label is label]
        if len(positions) < k:
            raise FoldSizeError(
                f"label {label.value} has {len(positions)} documents, "
                f"fewer than k={k}"
            )
        rng.shuffle(positions)
        for dealt, position in enumerate(positions):
            fold_of[position] = dealt % k
    pairs: list[tuple[Dataset, Dataset]] = []
    for fold in range(k):
        train = tuple(
            doc for i, doc in enumerate(ds.documents) if fold_of[i] != fold
        )
        test = tuple(doc for i, doc in enumerate(ds.documents) if fold_of[i] == fold)
        pairs.append((Dataset(train, Split.TRAIN), Dataset(test, Split.TEST)))
    return pairs
