"""Document scoring against built lexicons.

A document's fake score is the sum of the fake scores of its terms,
same for valid; terms absent from the lexicon contribute zero to both
sides. The predicted label is VALID only when the valid score is
strictly greater, so exact ties (including empty documents) go to
FAKE.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from fanlex.corpus import Dataset, Document, Label
from fanlex.errors import ModelMismatchError
from fanlex.lexicon import Lexicon, ModelClass, document_terms
from fanlex.morph import AnalyzerRuleTable, Locale


class TermSetMode(Enum):
    """Whether a document's repeated terms are summed once or per use."""

    DISTINCT = "DISTINCT"
    MULTISET = "MULTISET"


@dataclass(frozen=True)
class DocumentScore:
    fake_score: float
    valid_score: float
    label: Label
    model_class: ModelClass
    unknown_terms: int


@dataclass(frozen=True)
class TermContribution:
    """One known term's scores and their difference (fake minus valid)."""

    term: str
    fake_score: float
    valid_score: float
    delta: float


def score_document(
    doc: Document,
    lex: Lexicon,
    term_set_mode: TermSetMode = TermSetMode.DISTINCT,
    *,
    analyzer: AnalyzerRuleTable | None = None,
    locale: Locale = Locale.TURKISH,
    include_title: bool = True,
) -> DocumentScore:
    """Score one document against one lexicon.

    DISTINCT sums each of the document's distinct terms once; MULTISET
    weights each term by its occurrence count. unknown_terms counts
    lexicon misses the same way: distinct terms or occurrences.
    """
    terms = document_terms(
        doc,
        lex.model_class,
        analyzer=analyzer,
        locale=locale,
        include_title=include_title,
    )
    distinct = term_set_mode is TermSetMode.DISTINCT
    fake = 0.0
    valid = 0.0
    unknown = 0
    entries = lex.entries
    for term, count in terms.items():
        weight = 1 if distinct else count
        entry = entries.get(term)
        if entry is None:
            unknown += weight
        else:
            fake += weight * entry.fake_score
            valid += weight * entry.valid_score
    label = Label.VALID if valid > fake else Label.FAKE
    return DocumentScore(
        fake_score=fake,
        valid_score=valid,
        label=label,
        model_class=lex.model_class,
        unknown_terms=unknown,
    )


def explain(
    doc: Document,
    lex: Lexicon,
    top_n: int,
    *,
    analyzer: AnalyzerRuleTable | None = None,
    locale: Locale = Locale.TURKISH,
    include_title: bool = True,
) -> list[TermContribution]:
    """The document's strongest known terms, by absolute score difference.

    Covers the document's distinct terms that the lexicon knows, sorted
    by |fake - valid| descending with lexicographic term order breaking
    ties. Unknown terms never appear.
    """
    if top_n < 0:
        raise ValueError("top_n must be >= 0")
    terms = document_terms(
        doc,
        lex.model_class,
        analyzer=analyzer,
        locale=locale,
        include_title=include_title,
    )
    contributions = []
    for term in terms:
        entry = lex.entries.get(term)
        if entry is None:
            continue
        contributions.append(
            TermContribution(
                term=term,
                fake_score=entry.fake_score,
                valid_score=entry.valid_score,
                delta=entry.fake_score - entry.valid_score,
            )
        )
    contributions.sort(key=lambda c: (-abs(c.delta), c.term))
    return contributions[:top_n]


def score_batch(
    docs: Dataset,
    lexicons: Sequence[Lexicon],
    term_set_mode: TermSetMode = TermSetMode.DISTINCT,
    *,
    analyzer: AnalyzerRuleTable | None = None,
    locale: Locale = Locale.TURKISH,
    include_title: bool = True,
) -> dict[str, dict[ModelClass, DocumentScore]]:
    """Score every document against every lexicon.

    Lexicons must have pairwise distinct model classes. The result is
    keyed by document id in dataset order, then by model class in the
    given lexicon order; each document's scores are independent of the
    rest of the batch.
    """
    seen: set[ModelClass] = set()
    for lex in lexicons:
        if lex.model_class in seen:
            raise ModelMismatchError(
                f"duplicate lexicon class {lex.model_class.value} in batch"
            )
        seen.add(lex.model_class)
    table: dict[str, dict[ModelClass, DocumentScore]] = {}
    for doc in docs.documents:
        row: dict[ModelClass, DocumentScore] = {}
        for lex in lexicons:
            row[lex.model_class] = score_document(
                doc,
                lex,
                term_set_mode,
                analyzer=analyzer,
                locale=locale,
                include_title=include_title,
            )
        table[doc.id] = row
    return table
