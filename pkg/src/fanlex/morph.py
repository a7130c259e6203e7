"""Tokenization, normalization and rule-driven morphological analysis.

Analysis is pluggable. Two routes ship with the toolkit: exact lookup
in a rule table (the first listed analysis wins when a surface is
ambiguous) and a longest-suffix stripper for surfaces the table does
not know. Documents that carry pre-computed analyses bypass both.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Iterable, Sequence

from fanlex._kernels import has_letter, normalize_token
from fanlex._kernels import tokenize as _kernel_tokenize
from fanlex.errors import AnalysisError, InputError

if TYPE_CHECKING:
    from fanlex.corpus import Document


class Locale(Enum):
    """Casing rules used by normalization."""

    TURKISH = "turkish"
    GENERIC = "generic"


UNKNOWN_POS = "Unknown"

# Sentence-final punctuation, shared with corpus.split_sentences.
TERMINALS = ".!?…"

# Demo fallback rules for common Turkish inflections, ordered pairs of
# (surface, tag). They stand in for a full analyzer when no rule table
# is supplied; load_suffix_rules replaces them from a TSV file.
DEFAULT_SUFFIX_RULES: tuple[tuple[str, str], ...] = (
    ("lar", "A3pl"),
    ("ler", "A3pl"),
    ("dan", "Abl"),
    ("den", "Abl"),
    ("tan", "Abl"),
    ("ten", "Abl"),
    ("nın", "Gen"),
    ("nin", "Gen"),
    ("nun", "Gen"),
    ("nün", "Gen"),
    ("mış", "Narr"),
    ("miş", "Narr"),
    ("muş", "Narr"),
    ("müş", "Narr"),
    ("da", "Loc"),
    ("de", "Loc"),
    ("ta", "Loc"),
    ("te", "Loc"),
    ("ın", "Gen"),
    ("in", "Gen"),
    ("un", "Gen"),
    ("ün", "Gen"),
    ("ya", "Dat"),
    ("ye", "Dat"),
    ("yı", "Acc"),
    ("yi", "Acc"),
    ("yu", "Acc"),
    ("yü", "Acc"),
    ("dı", "Past"),
    ("di", "Past"),
    ("du", "Past"),
    ("dü", "Past"),
    ("tı", "Past"),
    ("ti", "Past"),
    ("tu", "Past"),
    ("tü", "Past"),
)


@dataclass(frozen=True)
class MorphAnalysis:
    """One analyzed token: normalized surface, root, POS and suffix tags."""

    raw: str
    root: str
    pos: str
    suffixes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.raw:
            raise ValueError("analysis raw form must be non-empty")
        if not self.root:
            raise ValueError("analysis root must be non-empty")
        if any(not tag for tag in self.suffixes):
            raise ValueError("suffix tags must be non-empty")


@dataclass
class AnalyzerRuleTable:
    """Surface lookup table plus ordered fallback suffix rules.

    entries is keyed by normalized surface form; suffix_rules hold
    (surface, tag) pairs and are applied longest surface first.
    Treated as immutable after construction.
    """

    entries: dict[str, tuple[MorphAnalysis, ...]] = field(default_factory=dict)
    suffix_rules: tuple[tuple[str, str], ...] = DEFAULT_SUFFIX_RULES

    def __post_init__(self) -> None:
        rules = sorted(
            enumerate(self.suffix_rules), key=lambda item: (-len(item[1][0]), item[0])
        )
        self.suffix_rules = tuple(rule for _, rule in rules)
        # Bucket by final character so tokens that match nothing are
        # rejected with one dict probe instead of a scan of all rules.
        self._by_last_char: dict[str, list[tuple[str, str]]] = {}
        for surface, tag in self.suffix_rules:
            if not surface:
                raise ValueError("suffix rule surface must be non-empty")
            self._by_last_char.setdefault(surface[-1], []).append((surface, tag))


def tokenize(text: str) -> list[str]:
    """Split text into word tokens.

    Splits on whitespace and punctuation, keeps intra-word apostrophes
    and hyphens attached, keeps digit runs, drops empty tokens.
    """
    return _kernel_tokenize(text)


def normalize(token: str, locale: Locale = Locale.TURKISH) -> str:
    """Lowercase and strip surrounding punctuation.

    TURKISH maps I to dotless i and dotted I to i before lowercasing.
    normalize(normalize(x)) == normalize(x) holds for every input.
    """
    return normalize_token(token, locale is Locale.TURKISH)


def compose_text(title: str | None, text: str, include_title: bool = True) -> str:
    """Join a title and body with a sentence boundary between them."""
    if not include_title or title is None or not title.strip():
        return text
    head = title.strip()
    if head[-1] not in TERMINALS:
        head += "."
    return f"{head} {text}" if text else head


def strip_suffixes(
    surface: str, rules: Sequence[tuple[str, str]] | AnalyzerRuleTable
) -> tuple[str, tuple[tuple[str, str], ...]]:
    """Strip known suffixes off the right end of a surface form.

    Repeatedly removes the longest matching rule surface, never leaving
    an empty remainder. Returns the root and the matched (surface, tag)
    pairs in word order, so root plus the matched surfaces concatenates
    back to the input.
    """
    if isinstance(rules, AnalyzerRuleTable):
        by_last = rules._by_last_char
    else:
        table = AnalyzerRuleTable(suffix_rules=tuple(rules))
        by_last = table._by_last_char
    rest = surface
    matched_rev: list[tuple[str, str]] = []
    while rest:
        bucket = by_last.get(rest[-1])
        if not bucket:
            break
        for suf, tag in bucket:
            if len(rest) > len(suf) and rest.endswith(suf):
                rest = rest[: -len(suf)]
                matched_rev.append((suf, tag))
                break
        else:
            break
    return rest, tuple(reversed(matched_rev))


def analyze_token(
    token: str, table: AnalyzerRuleTable, locale: Locale = Locale.TURKISH
) -> MorphAnalysis:
    """Analyze one token via table lookup, falling back to suffix stripping."""
    norm = normalize(token, locale)
    if not norm:
        raise AnalysisError(f"token {token!r} is empty after normalization")
    hit = table.entries.get(norm)
    if hit:
        return hit[0]
    root, matched = strip_suffixes(norm, table)
    return MorphAnalysis(
        raw=norm, root=root, pos=UNKNOWN_POS, suffixes=tuple(tag for _, tag in matched)
    )


_DEFAULT_TABLE: AnalyzerRuleTable | None = None


def default_rule_table() -> AnalyzerRuleTable:
    """Rule table with no exact entries and the demo suffix rules."""
    global _DEFAULT_TABLE
    if _DEFAULT_TABLE is None:
        _DEFAULT_TABLE = AnalyzerRuleTable()
    return _DEFAULT_TABLE


def analyze_document(
    doc: "Document",
    table: AnalyzerRuleTable | None = None,
    *,
    locale: Locale = Locale.TURKISH,
    include_title: bool = True,
) -> list[MorphAnalysis]:
    """Analyses for a document's tokens, in token order.

    Pre-computed analyses on the document are returned unchanged.
    Tokens without a single letter (numerals) are skipped: they carry
    no morphology.
    """
    if doc.analyses is not None:
        return list(doc.analyses)
    if table is None:
        table = default_rule_table()
    text = compose_text(doc.title, doc.text, include_title)
    out: list[MorphAnalysis] = []
    for position, token in enumerate(tokenize(text)):
        if not has_letter(token):
            continue
        try:
            out.append(analyze_token(token, table, locale))
        except AnalysisError as exc:
            raise AnalysisError(f"token {position}: {exc}") from exc
    return out


def load_rule_table(
    path: str,
    locale: Locale = Locale.TURKISH,
    suffix_rules: Iterable[tuple[str, str]] = DEFAULT_SUFFIX_RULES,
) -> AnalyzerRuleTable:
    """Load exact analyses from a JSONL file.

    Each line holds {"surface": ..., "analyses": [{"root", "pos",
    "suffixes"}, ...]}; surfaces are normalized at load and the listed
    order of analyses is preserved.
    """
    entries: dict[str, tuple[MorphAnalysis, ...]] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise InputError(f"{path}:{lineno}: invalid JSON ({exc.msg})") from exc
            if not isinstance(obj, dict):
                raise InputError(f"{path}:{lineno}: expected an object")
            surface = obj.get("surface")
            listed = obj.get("analyses")
            if not isinstance(surface, str) or not surface:
                raise InputError(f"{path}:{lineno}: missing or empty 'surface'")
            if not isinstance(listed, list) or not listed:
                raise InputError(f"{path}:{lineno}: missing or empty 'analyses'")
            norm = normalize(surface, locale)
            if not norm:
                raise InputError(
                    f"{path}:{lineno}: surface {surface!r} is empty after normalization"
                )
            parsed = []
            for item in listed:
                try:
                    parsed.append(
                        MorphAnalysis(
                            raw=norm,
                            root=item["root"],
                            pos=item["pos"],
                            suffixes=tuple(item.get("suffixes", ())),
                        )
                    )
                except (KeyError, TypeError, ValueError) as exc:
                    raise InputError(f"{path}:{lineno}: bad analysis: {exc}") from exc
            entries[norm] = tuple(parsed)
    return AnalyzerRuleTable(entries=entries, suffix_rules=tuple(suffix_rules))


def load_suffix_rules(path: str) -> tuple[tuple[str, str], ...]:
    """Load (surface, tag) fallback rules from a TSV file.

    One rule per line, surface and tag separated by a tab. Blank lines
    and lines starting with # are ignored.
    """
    rules: list[tuple[str, str]] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            body = line.strip()
            if not body or body.startswith("#"):
                continue
            parts = body.split("\t")
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise InputError(
                    f"{path}:{lineno}: expected 'surface<TAB>tag', got {body!r}"
                )
            rules.append((parts[0], parts[1]))
    return tuple(rules)
