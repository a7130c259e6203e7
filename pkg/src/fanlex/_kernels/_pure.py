"""Pure-Python text kernels.

The compiled backend (fanlex._kernels._ckernels) implements the same
rule set and must stay output-identical:

* a token is a maximal run of alphanumeric characters (str.isalnum),
  where a single apostrophe (' or U+2019) or hyphen-minus joins two
  runs when it has an alphanumeric character on both sides;
* normalization strips non-alphanumeric characters from both ends,
  applies the Turkish I mappings (I -> dotless i, dotted I -> i) when
  requested, lowercases, then strips the ends again because
  lowercasing U+0130 can leave a combining mark at an edge;
* suffix_runs serializes every contiguous run of a tag sequence with
  "-" joins, shortest runs first, equal lengths ordered by start.

The regular expressions rely on re treating \\w as exactly
str.isalnum plus the underscore; the character classes subtract the
underscore again.
"""

import re

_TOKEN = re.compile(r"[^\W_]+(?:['’-][^\W_]+)*")
_EDGE = re.compile(r"^[\W_]+|[\W_]+$")
_TURKISH_CASE = {ord("I"): "ı", ord("İ"): "i"}


def tokenize(text):
    """Split text into tokens, keeping intra-word apostrophes and hyphens."""
    return _TOKEN.findall(text)


def normalize_token(token, turkish):
    """Lowercase a token and strip surrounding punctuation. Idempotent."""
    if token.isalnum() and token == token.lower():
        return token
    core = _EDGE.sub("", token)
    if turkish:
        core = core.translate(_TURKISH_CASE)
    return _EDGE.sub("", core.lower())


def has_letter(token):
    """True if any character is alphabetic."""
    return any(ch.isalpha() for ch in token)


def normalized_tokens(text, turkish, letters_only=False):
    """Tokenize and normalize in one pass, dropping empty results.

    With letters_only, tokens without a single alphabetic character
    (numerals, mostly) are skipped before normalization.
    """
    out = []
    for tok in _TOKEN.findall(text):
        if letters_only and not any(ch.isalpha() for ch in tok):
            continue
        norm = normalize_token(tok, turkish)
        if norm:
            out.append(norm)
    return out


def suffix_runs(tags):
    """Serialize all contiguous runs of a suffix tag sequence."""
    k = len(tags)
    out = []
    for length in range(1, k + 1):
        for start in range(k - length + 1):
            out.append("-".join(tags[start : start + length]))
    return out
