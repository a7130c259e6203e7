"""Exception taxonomy shared across the toolkit.

The CLI maps these onto exit codes: InputError and I/O problems exit
with 2, DomainError with 3, FormatError with 4.
"""


class FanlexError(Exception):
    """Base class for all toolkit errors."""


class InputError(FanlexError):
    """Malformed input data: corpora, word lists or rule tables."""


class CorpusParseError(InputError):
    """A corpus line failed to parse or validate; the message names it."""


class DuplicateDocumentError(InputError):
    """Two documents share an id."""


class AnalysisError(InputError):
    """A token could not be analyzed, e.g. empty after normalization."""


class DomainError(FanlexError):
    """A precondition on otherwise well-formed data was violated."""


class EmptyTrainingSplitError(DomainError):
    """A training split has no documents or yields no terms."""


class FoldSizeError(DomainError):
    """Some label has too few documents for the requested fold count."""


class LeakageError(DomainError):
    """Train and test splits share document ids."""


class NoSentencesError(DomainError):
    """Per-sentence statistics need at least one sentence."""


class ModelMismatchError(DomainError):
    """Lexicons disagree on model class, count mode or smoothing."""


class FormatError(FanlexError):
    """A persisted lexicon file is unreadable or inconsistent."""


class LexiconParseError(FormatError):
    """The lexicon file does not follow the expected line format."""


class LexiconVersionError(FormatError):
    """The lexicon file declares an unsupported format version."""


class LexiconChecksumError(FormatError):
    """The stored checksum does not match the entry lines."""


class LexiconConsistencyError(FormatError):
    """Stored totals or entries contradict each other."""
