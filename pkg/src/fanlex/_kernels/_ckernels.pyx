# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled text kernels, output-identical to fanlex._kernels._pure.

The rule set is documented in _pure.py; any change must land in both
backends, and the parity tests compare them character for character.
"""

from cpython.unicode cimport Py_UNICODE_ISALNUM, Py_UNICODE_ISALPHA


cdef inline bint _is_connector(Py_UCS4 c):
    # Apostrophe, right single quote, hyphen-minus.
    return c == 0x27 or c == 0x2019 or c == 0x2D


def tokenize(str text not None):
    """Split text into tokens, keeping intra-word apostrophes and hyphens."""
    cdef list out = []
    cdef Py_ssize_t n = len(text)
    cdef Py_ssize_t i = 0
    cdef Py_ssize_t start
    cdef Py_UCS4 c
    while i < n:
        c = text[i]
        if Py_UNICODE_ISALNUM(c):
            start = i
            i += 1
            while i < n:
                c = text[i]
                if Py_UNICODE_ISALNUM(c):
                    i += 1
                elif (
                    _is_connector(c)
                    and Py_UNICODE_ISALNUM(text[i - 1])
                    and i + 1 < n
                    and Py_UNICODE_ISALNUM(text[i + 1])
                ):
                    i += 1
                else:
                    break
            out.append(text[start:i])
        else:
            i += 1
    return out


cdef str _strip_edges(str s):
    cdef Py_ssize_t a = 0
    cdef Py_ssize_t b = len(s)
    while a < b and not Py_UNICODE_ISALNUM(s[a]):
        a += 1
    while b > a and not Py_UNICODE_ISALNUM(s[b - 1]):
        b -= 1
    if a == 0 and b == len(s):
        return s
    return s[a:b]


cdef str _normalize(str token, bint turkish):
    cdef str core = _strip_edges(token)
    if turkish:
        if u"I" in core:
            core = core.replace(u"I", u"ı")
        if u"İ" in core:
            core = core.replace(u"İ", u"i")
    core = core.lower()
    # Lowercasing U+0130 outside Turkish mode appends a combining dot,
    # which must not survive at an edge.
    return _strip_edges(core)


def normalize_token(str token not None, bint turkish):
    """Lowercase a token and strip surrounding punctuation. Idempotent."""
    return _normalize(token, turkish)


def has_letter(str token not None):
    """True if any character is alphabetic."""
    cdef Py_ssize_t i
    cdef Py_ssize_t n = len(token)
    for i in range(n):
        if Py_UNICODE_ISALPHA(token[i]):
            return True
    return False


def normalized_tokens(str text not None, bint turkish, bint letters_only=False):
    """Tokenize and normalize in one pass, dropping empty results."""
    cdef list out = []
    cdef Py_ssize_t n = len(text)
    cdef Py_ssize_t i = 0
    cdef Py_ssize_t start
    cdef bint saw_alpha
    cdef Py_UCS4 c
    cdef str norm
    while i < n:
        c = text[i]
        if Py_UNICODE_ISALNUM(c):
            start = i
            saw_alpha = Py_UNICODE_ISALPHA(c)
            i += 1
            while i < n:
                c = text[i]
                if Py_UNICODE_ISALNUM(c):
                    if Py_UNICODE_ISALPHA(c):
                        saw_alpha = True
                    i += 1
                elif (
                    _is_connector(c)
                    and Py_UNICODE_ISALNUM(text[i - 1])
                    and i + 1 < n
                    and Py_UNICODE_ISALNUM(text[i + 1])
                ):
                    i += 1
                else:
                    break
            if letters_only and not saw_alpha:
                continue
            norm = _normalize(text[start:i], turkish)
            if len(norm) > 0:
                out.append(norm)
        else:
            i += 1
    return out


def suffix_runs(tags):
    """Serialize all contiguous runs of a suffix tag sequence."""
    cdef Py_ssize_t k = len(tags)
    cdef Py_ssize_t length, start
    cdef list out = []
    cdef list tag_list = list(tags)
    for length in range(1, k + 1):
        for start in range(k - length + 1):
            if length == 1:
                out.append(tag_list[start])
            else:
                out.append(u"-".join(tag_list[start : start + length]))
    return out
