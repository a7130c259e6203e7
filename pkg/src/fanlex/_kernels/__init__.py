"""Kernel dispatch: compiled backend when available, pure Python otherwise.

Set FANLEX_PURE=1 in the environment to force the pure backend even
when the compiled one is installed.
"""

import os

BACKEND = "pure"

if os.environ.get("FANLEX_PURE", "") not in ("1", "true", "yes"):
    try:
        from fanlex._kernels._ckernels import (  # noqa: F401
            has_letter,
            normalize_token,
            normalized_tokens,
            suffix_runs,
            tokenize,
        )

        BACKEND = "compiled"
    except ImportError:
        pass

if BACKEND == "pure":
    from fanlex._kernels._pure import (  # noqa: F401
        has_letter,
        normalize_token,
        normalized_tokens,
        suffix_runs,
        tokenize,
    )
