"""Label normalization shared by the alignment matchers and the search index.

normalize_text is case-folding, diacritic-stripping, whitespace-collapsing,
and idempotent: normalize(normalize(s)) == normalize(s).
"""

from __future__ import annotations

import unicodedata


def normalize_text(s: str) -> str:
    # fold before and after NFKD: compatibility decomposition can surface
    # cased characters (e.g. modifier letters decomposing to capitals)
    decomposed = unicodedata.normalize("NFKD", s.casefold())
    stripped = "".join(ch for ch in decomposed if not unicodedata.combining(ch))
    return " ".join(stripped.casefold().split())
