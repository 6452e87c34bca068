"""Stop-word list loading and token-stream filtering.

The shipped default list transcribes the published sample list; stop-word
inventories are corpus-dependent, so the list is a replaceable data file,
not code. Entries are stored with the typographic apostrophe (U+2019) so
that "n'" and "n’" compare equal at filter time.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from importlib import resources

from .config import Mode
from .errors import EmptyStopListWarning
from .normalize import _fold_apostrophes
from .textio import RawBytes, decode_utf8
from .tokenize import Token, TokenStream

# Strict mode drops tokens shorter than this many scalar values.
STRICT_MIN_TOKEN_LENGTH = 3


@dataclass(frozen=True)
class StopList:
    words: frozenset[str]
    source: str

    def __contains__(self, surface: str) -> bool:
        return _fold_apostrophes(surface) in self.words


@dataclass(frozen=True)
class StopFilterConfig:
    mode: Mode
    min_token_length: int | None = None

    def __post_init__(self) -> None:
        forced = STRICT_MIN_TOKEN_LENGTH if self.mode is Mode.STRICT else 0
        if self.min_token_length is None:
            object.__setattr__(self, "min_token_length", forced)
        elif self.min_token_length != forced:
            raise ValueError(f"{self.mode.value} mode forces min_token_length={forced}")


def load_stoplist(raw: RawBytes) -> StopList:
    """Parse a stop-word file: entries split on commas and line breaks.

    Entries are trimmed, lowercased and deduplicated; a zero-entry result
    emits EmptyStopListWarning rather than failing.
    """
    text = decode_utf8(raw).text
    entries = {
        _fold_apostrophes(piece.strip().lower())
        for piece in re.split(r"[,\r\n]", text)
        if piece.strip()
    }
    if not entries:
        warnings.warn(f"stop-word source {raw.source_id!r} has no entries", EmptyStopListWarning)
    return StopList(words=frozenset(entries), source=raw.source_id)


def builtin_stoplist() -> StopList:
    """The packaged default stop-word list."""
    data = resources.files("igbotext.data").joinpath("stopwords.txt").read_bytes()
    loaded = load_stoplist(RawBytes(data=data, source_id="builtin"))
    return StopList(words=loaded.words, source="builtin")


def remove_stopwords(ts: TokenStream, sl: StopList, cfg: StopFilterConfig) -> TokenStream:
    """Drop stop-list members and too-short tokens, re-indexing from 0.

    Length is measured in Unicode scalar values, so "ahụ" counts as three
    characters regardless of its byte length.
    """
    kept = [
        t.surface
        for t in ts.tokens
        if t.surface not in sl and len(t.surface) >= cfg.min_token_length
    ]
    tokens = tuple(Token(surface, i) for i, surface in enumerate(kept))
    return TokenStream(doc_id=ts.doc_id, tokens=tokens)
