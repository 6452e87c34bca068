"""Igbo text normalization: lowercasing, tone-mark stripping, noise removal.

Mode.PAPER_GOLDEN keeps hyphenated words ("ihe-ngosi", "na-akwunye")
whole; Mode.STRICT splits both hyphens and apostrophes into word
boundaries. Tone marks (grave, acute, macron) are removed; the dot below
ị/ọ/ụ is part of the letter and always preserved.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field

from .config import Mode
from .textio import Document

# Combining marks that encode tone, stripped after canonical decomposition.
TONE_MARKS = frozenset({"̀", "́", "̄"})  # grave, acute, macron
DOT_BELOW = "̣"

APOSTROPHES = ("'", "’")

# Currency signs plus the enumerated punctuation/special characters. Hyphen
# and apostrophe are excluded: split_clitic_boundaries owns them.
_CURRENCY = "£€₦$"  # £ € ₦ $
_PUNCTUATION = ":;?!\"{}+&[]<>/@*=^%,.()" + "“”"  # incl. “ ”
DELETED_CHARS = frozenset(_CURRENCY + _PUNCTUATION)

_DIGITS = frozenset("0123456789")


@dataclass(frozen=True)
class NormalizerConfig:
    """Normalization switches, fully determined by the mode.

    ``protected_apostrophe_prefixes`` keeps apostrophe-bearing clitic words
    (e.g. "n’ulo") intact so the strict tokenizer can split off the
    clitic itself; the default configuration protects nothing and splits
    every apostrophe.
    """

    mode: Mode
    split_hyphens: bool | None = None
    split_apostrophes: bool | None = None
    protected_apostrophe_prefixes: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        forced_hyphens = self.mode is Mode.STRICT
        if self.split_hyphens is None:
            object.__setattr__(self, "split_hyphens", forced_hyphens)
        elif self.split_hyphens is not forced_hyphens:
            raise ValueError(f"{self.mode.value} mode forces split_hyphens={forced_hyphens}")
        if self.split_apostrophes is None:
            object.__setattr__(self, "split_apostrophes", True)
        elif self.split_apostrophes is not True:
            raise ValueError("both modes force split_apostrophes=True")


def to_lowercase(text: str) -> str:
    """Lowercase every cased scalar (Ụ→ụ, Ọ→ọ, Ị→ị included)."""
    return text.lower()


def strip_tone_marks(text: str) -> str:
    """Remove grave/acute/macron combining marks, preserving the dot below.

    The text is decomposed canonically, tone marks filtered out, and the
    result recomposed, so precomposed ("è") and combining-sequence inputs
    behave identically.
    """
    decomposed = unicodedata.normalize("NFD", text)
    kept = "".join(ch for ch in decomposed if ch not in TONE_MARKS)
    return unicodedata.normalize("NFC", kept)


def remove_noise(text: str) -> str:
    """Delete digit-bearing words and the listed symbols, collapse spaces.

    Expects lowercase, tone-mark-free input. A word containing any digit
    (this covers numbers, dates and times) vanishes entirely; currency
    signs and listed punctuation are deleted from within words; words
    emptied by deletion vanish.
    """
    words: list[str] = []
    for word in text.split():
        if any(ch in _DIGITS for ch in word):
            continue
        cleaned = "".join(ch for ch in word if ch not in DELETED_CHARS)
        if cleaned:
            words.append(cleaned)
    return " ".join(words)


def _is_protected(word: str, prefixes: tuple[str, ...]) -> bool:
    folded = _fold_apostrophes(word)
    return any(folded.startswith(_fold_apostrophes(p)) for p in prefixes)


def _fold_apostrophes(text: str) -> str:
    return text.replace("'", "’")


def split_clitic_boundaries(text: str, cfg: NormalizerConfig) -> str:
    """Turn intra-word hyphens and apostrophes into spaces per the config.

    Words beginning with a protected clitic prefix keep their apostrophe
    for the tokenizer to handle.
    """
    words: list[str] = []
    for word in text.split():
        w = word
        if cfg.split_hyphens:
            w = w.replace("-", " ")
        if cfg.split_apostrophes and not _is_protected(word, cfg.protected_apostrophe_prefixes):
            for mark in APOSTROPHES:
                w = w.replace(mark, " ")
        words.extend(w.split())
    return " ".join(words)


def normalize(doc: Document, cfg: NormalizerConfig) -> Document:
    """Apply the four normalization steps in order; the id is unchanged."""
    text = to_lowercase(doc.text)
    text = strip_tone_marks(text)
    text = remove_noise(text)
    text = split_clitic_boundaries(text, cfg)
    return Document(id=doc.id, text=text)
