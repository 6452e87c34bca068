"""Compound-word lexicon: taxonomy, file loading, and key-feature matching.

Compound categories follow the six-way analysis of Igbo compounding.
Only two categories are detectable from the surface alone (exact word
repetition and the interior conjunction "na"); the rest are lexical
knowledge carried by the shipped lexicon file.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from importlib import resources

from .errors import LexiconFormatError, LexiconInvariantError
from .ngrams import LanguageModel, NGram, _gram_sort_key
from .textio import RawBytes, decode_utf8

MAX_PHRASE_WORDS = 4


class CompoundCategory(str, Enum):
    NOMINAL = "Nominal"
    AGENTIVE = "Agentive"
    DUPLICATED = "Duplicated"
    COORDINATE = "Coordinate"
    PROPER = "Proper"
    DERIVED = "Derived"


# Proper and Derived compounds are written together (single written word).
_SINGLE_WORD_CATEGORIES = frozenset({CompoundCategory.PROPER, CompoundCategory.DERIVED})


@dataclass(frozen=True)
class LexiconEntry:
    phrase: tuple[str, ...]
    gloss: str
    category: CompoundCategory


@dataclass(frozen=True)
class KeyFeature:
    """A lexicon phrase observed in a document's n-gram tables."""

    gram: NGram
    gloss: str
    category: CompoundCategory
    count: int


def _validate_entry(entry: LexiconEntry, where: str) -> None:
    n = len(entry.phrase)
    if not 1 <= n <= MAX_PHRASE_WORDS:
        raise LexiconInvariantError(f"{where}: phrase must have 1..{MAX_PHRASE_WORDS} words, got {n}")
    if entry.category in _SINGLE_WORD_CATEGORIES:
        if n != 1:
            raise LexiconInvariantError(
                f"{where}: {entry.category.value} compounds are written together (one word), got {n}"
            )
        return
    if n < 2:
        raise LexiconInvariantError(
            f"{where}: {entry.category.value} compounds have at least two words"
        )
    repeated = len(set(entry.phrase)) == 1
    if entry.category is CompoundCategory.DUPLICATED and not repeated:
        raise LexiconInvariantError(f"{where}: Duplicated compounds repeat one word exactly")
    if repeated and entry.category is not CompoundCategory.DUPLICATED:
        raise LexiconInvariantError(f"{where}: repeated words demand category Duplicated")
    if entry.category is CompoundCategory.COORDINATE and "na" not in entry.phrase[1:-1]:
        raise LexiconInvariantError(f"{where}: Coordinate compounds join words with interior 'na'")


def load_lexicon(raw: RawBytes) -> list[LexiconEntry]:
    """Parse a lexicon file: one TAB-separated entry per non-empty line.

    Format: phrase (space-separated words) TAB gloss TAB category name.
    Lines starting with '#' are ignored. Violations of the category rules
    raise LexiconInvariantError naming the line.
    """
    text = decode_utf8(raw).text
    entries: list[LexiconEntry] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        where = f"{raw.source_id}:{lineno}"
        fields = line.split("\t")
        if len(fields) != 3:
            raise LexiconFormatError(f"{where}: expected 3 tab-separated fields, got {len(fields)}")
        phrase_text, gloss, category_name = (f.strip() for f in fields)
        if not phrase_text:
            raise LexiconFormatError(f"{where}: empty phrase")
        try:
            category = CompoundCategory(category_name)
        except ValueError:
            raise LexiconFormatError(f"{where}: unknown category {category_name!r}") from None
        entry = LexiconEntry(
            phrase=tuple(word.lower() for word in phrase_text.split()),
            gloss=gloss,
            category=category,
        )
        _validate_entry(entry, where)
        entries.append(entry)
    return entries


def dump_lexicon(entries: list[LexiconEntry]) -> str:
    """Serialize entries back to the lexicon file format."""
    lines = [f"{' '.join(e.phrase)}\t{e.gloss}\t{e.category.value}" for e in entries]
    return "".join(line + "\n" for line in lines)


def builtin_lexicon() -> list[LexiconEntry]:
    """The packaged lexicon of known Igbo compound words."""
    data = resources.files("igbotext.data").joinpath("lexicon.tsv").read_bytes()
    return load_lexicon(RawBytes(data=data, source_id="builtin"))


def detect_category(phrase: tuple[str, ...]) -> CompoundCategory | None:
    """Surface-rule category detection; None when no rule fires.

    Exact repetition marks Duplicated; an interior "na" marks Coordinate.
    Nominal, Agentive, Proper and Derived are not surface-detectable.
    """
    if len(phrase) >= 2 and len(set(phrase)) == 1:
        return CompoundCategory.DUPLICATED
    if "na" in phrase[1:-1]:
        return CompoundCategory.COORDINATE
    return None


def match_key_features(m: LanguageModel, lex: list[LexiconEntry]) -> list[KeyFeature]:
    """Lexicon phrases found in the model's tables, with their counts.

    Output is sorted by descending count, then lexicographically by the
    space-joined gram.
    """
    features: list[KeyFeature] = []
    for entry in lex:
        n = len(entry.phrase)
        if n > 3:
            continue
        count = m.table(n).counts.get(entry.phrase, 0)
        if count > 0:
            features.append(
                KeyFeature(gram=entry.phrase, gloss=entry.gloss, category=entry.category, count=count)
            )
    features.sort(key=lambda f: (-f.count, _gram_sort_key(f.gram)))
    return features
