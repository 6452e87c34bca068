"""Word n-gram frequency tables and maximum-likelihood probabilities.

N-grams are counted over the stop-word-filtered token stream with gaps
closed: windows run across removed stop words and sentence ends, with no
padding or boundary symbols. Probabilities are raw MLE ratios computed on
demand from integer counts; there is no smoothing, so unseen events are
probability zero and unseen contexts are errors.
"""

from __future__ import annotations

import unicodedata
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import EmptyModelError, InvalidOrderError, OrderMismatchError, UnknownContextError
from .tokenize import TokenStream

NGram = tuple[str, ...]

MIN_ORDER = 1
MAX_ORDER = 3


@dataclass(frozen=True)
class NGramTable:
    """Counts of order-n windows plus total-window bookkeeping."""

    n: int
    counts: Mapping[NGram, int]
    total_windows: int
    doc_id: str


@dataclass(frozen=True)
class LanguageModel:
    """Unigram, bigram and trigram tables built from one token stream."""

    unigrams: NGramTable
    bigrams: NGramTable
    trigrams: NGramTable

    @classmethod
    def from_tokens(cls, ts: TokenStream) -> LanguageModel:
        return cls(
            unigrams=extract_ngrams(ts, 1),
            bigrams=extract_ngrams(ts, 2),
            trigrams=extract_ngrams(ts, 3),
        )

    def table(self, n: int) -> NGramTable:
        if n == 1:
            return self.unigrams
        if n == 2:
            return self.bigrams
        if n == 3:
            return self.trigrams
        raise InvalidOrderError(n)


def extract_ngrams(ts: TokenStream, n: int) -> NGramTable:
    """Count every contiguous window of n tokens; total = max(0, T-n+1)."""
    if not MIN_ORDER <= n <= MAX_ORDER:
        raise InvalidOrderError(n)
    surfaces = ts.surfaces()
    windows = (tuple(surfaces[i:i + n]) for i in range(len(surfaces) - n + 1))
    counts = Counter(windows)
    return NGramTable(
        n=n,
        counts=dict(counts),
        total_windows=max(0, len(surfaces) - n + 1),
        doc_id=ts.doc_id,
    )


def unigram_probability(m: LanguageModel, w: str) -> float:
    """MLE unigram probability: count(w) over total unigram windows."""
    total = m.unigrams.total_windows
    if total == 0:
        raise EmptyModelError("model has no unigram windows")
    return m.unigrams.counts.get((w,), 0) / total


def sequence_probability_unigram(m: LanguageModel, ws: Sequence[str]) -> float:
    """Product of unigram probabilities; the empty product is 1."""
    if m.unigrams.total_windows == 0:
        raise EmptyModelError("model has no unigram windows")
    p = 1.0
    for w in ws:
        p *= unigram_probability(m, w)
        if p == 0.0:
            return 0.0
    return p


def bigram_conditional(m: LanguageModel, w1: str, w2: str) -> float:
    """MLE conditional count(w1,w2)/count(w1)."""
    context = m.unigrams.counts.get((w1,), 0)
    if context == 0:
        raise UnknownContextError((w1,))
    return m.bigrams.counts.get((w1, w2), 0) / context


def sequence_probability_bigram(m: LanguageModel, ws: Sequence[str]) -> float:
    """Forward chain P(w1) * prod P(w_i | w_{i-1}); zero factors yield 0."""
    if m.unigrams.total_windows == 0:
        raise EmptyModelError("model has no unigram windows")
    if not ws:
        raise ValueError("sequence must contain at least one word")
    p = unigram_probability(m, ws[0])
    for prev, cur in zip(ws, ws[1:]):
        if p == 0.0:
            return 0.0
        if m.unigrams.counts.get((prev,), 0) == 0:
            return 0.0
        p *= bigram_conditional(m, prev, cur)
    return p


def trigram_conditional(m: LanguageModel, w1: str, w2: str, w3: str) -> float:
    """MLE conditional count(w1,w2,w3)/count(w1,w2)."""
    context = m.bigrams.counts.get((w1, w2), 0)
    if context == 0:
        raise UnknownContextError((w1, w2))
    return m.trigrams.counts.get((w1, w2, w3), 0) / context


def merge_tables(a: NGramTable, b: NGramTable) -> NGramTable:
    """Pointwise count addition for corpus aggregation."""
    if a.n != b.n:
        raise OrderMismatchError(a.n, b.n)
    counts = Counter(a.counts)
    counts.update(b.counts)
    return NGramTable(
        n=a.n,
        counts=dict(counts),
        total_windows=a.total_windows + b.total_windows,
        doc_id="merged",
    )


def _gram_sort_key(gram: NGram) -> str:
    return unicodedata.normalize("NFC", " ".join(gram))


def rank_features(t: NGramTable, k: int) -> list[tuple[NGram, int]]:
    """Top-k entries by descending count, ties broken lexicographically."""
    if k < 0:
        raise ValueError("k must be non-negative")
    ranked = sorted(t.counts.items(), key=lambda item: (-item[1], _gram_sort_key(item[0])))
    return ranked[:k]
