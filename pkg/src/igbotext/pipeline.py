"""Full representation pipeline: normalize → tokenize → filter → n-grams.

Also builds document-term matrices over a corpus and serializes results.
All outputs are deterministic: identical inputs and configuration produce
byte-identical files.
"""

from __future__ import annotations

import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .config import Mode
from .errors import IgboTextError, OrderMismatchError, PipelineStageError
from .lexicon import KeyFeature, LexiconEntry, builtin_lexicon, load_lexicon, match_key_features
from .ngrams import (
    LanguageModel,
    NGram,
    NGramTable,
    extract_ngrams,
    merge_tables,
    rank_features,
)
from .normalize import APOSTROPHES, NormalizerConfig, normalize
from .stopwords import StopFilterConfig, StopList, builtin_stoplist, load_stoplist, remove_stopwords
from .textio import Document, read_raw
from .tokenize import TokenizerConfig, tokenize

VALID_ORDERS = (1, 2, 3)


@dataclass(frozen=True)
class PipelineConfig:
    mode: Mode
    stoplist_path: Path | None = None
    lexicon_path: Path | None = None
    orders: tuple[int, ...] = VALID_ORDERS
    output_format: str = "tsv"

    def __post_init__(self) -> None:
        if not self.orders:
            raise ValueError("orders must be non-empty")
        bad = [n for n in self.orders if n not in VALID_ORDERS]
        if bad:
            raise ValueError(f"unsupported n-gram orders: {bad}")
        object.__setattr__(self, "orders", tuple(sorted(set(self.orders))))
        if self.output_format not in ("tsv", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")


@dataclass(frozen=True)
class RepresentationBundle:
    doc_id: str
    tables: dict[int, NGramTable]
    features: list[KeyFeature] | None = None


@dataclass(frozen=True)
class DocTermMatrix:
    """Documents × n-gram features, cells holding per-document counts."""

    n: int
    doc_ids: tuple[str, ...]
    features: tuple[NGram, ...]
    cells: tuple[tuple[int, ...], ...] = field(default=())

    def column_sums(self) -> list[int]:
        return [sum(row[j] for row in self.cells) for j in range(len(self.features))]


class Pipeline:
    """Stop list, lexicon and stage configs assembled once per run."""

    def __init__(
        self,
        cfg: PipelineConfig,
        stoplist: StopList | None = None,
        lexicon: list[LexiconEntry] | None = None,
    ) -> None:
        self.cfg = cfg
        self.tokenizer_cfg = TokenizerConfig(mode=cfg.mode)
        # Strict mode leaves apostrophe-bearing clitic words ("n’ulo") intact
        # at normalization so the tokenizer can split off the clitic itself.
        protected = tuple(
            p for p in self.tokenizer_cfg.clitic_prefixes
            if any(mark in p for mark in APOSTROPHES)
        ) if cfg.mode is Mode.STRICT else ()
        self.normalizer_cfg = NormalizerConfig(mode=cfg.mode, protected_apostrophe_prefixes=protected)
        self.stopfilter_cfg = StopFilterConfig(mode=cfg.mode)
        self.stoplist = stoplist if stoplist is not None else self._load_stoplist()
        if lexicon is not None:
            self.lexicon: list[LexiconEntry] | None = lexicon
        elif cfg.lexicon_path is not None:
            self.lexicon = _stage("load-lexicon", load_lexicon, read_raw(cfg.lexicon_path))
        else:
            self.lexicon = None

    def _load_stoplist(self) -> StopList:
        if self.cfg.stoplist_path is None:
            return builtin_stoplist()
        return _stage("load-stoplist", load_stoplist, read_raw(self.cfg.stoplist_path))

    def represent(self, doc: Document) -> RepresentationBundle:
        normalized = _stage("normalize", normalize, doc, self.normalizer_cfg)
        stream = _stage("tokenize", tokenize, normalized, self.tokenizer_cfg)
        filtered = _stage("stopwords", remove_stopwords, stream, self.stoplist, self.stopfilter_cfg)
        tables = {n: extract_ngrams(filtered, n) for n in self.cfg.orders}
        features = None
        if self.lexicon is not None:
            model = LanguageModel.from_tokens(filtered)
            features = _stage("features", match_key_features, model, self.lexicon)
        return RepresentationBundle(doc_id=doc.id, tables=tables, features=features)


def _stage(name, fn, *args):
    try:
        return fn(*args)
    except IgboTextError as exc:
        raise PipelineStageError(name, exc) from exc


def run_pipeline(doc: Document, cfg: PipelineConfig) -> RepresentationBundle:
    """One-shot convenience wrapper around Pipeline.represent."""
    return Pipeline(cfg).represent(doc)


def run_features(doc: Document, cfg: PipelineConfig) -> RepresentationBundle:
    """represent() with the packaged lexicon when none is configured."""
    lexicon = None if cfg.lexicon_path is not None else builtin_lexicon()
    return Pipeline(cfg, lexicon=lexicon).represent(doc)


def build_doc_term_matrix(bundles: list[RepresentationBundle], n: int) -> DocTermMatrix:
    """Corpus matrix: feature axis in merged-table rank order.

    Cell (i, j) is document i's count of feature j; columns therefore sum
    to the merged-table counts.
    """
    if not bundles:
        return DocTermMatrix(n=n, doc_ids=(), features=(), cells=())
    for b in bundles:
        if n not in b.tables:
            raise OrderMismatchError(n, min(b.tables, default=0))
    merged = NGramTable(n=n, counts={}, total_windows=0, doc_id="merged")
    for b in bundles:
        merged = merge_tables(merged, b.tables[n])
    features = tuple(gram for gram, _ in rank_features(merged, len(merged.counts)))
    cells = tuple(
        tuple(b.tables[n].counts.get(gram, 0) for gram in features) for b in bundles
    )
    return DocTermMatrix(
        n=n,
        doc_ids=tuple(b.doc_id for b in bundles),
        features=features,
        cells=cells,
    )


# --- serialization -----------------------------------------------------

def table_to_tsv(t: NGramTable) -> str:
    """One "gram<TAB>count" row per entry, in rank order."""
    rows = rank_features(t, len(t.counts))
    return "".join(f"{' '.join(gram)}\t{count}\n" for gram, count in rows)


def table_to_obj(t: NGramTable) -> dict:
    rows = rank_features(t, len(t.counts))
    return {
        "doc_id": t.doc_id,
        "n": t.n,
        "total": t.total_windows,
        "entries": [{"gram": list(gram), "count": count} for gram, count in rows],
    }


def table_from_obj(obj: dict) -> NGramTable:
    counts = {tuple(e["gram"]): int(e["count"]) for e in obj["entries"]}
    return NGramTable(
        n=int(obj["n"]), counts=counts, total_windows=int(obj["total"]), doc_id=obj["doc_id"]
    )


def bundle_to_tsv(b: RepresentationBundle) -> str:
    """Tables in ascending order, blank-line separated when several."""
    blocks = [table_to_tsv(b.tables[n]) for n in sorted(b.tables)]
    return "\n".join(block for block in blocks if block)


def bundle_to_json(b: RepresentationBundle) -> str:
    objs = [table_to_obj(b.tables[n]) for n in sorted(b.tables)]
    payload = objs[0] if len(objs) == 1 else objs
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"


def bundle_from_json(text: str) -> RepresentationBundle:
    payload = json.loads(text)
    objs = payload if isinstance(payload, list) else [payload]
    tables = {int(obj["n"]): table_from_obj(obj) for obj in objs}
    doc_ids = {t.doc_id for t in tables.values()}
    if len(doc_ids) != 1:
        raise ValueError(f"bundle mixes document ids: {sorted(doc_ids)}")
    return RepresentationBundle(doc_id=doc_ids.pop(), tables=tables)


def matrix_to_tsv(m: DocTermMatrix) -> str:
    if not m.doc_ids and not m.features:
        return ""
    header = "doc_id\t" + "\t".join(" ".join(gram) for gram in m.features)
    lines = [header]
    for doc_id, row in zip(m.doc_ids, m.cells):
        lines.append(doc_id + "\t" + "\t".join(str(c) for c in row))
    return "".join(line + "\n" for line in lines)


def matrix_to_json(m: DocTermMatrix) -> str:
    payload = {
        "n": m.n,
        "docs": list(m.doc_ids),
        "features": [list(gram) for gram in m.features],
        "cells": [list(row) for row in m.cells],
    }
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"


def features_to_tsv(features: list[KeyFeature]) -> str:
    return "".join(
        f"{' '.join(f.gram)}\t{f.count}\t{f.gloss}\t{f.category.value}\n" for f in features
    )


def features_to_json(doc_id: str, features: list[KeyFeature]) -> str:
    payload = {
        "doc_id": doc_id,
        "features": [
            {
                "gram": list(f.gram),
                "count": f.count,
                "gloss": f.gloss,
                "category": f.category.value,
            }
            for f in features
        ],
    }
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"


def write_output(text: str, destination: str | os.PathLike[str] | None) -> None:
    """Write to a file (UTF-8, exact bytes) or stdout when destination is None."""
    if destination is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        Path(destination).write_text(text, encoding="utf-8")
