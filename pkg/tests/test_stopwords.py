from __future__ import annotations

import pytest

from igbotext import (
    Document,
    EmptyStopListWarning,
    Mode,
    RawBytes,
    StopFilterConfig,
    StopList,
    builtin_stoplist,
    load_stoplist,
    normalize,
    remove_stopwords,
    tokenize,
    TokenizerConfig,
)

from golden_doc1 import GOLDEN_FILTERED

GOLDEN_FILTER = StopFilterConfig(mode=Mode.PAPER_GOLDEN)
STRICT_FILTER = StopFilterConfig(mode=Mode.STRICT)


def _stream(words: list[str]):
    return tokenize(Document("d", " ".join(words)), TokenizerConfig(mode=Mode.PAPER_GOLDEN))


def test_load_splits_on_commas_and_newlines():
    sl = load_stoplist(RawBytes(b"ndi, nke,\na", "mem"))
    assert sl.words == frozenset({"ndi", "nke", "a"})


def test_load_lowercases_and_dedupes():
    sl = load_stoplist(RawBytes("Ndi, NDI, nke".encode(), "mem"))
    assert sl.words == frozenset({"ndi", "nke"})


def test_load_empty_warns():
    with pytest.warns(EmptyStopListWarning):
        sl = load_stoplist(RawBytes(b"", "mem"))
    assert sl.words == frozenset()


def test_builtin_list_contents():
    sl = builtin_stoplist()
    assert sl.source == "builtin"
    for word in ("makana", "ahụ", "na", "ka", "ha", "n’"):
        assert word in sl.words
    # the fixture keeps these, so they must not be stop words
    for word in ("gi", "hu", "iji", "oburu"):
        assert word not in sl.words


def test_apostrophe_forms_unify():
    sl = load_stoplist(RawBytes("n'".encode(), "mem"))
    assert "n’" in sl.words
    assert "n'" in sl  # membership folds the straight form too


def test_filter_drops_list_members():
    sl = builtin_stoplist()
    out = remove_stopwords(_stream(["anya", "makana", "projekto"]), sl, GOLDEN_FILTER)
    assert out.surfaces() == ["anya", "projekto"]


def test_filter_doc1_golden(doc1, golden_pipeline):
    stream = tokenize(
        normalize(doc1, golden_pipeline.normalizer_cfg), golden_pipeline.tokenizer_cfg
    )
    out = remove_stopwords(stream, golden_pipeline.stoplist, GOLDEN_FILTER)
    assert len(out.tokens) == 36
    assert tuple(out.surfaces()) == GOLDEN_FILTERED
    for word in ("a", "na", "ka", "ha", "ga", "ndi", "makana", "ahụ"):
        assert word not in out.surfaces()


def test_strict_filter_drops_short_tokens():
    sl = builtin_stoplist()
    out = remove_stopwords(_stream(["hu", "gi", "anya"]), sl, STRICT_FILTER)
    assert out.surfaces() == ["anya"]


def test_length_counts_scalars_not_bytes():
    sl = StopList(frozenset(), "mem")
    out = remove_stopwords(_stream(["ahụ"]), sl, STRICT_FILTER)
    assert out.surfaces() == ["ahụ"]  # three scalars, survives


def test_filter_reindexes_from_zero():
    sl = builtin_stoplist()
    out = remove_stopwords(_stream(["na", "anya", "na", "projekto"]), sl, GOLDEN_FILTER)
    assert [t.index for t in out.tokens] == [0, 1]


def test_filter_idempotent(doc1, golden_pipeline):
    stream = tokenize(
        normalize(doc1, golden_pipeline.normalizer_cfg), golden_pipeline.tokenizer_cfg
    )
    once = remove_stopwords(stream, golden_pipeline.stoplist, GOLDEN_FILTER)
    twice = remove_stopwords(once, golden_pipeline.stoplist, GOLDEN_FILTER)
    assert twice == once


def test_empty_list_zero_minlength_is_identity():
    stream = _stream(["a", "na", "anya"])
    sl = StopList(frozenset(), "mem")
    assert remove_stopwords(stream, sl, GOLDEN_FILTER) == stream


def test_filter_config_forced_lengths():
    assert GOLDEN_FILTER.min_token_length == 0
    assert STRICT_FILTER.min_token_length == 3
    with pytest.raises(ValueError):
        StopFilterConfig(mode=Mode.STRICT, min_token_length=1)
    with pytest.raises(ValueError):
        StopFilterConfig(mode=Mode.PAPER_GOLDEN, min_token_length=3)
