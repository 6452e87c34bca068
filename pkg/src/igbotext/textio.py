"""UTF-8 decoding/encoding of Igbo text and whole-file corpus ingestion.

Decoding is strict: an invalid byte sequence raises DecodeError with the
byte offset, never a replacement character. A leading byte-order mark is
stripped (editor artifact, not Igbo text).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from .errors import DecodeError

_BOM = "﻿"


@dataclass(frozen=True)
class RawBytes:
    """An undecoded byte sequence with an opaque source identifier."""

    data: bytes
    source_id: str

    def __post_init__(self) -> None:
        if not self.source_id:
            raise ValueError("source_id must be non-empty")


@dataclass(frozen=True)
class Document:
    """A fully decoded Igbo text with a stable identifier."""

    id: str
    text: str


def decode_utf8(raw: RawBytes) -> Document:
    """Strictly decode UTF-8 bytes into a Document.

    A byte-order mark at the very start is dropped; everywhere else
    U+FEFF is ordinary content.
    """
    try:
        text = raw.data.decode("utf-8", errors="strict")
    except UnicodeDecodeError as exc:
        raise DecodeError(raw.source_id, exc.start, exc.reason) from exc
    if text.startswith(_BOM):
        text = text[len(_BOM):]
    return Document(id=raw.source_id, text=text)


def encode_utf8(doc: Document) -> RawBytes:
    """Encode a Document back to UTF-8 bytes."""
    return RawBytes(data=doc.text.encode("utf-8"), source_id=doc.id)


def read_raw(path: str | os.PathLike[str]) -> RawBytes:
    """Read a file's bytes; the path becomes the source identifier."""
    p = Path(path)
    return RawBytes(data=p.read_bytes(), source_id=str(p))


def load_corpus(paths: list[str | os.PathLike[str]]) -> list[Document]:
    """Load one Document per path, in input order.

    Unreadable paths raise OSError naming the path; invalid UTF-8 raises
    DecodeError naming the path. Duplicate paths would break document-id
    uniqueness and are rejected.
    """
    docs: list[Document] = []
    seen: set[str] = set()
    for path in paths:
        doc = decode_utf8(read_raw(path))
        if doc.id in seen:
            raise ValueError(f"duplicate document id {doc.id!r} in corpus")
        seen.add(doc.id)
        docs.append(doc)
    return docs
