"""Labeled corpora laid out as ``<root>/<category>/<file>``."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .errors import DuplicateDocumentId, EmptyCorpus, EncodingError
from .preprocess import RawDocument

log = logging.getLogger(__name__)

BOM = "﻿"


@dataclass(frozen=True)
class CorpusManifest:
    root: Path
    entries: tuple[tuple[str, Path], ...]

    @property
    def counts(self) -> dict[str, int]:
        return dict(sorted(Counter(c for c, _ in self.entries).items()))

    @property
    def categories(self) -> list[str]:
        return list(self.counts)

    def doc_id(self, path: Path) -> str:
        return path.relative_to(self.root).as_posix()

    def __len__(self) -> int:
        return len(self.entries)


def scan_corpus(root: str | Path) -> CorpusManifest:
    """One category per immediate subdirectory, one document per file in it
    (nested directories included). Empty category directories are skipped."""
    root = Path(root)
    if not root.exists():
        raise FileNotFoundError(f"corpus directory not found: {root}")
    if not root.is_dir():
        raise NotADirectoryError(f"corpus path is not a directory: {root}")
    entries = []
    seen = set()
    for cat_dir in sorted((p for p in root.iterdir() if p.is_dir()), key=lambda p: p.name):
        files = sorted((p for p in cat_dir.rglob("*") if p.is_file()), key=lambda p: p.as_posix())
        if not files:
            log.warning("skipping empty category directory %s", cat_dir)
            continue
        for f in files:
            doc_id = f.relative_to(root).as_posix()
            if doc_id in seen:
                raise DuplicateDocumentId(doc_id)
            seen.add(doc_id)
            entries.append((cat_dir.name, f))
    if not entries:
        raise EmptyCorpus(str(root))
    return CorpusManifest(root, tuple(entries))


def decode_utf8(data: bytes, where: str = "") -> str:
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise EncodingError(e.start, where) from None
    return text[1:] if text.startswith(BOM) else text


def read_document(path: str | Path, root: str | Path | None = None) -> RawDocument:
    """Read a UTF-8 file; the id is the path relative to ``root`` if given."""
    path = Path(path)
    doc_id = path.relative_to(root).as_posix() if root is not None else str(path)
    return RawDocument(doc_id, decode_utf8(path.read_bytes(), str(path)))


def iter_labeled(manifest: CorpusManifest):
    for category, path in manifest.entries:
        yield category, read_document(path, manifest.root)
