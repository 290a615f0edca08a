from pathlib import Path

import pytest

from arabcat.corpus_io import read_document, scan_corpus
from arabcat.errors import EmptyCorpus, EncodingError


def _write(root: Path, rel: str, data: bytes | str = "نص"):
    p = root / rel
    p.parent.mkdir(parents=True, exist_ok=True)
    if isinstance(data, str):
        data = data.encode("utf-8")
    p.write_bytes(data)
    return p


def test_single_document(tmp_path):
    _write(tmp_path, "A/d1.txt")
    m = scan_corpus(tmp_path)
    assert [(c, p.name) for c, p in m.entries] == [("A", "d1.txt")]
    assert m.counts == {"A": 1}


def test_eleven_category_shape(tmp_path):
    sizes = {"Agriculture": 107, "Astronomy": 98, "Business": 70, "Computer": 95, "Economics": 100,
             "Environment": 55, "History": 74, "Politics": 104, "Religion": 99, "Sport": 76,
             "Tourism": 104}
    for cat, n in sizes.items():
        for i in range(n):
            _write(tmp_path, f"{cat}/{i:03d}.txt", "x")
    m = scan_corpus(tmp_path)
    assert m.counts == sizes
    assert len(m) == 982


def test_ordering_and_nesting(tmp_path):
    _write(tmp_path, "B/z.txt")
    _write(tmp_path, "B/sub/a.txt")
    _write(tmp_path, "A/b.md")
    _write(tmp_path, "A/a")
    _write(tmp_path, "README")  # files at the root are not documents
    (tmp_path / "Empty").mkdir()
    m = scan_corpus(tmp_path)
    assert [m.doc_id(p) for _, p in m.entries] == ["A/a", "A/b.md", "B/sub/a.txt", "B/z.txt"]
    assert m.categories == ["A", "B"]
    assert scan_corpus(tmp_path) == m


def test_empty_and_missing(tmp_path):
    with pytest.raises(EmptyCorpus):
        scan_corpus(tmp_path)
    (tmp_path / "A").mkdir()
    with pytest.raises(EmptyCorpus):
        scan_corpus(tmp_path)
    with pytest.raises(FileNotFoundError, match="nope"):
        scan_corpus(tmp_path / "nope")
    f = _write(tmp_path, "file.txt")
    with pytest.raises(NotADirectoryError):
        scan_corpus(f)


def test_read_document(tmp_path):
    p = _write(tmp_path, "A/d.txt", "السوق اليوم")
    doc = read_document(p, tmp_path)
    assert doc.id == "A/d.txt" and doc.text == "السوق اليوم"
    assert read_document(p).id == str(p)


def test_read_document_strips_bom(tmp_path):
    p = _write(tmp_path, "d.txt", b"\xef\xbb\xbf" + "سوق".encode())
    assert read_document(p).text == "سوق"


def test_read_document_invalid_utf8(tmp_path):
    data = "abcdefghijklmnopq".encode() + b"\xff" + b"rest"
    assert len(data[:17]) == 17
    p = _write(tmp_path, "bad.txt", data)
    with pytest.raises(EncodingError) as e:
        read_document(p)
    assert e.value.offset == 17
    assert str(p) in str(e.value)
