"""Turn raw document text into a bag of normalized, stemmed tokens.

Pipeline per token: tokenize -> normalize -> filter (length, digits,
stop words) -> light stem -> filter again -> count.
"""

from __future__ import annotations

import hashlib
import unicodedata
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

BARE_ALEF = "ا"
HA = "ه"
TA_MARBUTA = "ة"
TATWEEL = "ـ"

# alef-madda, alef-hamza-above, alef-hamza-below, hamza, waw-hamza, ya-hamza
HAMZA_FORMS = "آأإءؤئ"

_DIACRITIC_RANGES = [
    (0x0610, 0x061A),
    (0x064B, 0x065F),
    (0x0670, 0x0670),
    (0x06D6, 0x06DC),
    (0x06DF, 0x06E4),
    (0x06E7, 0x06E8),
    (0x06EA, 0x06ED),
    (0x08D3, 0x08E1),
    (0x08E3, 0x08FF),
]
ARABIC_DIACRITICS = frozenset(
    chr(cp) for lo, hi in _DIACRITIC_RANGES for cp in range(lo, hi + 1)
)

_TRANSLATION = {ord(ch): None for ch in ARABIC_DIACRITICS}
_TRANSLATION[ord(TATWEEL)] = None
_TRANSLATION.update({ord(ch): BARE_ALEF for ch in HAMZA_FORMS})
_TRANSLATION[ord(TA_MARBUTA)] = HA

DEFAULT_PREFIXES = ("وال", "بال", "كال", "فال", "لل", "ال", "و", "ف", "ب", "ك", "ل")
DEFAULT_SUFFIXES = ("ها", "ان", "ات", "ون", "ين", "يه", "ية", "ه", "ي", "ا")


@dataclass(frozen=True)
class RawDocument:
    id: str
    text: str

    def __post_init__(self):
        if not self.id:
            raise ValueError("document id must be nonempty")


def _run_class(ch: str) -> str | None:
    major = unicodedata.category(ch)[0]
    if major in "LNM":
        return major
    return None


def tokenize(text: str) -> list[str]:
    """Split ``text`` into runs of letters or digits.

    Anything that is not a letter, digit or combining mark separates
    tokens. A letter run and an adjacent digit run are separate tokens,
    so ``"abc123"`` gives ``["abc", "123"]``. Combining marks stay with
    the run they follow.
    """
    tokens = []
    buf: list[str] = []
    kind = None
    for ch in text:
        cls = _run_class(ch)
        if cls is None:
            if buf:
                tokens.append("".join(buf))
                buf = []
            kind = None
            continue
        if cls == "M":
            buf.append(ch)
            if kind is None:
                kind = "L"
            continue
        if kind is not None and cls != kind and buf:
            tokens.append("".join(buf))
            buf = []
        buf.append(ch)
        kind = cls
    if buf:
        tokens.append("".join(buf))
    return tokens


def normalize_token(token: str) -> str:
    """Strip diacritics and tatweel, fold hamza forms to bare alef and
    ta-marbuta to ha, then lowercase. Idempotent."""
    return token.translate(_TRANSLATION).lower()


def _has_digit(token: str) -> bool:
    return any(unicodedata.category(ch)[0] == "N" for ch in token)


@dataclass(frozen=True)
class StopWordList:
    words: frozenset[str]
    source: str = "builtin"

    @classmethod
    def from_words(cls, words: Iterable[str], source: str = "<memory>") -> "StopWordList":
        normalized = (normalize_token(w.strip()) for w in words)
        return cls(frozenset(w for w in normalized if w), source)

    @classmethod
    def from_file(cls, path: str | Path) -> "StopWordList":
        text = Path(path).read_text(encoding="utf-8")
        return cls.from_words(_content_lines(text), source=str(path))

    @classmethod
    def builtin(cls) -> "StopWordList":
        text = resources.files("arabcat").joinpath("data/stopwords.txt").read_text(encoding="utf-8")
        return cls.from_words(_content_lines(text), source="builtin")

    @classmethod
    def empty(cls) -> "StopWordList":
        return cls(frozenset(), source="<empty>")

    def __contains__(self, word: str) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)

    @property
    def digest(self) -> str:
        h = hashlib.sha256()
        h.update("\n".join(sorted(self.words)).encode("utf-8"))
        return h.hexdigest()[:16]


def _content_lines(text: str) -> list[str]:
    text = text.lstrip("﻿")
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


@dataclass(frozen=True)
class StemmerConfig:
    """Affix lists for the light stemmer.

    Affixes are normalized and ordered longest first on construction, so
    ``ية`` and ``يه`` collapse to one entry.
    """

    prefixes: tuple[str, ...] = DEFAULT_PREFIXES
    suffixes: tuple[str, ...] = DEFAULT_SUFFIXES
    min_stem_len: int = 2
    _digest: str = field(default="", init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.min_stem_len < 2:
            raise ValueError("min_stem_len must be at least 2")
        prefixes = _prepare_affixes(self.prefixes)
        suffixes = _prepare_affixes(self.suffixes)
        if not prefixes or not suffixes:
            raise ValueError("prefix and suffix lists must be nonempty")
        object.__setattr__(self, "prefixes", prefixes)
        object.__setattr__(self, "suffixes", suffixes)
        h = hashlib.sha256()
        payload = "|".join([",".join(prefixes), ",".join(suffixes), str(self.min_stem_len)])
        h.update(payload.encode("utf-8"))
        object.__setattr__(self, "_digest", h.hexdigest()[:16])

    @property
    def digest(self) -> str:
        return self._digest

    @classmethod
    def from_file(cls, path: str | Path, min_stem_len: int = 2) -> "StemmerConfig":
        """Read an affix file with ``[prefixes]`` and ``[suffixes]`` sections."""
        sections: dict[str, list[str]] = {"prefixes": [], "suffixes": []}
        current = None
        for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            line = line.strip().lstrip("﻿")
            if not line or line.startswith("#"):
                continue
            if line.startswith("[") and line.endswith("]"):
                current = line[1:-1].strip().lower()
                if current not in sections:
                    raise ValueError(f"{path}:{lineno}: unknown section [{current}]")
                continue
            if current is None:
                raise ValueError(f"{path}:{lineno}: affix outside of a section")
            sections[current].append(line)
        return cls(tuple(sections["prefixes"]), tuple(sections["suffixes"]), min_stem_len)


def _prepare_affixes(affixes: Iterable[str]) -> tuple[str, ...]:
    seen = {}
    for a in affixes:
        a = normalize_token(a.strip())
        if a and a not in seen:
            seen[a] = None
    # stable sort keeps the caller's order among equal lengths
    return tuple(sorted(seen, key=len, reverse=True))


def filter_token(token: str, stops: StopWordList) -> str | None:
    if len(token) < 2 or _has_digit(token) or token in stops:
        return None
    return token


def stem(token: str, cfg: StemmerConfig) -> str:
    """Remove at most one prefix and then at most one suffix.

    Each side takes the longest affix whose removal leaves at least
    ``cfg.min_stem_len`` code points.
    """
    for p in cfg.prefixes:
        if token.startswith(p) and len(token) - len(p) >= cfg.min_stem_len:
            token = token[len(p):]
            break
    for s in cfg.suffixes:
        if token.endswith(s) and len(token) - len(s) >= cfg.min_stem_len:
            token = token[: -len(s)]
            break
    return token


def iter_terms(text: str, stops: StopWordList, cfg: StemmerConfig):
    for raw in tokenize(text):
        tok = filter_token(normalize_token(raw), stops)
        if tok is None:
            continue
        # a stem can itself be a stop word (e.g. "وهذا" -> "هذا")
        tok = filter_token(stem(tok, cfg), stops)
        if tok is not None:
            yield tok


def preprocess_text(text: str, stops: StopWordList, cfg: StemmerConfig) -> dict[str, int]:
    return dict(Counter(iter_terms(text, stops, cfg)))


def preprocess_document(
    doc: RawDocument, stops: StopWordList, cfg: StemmerConfig
) -> dict[str, int]:
    """Bag of words (term -> occurrence count) for ``doc``. May be empty."""
    return preprocess_text(doc.text, stops, cfg)


def merge_bags(*bags: Mapping[str, int]) -> dict[str, int]:
    total: Counter[str] = Counter()
    for b in bags:
        total.update(b)
    return dict(total)
