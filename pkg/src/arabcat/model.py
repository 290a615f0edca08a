"""Category keyword profiles, training, and the on-disk model format.

Model file layout (UTF-8, one record per line, canonical order)::

    ATCM 1
    config <profile_size> <log_base> <stopword_digest> <stemmer_digest>
    n <count>
    df <word> <count>                 # words ascending
    category <name> <doc_count>       # names ascending
    kw <word> <weight>                # words ascending
    end
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import EmptyCategory, EmptyCorpus, FormatError, VersionError
from .preprocess import RawDocument, StemmerConfig, StopWordList, preprocess_document
from .weighting import DEFAULT_LOG_BASE, Vocabulary, build_vocabulary, idf

MAGIC = "ATCM"
FORMAT_VERSION = "1"
DEFAULT_PROFILE_SIZE = 50


@dataclass(frozen=True)
class CategoryProfile:
    name: str
    keywords: Mapping[str, float]
    doc_count: int

    def weight(self, word: str) -> float:
        return self.keywords.get(word, 0.0)

    def top(self, k: int | None = None) -> list[tuple[str, float]]:
        items = sorted(self.keywords.items(), key=lambda kv: (-kv[1], kv[0]))
        return items if k is None else items[:k]


@dataclass(frozen=True)
class ModelConfig:
    profile_size: int
    log_base: float
    stopword_digest: str
    stemmer_digest: str


@dataclass(frozen=True)
class CategoryModel:
    vocab: Vocabulary
    profiles: tuple[CategoryProfile, ...]
    config: ModelConfig

    @property
    def categories(self) -> list[str]:
        return [p.name for p in self.profiles]

    def profile(self, name: str) -> CategoryProfile:
        for p in self.profiles:
            if p.name == name:
                return p
        raise KeyError(name)


def build_profile(
    bags: Sequence[Mapping[str, int]],
    vocab: Vocabulary,
    profile_size: int = DEFAULT_PROFILE_SIZE,
    *,
    name: str = "",
    log_base: float = DEFAULT_LOG_BASE,
) -> CategoryProfile:
    """Sum each word's tf*idf over the category's documents, keep the
    ``profile_size`` heaviest and scale so the top keyword weighs 1.0."""
    if profile_size < 1:
        raise ValueError("profile_size must be positive")
    total_tf: Counter[str] = Counter()
    for bag in bags:
        total_tf.update(bag)
    aggregates = {}
    for word, tf in total_tf.items():
        if tf <= 0 or vocab.doc_freq(word) == 0:
            continue
        # idf * sum(tf) equals the per-document sum and keeps ties exact
        a = idf(vocab, word, log_base) * tf
        if a > 0:
            aggregates[word] = a
    if not aggregates:
        raise EmptyCategory(name)
    kept = sorted(aggregates.items(), key=lambda kv: (-kv[1], kv[0]))[:profile_size]
    top = kept[0][1]
    return CategoryProfile(name, {w: a / top for w, a in kept}, len(bags))


def train(
    labeled: Iterable[tuple[str, RawDocument]],
    stops: StopWordList,
    cfg: StemmerConfig,
    profile_size: int = DEFAULT_PROFILE_SIZE,
    log_base: float = DEFAULT_LOG_BASE,
) -> CategoryModel:
    """Train one profile per category over a pooled vocabulary."""
    by_category: dict[str, list[dict[str, int]]] = defaultdict(list)
    for category, doc in labeled:
        if not category or "\n" in category or "\r" in category:
            raise ValueError(f"invalid category name {category!r}")
        by_category[category].append(preprocess_document(doc, stops, cfg))
    if not by_category:
        raise EmptyCorpus("training set has no documents")
    all_bags = [b for bags in by_category.values() for b in bags]
    vocab = build_vocabulary(all_bags)
    profiles = []
    for name in sorted(by_category):
        bags = by_category[name]
        if not any(bags):
            raise EmptyCategory(name)
        profiles.append(build_profile(bags, vocab, profile_size, name=name, log_base=log_base))
    config = ModelConfig(profile_size, log_base, stops.digest, cfg.digest)
    return CategoryModel(vocab, tuple(profiles), config)


def _format_base(base: float) -> str:
    if base == math.e:
        return "e"
    if base == int(base):
        return str(int(base))
    return repr(base)


def _parse_base(s: str) -> float:
    if s == "e":
        return math.e
    base = float(s)
    if not base > 1.0 or math.isinf(base):
        raise ValueError(s)
    return base


def dumps_model(m: CategoryModel) -> str:
    c = m.config
    lines = [
        f"{MAGIC} {FORMAT_VERSION}",
        f"config {c.profile_size} {_format_base(c.log_base)} {c.stopword_digest} {c.stemmer_digest}",
        f"n {m.vocab.n}",
    ]
    lines.extend(f"df {w} {m.vocab.df[w]}" for w in sorted(m.vocab.df))
    for p in sorted(m.profiles, key=lambda p: p.name):
        lines.append(f"category {p.name} {p.doc_count}")
        # repr gives the shortest decimal that round-trips the float
        lines.extend(f"kw {w} {p.keywords[w]!r}" for w in sorted(p.keywords))
        lines.append("end")
    return "\n".join(lines) + "\n"


def save_model(m: CategoryModel, path: str | Path) -> None:
    Path(path).write_text(dumps_model(m), encoding="utf-8", newline="\n")


def _int_field(s: str, lineno: int, what: str, minimum: int = 0) -> int:
    try:
        v = int(s)
    except ValueError:
        raise FormatError(lineno, f"{what} is not an integer: {s!r}") from None
    if v < minimum or not (s.isascii() and s.isdigit()):
        raise FormatError(lineno, f"{what} out of range: {s!r}")
    return v


def loads_model(text: str) -> CategoryModel:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError(1, "empty model file")

    head = lines[0].split(" ")
    if head[0] != MAGIC or len(head) != 2:
        raise FormatError(1, f"missing {MAGIC} header")
    if head[1] != FORMAT_VERSION:
        raise VersionError(head[1])

    if len(lines) < 3:
        raise FormatError(len(lines) + 1, "truncated header")
    parts = lines[1].split(" ")
    if len(parts) != 5 or parts[0] != "config":
        raise FormatError(2, "expected 'config <profile_size> <log_base> <digest> <digest>'")
    profile_size = _int_field(parts[1], 2, "profile_size", 1)
    try:
        log_base = _parse_base(parts[2])
    except ValueError:
        raise FormatError(2, f"bad log base {parts[2]!r}") from None
    config = ModelConfig(profile_size, log_base, parts[3], parts[4])

    parts = lines[2].split(" ")
    if len(parts) != 2 or parts[0] != "n":
        raise FormatError(3, "expected 'n <count>'")
    n = _int_field(parts[1], 3, "n", 1)

    df: dict[str, int] = {}
    profiles: list[CategoryProfile] = []
    current: tuple[str, int, dict[str, float]] | None = None
    for lineno, line in enumerate(lines[3:], 4):
        if current is None:
            if line.startswith("df "):
                if profiles:
                    raise FormatError(lineno, "df record after categories")
                parts = line.split(" ")
                if len(parts) != 3 or not parts[1]:
                    raise FormatError(lineno, "expected 'df <word> <count>'")
                if parts[1] in df:
                    raise FormatError(lineno, f"duplicate df word {parts[1]!r}")
                count = _int_field(parts[2], lineno, "df", 1)
                if count > n:
                    raise FormatError(lineno, "df exceeds n")
                df[parts[1]] = count
            elif line.startswith("category "):
                name, _, count = line[len("category "):].rpartition(" ")
                if not name:
                    raise FormatError(lineno, "expected 'category <name> <doc_count>'")
                if any(p.name == name for p in profiles):
                    raise FormatError(lineno, f"duplicate category {name!r}")
                current = (name, _int_field(count, lineno, "doc_count", 1), {})
            else:
                raise FormatError(lineno, f"unexpected record {line[:20]!r}")
        else:
            if line == "end":
                name, doc_count, kws = current
                if kws and max(kws.values()) != 1.0:
                    raise FormatError(lineno, f"profile {name!r} is not max-normalized")
                if len(kws) > profile_size:
                    raise FormatError(lineno, f"profile {name!r} exceeds profile_size")
                profiles.append(CategoryProfile(name, kws, doc_count))
                current = None
                continue
            parts = line.split(" ")
            if len(parts) != 3 or parts[0] != "kw" or not parts[1]:
                raise FormatError(lineno, "expected 'kw <word> <weight>' or 'end'")
            try:
                w = float(parts[2])
            except ValueError:
                raise FormatError(lineno, f"bad weight {parts[2]!r}") from None
            if not 0.0 < w <= 1.0:
                raise FormatError(lineno, "keyword weight outside (0, 1]")
            if parts[1] not in df:
                raise FormatError(lineno, f"keyword {parts[1]!r} has no df record")
            if parts[1] in current[2]:
                raise FormatError(lineno, f"duplicate keyword {parts[1]!r}")
            current[2][parts[1]] = w
    if current is not None:
        raise FormatError(len(lines) + 1, f"category {current[0]!r} missing 'end'")

    profiles.sort(key=lambda p: p.name)
    return CategoryModel(Vocabulary(n, df), tuple(profiles), config)


def load_model(path: str | Path) -> CategoryModel:
    data = Path(path).read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise FormatError(data.count(b"\n", 0, e.start) + 1, "invalid UTF-8") from None
    return loads_model(text)
