"""Document-frequency statistics and tf-idf term weights."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import EmptyCorpus, UnseenTerm

DEFAULT_LOG_BASE = 10.0


def log_in_base(x: float, base: float) -> float:
    if base == 10.0:
        return math.log10(x)
    if base == math.e:
        return math.log(x)
    if base == 2.0:
        return math.log2(x)
    return math.log(x) / math.log(base)


@dataclass(frozen=True)
class Vocabulary:
    """Training corpus statistics: document count ``n`` and per-word df."""

    n: int
    df: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("vocabulary needs at least one document")
        for w, c in self.df.items():
            if not 1 <= c <= self.n:
                raise ValueError(f"df({w!r}) = {c} outside [1, {self.n}]")

    def doc_freq(self, word: str) -> int:
        return self.df.get(word, 0)

    def __len__(self) -> int:
        return len(self.df)

    def merge(self, other: "Vocabulary") -> "Vocabulary":
        """Vocabulary of the union of two disjoint document sets."""
        df = Counter(self.df)
        df.update(other.df)
        return Vocabulary(self.n + other.n, dict(df))


def build_vocabulary(bags: Iterable[Mapping[str, int]]) -> Vocabulary:
    n = 0
    df: Counter[str] = Counter()
    for bag in bags:
        n += 1
        df.update(w for w, c in bag.items() if c > 0)
    if n == 0:
        raise EmptyCorpus("no documents to build a vocabulary from")
    return Vocabulary(n, dict(df))


def idf(vocab: Vocabulary, word: str, log_base: float = DEFAULT_LOG_BASE) -> float:
    d = vocab.doc_freq(word)
    if d == 0:
        raise UnseenTerm(word)
    if d == vocab.n:
        return 0.0
    return log_in_base(vocab.n / d, log_base)


@dataclass(frozen=True)
class WeightedTerm:
    word: str
    tf: int
    df: int
    weight: float

    @property
    def unseen(self) -> bool:
        return self.df == 0


def weight_sort_key(t: WeightedTerm):
    return (-t.weight, t.word)


def weigh_document(
    bag: Mapping[str, int], vocab: Vocabulary, log_base: float = DEFAULT_LOG_BASE
) -> list[WeightedTerm]:
    """tf * idf for every term in ``bag``, heaviest first.

    Terms absent from the vocabulary come back with ``df == 0`` and
    weight 0.0; they are never keyword candidates.
    """
    out = []
    for word, tf in bag.items():
        d = vocab.doc_freq(word)
        w = tf * idf(vocab, word, log_base) if d else 0.0
        out.append(WeightedTerm(word, tf, d, w))
    out.sort(key=weight_sort_key)
    return out
