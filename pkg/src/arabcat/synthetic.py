"""Seeded synthetic corpora for benchmarks and tests.

Pseudo-words are drawn from Arabic letters that occur in no default
affix, so the stemmer leaves them untouched and each planted word is
its own term.
"""

from __future__ import annotations

import random
from pathlib import Path
from typing import Iterable

from .preprocess import RawDocument

PLAIN_LETTERS = "جحخدذرزسشصضطظعغقم"

# Raw (unnormalized) forms from the builtin stop list.
SHARED_STOP_WORDS = ("في", "من", "على", "هذا", "التي", "الذي", "ان", "كان", "عن", "مع")

ELEVEN_CATEGORIES = (
    "Agriculture", "Astronomy", "Business", "Computer", "Economics", "Environment",
    "History", "Politics", "Religion", "Sport", "Tourism",
)


def pseudo_words(count: int, rng: random.Random, length: int = 4, exclude=()) -> list[str]:
    seen = set(exclude)
    out = []
    while len(out) < count:
        w = "".join(rng.choice(PLAIN_LETTERS) for _ in range(length))
        if w not in seen:
            seen.add(w)
            out.append(w)
    return out


def planted_vocabularies(categories: Iterable[str], size: int, rng: random.Random) -> dict[str, list[str]]:
    """Pairwise-disjoint vocabularies, one per category."""
    categories = list(categories)
    words = pseudo_words(size * len(categories), rng)
    return {c: words[i * size:(i + 1) * size] for i, c in enumerate(categories)}


def _document(vocab: list[str], rng: random.Random, length: int, stop_ratio: float,
              must_include: Iterable[str] = ()) -> str:
    tokens = list(must_include)
    while len(tokens) < length:
        if rng.random() < stop_ratio:
            tokens.append(rng.choice(SHARED_STOP_WORDS))
        else:
            tokens.append(rng.choice(vocab))
    rng.shuffle(tokens)
    return " ".join(tokens)


def planted_corpus(
    categories: Iterable[str] = ("alpha", "beta", "gamma"),
    train_per_category: int = 20,
    test_per_category: int = 10,
    vocab_size: int = 15,
    doc_length: int = 30,
    stop_ratio: float = 0.3,
    seed: int = 0,
):
    """Train and held-out documents over disjoint category vocabularies.

    Every vocabulary word occurs in at least one training document of
    its category, so held-out keywords are never unseen.
    """
    rng = random.Random(seed)
    vocabs = planted_vocabularies(categories, vocab_size, rng)
    train, test = [], []
    for cat, vocab in vocabs.items():
        for i in range(train_per_category):
            text = _document(vocab, rng, doc_length, stop_ratio, vocab[i::train_per_category])
            train.append((cat, RawDocument(f"{cat}/train{i:03d}.txt", text)))
        for i in range(test_per_category):
            text = _document(vocab, rng, doc_length, stop_ratio)
            test.append((cat, RawDocument(f"{cat}/test{i:03d}.txt", text)))
    return train, test, vocabs


def mixed_corpus(
    categories: Iterable[str] = ("alpha", "beta", "gamma", "delta"),
    train_per_category: int = 15,
    test_docs: int = 100,
    core_size: int = 12,
    shared_size: int = 20,
    doc_length: int = 25,
    seed: int = 0,
):
    """Categories with overlapping vocabularies; test documents mix topics.

    Returns ``(train, test)`` where test documents are unlabeled text
    drawn from one or two categories' core words plus a shared pool.
    """
    rng = random.Random(seed)
    categories = list(categories)
    cores = planted_vocabularies(categories, core_size, rng)
    shared = pseudo_words(shared_size, rng, exclude=[w for v in cores.values() for w in v])
    train = []
    for cat in categories:
        for i in range(train_per_category):
            text = _document(cores[cat] * 2 + shared, rng, doc_length, 0.2)
            train.append((cat, RawDocument(f"{cat}/train{i:03d}.txt", text)))
    test = []
    for i in range(test_docs):
        picks = rng.sample(categories, rng.choice((1, 2)))
        vocab = [w for c in picks for w in cores[c]] + shared
        length = rng.randint(3, doc_length)
        test.append(RawDocument(f"test{i:03d}.txt", _document(vocab, rng, length, 0.2)))
    return train, test


def write_corpus(root: str | Path, labeled: Iterable[tuple[str, RawDocument]]) -> Path:
    """Write ``(category, doc)`` pairs as ``root/<doc.id>``."""
    root = Path(root)
    for _, doc in labeled:
        path = root / doc.id
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(doc.text, encoding="utf-8")
    return root
