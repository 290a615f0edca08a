"""Keyword selection and category matching for a single document."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import ConfigMismatch, NoKeywords, Unclassifiable
from .model import CategoryModel, CategoryProfile
from .preprocess import RawDocument, StemmerConfig, StopWordList, preprocess_document
from .weighting import WeightedTerm, weigh_document

KEYWORDS_PER_DOCUMENT = 2


@dataclass(frozen=True)
class KeywordSet:
    keywords: tuple[WeightedTerm, ...]
    degraded: bool = False

    @property
    def words(self) -> tuple[str, ...]:
        return tuple(k.word for k in self.keywords)


@dataclass(frozen=True)
class ClassificationResult:
    doc_id: str
    keywords: KeywordSet
    scores: Mapping[str, float]  # category -> percent, categories ascending
    best: str

    @property
    def degraded(self) -> bool:
        return self.keywords.degraded


def select_keywords(weighted: Sequence[WeightedTerm]) -> KeywordSet:
    """First two entries with positive weight from an already sorted list."""
    picked = []
    for t in weighted:
        if t.weight > 0 and t.df >= 1:
            picked.append(t)
            if len(picked) == KEYWORDS_PER_DOCUMENT:
                break
    if not picked:
        raise NoKeywords("no term with positive weight")
    return KeywordSet(tuple(picked), degraded=len(picked) < KEYWORDS_PER_DOCUMENT)


def match_percentage(ks: KeywordSet, profile: CategoryProfile) -> float:
    total = sum(profile.weight(w) for w in ks.words)
    return 100.0 * total / len(ks.keywords)


def best_category(scores: Mapping[str, float]) -> str:
    # highest score; ties go to the smallest name
    return min(scores, key=lambda name: (-scores[name], name))


def check_config(m: CategoryModel, stops: StopWordList, cfg: StemmerConfig) -> None:
    if stops.digest != m.config.stopword_digest:
        raise ConfigMismatch("stop-word list", m.config.stopword_digest, stops.digest)
    if cfg.digest != m.config.stemmer_digest:
        raise ConfigMismatch("stemmer config", m.config.stemmer_digest, cfg.digest)


def classify_bag(doc_id: str, bag: Mapping[str, int], m: CategoryModel) -> ClassificationResult:
    weighted = weigh_document(bag, m.vocab, m.config.log_base)
    try:
        ks = select_keywords(weighted)
    except NoKeywords:
        raise Unclassifiable(doc_id) from None
    scores = {p.name: match_percentage(ks, p) for p in sorted(m.profiles, key=lambda p: p.name)}
    return ClassificationResult(doc_id, ks, scores, best_category(scores))


def classify_document(
    doc: RawDocument, m: CategoryModel, stops: StopWordList, cfg: StemmerConfig
) -> ClassificationResult:
    """Run the full pipeline on ``doc``.

    Raises ``ConfigMismatch`` when ``stops``/``cfg`` differ from the ones
    the model was trained with, and ``Unclassifiable`` when the document
    leaves no keyword candidate.
    """
    check_config(m, stops, cfg)
    return classify_bag(doc.id, preprocess_document(doc, stops, cfg), m)


def format_result(r: ClassificationResult) -> str:
    kw = ", ".join(r.keywords.words)
    if r.degraded:
        kw += " (degraded)"
    lines = [
        f"document: {r.doc_id}",
        f"best: {r.best} ({r.scores[r.best]:.1f}%)",
        f"keywords: {kw}",
    ]
    lines.extend(f"{name}\t{pct:.1f}%" for name, pct in r.scores.items())
    return "\n".join(lines) + "\n"


def format_unclassifiable(doc_id: str) -> str:
    return f"document: {doc_id}\nUNCLASSIFIABLE\n"
