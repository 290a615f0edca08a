"""Arabic text categorization by tf-idf keyword matching."""

from .classify import (
    ClassificationResult,
    KeywordSet,
    classify_document,
    match_percentage,
    select_keywords,
)
from .corpus_io import CorpusManifest, read_document, scan_corpus
from .evaluation import EvaluationReport, emit_match_table, evaluate
from .model import (
    CategoryModel,
    CategoryProfile,
    build_profile,
    load_model,
    save_model,
    train,
)
from .preprocess import (
    RawDocument,
    StemmerConfig,
    StopWordList,
    filter_token,
    normalize_token,
    preprocess_document,
    stem,
    tokenize,
)
from .weighting import Vocabulary, WeightedTerm, build_vocabulary, idf, weigh_document

__version__ = "0.1.0"
