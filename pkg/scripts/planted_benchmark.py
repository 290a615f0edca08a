"""Planted-vocabulary benchmark: train, evaluate and time the pipeline.

    python scripts/planted_benchmark.py --categories 3 --train 20 --test 10
    python scripts/planted_benchmark.py --categories 11 --train 100 --test 90 --seed 7

Category vocabularies are pairwise disjoint, so accuracy must be 100%.
With ``--keep DIR`` the generated corpora and model are left on disk for
use with the ``arabcat`` CLI.
"""

import argparse
import tempfile
import time
from pathlib import Path

from arabcat.corpus_io import iter_labeled, scan_corpus
from arabcat.evaluation import emit_summary, evaluate
from arabcat.model import save_model, train
from arabcat.preprocess import StemmerConfig, StopWordList
from arabcat.synthetic import ELEVEN_CATEGORIES, planted_corpus, write_corpus


def run(workdir: Path, args) -> None:
    cats = ELEVEN_CATEGORIES[: args.categories] if args.categories <= 11 else [
        f"cat{i:02d}" for i in range(args.categories)
    ]
    train_docs, test_docs, _ = planted_corpus(
        cats, args.train, args.test, vocab_size=args.vocab, doc_length=args.length, seed=args.seed
    )
    write_corpus(workdir / "train", train_docs)
    write_corpus(workdir / "test", test_docs)
    stops, cfg = StopWordList.builtin(), StemmerConfig()

    t0 = time.perf_counter()
    m = train(iter_labeled(scan_corpus(workdir / "train")), stops, cfg, profile_size=args.profile_size)
    t1 = time.perf_counter()
    report = evaluate(m, scan_corpus(workdir / "test"), stops, cfg)
    t2 = time.perf_counter()
    save_model(m, workdir / "model.atcm")

    print(f"train: {len(train_docs)} docs, vocabulary {len(m.vocab)}, {t1 - t0:.3f}s")
    print(f"evaluate: {report.total} docs, {t2 - t1:.3f}s")
    print(emit_summary(report))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--categories", type=int, default=3)
    ap.add_argument("--train", type=int, default=20, help="training docs per category")
    ap.add_argument("--test", type=int, default=10, help="held-out docs per category")
    ap.add_argument("--vocab", type=int, default=15, help="planted words per category")
    ap.add_argument("--length", type=int, default=30, help="tokens per document")
    ap.add_argument("--profile-size", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--keep", type=Path, help="write corpora and model here instead of a temp dir")
    args = ap.parse_args()
    if args.keep:
        args.keep.mkdir(parents=True, exist_ok=True)
        run(args.keep, args)
    else:
        with tempfile.TemporaryDirectory() as d:
            run(Path(d), args)


if __name__ == "__main__":
    main()
