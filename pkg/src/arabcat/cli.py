"""Command-line entry point: ``arabcat train|classify|evaluate|inspect``."""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

from .classify import check_config, classify_document, format_result, format_unclassifiable
from .corpus_io import iter_labeled, read_document, scan_corpus
from .errors import ArabcatError, Unclassifiable
from .evaluation import evaluate, render_report
from .model import DEFAULT_PROFILE_SIZE, load_model, save_model, train
from .preprocess import StemmerConfig, StopWordList

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNCLASSIFIABLE = 2


def _positive_int(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _preprocessing(args) -> tuple[StopWordList, StemmerConfig]:
    stops = StopWordList.from_file(args.stopwords) if args.stopwords else StopWordList.builtin()
    cfg = StemmerConfig.from_file(args.affixes) if args.affixes else StemmerConfig()
    return stops, cfg


def cmd_train(args) -> int:
    stops, cfg = _preprocessing(args)
    manifest = scan_corpus(args.corpus)
    m = train(iter_labeled(manifest), stops, cfg, profile_size=args.profile_size)
    save_model(m, args.model)
    print(f"categories={len(m.profiles)} n={m.vocab.n} vocabulary={len(m.vocab)}")
    return EXIT_OK


def cmd_classify(args) -> int:
    m = load_model(args.model)
    stops, cfg = _preprocessing(args)
    check_config(m, stops, cfg)
    for p in args.input:
        if not Path(p).is_file():
            raise FileNotFoundError(f"input file not found: {p}")

    status = EXIT_OK
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["document", "best", "degraded", "keywords"] + m.categories)
    for i, p in enumerate(args.input):
        doc = read_document(p)
        try:
            r = classify_document(doc, m, stops, cfg)
        except Unclassifiable:
            status = EXIT_UNCLASSIFIABLE
            if args.format == "csv":
                w.writerow([doc.id, "UNCLASSIFIABLE", "", ""] + [""] * len(m.categories))
            else:
                sys.stdout.write(("\n" if i else "") + format_unclassifiable(doc.id))
            continue
        if args.format == "csv":
            scores = [f"{r.scores[c]:.1f}" for c in m.categories]
            w.writerow([r.doc_id, r.best, int(r.degraded), " ".join(r.keywords.words)] + scores)
        else:
            sys.stdout.write(("\n" if i else "") + format_result(r))
    if args.format == "csv":
        sys.stdout.write(buf.getvalue())
    return status


def cmd_evaluate(args) -> int:
    report_dir = Path(args.report).resolve().parent
    if not report_dir.is_dir():
        raise FileNotFoundError(f"report directory does not exist: {report_dir}")
    m = load_model(args.model)
    stops, cfg = _preprocessing(args)
    manifest = scan_corpus(args.corpus)
    report = evaluate(m, manifest, stops, cfg)
    Path(args.report).write_text(render_report(report, args.format), encoding="utf-8", newline="\n")
    print(f"accuracy={report.accuracy:.1f}%")
    return EXIT_OK


def cmd_inspect(args) -> int:
    m = load_model(args.model)
    if args.category is not None and args.category not in m.categories:
        print(f"error: unknown category {args.category!r}", file=sys.stderr)
        return EXIT_ERROR
    print(f"n={m.vocab.n} vocabulary={len(m.vocab)} categories={len(m.profiles)}")
    for p in m.profiles:
        if args.category is not None and p.name != args.category:
            continue
        print(f"category {p.name} docs={p.doc_count} keywords={len(p.keywords)}")
        for word, weight in p.top(args.top):
            print(f"  {word}\t{weight:.6f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arabcat", description="TF-IDF keyword text categorization")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_preprocessing(p):
        p.add_argument("--stopwords", metavar="FILE", help="stop-word file (default: builtin list)")
        p.add_argument("--affixes", metavar="FILE", help="affix file (default: builtin affixes)")

    p = sub.add_parser("train", help="train a model from a labeled corpus")
    p.add_argument("--corpus", required=True, metavar="DIR")
    p.add_argument("--model", required=True, metavar="FILE")
    add_preprocessing(p)
    p.add_argument("--profile-size", type=_positive_int, default=DEFAULT_PROFILE_SIZE, metavar="K")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("classify", help="classify one or more documents")
    p.add_argument("--model", required=True, metavar="FILE")
    p.add_argument("--input", required=True, nargs="+", metavar="FILE")
    p.add_argument("--format", choices=("table", "csv"), default="table")
    add_preprocessing(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("evaluate", help="evaluate a model on a labeled corpus")
    p.add_argument("--model", required=True, metavar="FILE")
    p.add_argument("--corpus", required=True, metavar="DIR")
    p.add_argument("--report", required=True, metavar="FILE")
    p.add_argument("--format", choices=("table", "csv"), default="table")
    add_preprocessing(p)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("inspect", help="show model statistics and category keywords")
    p.add_argument("--model", required=True, metavar="FILE")
    p.add_argument("--category", metavar="NAME")
    p.add_argument("--top", type=_positive_int, default=None, metavar="K",
                   help="show at most K keywords per category")
    p.set_defaults(func=cmd_inspect)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ArabcatError, OSError, ValueError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
