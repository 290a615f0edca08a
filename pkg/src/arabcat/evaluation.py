"""Evaluate a model on a labeled corpus and render the reports."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Mapping

from .classify import check_config, classify_bag
from .corpus_io import CorpusManifest, read_document
from .errors import Unclassifiable, UnknownCategory
from .model import CategoryModel
from .preprocess import StemmerConfig, StopWordList, preprocess_document

UNCLASSIFIABLE = "UNCLASSIFIABLE"


@dataclass(frozen=True)
class EvalRow:
    doc_id: str
    true: str
    predicted: str | None
    scores: Mapping[str, float] | None


@dataclass(frozen=True)
class EvaluationReport:
    categories: tuple[str, ...]
    rows: tuple[EvalRow, ...]

    @property
    def total(self) -> int:
        return len(self.rows)

    @property
    def correct(self) -> int:
        return sum(r.predicted == r.true for r in self.rows)

    @property
    def unclassifiable(self) -> int:
        return sum(r.predicted is None for r in self.rows)

    @property
    def accuracy(self) -> float:
        """Percent correct over all documents, unclassifiable ones included."""
        return 100.0 * self.correct / self.total if self.rows else 0.0

    def per_category(self) -> dict[str, tuple[int, int, float]]:
        """true label -> (documents, correct, accuracy percent)."""
        out = {}
        for label in sorted({r.true for r in self.rows}):
            rows = [r for r in self.rows if r.true == label]
            ok = sum(r.predicted == label for r in rows)
            out[label] = (len(rows), ok, 100.0 * ok / len(rows))
        return out

    def confusion(self) -> dict[str, dict[str, int]]:
        columns = list(self.categories) + [UNCLASSIFIABLE]
        matrix = {label: dict.fromkeys(columns, 0) for label in sorted({r.true for r in self.rows})}
        for r in self.rows:
            matrix[r.true][r.predicted or UNCLASSIFIABLE] += 1
        return matrix


def evaluate(
    m: CategoryModel, manifest: CorpusManifest, stops: StopWordList, cfg: StemmerConfig
) -> EvaluationReport:
    check_config(m, stops, cfg)
    known = set(m.categories)
    for label in manifest.categories:
        if label not in known:
            raise UnknownCategory(label)
    rows = []
    for label, path in manifest.entries:
        doc = read_document(path, manifest.root)
        try:
            r = classify_bag(doc.id, preprocess_document(doc, stops, cfg), m)
        except Unclassifiable:
            rows.append(EvalRow(doc.id, label, None, None))
        else:
            rows.append(EvalRow(doc.id, label, r.best, dict(r.scores)))
    return EvaluationReport(tuple(sorted(known)), tuple(rows))


def _pct(x: float) -> str:
    return f"{x:.1f}%"


def emit_match_table(r: EvaluationReport, fmt: str = "table") -> str:
    """Per-document, per-category match percentages.

    ``table`` puts categories on rows and documents on columns;
    ``csv`` puts one document per row.
    """
    if fmt == "table":
        lines = ["\t".join(["Category Name"] + [f"Doc. {row.doc_id}" for row in r.rows])]
        if r.rows:
            for cat in r.categories:
                cells = [_pct(row.scores[cat]) if row.scores else "-" for row in r.rows]
                lines.append("\t".join([cat] + cells))
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["document", "true", "predicted"] + list(r.categories))
        for row in r.rows:
            cells = [f"{row.scores[c]:.1f}" if row.scores else "" for c in r.categories]
            w.writerow([row.doc_id, row.true, row.predicted or UNCLASSIFIABLE] + cells)
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}")


def emit_summary(r: EvaluationReport) -> str:
    lines = [f"accuracy={_pct(r.accuracy)} ({r.correct}/{r.total}, unclassifiable={r.unclassifiable})"]
    lines.append("")
    lines.append("Category\tDocuments\tCorrect\tAccuracy")
    for label, (n, ok, acc) in r.per_category().items():
        lines.append(f"{label}\t{n}\t{ok}\t{_pct(acc)}")
    lines.append("")
    columns = list(r.categories) + [UNCLASSIFIABLE]
    lines.append("Confusion matrix (rows: true, columns: predicted)")
    lines.append("\t".join(["true\\predicted"] + columns))
    for label, counts in r.confusion().items():
        lines.append("\t".join([label] + [str(counts[c]) for c in columns]))
    return "\n".join(lines) + "\n"


def render_report(r: EvaluationReport, fmt: str = "table") -> str:
    if fmt == "csv":
        return emit_match_table(r, "csv")
    return emit_match_table(r, "table") + "\n" + emit_summary(r)
