"""Regenerate the 11-category Arabic fixture and its golden evaluation report.

    python scripts/make_eleven_fixture.py [--out tests/data/eleven]

Writes ``train/`` and ``test/`` corpora plus ``report.golden.txt``. The
golden file is only rewritten when ``--golden`` is passed, so a plain
run can be used to check that the fixture is reproducible.
"""

import argparse
import random
import shutil
from pathlib import Path

from arabcat.corpus_io import iter_labeled, scan_corpus
from arabcat.evaluation import evaluate, render_report
from arabcat.model import train
from arabcat.preprocess import StemmerConfig, StopWordList, preprocess_text
from arabcat.synthetic import SHARED_STOP_WORDS, write_corpus
from arabcat.preprocess import RawDocument

TOPIC_WORDS = {
    "Agriculture": "زراعة قمح محصول تربة مزرعة فلاح حصاد بذور",
    "Astronomy": "كوكب نجم مجرة فلك تلسكوب مدار قمر شمس",
    "Business": "شركة تجارة سوق أرباح صفقة مصنع مبيعات عميل",
    "Computer": "حاسوب برمجة شبكة بيانات معالج ذاكرة خوارزمية برنامج",
    "Economics": "اقتصاد تضخم بنك عملة ميزانية ضرائب ركود فائدة",
    "Environment": "تلوث مناخ غابات بيئة نفايات انبعاثات تصحر مياه",
    "History": "تاريخ حضارة مملكة آثار خليفة معركة قلعة سلطان",
    "Politics": "حكومة انتخابات برلمان وزير رئيس حزب دستور سياسة",
    "Religion": "صلاة مسجد إيمان صيام عبادة قرآن حج زكاة",
    "Sport": "مباراة فريق ملعب كرة لاعب بطولة هدف مدرب",
    "Tourism": "سياحة فندق رحلة سائح شاطئ متحف سفر منتجع",
}


def _doc(words, rng, length):
    tokens = [rng.choice(words) if rng.random() > 0.3 else rng.choice(SHARED_STOP_WORDS)
              for _ in range(length)]
    return " ".join(tokens)


def build(out: Path, seed: int = 2014):
    rng = random.Random(seed)
    topics = {c: w.split() for c, w in TOPIC_WORDS.items()}
    train_docs, test_docs = [], []
    for cat, words in topics.items():
        for i in range(3):
            train_docs.append((cat, RawDocument(f"{cat}/doc{i + 1}.txt", _doc(words, rng, 40))))
    cats = list(topics)
    for cat in cats:
        # one on-topic document and one that mixes in a second topic
        test_docs.append((cat, RawDocument(f"{cat}/t1.txt", _doc(topics[cat], rng, 15))))
        other = cats[(cats.index(cat) + 3) % len(cats)]
        mixed = _doc(topics[cat][:3] + topics[other][:2], rng, 12)
        test_docs.append((cat, RawDocument(f"{cat}/t2.txt", mixed)))
    if out.exists():
        shutil.rmtree(out)
    write_corpus(out / "train", train_docs)
    write_corpus(out / "test", test_docs)
    return topics


def check_disjoint(topics):
    stops, cfg = StopWordList.builtin(), StemmerConfig()
    owner = {}
    for cat, words in topics.items():
        for w in words:
            terms = list(preprocess_text(w, stops, cfg))
            assert len(terms) == 1, (w, terms)
            assert terms[0] not in owner, (w, owner.get(terms[0]))
            owner[terms[0]] = cat


def report(out: Path) -> str:
    stops, cfg = StopWordList.builtin(), StemmerConfig()
    m = train(iter_labeled(scan_corpus(out / "train")), stops, cfg)
    return render_report(evaluate(m, scan_corpus(out / "test"), stops, cfg))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parents[1] / "tests/data/eleven")
    ap.add_argument("--golden", action="store_true", help="rewrite report.golden.txt")
    args = ap.parse_args()
    topics = build(args.out)
    check_disjoint(topics)
    text = report(args.out)
    print(text)
    if args.golden:
        (args.out / "report.golden.txt").write_text(text, encoding="utf-8")


if __name__ == "__main__":
    main()
