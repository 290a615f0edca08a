import os
import shutil
import subprocess
import sys

import pytest

from arabcat.cli import main
from arabcat.model import load_model
from arabcat.synthetic import planted_corpus, write_corpus


def top_keyword(model_path, category):
    return load_model(model_path).profile(category).top(1)[0][0]


@pytest.fixture
def corpora(tmp_path):
    train_docs, test_docs, vocabs = planted_corpus(train_per_category=5, test_per_category=3, seed=11)
    return (
        write_corpus(tmp_path / "train", train_docs),
        write_corpus(tmp_path / "test", test_docs),
        vocabs,
    )


@pytest.fixture
def model(tmp_path, corpora, capsys):
    path = tmp_path / "model.atcm"
    assert main(["train", "--corpus", str(corpora[0]), "--model", str(path)]) == 0
    capsys.readouterr()
    return path


def test_train(tmp_path, corpora, capsys):
    path = tmp_path / "m.atcm"
    assert main(["train", "--corpus", str(corpora[0]), "--model", str(path)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("categories=3 n=15 vocabulary=")
    first = path.read_bytes()
    assert main(["train", "--corpus", str(corpora[0]), "--model", str(path)]) == 0
    assert path.read_bytes() == first


def test_train_missing_corpus(tmp_path, capsys):
    missing = tmp_path / "nowhere"
    assert main(["train", "--corpus", str(missing), "--model", str(tmp_path / "m")]) == 1
    assert str(missing) in capsys.readouterr().err


def test_train_empty_category(tmp_path, corpora, capsys):
    bad = tmp_path / "bad"
    shutil.copytree(corpora[0], bad)
    (bad / "stops").mkdir()
    (bad / "stops" / "d.txt").write_text("في من على", encoding="utf-8")
    assert main(["train", "--corpus", str(bad), "--model", str(tmp_path / "m")]) == 1
    err = capsys.readouterr().err
    assert "EmptyCategory" in err and "stops" in err


def test_train_profile_size(tmp_path, corpora, capsys):
    path = tmp_path / "m.atcm"
    assert main(["train", "--corpus", str(corpora[0]), "--model", str(path), "--profile-size", "3"]) == 0
    assert path.read_text(encoding="utf-8").splitlines()[1].startswith("config 3 10 ")
    with pytest.raises(SystemExit):
        main(["train", "--corpus", str(corpora[0]), "--model", str(path), "--profile-size", "0"])


def test_classify(tmp_path, model, corpora, capsys):
    doc = tmp_path / "planted.txt"
    doc.write_text(top_keyword(model, "beta"), encoding="utf-8")
    assert main(["classify", "--model", str(model), "--input", str(doc)]) == 0
    out = capsys.readouterr().out
    assert "best: beta (100.0%)" in out
    assert "beta\t100.0%" in out


def test_classify_unclassifiable(tmp_path, model, capsys):
    empty = tmp_path / "empty.txt"
    empty.write_text("", encoding="utf-8")
    assert main(["classify", "--model", str(model), "--input", str(empty)]) == 2
    assert "UNCLASSIFIABLE" in capsys.readouterr().out


def test_classify_two_docs(tmp_path, model, corpora, capsys):
    _, _, vocabs = corpora
    paths = []
    for cat in ("alpha", "gamma"):
        p = tmp_path / f"{cat}.txt"
        p.write_text(" ".join(vocabs[cat][:3]), encoding="utf-8")
        paths.append(str(p))
    assert main(["classify", "--model", str(model), "--input", *paths]) == 0
    out = capsys.readouterr().out
    assert out.count("document: ") == 2
    assert "best: alpha" in out and "best: gamma" in out


def test_classify_csv(tmp_path, model, corpora, capsys):
    p = tmp_path / "a.txt"
    p.write_text(top_keyword(model, "alpha"), encoding="utf-8")
    empty = tmp_path / "e.txt"
    empty.write_text("في", encoding="utf-8")
    assert main(["classify", "--model", str(model), "--input", str(p), str(empty), "--format", "csv"]) == 2
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "document,best,degraded,keywords,alpha,beta,gamma"
    assert lines[1].startswith(f"{p},alpha,1,")
    assert lines[1].endswith(",100.0,0.0,0.0")
    assert lines[2].startswith(f"{empty},UNCLASSIFIABLE")


def test_classify_config_mismatch(tmp_path, model, corpora, capsys):
    stops = tmp_path / "stops.txt"
    stops.write_text("foo\n", encoding="utf-8")
    doc = tmp_path / "d.txt"
    doc.write_text("x", encoding="utf-8")
    rc = main(["classify", "--model", str(model), "--input", str(doc), "--stopwords", str(stops)])
    assert rc == 1
    assert "ConfigMismatch" in capsys.readouterr().err


def test_classify_bad_model(tmp_path, capsys):
    bad = tmp_path / "bad.atcm"
    bad.write_text("hello\n", encoding="utf-8")
    doc = tmp_path / "d.txt"
    doc.write_text("x", encoding="utf-8")
    assert main(["classify", "--model", str(bad), "--input", str(doc)]) == 1
    assert "line 1" in capsys.readouterr().err


def test_evaluate(tmp_path, model, corpora, capsys):
    report = tmp_path / "report.txt"
    rc = main(["evaluate", "--model", str(model), "--corpus", str(corpora[1]), "--report", str(report)])
    assert rc == 0
    assert capsys.readouterr().out == "accuracy=100.0%\n"
    assert report.read_text(encoding="utf-8").startswith("Category Name\tDoc. alpha/test000.txt")

    csv_report = tmp_path / "report.csv"
    rc = main(["evaluate", "--model", str(model), "--corpus", str(corpora[1]),
               "--report", str(csv_report), "--format", "csv"])
    assert rc == 0
    assert len(csv_report.read_text(encoding="utf-8").splitlines()) == 1 + 9


def test_evaluate_unknown_category(tmp_path, model, corpora, capsys):
    extra = tmp_path / "extra"
    shutil.copytree(corpora[1], extra)
    (extra / "delta").mkdir()
    (extra / "delta" / "d.txt").write_text("x", encoding="utf-8")
    rc = main(["evaluate", "--model", str(model), "--corpus", str(extra), "--report", str(tmp_path / "r")])
    assert rc == 1
    assert "UnknownCategory" in capsys.readouterr().err


def test_evaluate_unwritable_report(tmp_path, model, corpora, capsys):
    report = tmp_path / "no" / "such" / "dir" / "r.txt"
    rc = main(["evaluate", "--model", str(model), "--corpus", str(corpora[1]), "--report", str(report)])
    assert rc == 1
    assert "report directory" in capsys.readouterr().err


def test_inspect(model, capsys):
    assert main(["inspect", "--model", str(model)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("n=15 vocabulary=")
    blocks = [i for i, l in enumerate(out) if l.startswith("category ")]
    assert len(blocks) == 3
    first_kw = out[blocks[0] + 1]
    assert first_kw.endswith("\t1.000000")
    weights = [float(l.split("\t")[1]) for l in out[blocks[0] + 1:blocks[1]]]
    assert weights == sorted(weights, reverse=True)


def test_inspect_single_category(model, capsys):
    assert main(["inspect", "--model", str(model), "--category", "beta", "--top", "1"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[1].startswith("category beta ")
    assert len(out) == 3
    assert main(["inspect", "--model", str(model), "--category", "missing"]) == 1


def test_inspect_single_keyword_profile(tmp_path, capsys):
    corpus = tmp_path / "c"
    for cat, word in (("A", "alpha"), ("B", "bravo")):
        (corpus / cat).mkdir(parents=True)
        (corpus / cat / "d.txt").write_text(word, encoding="utf-8")
    model = tmp_path / "m"
    assert main(["train", "--corpus", str(corpus), "--model", str(model)]) == 0
    capsys.readouterr()
    assert main(["inspect", "--model", str(model), "--category", "A"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[2:] == ["  alpha\t1.000000"]


def test_console_script(tmp_path, corpora):
    exe = shutil.which("arabcat")
    cmd = [exe] if exe else [sys.executable, "-m", "arabcat.cli"]
    model = tmp_path / "m"
    proc = subprocess.run(
        cmd + ["train", "--corpus", str(corpora[0]), "--model", str(model)],
        capture_output=True, text=True, env={**os.environ, "PYTHONIOENCODING": "utf-8"},
    )
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.startswith("categories=3")
