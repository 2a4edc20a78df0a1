"""Test the wafix command line."""
from __future__ import annotations

import json
from pathlib import Path

import pytest

from wafix.cli import main
from wafix.const import EXIT_FAILURE, EXIT_OK, EXIT_USAGE

from .common import make_record, synthetic_study, write_log

FIX_WA = "x = input()\nprint(x)\n"
FIX_AC = "x = int(input())\nprint(x + 1)\n"


@pytest.fixture
def log_file(tmp_path: Path) -> Path:
    """Submission log of two users with one fix each."""
    return write_log(
        tmp_path / "log.jsonl",
        [
            make_record("1", "u1", "P1", "WA", 10, FIX_WA),
            make_record("2", "u1", "P1", "AC", 20, FIX_AC),
            make_record("3", "u2", "P1", "WA", 30, "print(1)\n"),
            make_record("4", "u2", "P1", "AC", 40, "print(2)\n"),
        ],
    )


@pytest.fixture
def pairs_file(tmp_path: Path, log_file: Path) -> Path:
    """Pair file built from the submission log."""
    path = tmp_path / "pairs.jsonl"
    assert main(["pairs", str(log_file), "-o", str(path)]) == EXIT_OK
    return path


@pytest.fixture
def labels_file(tmp_path: Path, pairs_file: Path) -> Path:
    """Label file classified from the pair file."""
    path = tmp_path / "labels.jsonl"
    assert main(["classify", str(pairs_file), "-o", str(path)]) == EXIT_OK
    return path


def _records(path: Path) -> list[dict]:
    return [json.loads(line) for line in path.read_text().splitlines()]


def test_pairs(capsys: pytest.CaptureFixture[str], pairs_file: Path) -> None:
    """Test pairs are written one record per line with a summary on stderr."""
    assert [record["pair_id"] for record in _records(pairs_file)] == ["1:2", "3:4"]
    assert "pairs=2 dropped_distance=0" in capsys.readouterr().err


def test_pairs_max_distance(
    log_file: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    """Test the distance bound drops pairs and writes to stdout by default."""
    assert main(["pairs", str(log_file), "--max-distance", "2"]) == EXIT_OK
    out, err = capsys.readouterr()
    assert [json.loads(line)["pair_id"] for line in out.splitlines()] == ["3:4"]
    assert "pairs=1 dropped_distance=1" in err

    assert main(["pairs", str(log_file), "--max-distance", "1"]) == EXIT_OK
    out, err = capsys.readouterr()
    assert out == ""
    assert "pairs=0 dropped_distance=2" in err


def test_classify(labels_file: Path) -> None:
    """Test labels of both pairs are written."""
    labels = _records(labels_file)
    assert {(label["pair_id"], label["rule"]) for label in labels} >= {
        ("1:2", "wrong convert value"),
        ("1:2", "wrong arithmetic operator"),
        ("3:4", "wrong value"),
    }


def test_classify_dedup(pairs_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test deduplicated labels carry summaries and are unique per pair."""
    assert main(["classify", str(pairs_file), "--dedup"]) == EXIT_OK
    out, err = capsys.readouterr()
    labels = [json.loads(line) for line in out.splitlines()]
    keys = [(label["pair_id"], label["summary"]) for label in labels]

    assert len(keys) == len(set(keys))
    assert ("3:4", "literal") in keys
    assert f"pairs=2 labels={len(labels)}" in err


def test_classify_jobs(
    tmp_path: Path, pairs_file: Path, labels_file: Path
) -> None:
    """Test worker processes produce identical output."""
    path = tmp_path / "labels2.jsonl"
    assert (
        main(["classify", str(pairs_file), "-o", str(path), "--jobs", "2"])
        == EXIT_OK
    )
    assert path.read_bytes() == labels_file.read_bytes()


def test_classify_custom_rules(
    tmp_path: Path, pairs_file: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    """Test a rule file replaces the shipped rules."""
    rules = tmp_path / "custom.rules"
    rules.write_text(
        "version: 1\n\n"
        "name: wrong value\n"
        "category: token-replace\n"
        "pattern: ^\\d+$\n"
        "summary: literal\n",
        encoding="utf-8",
    )
    assert main(["classify", str(pairs_file), "--rules", str(rules)]) == EXIT_OK
    out = capsys.readouterr().out
    assert {json.loads(line)["rule"] for line in out.splitlines()} == {"wrong value"}


def test_classify_invalid_rules(tmp_path: Path, pairs_file: Path) -> None:
    """Test a broken rule file fails."""
    rules = tmp_path / "broken.rules"
    rules.write_text("name: x\ncategory: sideways\npattern: a\n", encoding="utf-8")
    assert main(["classify", str(pairs_file), "--rules", str(rules)]) == EXIT_FAILURE


def test_classify_empty_pair_file(
    tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    """Test an empty pair file gives an empty label file."""
    pairs = tmp_path / "pairs.jsonl"
    pairs.write_text("", encoding="utf-8")
    labels = tmp_path / "labels.jsonl"
    assert main(["classify", str(pairs), "-o", str(labels)]) == EXIT_OK
    assert labels.read_text(encoding="utf-8") == ""
    assert "pairs=0 labels=0" in capsys.readouterr().err


def test_classify_invalid_pair_file(tmp_path: Path) -> None:
    """Test a malformed pair file fails."""
    path = tmp_path / "pairs.jsonl"
    path.write_text("{}\n", encoding="utf-8")
    assert main(["classify", str(path)]) == EXIT_FAILURE


def test_stats(
    pairs_file: Path, labels_file: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    """Test the human and record statistics reports."""
    assert main(["stats", str(pairs_file), "--labels", str(labels_file)]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("Basic statistics\n")
    assert "WA and AC programs" in out

    assert main(["stats", str(pairs_file), "--format", "records"]) == EXIT_OK
    (record,) = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert (record["n_pairs"], record["n_users"], record["n_problems"]) == (2, 2, 1)
    errors = next(a for a in record["aggregates"] if a["name"] == "error_count")
    assert errors["mean"] == 0.0


def test_stats_empty_corpus(tmp_path: Path) -> None:
    """Test an empty pair file fails."""
    path = tmp_path / "pairs.jsonl"
    path.write_text("", encoding="utf-8")
    assert main(["stats", str(path)]) == EXIT_FAILURE


def test_analyze_synthetic_study(
    tmp_path: Path, intro_file: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    """Test the whole pipeline on seeded novice and expert errors."""
    log = write_log(
        tmp_path / "study.jsonl", synthetic_study(novices=(30, 10), experts=(10, 30))
    )
    pairs = tmp_path / "pairs.jsonl"
    labels = tmp_path / "labels.jsonl"
    assert main(["pairs", str(log), "-o", str(pairs)]) == EXIT_OK
    assert main(["classify", str(pairs), "-o", str(labels)]) == EXIT_OK
    capsys.readouterr()

    args = ["analyze", str(labels), "--log", str(log)]
    args += ["--intro-problems", str(intro_file)]
    assert main(args) == EXIT_OK
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert lines[0] == "Significant differences between novices and experts"
    arithmetic = next(line for line in lines if "arithmetic operator" in line)
    assert arithmetic.split()[-2:] == ["37.50%*", "12.50%"]
    assert "variable declaration" not in out

    assert main(args + ["--format", "records"]) == EXIT_OK
    rows = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert [(row["rule"], row["direction"]) for row in rows] == [
        ("arithmetic operator", "NOVICE"),
        ("literal", "EXPERT"),
    ]
    assert rows[0]["chi2"] == pytest.approx(20.0)
    assert rows[0]["dof"] == 2

    assert main(args + ["--alpha", "1e-12"]) == EXIT_OK
    assert "arithmetic operator" not in capsys.readouterr().out


def test_analyze_untestable(
    labels_file: Path, log_file: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    """Test problems without novices and experts are reported as warnings."""
    assert main(["analyze", str(labels_file), "--log", str(log_file)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "tested=0" in out
    assert "  P1: untestable (no errors)" in out


def test_score(labels_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test labels scored against themselves."""
    total = len(labels_file.read_text().splitlines())
    assert main(["score", str(labels_file), str(labels_file)]) == EXIT_OK
    assert capsys.readouterr().out == (
        f"correct={total} total={total} accuracy=1.0000\n"
    )


def test_score_without_labels(
    tmp_path: Path, labels_file: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    """Test scoring no labels is undefined and fails."""
    empty = tmp_path / "empty.jsonl"
    empty.write_text("", encoding="utf-8")
    assert main(["score", str(empty), str(labels_file)]) == EXIT_FAILURE
    assert capsys.readouterr().out == "correct=0 total=0 accuracy=undefined\n"


def test_missing_input_file(tmp_path: Path) -> None:
    """Test a missing input path is a usage error."""
    with pytest.raises(SystemExit) as err:
        main(["pairs", str(tmp_path / "missing.jsonl")])
    assert err.value.code == EXIT_USAGE


def test_invalid_alpha(labels_file: Path, log_file: Path) -> None:
    """Test an out of range significance level is a usage error."""
    args = ["analyze", str(labels_file), "--log", str(log_file), "--alpha", "1.5"]
    assert main(args) == EXIT_USAGE


def test_config_file(
    tmp_path: Path, log_file: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    """Test settings are read from a configuration file."""
    config = tmp_path / "wafix.json"
    config.write_text(json.dumps({"max_edit_distance": 2}), encoding="utf-8")
    assert main(["pairs", str(log_file), "--config", str(config)]) == EXIT_OK
    assert "pairs=1 dropped_distance=1" in capsys.readouterr().err


def test_pipeline_is_reproducible(tmp_path: Path, intro_file: Path) -> None:
    """Test two full runs write byte-identical records."""
    log = write_log(
        tmp_path / "study.jsonl", synthetic_study(novices=(30, 10), experts=(10, 30))
    )
    outputs = []
    for run in ("first", "second"):
        pairs = tmp_path / f"{run}-pairs.jsonl"
        labels = tmp_path / f"{run}-labels.jsonl"
        report = tmp_path / f"{run}-report.jsonl"
        assert main(["pairs", str(log), "-o", str(pairs)]) == EXIT_OK
        assert main(["classify", str(pairs), "-o", str(labels)]) == EXIT_OK
        args = ["analyze", str(labels), "--log", str(log), "-o", str(report)]
        args += ["--intro-problems", str(intro_file), "--format", "records"]
        assert main(args) == EXIT_OK
        outputs.append([path.read_bytes() for path in (pairs, labels, report)])

    assert outputs[0] == outputs[1]
    assert all(outputs[0])
