"""CLI subcommands, output formats, exit codes."""

import json
from pathlib import Path

import pytest

from ffdecide.cli import main

GOLDEN = json.loads((Path(__file__).parent / "golden_turkiye.json").read_text())
CASE_ARGS = ["--case", "turkiye-energy-poverty"]


def run(capsysbinary, *argv):
    code = main(list(argv))
    captured = capsysbinary.readouterr()
    return code, captured.out, captured.err


def test_evaluate_structured(capsysbinary):
    code, out, _ = run(capsysbinary, "evaluate", *CASE_ARGS, "--format", "structured")
    assert code == 0
    doc = json.loads(out)
    assert doc["marcos"]["order"] == GOLDEN["order"]
    assert doc["weights"]["alpha"] == 0.5
    assert "intermediate" in doc


def test_evaluate_table(capsysbinary):
    code, out, _ = run(capsysbinary, "evaluate", *CASE_ARGS)
    assert code == 0
    text = out.decode()
    assert "Ranking" in text
    assert GOLDEN["order"][0] in text


def test_evaluate_csv(capsysbinary):
    code, out, _ = run(capsysbinary, "evaluate", *CASE_ARGS, "--format", "csv")
    assert code == 0
    text = out.decode()
    assert "# Score values" in text
    block = text.split("# Score values\n", 1)[1].split("\n#", 1)[0]
    assert len([ln for ln in block.splitlines() if ln]) == 8


def test_weights_subcommand(capsysbinary):
    code, out, _ = run(capsysbinary, "weights", *CASE_ARGS, "--alpha", "0.5")
    assert code == 0
    doc = json.loads(out)
    assert doc["integrated"] == pytest.approx(GOLDEN["integrated"], abs=1e-12)
    assert doc["piprecia"]["s"][0] is None


def test_sweep_subcommand(capsysbinary):
    code, out, _ = run(capsysbinary, "sweep", *CASE_ARGS, "--alpha-grid", "0:1:0.1")
    assert code == 0
    doc = json.loads(out)
    assert doc["alpha_grid"] == pytest.approx([i / 10 for i in range(11)])
    assert {r["order"][0] for r in doc["results"]} == {"R1"}


def test_perturb_subcommand(capsysbinary):
    code, out, _ = run(capsysbinary, "perturb", *CASE_ARGS, "--delta", "0.10")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["scenarios"]) == 12
    assert all(-1.0 <= s["tau"] <= 1.0 for s in doc["scenarios"])


def test_compare_entropy_subcommand(capsysbinary):
    code, out, _ = run(capsysbinary, "compare-entropy", *CASE_ARGS)
    assert code == 0
    doc = json.loads(out)
    assert doc["models"]["cosine"]["order"] == GOLDEN["order"]
    assert doc["tau_matrix"]["cosine"]["linear"] == pytest.approx(1.0)


def test_dominance_subcommand(capsysbinary):
    code, out, _ = run(capsysbinary, "dominance", *CASE_ARGS)
    assert code == 0
    doc = json.loads(out)
    for values in doc["dominance"].values():
        assert max(values) == pytest.approx(1.0)


def test_example_round_trips_through_evaluate(capsysbinary, tmp_path):
    code, out, _ = run(capsysbinary, "example")
    assert code == 0
    path = tmp_path / "case.json"
    path.write_bytes(out)
    code, out2, _ = run(capsysbinary, "evaluate", "--input", str(path), "--format", "structured")
    assert code == 0
    assert json.loads(out2)["marcos"]["order"] == GOLDEN["order"]


def test_determinism_across_runs(capsysbinary):
    _, first, _ = run(capsysbinary, "evaluate", *CASE_ARGS, "--format", "structured")
    _, second, _ = run(capsysbinary, "evaluate", *CASE_ARGS, "--format", "structured")
    assert first == second
    _, r1, _ = run(capsysbinary, "evaluate", *CASE_ARGS, "--format", "csv")
    _, r2, _ = run(capsysbinary, "evaluate", *CASE_ARGS, "--format", "csv")
    assert r1 == r2


def test_exit_code_unknown_case(capsysbinary):
    code, _, err = run(capsysbinary, "evaluate", "--case", "nope")
    assert code == 2
    assert b"unknown case" in err


def test_exit_code_missing_file(capsysbinary):
    code, _, _ = run(capsysbinary, "evaluate", "--input", "/does/not/exist.json")
    assert code == 2


def test_exit_code_invalid_document(capsysbinary, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = run(capsysbinary, "evaluate", "--input", str(path))
    assert code == 2
    assert b"error" in err


def test_exit_code_invalid_alpha(capsysbinary):
    code, _, err = run(capsysbinary, "evaluate", *CASE_ARGS, "--alpha", "1.5")
    assert code == 2
    assert b"alpha" in err


def test_exit_code_degenerate(capsysbinary, tmp_path):
    # Every judgment maximally fuzzy: no entropy slack, weights undefined.
    doc = {
        "schema_version": 1,
        "title": "degenerate",
        "scale": {"M": [0.5, 0.5]},
        "criteria": [{"id": "C1", "name": "c", "orientation": "benefit"}],
        "alternatives": [{"id": "A1", "name": "a"}],
        "experts": [{"id": "E1", "grade": "M"}],
        "evaluations": [[["M"]]],
        "criterion_importance": [["M"]],
    }
    path = tmp_path / "degenerate.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsysbinary, "evaluate", "--input", str(path))
    assert code == 3
    assert b"degenerate" in err.lower()


def test_bad_grid_spec(capsysbinary):
    code, _, err = run(capsysbinary, "sweep", *CASE_ARGS, "--alpha-grid", "0-1-0.1")
    assert code == 2
    assert b"grid" in err
