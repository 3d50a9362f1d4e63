"""CLI surface: subcommands, exit codes, JSON schema, dump artifacts."""

import json

from regdecomp.cli import main


def test_positive_example_exits_zero(capsys):
    code = main(["positive-example", "--p", "3", "--q", "5", "--q1", "11"])
    out = capsys.readouterr().out
    assert code == 0
    assert "conjecture_verdict: consistent" in out
    assert "all restated claims hold" in out


def test_counterexample_zn_exits_two_on_failed_claim(capsys):
    code = main(["counterexample-zn", "--p", "5", "--t", "3"])
    out = capsys.readouterr().out
    assert code == 2
    assert "failed claims: det_is_zero" in out


def test_counterexample_quotient_exits_two_with_witness(capsys):
    code = main(["counterexample-quotient", "--p", "3"])
    out = capsys.readouterr().out
    assert code == 2
    assert "failure: cocycle-construction" in out
    assert "witness" in out


def test_parameter_error_exits_one(capsys):
    code = main(["counterexample-zn", "--p", "3", "--t", "3"])
    err = capsys.readouterr().err
    assert code == 1
    assert "different from p" in err


def test_usage_error_exits_one(capsys):
    code = main(["counterexample-zn", "--p", "3"])
    err = capsys.readouterr().err
    assert code == 1
    assert "--t" in err


def test_json_output_schema(capsys):
    code = main(["--json", "positive-example", "--p", "3", "--q", "5", "--q1", "11"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert list(payload.keys()) == [
        "scenario",
        "parameters",
        "field",
        "group",
        "minimal",
        "det_is_zero",
        "det",
        "certificates",
        "conjecture_verdict",
    ]
    assert payload["conjecture_verdict"] == "consistent"


def test_json_examples_is_array(capsys):
    code = main(["--json", "examples"])
    assert code == 2  # determinant sweep rows disagree at n = 2
    payload = json.loads(capsys.readouterr().out)
    assert isinstance(payload, list)
    scenarios = {entry["scenario"] for entry in payload}
    assert "example-anticommuting-z2" in scenarios
    assert "example-det-comparison-n4" in scenarios


def test_json_reports_byte_stable(capsys):
    main(["--json", "scan", "--max-order", "6", "--p", "5", "--seed", "3"])
    first = capsys.readouterr().out
    main(["--json", "scan", "--max-order", "6", "--p", "5", "--seed", "3"])
    second = capsys.readouterr().out
    assert first == second


def test_dump_writes_csv_figure_and_report(tmp_path, capsys):
    code = main(["--dump", str(tmp_path), "counterexample-zn", "--p", "5", "--t", "3"])
    capsys.readouterr()
    assert code == 2
    csv_path = tmp_path / "counterexample-zn_decomposition_matrix.csv"
    png_path = tmp_path / "counterexample-zn_decomposition_matrix.png"
    report_path = tmp_path / "counterexample-zn_report.json"
    assert csv_path.exists() and png_path.exists() and report_path.exists()
    header = csv_path.read_text().splitlines()[0]
    assert header.startswith('"entry(row,col)"')
    assert '(0,0)' in header
    assert png_path.stat().st_size > 1000
    payload = json.loads(report_path.read_text())
    assert payload["scenario"] == "counterexample-zn"


def test_dump_scan_summary_figure_and_csv(tmp_path, capsys):
    code = main(["--dump", str(tmp_path), "scan", "--max-order", "6", "--p", "3"])
    capsys.readouterr()
    assert code == 0
    assert (tmp_path / "scan_summary.png").exists()
    reports = list(tmp_path.glob("*_report.json"))
    assert len(reports) >= 10
    lines = (tmp_path / "scan.csv").read_text().strip().splitlines()
    assert lines[0].startswith("group,family,minimal,det_is_zero")
    assert len(lines) == len(reports) + 1
    assert all(line.endswith("consistent") for line in lines[1:])


def test_dump_examples_writes_all_artifacts(tmp_path, capsys):
    code = main(["--dump", str(tmp_path), "examples"])
    capsys.readouterr()
    assert code == 2
    reports = sorted(tmp_path.glob("*_report.json"))
    assert len(reports) >= 8
    # multi-result runs prefix stems with an index; matrices get CSV + PNG
    grassmann_csv = list(tmp_path.glob("*example-anticommuting-z2_decomposition_matrix.csv"))
    assert grassmann_csv
    assert list(tmp_path.glob("*example-pauli-grading-n2_pauli_x.png"))


def test_normalize_word_subcommand(capsys):
    code = main(["normalize-word", "--p", "5", "--t", "3", "x2^(1,0)*x1^(0,1)"])
    out = capsys.readouterr().out
    assert code == 0
    assert "normal_form: x1^(0,1)*x2^(1,0)" in out

    code = main(["--json", "normalize-word", "--p", "5", "--trivial-orders", "3,4", "x2^(1,2)*x1^(0,1)"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["normal_form"] == "x1^(0,1)*x2^(1,2)"
    assert payload["scalar"] == "coeffs=[1] mod (0,1) over GF(5)"

    # a repeated anticommuting letter annihilates the word
    code = main(["normalize-word", "--p", "5", "--t", "3", "x1^(1,0)*x1^(1,0)"])
    out = capsys.readouterr().out
    assert code == 0
    assert "normal_form: 0" in out

    code = main(["normalize-word", "--p", "5", "--t", "3", "nonsense"])
    err = capsys.readouterr().err
    assert code == 1
    assert "cannot parse" in err


def test_scenario_reports_byte_stable(capsys):
    outputs = []
    for _ in range(2):
        main(["--json", "counterexample-zn", "--p", "5", "--t", "3"])
        outputs.append(capsys.readouterr().out)
        main(["--json", "positive-example", "--p", "3", "--q", "5", "--q1", "11"])
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[2]
    assert outputs[1] == outputs[3]
