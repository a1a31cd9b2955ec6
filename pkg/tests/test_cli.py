import json

import pytest

from bettibounds import BettiDiagram, Decomposition, MonomialIdeal, koszul
from bettibounds.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


GENERIC_2X3 = '{"entries": [{"i":0,"j":0,"value":"2"},{"i":1,"j":1,"value":"3"},{"i":2,"j":3,"value":"1"}]}'
QUOTIENT_X2_XY = '{"entries": [{"i":0,"j":0,"value":"1"},{"i":1,"j":2,"value":"2"},{"i":2,"j":3,"value":"1"}]}'


def test_pure_json_round_trips(capsys):
    code, out, _ = run(capsys, "pure", "--degrees", "0,1,2,4", "--format", "json")
    assert code == 0
    diagram = BettiDiagram.from_json(out)
    assert diagram == BettiDiagram.from_json_dict(json.loads(out))
    assert out.strip() == diagram.to_json()


def test_pure_table(capsys):
    code, out, _ = run(capsys, "pure", "--degrees", "0,1,2,4")
    assert code == 0
    assert "total:" in out and "8/3" in out and "1/3" in out


def test_pure_bad_degrees(capsys):
    code, _, err = run(capsys, "pure", "--degrees", "0,0,1")
    assert code == 2
    assert err.startswith("error: invalid-sequence:")


def test_check_pure_violation_exit_and_message(capsys):
    code, out, _ = run(capsys, "check-pure", "--degrees", "0,1,2,3,5,6")
    assert code == 1
    assert "j=1: 9/2 < 5" in out
    assert "overall: FAIL" in out


def test_check_pure_pass(capsys):
    code, out, _ = run(capsys, "check-pure", "--degrees", "0,1,2,3")
    assert code == 0
    assert "overall: PASS" in out


def test_check_beh_generic_2x3(tmp_path, capsys):
    path = tmp_path / "generic.json"
    path.write_text(GENERIC_2X3, encoding="utf-8")
    code, out, _ = run(capsys, "check-beh", str(path), "--codim", "2")
    assert code == 1
    assert "j=1: 3 < 4" in out


def test_decompose_file(tmp_path, capsys):
    path = tmp_path / "quotient.json"
    path.write_text(QUOTIENT_X2_XY, encoding="utf-8")
    code, out, _ = run(capsys, "decompose", str(path), "--format", "json")
    assert code == 0
    decomposition = Decomposition.from_json(out)
    assert [(str(c), d) for c, d in decomposition] == [("1/2", (0, 2, 3)), ("1/2", (0, 2))]


def test_decompose_not_in_cone(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"entries": [{"i":0,"j":0,"value":"1"},{"i":2,"j":2,"value":"1"}]}', encoding="utf-8")
    code, _, err = run(capsys, "decompose", str(path))
    assert code == 1
    assert err.startswith("error: not-in-cone:")


def test_decompose_missing_file(capsys):
    code, _, err = run(capsys, "decompose", "/nonexistent/diagram.json")
    assert code == 2
    assert err.startswith("error: format:")


def test_scan_csv_and_exit_codes(capsys):
    code, out, err = run(capsys, "scan", "--s-max", "2", "--d-max", "8", "--mode", "find-violations")
    assert code == 0
    assert out.splitlines()[0] == "degrees;s;shape;beh_pass;first_violating_j;betti_totals"
    assert "0 findings" in err

    code, out, _ = run(capsys, "scan", "--s-min", "5", "--s-max", "5", "--d-max", "8", "--mode", "find-violations")
    assert code == 1
    assert any(line.startswith("0,1,2,3,5,6;") for line in out.splitlines())


def test_scan_guard_rail_usage_error(capsys):
    code, _, err = run(capsys, "scan", "--s-max", "9", "--d-max", "8", "--mode", "find-violations")
    assert code == 2
    assert err.startswith("error: bounds:")


def test_asymptotic_table_and_json(capsys):
    code, out, _ = run(
        capsys, "asymptotic", "--codim", "2", "--delta", "2", "--defect", "0", "--j", "1", "--t-max", "3"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["t", "leading", "exact"]
    assert lines[1].split() == ["1", "2", "4"]

    code, out, _ = run(
        capsys,
        "asymptotic",
        "--codim", "3", "--delta", "1", "--defect", "1", "--j", "2", "--t-max", "2",
        "--e-tail", "1,0",
        "--format", "json",
    )
    assert code == 0
    rows = json.loads(out)["rows"]
    assert rows[0] == {"t": 1, "leading": "1/4", "exact": "5/2", "pure": "5"}


def test_verify_lemmas_runs_and_passes(capsys):
    code, out, _ = run(capsys, "verify-lemmas", "--samples", "40", "--seed", "3", "--s-max", "5")
    assert code == 0
    assert out.count("PASS") == 3


def test_verify_lemmas_requires_seed(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["verify-lemmas", "--samples", "10"])
    assert excinfo.value.code == 2


def test_verify_lemmas_json_schema(capsys):
    code, out, _ = run(
        capsys, "verify-lemmas", "--samples", "10", "--seed", "5", "--s-max", "4", "--format", "json"
    )
    assert code == 0
    reports = json.loads(out)["reports"]
    assert [r["lemma"] for r in reports] == [
        "first-gap-monotonicity",
        "inward-shift-monotonicity",
        "binomial-floor",
    ]
    assert all(r["violations"] == [] and r["seed"] == 5 for r in reports)


def test_monomial_betti_family_and_file(tmp_path, capsys):
    code, out, _ = run(capsys, "monomial-betti", "--family", "power-of-maximal(3,1)", "--format", "json")
    assert code == 0
    assert BettiDiagram.from_json(out) == koszul(3)

    path = tmp_path / "ideal.json"
    path.write_text(MonomialIdeal(2, ((2, 0), (1, 1))).to_json(), encoding="utf-8")
    code, out, _ = run(capsys, "monomial-betti", str(path), "--format", "json")
    assert code == 0
    assert BettiDiagram.from_json(out) == BettiDiagram({(0, 0): 1, (1, 2): 2, (2, 3): 1})


def test_monomial_betti_requires_one_source(capsys):
    code, _, err = run(capsys, "monomial-betti")
    assert code == 2
    assert "exactly one" in err
    code, _, err = run(capsys, "monomial-betti", "x.json", "--family", "power-of-maximal(2,2)")
    assert code == 2


def test_byte_identical_reruns(capsys):
    outputs = set()
    for _ in range(2):
        _, out, err = run(capsys, "verify-lemmas", "--samples", "25", "--seed", "11", "--s-max", "6")
        outputs.add((out, err))
    assert len(outputs) == 1

    outputs = set()
    for _ in range(2):
        _, out, _ = run(capsys, "scan", "--s-max", "4", "--d-max", "9", "--mode", "integral-violations")
        outputs.add(out)
    assert len(outputs) == 1
