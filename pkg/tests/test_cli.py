import json
import subprocess
import sys

import pytest

from torustap.charvar import ComponentData
from torustap.cli import main
from torustap.laurent import LaurentPolynomial


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_tap_pretty(capsys):
    code, out, _ = run(capsys, "tap", "--p", "2", "--q", "3", "--n", "3", "--format", "pretty")
    assert code == 0 and out == "t^3 - 1\n"


def test_components_json(capsys):
    code, out, _ = run(capsys, "components", "--p", "3", "--q", "4", "--n", "3")
    data = json.loads(out)
    assert code == 0 and len(data) == 10
    for row in data:
        row.pop("index")
        assert ComponentData.from_json(row).to_json() == row


def test_tap_json_round_trip(capsys):
    code, out, _ = run(capsys, "tap", "--p", "2", "--q", "5", "--n", "3", "--component", "4")
    (row,) = json.loads(out)
    poly = LaurentPolynomial.from_json(row["polynomial"])
    assert poly.to_json() == row["polynomial"]
    assert row["index"] == 4 and row["sign"] in (1, -1)


def test_deterministic_output(capsys):
    argv = ["oracle", "--p", "2", "--q", "5", "--n", "3", "--trials", "3", "--seed", "11"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b


def test_torsion_and_adjoint(capsys):
    code, out, _ = run(capsys, "torsion", "--p", "2", "--q", "3", "--n", "2")
    (row,) = json.loads(out)
    assert row["value"].endswith(": 2") and row["acyclic"] and row["algebraic_integer"]
    code, out, _ = run(capsys, "torsion", "--p", "2", "--q", "3", "--n", "2", "--adjoint")
    (row,) = json.loads(out)
    assert row["float"] == [0.5, 0.0] and row["sign_defined"] is False
    code, _, err = run(capsys, "torsion", "--p", "2", "--q", "3", "--n", "3", "--adjoint")
    assert code == 2 and "error" in err


def test_seifert(tmp_path, capsys):
    eigs = tmp_path / "e.json"
    eigs.write_text("[[1, 3]]")
    code, out, _ = run(capsys, "seifert", "--index", "0,1;(2,1)", "--n", "2", "--omega", "1", "--eigs", str(eigs))
    data = json.loads(out)
    assert code == 0 and data["float"] == [2.0, 0.0] and data["certificate"]["integral"]
    eigs.write_text("[[0, 1]]")
    code, _, _ = run(capsys, "seifert", "--index", "0,1;(2,1)", "--n", "2", "--omega", "1", "--eigs", str(eigs))
    assert code == 2


def test_powersum(capsys):
    code, out, _ = run(capsys, "powersum", "--p", "2", "--q", "3", "--m", "1", "--kind", "adj-neg", "--curve", "1,0")
    assert code == 0 and json.loads(out)["closed_form"] == "2"
    code, _, _ = run(capsys, "powersum", "--p", "2", "--q", "3", "--m", "0", "--kind", "adj-neg")
    assert code == 1


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "examples", "--format", "pretty")
    assert code == 0 and "17/17 passed" in out


def test_verify_failure_exit(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lemmas", "--failures-only")
    data = json.loads(out)
    assert code == 1 and data[0]["failed"] == len(data[0]["checks"]) > 0


@pytest.mark.parametrize(
    "argv",
    [["tap", "--p", "2", "--q", "4", "--n", "3"], ["tap", "--p", "2"], ["components", "--p", "2", "--q", "3", "--n", "1"],
     ["tap", "--p", "2", "--q", "3", "--n", "3", "--component", "9"], ["nonsense"]],
)
def test_usage_errors(capsys, argv):
    assert main(argv) == 2


def test_output_file(tmp_path, capsys):
    path = tmp_path / "out.txt"
    assert main(["tap", "--p", "2", "--q", "3", "--n", "3", "--format", "factored", "--output", str(path)]) == 0
    assert path.read_text().startswith("(t^6 - 1)^3")


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "torustap.cli", "tap", "--p", "2", "--q", "3", "--n", "3", "--format", "pretty"],
                         capture_output=True, text=True, check=True).stdout
    assert out == "t^3 - 1\n"
