"""Command-line interface: JSON output, error records, determinism."""

import json

import pytest

from artinlocal.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_ideal(tmp_path, text):
    path = tmp_path / "ideal.txt"
    path.write_text(text)
    return str(path)


def test_hf_subcommand(tmp_path, capsys):
    path = write_ideal(tmp_path, "vars: 2\nx1*x2\nx2^2 - x1^3\n")
    code, out, _ = run(capsys, "hf", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["hilbert_function"] == [1, 2, 1, 1]


def test_invariants_subcommand(tmp_path, capsys):
    path = write_ideal(tmp_path, "vars: 2\nx1^2\nx2^2\n")
    code, out, _ = run(capsys, "invariants", path)
    doc = json.loads(out)
    assert code == 0
    assert doc["gorenstein"] is True
    assert doc["min_gens"] == 2


def test_bounds_subcommand(capsys):
    code, out, _ = run(capsys, "bounds", "--e", "7", "--h", "3")
    assert code == 0
    doc = json.loads(out)
    assert (doc["t"], doc["r"], doc["lower"], doc["upper"]) == (2, 3, 3, 7)


def test_make_and_normalize_round_trip(tmp_path, capsys):
    code, out, _ = run(capsys, "make", "stretched", "--h", "2", "--s", "4",
                       "--tau", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["hilbert_function"] == [1, 2, 1, 1, 1]
    path = write_ideal(tmp_path,
                       "vars: 2\n" + "\n".join(doc["generators"]) + "\n")
    code, out, _ = run(capsys, "normalize", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "stretched"
    assert doc["params"]["s"] == 4 and doc["params"]["tau"] == 1


def test_classify7_subcommand(tmp_path, capsys):
    path = write_ideal(tmp_path, "vars: 2\nx1*x2\nx2^4 - x1^6\n")
    code, out, _ = run(capsys, "classify7", path, "--allow-extensions")
    assert code == 0
    assert json.loads(out)["case"] == "case1"


def test_semigroup_subcommand(capsys):
    code, out, _ = run(capsys, "semigroup", "2,3")
    assert code == 0
    doc = json.loads(out)
    assert doc["v"] == 1 and doc["symmetric"] is True


def test_semigroup_error_record(capsys):
    code, out, err = run(capsys, "semigroup", "4,6")
    assert code == 1
    doc = json.loads(err)
    assert doc["error"]["code"] == "gcd-not-one"


def test_missing_file_error_record(capsys):
    code, _, err = run(capsys, "hf", "/no/such/file")
    assert code == 1
    assert json.loads(err)["error"]["code"] == "missing-file"


def test_bad_ideal_file(tmp_path, capsys):
    path = write_ideal(tmp_path, "x1^2\n")
    code, _, err = run(capsys, "hf", path)
    assert code == 1
    assert json.loads(err)["error"]["code"] == "parse-error"


def test_verify_rgs_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "rgs")
    assert code == 0
    doc = json.loads(out)
    assert doc["failed"] == 0 and doc["cases"] == 5


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 1
    assert json.loads(err)["error"]["code"] == "not-applicable"


def test_identical_runs_identical_output(capsys):
    _, out1, _ = run(capsys, "verify", "--suite", "rgs", "--seed", "5")
    _, out2, _ = run(capsys, "verify", "--suite", "rgs", "--seed", "5")
    assert out1 == out2
