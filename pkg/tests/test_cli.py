import json
import os

import pytest

from locconst.cli import main

DATA = os.path.join(os.path.dirname(__file__), os.pardir, "data")


def d(name):
    return os.path.join(DATA, name)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cohomology(capsys):
    code, out, _ = run(capsys, "cohomology", "-P", d("z2.json"), "-A", d("z2-trivial.json"), "-n", "2")
    assert code == 0 and out.strip() == "H^2 = Z/2"
    code, out, _ = run(capsys, "cohomology", "-P", d("z2.json"), "-A", d("z2-trivial.json"), "-n", "0")
    assert out.strip() == "H^0 = Z/2"


def test_json_output_round_trips(capsys):
    code, out, _ = run(capsys, "--json", "classify", "h2", "--twotype", d("twotype-split.json"),
                       "--G", d("z2.json"))
    data = json.loads(out)
    assert code == 0 and data["kind"] == "h2" and data["order"] == 4
    assert data["invariant_factors"] == [2, 2]
    assert all(data["sequence"]["exact"])


def test_malformed_file_exit_2(capsys):
    code, _, err = run(capsys, "cohomology", "-P", d("malformed.json"), "-A", d("z2-trivial.json"),
                       "-n", "1")
    assert code == 2 and "line 2" in err


def test_missing_file_exit_2(capsys):
    code, _, _ = run(capsys, "pi1", d("nope.json"))
    assert code == 2


def test_classify(capsys):
    assert run(capsys, "classify", "h1", "--pi1", d("circle.json"), "--G", d("s3.json"))[1].strip() \
        == "3 classes"
    assert run(capsys, "classify", "extensions", "--P", d("z2.json"), "--G", d("z3.json"))[1].strip() \
        == "2 classes"
    code, out, _ = run(capsys, "classify", "gerbes", "--twotype", d("twotype-k.json"), "--G", d("s3.json"))
    assert code == 0 and out.startswith("1 classes")
    code, out, _ = run(capsys, "classify", "h0-crossed", "--pi1", d("circle.json"), "--G", d("z4.json"))
    assert code == 0 and "order 8" in out
    code, _, err = run(capsys, "classify", "h2", "--G", d("z2.json"))
    assert code == 2 and "--twotype" in err


def test_pi1(capsys):
    code, out, _ = run(capsys, "--json", "pi1", d("wedge.json"))
    assert json.loads(out)["abelianization"] == [0, 0]


def test_check_crossed(capsys):
    code, _, err = run(capsys, "check-crossed", d("xmod-bad.json"))
    assert code == 2 and "AxiomIViolated" in err
    assert run(capsys, "check-crossed", d("xmod-adjoint-z4.json"))[0] == 0


def test_caps(capsys):
    code, _, err = run(capsys, "--cap-aut", "2", "classify", "extensions", "--P", d("z2.json"),
                       "--G", d("s3.json"))
    assert code == 3 and "aut_order" in err
    assert run(capsys, "--cap-homs", "0", "pi1", d("circle.json"))[0] == 2


def test_verify_and_fault_injection(capsys):
    code, out, _ = run(capsys, "verify", "obstruction")
    assert code == 0 and out.endswith("0 failed\n")
    code, out, _ = run(capsys, "verify", "hopf", "--inject-fault")
    assert code == 1 and "FAIL" in out and "witness" in out


def test_verify_deterministic(capsys):
    first = run(capsys, "--seed", "3", "verify", "descent")[1]
    second = run(capsys, "--seed", "3", "verify", "descent")[1]
    assert first == second
