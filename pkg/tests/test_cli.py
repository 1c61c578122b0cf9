import json
import subprocess
import sys

import pytest

from snakealg.cli import run


def machine(capsys, *argv):
    code = run([*argv, "--format", "machine"])
    out = capsys.readouterr().out
    return json.loads(out), code


def test_s_simple_f2(capsys):
    doc, code = machine(capsys, "s-simple", "--heads", "3", "--field", "F2")
    assert code == 0
    assert doc["sSimple"] is True and doc["roots"] == []


def test_singular_ideals_f3(capsys):
    doc, code = machine(capsys, "singular-ideals", "--heads", "3", "--field", "F3")
    assert code == 0
    assert [d["generator"] for d in doc["ideals"]] == ["[1,1,1]"]


def test_oracle_f7(capsys):
    doc, code = machine(capsys, "oracle", "--heads", "3", "--field", "F7")
    assert code == 0
    assert doc["result"] == "PASS" and doc["properIdealCount"] == 2


def test_oracle_exploratory(capsys):
    doc, code = machine(capsys, "oracle", "--heads", "4", "--field", "F3")
    assert code == 0 and doc["exploratory"] is True


def test_normalize_and_conv(capsys):
    doc, _ = machine(capsys, "normalize", "--heads", "3", "--field", "Q", "--expr", "Z(ll) - Z(l)")
    assert doc["normalForm"] == "[0,0,0] - 1*Z(lu)"
    doc, _ = machine(capsys, "conv", "--heads", "3", "--field", "F7", "--lhs", "[1,5,6]", "--rhs", "[0,1,6]")
    assert doc["normalForm"] == "[1,2,4]" and doc["singular"] is True


def test_is_singular_and_classify(capsys):
    doc, _ = machine(capsys, "is-singular", "--heads", "3", "--field", "F3", "--expr", "[1,1,1]")
    assert doc["singular"] is True
    doc, _ = machine(capsys, "classify-singular", "--heads", "3", "--field", "F7", "--expr", "[2,4,1]")
    assert (doc["family"], doc["k"], doc["b"], doc["delta"]) == ("UnitLeading", "2", "2", "0")


def test_ideal_member(capsys):
    doc, _ = machine(
        capsys, "ideal-member", "--heads", "3", "--field", "F5", "--generator", "[1,1,-2]", "--candidate", "[0,1,-1]"
    )
    assert doc["member"] is True and doc["witness"] == "[0,3,1]"
    doc, _ = machine(
        capsys, "ideal-member", "--heads", "3", "--field", "F3", "--generator", "[1,1,1]", "--candidate", "[0,1,-1]"
    )
    assert doc["member"] is False and doc["witness"] is None


def test_classify_field(capsys):
    doc, _ = machine(capsys, "classify-field", "--field", "F13")
    assert doc["phi3Roots"] == ["3", "9"] and doc["splitClass"] == "Splits"
    doc, _ = machine(capsys, "classify-field", "--field", "Q(w)")
    assert doc["order"] == "infinite" and doc["characteristic"] == 0 and len(doc["phi3Roots"]) == 2


def test_numtheory(capsys):
    doc, _ = machine(capsys, "numtheory", "classify-prime", "--p", "13")
    assert doc["class"] == "Splits"
    doc, _ = machine(capsys, "numtheory", "phi3-roots", "--p", "13")
    assert doc["roots"] == [3, 9]
    doc, _ = machine(capsys, "numtheory", "factor-lemma", "--b-max", "500")
    assert doc["allCongruent"] is True and doc["checked"] == 500


@pytest.mark.parametrize(
    "argv,code",
    [
        (["frobnicate"], 1),
        (["s-simple", "--field", "F2"], 1),
        (["s-simple", "--heads", "3", "--field", "F2", "--bogus"], 1),
        (["s-simple", "--heads", "5", "--field", "F2"], 1),
        (["s-simple", "--heads", "3", "--field", "R"], 1),
        (["normalize", "--heads", "3", "--field", "F7", "--expr", "Z(lu"], 1),
        (["normalize", "--heads", "3", "--field", "F7", "--expr", "[1,a,2]"], 1),
        (["s-simple", "--heads", "3", "--field", "F7(w)"], 2),
        (["s-simple", "--heads", "3", "--field", "F9"], 2),
        (["normalize", "--heads", "3", "--field", "F7", "--expr", "Z(lu)@1"], 2),
        (["classify-singular", "--heads", "3", "--field", "F7", "--expr", "[1,1,1]"], 2),
        (["oracle", "--heads", "3", "--field", "Q"], 2),
        (["numtheory", "classify-prime", "--p", "15"], 2),
        (["numtheory", "factor-lemma", "--b-max", "0"], 1),
    ],
)
def test_exit_codes(argv, code, capsys):
    assert run(argv) == code
    capsys.readouterr()


def test_oracle_fail_exit_code(monkeypatch, capsys):
    from snakealg import ideals

    monkeypatch.setattr(ideals, "enumerate_singular_ideals", lambda field, n: [])
    assert run(["oracle", "--heads", "3", "--field", "F7"]) == 3
    assert "FAIL" in capsys.readouterr().out


def test_machine_output_is_deterministic(capsys):
    argv = ["oracle", "--heads", "3", "--field", "F2(w)", "--list-members", "--format", "machine"]
    outs = []
    for _ in range(3):
        run(argv)
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1] == outs[2]


def test_text_output(capsys):
    assert run(["singular-ideals", "--heads", "3", "--field", "F7"]) == 0
    out = capsys.readouterr().out
    assert "generator: [1,2,4]" in out and "generator: [1,4,2]" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "snakealg", "s-simple", "--heads", "2", "--field", "Q", "--format", "machine"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(proc.stdout)["sSimple"] is True
