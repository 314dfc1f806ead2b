import json

import pytest

from superlie.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_list(capsys):
    code, out = run(capsys, "list", "--dim", "(1|2)")
    assert code == 0
    assert out.split() == ["(1|2)_0", "(1|2)_1", "(1|2)_2", "(1|2)_3"]


def test_show_is_byte_deterministic(capsys):
    code1, out1 = run(capsys, "show", "(2|2)_6")
    code2, out2 = run(capsys, "show", "(2|2)_6")
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["label"] == "(2|2)_6"


def test_check_ok_and_trivial(capsys):
    assert run(capsys, "check", "(2|2)_6")[0] == 0
    assert run(capsys, "check", "(0|2)_0")[0] == 0


def test_check_tampered_file(tmp_path, capsys):
    from superlie import catalog
    doc = json.loads(json.dumps(catalog.get("(2|2)_6").doc))
    doc["brackets"][0]["value"][0]["basis"] = "f2"
    path = tmp_path / "tampered.json"
    path.write_text(json.dumps(doc))
    code, out = run(capsys, "check", str(path))
    assert code == 1
    assert "FAIL" in out


def test_unknown_label_usage_error(capsys):
    assert run(capsys, "show", "(9|9)_1")[0] == 2
    assert run(capsys, "check", "(9|9)_1")[0] == 2


def test_bad_subcommand_usage_error(capsys):
    assert main(["frobnicate"]) == 2


def test_degenerate_builtin(capsys):
    code, out = run(capsys, "degenerate", "--from", "(3|1)_3",
                    "--to", "(3|1)_1")
    assert code == 0
    assert "Verified" in out


def test_degenerate_witness_file(tmp_path, capsys):
    path = tmp_path / "w.json"
    path.write_text(json.dumps({"basis": {"y1": "t*f1"}}))
    code, out = run(capsys, "degenerate", "--from", "(1|1)_1",
                    "--to", "(1|1)_0", "--witness", str(path))
    assert code == 0 and "Verified" in out


def test_nondegen(capsys):
    code, out = run(capsys, "nondegen", "--from", "(1|2)_2",
                    "--to", "(1|2)_3")
    assert code == 0
    assert "derived" in out
    code, out = run(capsys, "nondegen", "--from", "(2|3)_7",
                    "--to", "(2|3)_2")
    assert code == 1
    assert "Inconclusive" in out


def test_h2_json(capsys):
    code, out = run(capsys, "h2", "(2|1)_1")
    assert code == 0
    assert json.loads(out)["dim"] == 1


def test_invariants_json(capsys):
    code, out = run(capsys, "invariants", "(1|1)_1", "--no-trivial")
    assert code == 0
    json.loads(out)


def test_gamma23_classify(capsys):
    g1 = json.dumps([["1", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]])
    g2 = json.dumps([["0", "0", "0"], ["0", "1", "0"], ["0", "0", "0"]])
    code, out = run(capsys, "gamma23", "--g1", g1, "--g2", g2)
    assert code == 0
    assert out.strip() == "(2|3)_4"
    code, _ = run(capsys, "gamma23", "--g1", "[[", "--g2", g2)
    assert code == 2


def test_hasse_dot(tmp_path, capsys):
    path = tmp_path / "g.dot"
    code, out = run(capsys, "hasse", "1", "2", "--dot", str(path))
    assert code == 0
    dot = path.read_text()
    assert dot.count("->") == 3
    assert len([l for l in dot.splitlines() if "label=" in l]) == 4


def test_components_cmd(capsys):
    code, out = run(capsys, "components", "1", "2")
    assert code == 0
    assert "2 components" in out


def test_selftest_seeded_deterministic(capsys):
    code1, out1 = run(capsys, "selftest", "--seed", "7", "--cases", "50")
    code2, out2 = run(capsys, "selftest", "--seed", "7", "--cases", "50")
    assert code1 == code2 == 0
    assert out1 == out2
    assert "seed: 7" in out1
