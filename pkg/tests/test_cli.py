import json

from dpa.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_germ_lct(capsys):
    code, out, _ = run(capsys, "germ-lct", "x^2 + y^3")
    assert code == 0 and out.startswith("lct = 5/6")
    code, out, _ = run(capsys, "germ-lct", "x^2 + y^3", "--format", "machine")
    doc = json.loads(out)
    assert doc["lct"] == doc["newton_lct"] == "5/6" and doc["type"] == "A2"


def test_non_reduced_germ(capsys):
    code, out, _ = run(capsys, "germ-lct", "x^2*y^2")
    assert code == 0 and out.startswith("lct = 1/2")


def test_bad_input(capsys):
    assert run(capsys, "germ-lct", "1 + x")[0] == 2
    assert run(capsys, "germ-lct", "x + y + z")[0] == 2
    code, _, err = run(capsys, "classify", "no-such-surface")
    assert code == 2 and "catalog" in err


def test_spec_file(capsys, tmp_path):
    p = tmp_path / "bad.yaml"
    p.write_text("spec_version: 7\n")
    code, _, err = run(capsys, "classify", str(p))
    assert code == 2 and "spec_version" in err


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and "dp2-klein" in out
    code, out, _ = run(capsys, "catalog", "show", "dp7", "--format", "machine")
    assert json.loads(out)["key"] == "dp7"


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "dp5", "--group", "d5", "--format", "machine")
    doc = json.loads(out)
    assert code == 0 and doc["result"]["value"] == "4/5" and doc["result"]["rule"] == "dP5-table"


def test_invariants_and_orbits(capsys):
    code, out, _ = run(capsys, "invariants", "dp2-klein", "-n", "2", "--group", "z2x7:3")
    assert code == 0 and "curve  t = 0" in out
    code, out, _ = run(capsys, "orbits", "dp2-klein", "-k", "3", "--group", "z2x7:3", "--format", "machine")
    assert [o["length"] for o in json.loads(out)["orbits"]] == [3]


def test_verify_all(capsys):
    first = run(capsys, "verify-all", "dp5", "dp7", "dp3-s4cubic")
    second = run(capsys, "verify-all", "dp5", "dp7", "dp3-s4cubic")
    assert first == second and first[0] == 0
    assert "0 failed" in first[1]


def test_verify_all_reports_mismatch(capsys):
    code, out, _ = run(capsys, "verify-all", "dp1-s4")
    assert code == 1 and "FAIL" in out
