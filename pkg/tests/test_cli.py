import json

import pytest

from liecoh.cli import fixtures, load_fixture, main
from liecoh.tableau import cauchy_riemann_tableau, tableau_to_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_vogel_prints_248(capsys):
    code, out, _ = run(capsys, "vogel", "--params", "-2,12,20", "--k", "1")
    assert code == 0
    assert out.strip() == "248"


def test_vogel_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "vogel", "--params", "-2,4,4")
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == "28"


def test_vogel_rational_output(capsys):
    code, out, _ = run(capsys, "vogel", "--params", "1,2,3")
    assert code == 0
    assert "/" in out or out.strip().lstrip("-").isdigit()
    assert "." not in out


def test_grading_example(capsys):
    code, out, _ = run(capsys, "--format", "json", "grading", "--type", "A3",
                       "--marked", "2", "--weight", "0,1,0")
    assert code == 0
    doc = json.loads(out)
    assert doc["module"] == {"0": 1, "-1": 4, "-2": 1}
    assert doc["algebra"] == {"-1": 4, "0": 7, "1": 4}


def test_gperp_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "gperp", "--type", "A2",
                       "--weight", "1,1")
    assert code == 0
    doc = json.loads(out)
    assert doc["total_dim"] == 55
    assert len(doc["components"]) == 4


def test_cohomology_oracle(capsys):
    code, out, _ = run(capsys, "--format", "json", "cohomology", "--type", "A1",
                       "--marked", "1", "--gamma", "4", "--oracle")
    assert code == 0
    doc = json.loads(out)
    assert doc["pieces"] == [{"levi_highest_weight": [6], "degree": 3,
                              "dimension": 1, "source_reflection": 1}]
    assert doc["oracle"] == {"3": 1}


def test_fixtures_list():
    names = fixtures()
    assert names == ["adjoint-a2", "adjoint-c2", "adjoint-g2",
                     "grassmannian-a3-p2", "segre-1-1", "segre-2-2",
                     "veronese-a1"]
    for name in names:
        load_fixture(name)


def test_rigidity_fixture_run(capsys):
    code, out, _ = run(capsys, "--format", "json", "rigidity",
                       "--fixture", "veronese-a1")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "INCONCLUSIVE"
    assert doc["h1_by_degree"] == {"3": 1}
    assert doc["oracle"]["ran"] is True


def test_rigidity_fixture_with_p_override(capsys):
    code, out, _ = run(capsys, "--format", "json", "rigidity",
                       "--fixture", "veronese-a1", "--p", "2")
    assert code == 0
    assert json.loads(out)["verdict"] == "RIGID"


def test_rigidity_inline(capsys):
    code, out, _ = run(capsys, "--format", "json", "rigidity", "--type", "A1,A1",
                       "--marked", "1,2", "--weight", "1,1", "--p", "-1")
    assert code == 0
    assert json.loads(out)["verdict"] == "INCONCLUSIVE"


def test_rigidity_scenario_file(tmp_path, capsys):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"algebra": ["A1"], "marked": [1],
                                "weight": [2], "p": 2, "oracle": False}))
    code, out, _ = run(capsys, "--format", "json", "rigidity",
                       "--scenario", str(path))
    assert code == 0
    assert json.loads(out)["verdict"] == "RIGID"


def test_adjoint_emit_and_run(capsys):
    code, out, _ = run(capsys, "adjoint", "--type", "A2")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"algebra": ["A2"], "marked": [1, 2], "weight": [1, 1],
                   "p": -1, "oracle": False}
    code, out, _ = run(capsys, "--format", "json", "adjoint", "--type", "G2",
                       "--run")
    assert code == 0
    assert json.loads(out)["verdict"] == "RIGID"


def test_tableau_cli(tmp_path, capsys):
    path = tmp_path / "t.json"
    path.write_text(json.dumps(tableau_to_json(cauchy_riemann_tableau())))
    code, out, _ = run(capsys, "--format", "json", "tableau", "--input", str(path))
    assert code == 0
    doc = json.loads(out)
    assert doc["involutive"] is True
    assert doc["characters"] == [2, 0]
    code, out, _ = run(capsys, "--format", "json", "tableau", "--input",
                       str(path), "--op", "torsion", "--flag-seed", "3")
    assert code == 0
    assert json.loads(out)["torsion_quotient_dim"] == 0


def test_exit_code_2_on_input_errors(capsys):
    cases = [
        ("vogel", "--params", "0,1,2"),
        ("grading", "--type", "Z9", "--marked", "1"),
        ("grading", "--type", "A2", "--marked", "7"),
        ("grading", "--type", "A2", "--marked", "1", "--weight", "1,x"),
        ("rigidity", "--type", "A2", "--marked", "1", "--weight", "1,-1",
         "--p", "0"),
        ("rigidity", "--fixture", "no-such-fixture"),
        ("gperp", "--type", "A1,A1", "--weight", "1,0"),
    ]
    for argv in cases:
        code, _, err = run(capsys, *argv)
        assert code == 2, argv
        assert err.strip(), argv


def test_no_floats_in_rigidity_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "rigidity",
                       "--fixture", "segre-1-1")
    assert code == 0
    assert "." not in out.replace("direct matrix computation agreed with the "
                                  "combinatorial dimensions in every degree", "")
