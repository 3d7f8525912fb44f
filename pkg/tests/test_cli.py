import json
import subprocess
import sys

import pytest

from spfflv.cli import main
from spfflv.cone import example_point
from spfflv.verify import FAIL, PASS, SKIPPED, report_json, verify


@pytest.fixture
def point_file(tmp_path):
    p = tmp_path / "d.json"
    p.write_text(json.dumps(example_point().to_json()))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_fflv_points(capsys):
    code, out = run(capsys, "fflv", "points", "--n", "2", "--lambda", "0,1", "--json")
    assert code == 0
    pts = json.loads(out.out)
    assert len(pts) == 5 and {"2,2": 1, "1,-1": 1} in pts


def test_cone_commands(capsys, point_file, tmp_path):
    code, out = run(capsys, "cone", "check", "--n", "2", "--point", point_file)
    assert code == 0 and json.loads(out.out)["status"] == "interior"
    code, out = run(capsys, "cone", "trop", "--n", "2", "--point", point_file)
    v = json.loads(out.out)
    assert v["-2,-1"] == "2/1"
    code, out = run(capsys, "cone", "trop", "--n", "2", "--point", point_file, "--sign", "paper")
    assert json.loads(out.out)["-2,-1"] == "-2/1"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"1,1": 0, "2,2": 0, "1,2": 1, "1,-1": 0}))
    code, _ = run(capsys, "cone", "check", "--n", "2", "--point", str(bad))
    assert code == 1
    code, out = run(capsys, "cone", "facets", "--n", "3")
    assert len(json.loads(out.out)["facets"]) == 6


def test_ideal_commands(capsys, point_file, tmp_path):
    code, out = run(capsys, "cone", "trop", "--n", "2", "--point", point_file)
    w = tmp_path / "v.json"
    w.write_text(out.out)
    code, out = run(capsys, "ideal", "initial", "--n", "2", "--weight", str(w))
    data = json.loads(out.out)
    assert code == 0 and len(data["initial_forms"]) == 6 and not data["monomial_generators"]
    code, out = run(capsys, "ideal", "hilbert", "--n", "2", "--weight", str(w), "--lambda", "1,1")
    assert json.loads(out.out)["standard_monomials"] == 16
    code, out = run(capsys, "ideal", "generators", "--n", "2")
    assert code == 0 and "X[1,-1] + X[2,-2]" in out.out


def test_chart_commands(capsys, point_file, tmp_path):
    code, out = run(capsys, "chart", "pj", "--n", "2", "--J", "2,-1")
    assert out.out.strip() == "-t1*z2 - t3^2*t4*z2"
    code, out = run(capsys, "chart", "degenerate", "--n", "2", "--d", point_file)
    assert json.loads(out.out)["-2,-1"] == "-t1*t4*z2"
    code, out = run(capsys, "ideal", "generators", "--n", "2", "--json")
    poly = tmp_path / "f.json"
    poly.write_text(json.dumps(json.loads(out.out)[0]))
    code, out = run(capsys, "chart", "phi", "--n", "2", "--poly", str(poly))
    assert json.loads(out.out)["zero"] is True


def test_tab_commands(capsys, tmp_path):
    code, out = run(capsys, "tab", "enumerate", "--n", "2", "--lambda", "1,1")
    assert json.loads(out.out)["count"] == 16
    t = tmp_path / "t.json"
    t.write_text(json.dumps([[-1, -2], [-1]]))
    code, out = run(capsys, "tab", "rho", "--n", "2", "--tableau", str(t))
    assert code == 0 and json.loads(out.out) == {"1,-1": 2, "2,2": 1}
    t.write_text(json.dumps([[1, -1]]))
    code, _ = run(capsys, "tab", "rho", "--n", "2", "--tableau", str(t))
    assert code == 1


def test_usage_errors(capsys, tmp_path):
    assert main(["fflv", "points", "--n", "2", "--lambda", "1"]) == 2
    assert main(["chart", "pj", "--n", "2", "--J", "2,1"]) == 2
    assert main(["cone", "check", "--n", "2", "--point", str(tmp_path / "missing.json")]) == 2
    assert main(["verify", "--n", "7"]) == 2
    with pytest.raises(SystemExit) as e:
        main(["cone"])
    assert e.value.code == 2


def test_verify_is_byte_deterministic(tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"r{k}.json"
        cmd = [sys.executable, "-m", "spfflv.cli", "verify", "--n", "2", "--seed", "7", "--json", str(path)]
        assert subprocess.run(cmd, capture_output=True).returncode == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    data = json.loads(outs[0])
    assert data["schema"] == 1 and data["passed"]
    c4 = next(r for r in data["reports"] if r["suite"] == "c_cone")
    assert c4["witness"]["example_cone_match"]


def test_verify_rank_three_caps():
    reports = {r.suite: r for r in verify("quick", 3, 1)}
    assert reports["groebner"].status == SKIPPED
    for name in ("cone_geometry", "fflv_counting", "tableaux", "minkowski"):
        assert reports[name].status == PASS
    assert all(r.status != FAIL for r in reports.values())
    assert all(r.anchor for r in reports.values())


def test_verify_full_rank_two_groebner():
    (r,) = verify("full", 2, 3, suites=["groebner"])
    assert r.status == PASS and r.witness["matches_listed_relations"]
    assert len(r.witness["random_points"]) == 10


def test_verify_parallel_matches_serial():
    a = report_json(verify("quick", 2, 5), 2, 5, "quick")
    b = report_json(verify("quick", 2, 5, jobs=2), 2, 5, "quick")
    assert a == b


def test_verify_rejects_unknown_suite():
    with pytest.raises(ValueError):
        verify("quick", 2, 0, suites=["nope"])
