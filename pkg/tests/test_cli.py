import io
import json
import subprocess
import sys

import pytest

from polygap.cli import main
from polygap.constructions import pentasm
from polygap.polytope import CombinatorialPolytope


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_construct_json_is_canonical():
    code, out, _ = run("construct", "pentasm", "--dim", "4", "--json")
    assert code == 0
    assert out.strip() == pentasm(4).to_json()
    assert CombinatorialPolytope.from_json(out) == pentasm(4)


def test_construct_text_and_tags():
    code, out, _ = run("construct", "Pyramid(1;Sigma3)")
    assert code == 0 and out.startswith("Pyramid(1;Sigma3()): dim 4, 8 vertices, 7 facets")
    assert run("construct", "triplex", "--dim", "5", "--k", "2")[1].startswith("Triplex(2,3)")
    assert run("construct", "cyclic", "--dim", "4", "--v", "7")[0] == 0
    assert run("construct", "deltasum", "--r", "2", "--s", "2")[0] == 0


def test_feasible_ten_eighty():
    code, out, _ = run("feasible", "--dim", "10", "--edges", "80")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "Infeasible (v=14 band {80}; v≤13 max 78; v≥15 min 85)"
    assert any("d+4 theorem" in ln for ln in lines[1:])


def test_check_mode_exit_codes():
    assert run("feasible", "--dim", "10", "--edges", "80", "--check")[0] == 2
    assert run("feasible", "--dim", "4", "--edges", "16", "--check")[0] == 0


def test_feasible_verbose_and_json():
    code, out, _ = run("feasible", "--dim", "4", "--edges", "17", "--verbose")
    assert "v=8: Infeasible band {17}" in out
    code, out, _ = run("feasible", "--dim", "10", "--edges", "80", "--json")
    data = json.loads(out)
    assert data["verdict"] == "Infeasible" and data["query"] == {"d": 10, "e": 80}
    assert [c["v"] for c in data["cases"]][0] == 11


def test_json_is_byte_stable():
    a = run("feasible", "--dim", "7", "--edges", "40", "--json")[1]
    b = run("feasible", "--dim", "7", "--edges", "40", "--json")[1]
    assert a == b
    assert run("max-dim", "--edges", "80", "--json")[1] == run("max-dim", "--edges", "80", "--json")[1]


def test_max_dim():
    assert run("max-dim", "--edges", "407") == (0, "23\n", "")
    code, out, _ = run("max-dim", "--edges", "407", "--verbose")
    assert "d=24: Infeasible" in out


def test_phi():
    assert run("phi", "--v", "10", "--d", "5", "--m", "2")[1] == "30\n"
    assert run("phi", "--v", "8", "--d", "4")[1] == "16\n"
    assert json.loads(run("phi", "--v", "8", "--d", "4", "--json")[1])["phi"] == 16


def test_bound_commands():
    code, out, _ = run("min-edges", "--v", "9", "--d", "4", "--json")
    data = json.loads(out)
    assert (data["value"], data["status"], data["witness"]) == (18, "ProvedHere", "DeltaSum(2,2)")
    assert run("max-edges", "--v", "13", "--d", "10")[1].startswith("78")
    assert run("min-facets", "--v", "11", "--d", "5")[1].startswith("8")
    assert run("min-facets", "--v", "12", "--d", "5")[1].startswith("7")
    data = json.loads(run("min-facets", "--d", "5", "--ridges", "--json")[1])
    assert (data["value"], data["status"]) == (24, "CitedUnproved")


def test_table_csv():
    code, out, _ = run("table", "min-edges", "--max-dim", "7", "--csv")
    lines = out.splitlines()
    assert lines[0] == "v,d,min_edges,status,witness"
    assert "9,4,18,ProvedHere,\"DeltaSum(2,2)\"" in lines
    assert len(lines) == 1 + sum(d + 2 for d in range(2, 8))


def test_table_text_and_json():
    code, out, _ = run("table", "min-edges", "--max-dim", "4")
    assert out.splitlines()[0].split() == ["v", "d", "min_edges", "status", "witness"]
    rows = json.loads(run("table", "gaps", "--max-dim", "5", "--json")[1])
    assert [(r["d"], r["edges"]) for r in rows] == [(3, 7), (4, 11), (4, 12), (5, 16), (5, 17), (5, 18)]


def test_gaps():
    code, out, _ = run("gaps", "--dim", "6", "--csv")
    lines = out.splitlines()
    assert lines[0] == "d,edges,exclusions,theorems"
    assert [ln.split(",")[1] for ln in lines[1:]] == ["22", "23", "24", "25", "29"]


def test_fvector_sources(tmp_path):
    assert run("fvector", "pentasm", "--dim", "4")[1] == "9 19 17 7\n"
    f = tmp_path / "p.json"
    f.write_text(pentasm(3).to_json())
    assert run("fvector", "--input", str(f))[1] == "7 11 6\n"
    pts = tmp_path / "cube.txt"
    pts.write_text("3 8\n" + "".join(f"{a} {b} {c}\n" for a in (0, 1) for b in (0, 1) for c in (0, 1)))
    data = json.loads(run("fvector", "--points", str(pts), "--json")[1])
    assert data["f_vector"] == [8, 12, 6]


@pytest.mark.parametrize("argv, fragment", [
    (["construct", "hypercube", "--dim", "3"], "unknown family"),
    (["construct", "pentasm"], "needs --dim"),
    (["construct", "pentasm", "--dim", "2"], "d >= 3"),
    (["construct", "triplex", "--dim", "3", "--k", "5"], "1 <= k <= dim"),
    (["construct", "pyramid"], "base tag"),
    (["min-edges", "--v", "3", "--d", "4"], "v >= d+1"),
    (["phi", "--v", "10", "--d", "5", "--m", "7"], "face dimension"),
    (["feasible", "--dim", "1", "--edges", "3"], "d >= 2"),
    (["fvector"], "give a family"),
    (["fvector", "--input", "/nonexistent.json"], "No such file"),
    (["bogus"], "invalid choice"),
    (["feasible", "--dim", "x", "--edges", "3"], "invalid int"),
    (["min-facets", "--d", "5"], "needs --v"),
])
def test_validation_errors(argv, fragment):
    code, out, err = run(*argv)
    assert code == 1
    assert fragment in err
    assert err.count("\n") == 1


def test_oracle_limit_diagnostic(tmp_path):
    pts = tmp_path / "many.txt"
    pts.write_text("2 20\n" + "".join(f"{t} {t * t}\n" for t in range(20)))
    code, _, err = run("fvector", "--points", str(pts))
    assert code == 1 and "POLYGAP_MAX_POINTS" in err


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "polygap", "phi", "--v", "8", "--d", "4"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout == "16\n"


def test_verify_exit_code_reflects_failures():
    from polygap.verify import run_all

    failed = any(not r.passed for r in run_all())
    code, out, _ = run("verify")
    assert out.splitlines()[-1].endswith("failed")
    assert (code != 0) == failed
    assert len([ln for ln in out.splitlines() if ln.startswith("[")]) == 10
