import io
import json
import subprocess
import sys

import pytest

from permstat import cli


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture(autouse=True)
def _isolated(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("PERMSTAT_CACHE_DIR", str(tmp_path / "cache"))


@pytest.mark.parametrize("perm, stat, want", [
    ("215436", "s1", "2"), ("215436", "des:even;all", "2"), ("123", "s17", "3"), ("215436", "t1", "1"),
])
def test_stat(perm, stat, want):
    assert run("stat", "--perm", perm, "--stat", stat) == (0, want + "\n")


def test_stat_bad_token(capsys):
    code, _ = run("stat", "--perm", "215436", "--stat", "q9")
    assert code == 1
    assert "q9" in capsys.readouterr().err
    code, _ = run("stat", "--perm", "2154x6", "--stat", "s1")
    assert code == 1 and "2154x6" in capsys.readouterr().err


def test_dist_all_worked_example():
    code, out = run("dist", "--poly", "D", "--x", "set:2,3,4,6,7,9", "--y", "set:1,4,8", "--n", "6", "--method", "all")
    assert code == 0
    lines = out.splitlines()
    assert {l.split(":")[0] for l in lines[:-1]} == {"brute", "rec", "formula-hr1", "formula-hr2"}
    assert all(l.endswith("[192, 456, 72]") for l in lines[:-1])
    assert lines[-1] == "verdict: agree"


def test_dist_examples():
    assert run("dist", "--poly", "V", "--x", "even", "--y", "even", "--n", "4", "--method", "formula") == (0, "[4, 16, 4]\n")
    assert run("dist", "--poly", "A", "--x", "all", "--y", "all", "--n", "3", "--method", "brute") == (0, "[0, 0, 6]\n")


def test_dist_no_closed_form(capsys):
    code, _ = run("dist", "--poly", "A", "--x", "odd", "--y", "even", "--n", "3", "--method", "formula")
    assert code == 1 and "no closed form" in capsys.readouterr().err


def test_dist_json_and_cache(tmp_path):
    code, out = run("--format", "json", "dist", "--poly", "Gamma", "--x", "even", "--y", "odd", "--n", "4",
                    "--method", "all", "--cache")
    data = json.loads(out)
    assert code == 0 and data["verdict"] == "agree"
    assert data["rows"]["brute"] == ["4", "0", "16", "0", "4"]
    files = list((tmp_path / "cache").glob("*.json"))
    assert len(files) == 2
    rec = json.loads(files[0].read_text())
    assert set(rec) == {"stat", "n", "method", "coeffs"} and all(isinstance(c, str) for c in rec["coeffs"])
    # second run is served from the cache and says the same thing
    assert run("--format", "json", "dist", "--poly", "Gamma", "--x", "even", "--y", "odd", "--n", "4",
               "--method", "all", "--cache")[1] == out


def test_foata():
    assert run("foata", "--perm", "61437258") == (0, "43612758\n")
    assert run("foata", "--perm", "43612758", "--invert") == (0, "61437258\n")
    assert run("foata", "--perm", "123") == (0, "123\n")
    assert run("foata", "--perm", "61437258", "--trace")[1] == "cycles: (34)(216)(57)(8)\n43612758\n"


def test_theta(capsys):
    assert run("theta", "--n", "1", "--x", "odd", "--y", "even") == (0, "1,1,0,0\n")
    code, out = run("theta", "--n", "4", "--x", "odd", "--y", "even")
    rows = out.splitlines()
    assert code == 0 and len(rows) == 24
    assert all(r.split(",")[2] == r.split(",")[3] for r in rows)
    code, _ = run("theta", "--n", "4", "--x", "odd", "--y", "odd")
    assert code == 1 and "X ∩ Y" in capsys.readouterr().err


def test_verify_suites():
    code, out = run("verify", "--suite", "table1", "--max-n", "8")
    assert code == 0 and out.rstrip().endswith("pass")
    code, out = run("verify", "--suite", "conjectures", "--max-n", "8")
    assert code == 0 and "verified up to 8" in out
    code, out = run("verify", "--suite", "identities")
    assert code == 0 and "case B:" in out


def test_verify_cap(capsys):
    code, _ = run("--cap", "5", "verify", "--suite", "table1", "--max-n", "8")
    assert code == 1 and "cap" in capsys.readouterr().err


def test_conjecture_counterexample_exit_code(monkeypatch):
    from permstat import conjectures

    def fake(n, **kw):
        return conjectures.ConjectureResult("1", n, n < 3, None if n < 3 else (0, 1, 2), (1, 1))

    monkeypatch.setattr(cli, "test_conjecture1", fake)
    code, out = run("conjectures", "--max-n", "4", "--which", "1")
    assert code == 2 and "COUNTEREXAMPLE" in out and '"witness"' in out


def test_conjectures_json():
    code, out = run("--format", "json", "conjectures", "--max-n", "3")
    data = json.loads(out[: out.rindex("]") + 1])
    assert code == 0 and len(data) == 6 and all(d["holds"] for d in data)


def test_gamma_demo():
    code, out = run("gamma-demo", "--n", "3", "--x", "odd|res:4,4", "--y", "even")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "sigma,i,before,after" and len(lines) > 1
    assert run("gamma-demo", "--n", "3", "--x", "odd", "--y", "even")[1] == "sigma,i,before,after\n"


def test_identities_command():
    code, out = run("identities", "--case", "2", "--k", "3", "--n", "0-1")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "case,k,i,j,t,n,s,lhs,rhs,equal"
    assert "2,3,1,2,1,1,0,6,12,false" in lines


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "permstat", "stat", "--perm", "34152", "--stat", "s17"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "2"
