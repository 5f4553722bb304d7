"""End-to-end CLI tests via in-process main() calls."""

import json

import pytest

from ginshift.cli import main
from ginshift import verify as verify_mod
from ginshift.verify import Report

IDEAL_X1X2 = "ring 2\nx1*x2\n"
COMPLEX_EDGES = "vertices 4\n1,2\n3,4\n"


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_gin_command(tmp_path, capsys):
    path = write(tmp_path, "i.txt", IDEAL_X1X2)
    assert main(["gin", path]) == 0
    assert capsys.readouterr().out.strip() == "x1^2"


def test_global_flags_work_on_both_sides(tmp_path, capsys):
    path = write(tmp_path, "i.txt", IDEAL_X1X2)
    assert main(["--seed", "5", "gin", path]) == 0
    before = capsys.readouterr().out
    assert main(["gin", "--seed", "5", path]) == 0
    assert capsys.readouterr().out == before


def test_json_report_shape(tmp_path, capsys):
    path = write(tmp_path, "i.txt", IDEAL_X1X2)
    assert main(["gin", "--json", "--seed", "3", path]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == 1
    assert doc["claim_id"] == "cmd-gin"
    assert doc["verdict"] == "pass"
    assert doc["params"]["seed"] == 3
    assert doc["result"] == ["x1^2"]


def test_seed_env_fallback(tmp_path, capsys, monkeypatch):
    path = write(tmp_path, "i.txt", IDEAL_X1X2)
    monkeypatch.setenv("GINSHIFT_SEED", "42")
    assert main(["gin", "--json", path]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["params"]["seed"] == 42
    monkeypatch.setenv("GINSHIFT_SEED", "not-a-number")
    assert main(["gin", path]) == 2


def test_ini_command(tmp_path, capsys):
    path = write(tmp_path, "i.txt", "ring 2\nx1^2 + x2^2\n")
    assert main(["ini", path]) == 0
    assert capsys.readouterr().out.strip() == "x1^2"


def test_fibre_command(tmp_path, capsys):
    pi = write(tmp_path, "i.txt", "ring 2\nx1^2\n")
    pj = write(tmp_path, "j.txt", "ring 2\nx1*x2\n")
    assert main(["fibre", pi, pj]) == 0
    out = capsys.readouterr().out
    assert "x3*x4" in out and "x1*x3" in out
    assert main(["fibre", "--gin", pi, pj]) == 0
    gin_out = capsys.readouterr().out
    assert "x1*x2" in gin_out  # gin of the fibre product contains x1 x2


def test_shift_and_sr_and_fvector(tmp_path, capsys):
    path = write(tmp_path, "c.txt", COMPLEX_EDGES)
    assert main(["sr", path]) == 0
    sr_out = capsys.readouterr().out
    assert "x1*x3" in sr_out and "x2*x4" in sr_out
    assert main(["shift", path]) == 0
    shift_out = capsys.readouterr().out.strip().splitlines()
    assert shift_out[0] == "vertices 4"
    assert set(shift_out[1:]) == {"1", "2,4", "3,4"}
    assert main(["fvector", path]) == 0
    assert capsys.readouterr().out.strip() == "1,4,2"


def test_fvector_plot(tmp_path, capsys):
    path = write(tmp_path, "c.txt", COMPLEX_EDGES)
    png = tmp_path / "fv.png"
    assert main(["fvector", path, "--plot", str(png)]) == 0
    assert png.exists() and png.stat().st_size > 0


def test_dvalue_command(tmp_path, capsys):
    path = write(tmp_path, "i.txt", IDEAL_X1X2)
    assert main(["dvalue", path, "x1*x2"]) == 0
    assert capsys.readouterr().out.strip() == "2"
    assert main(["dvalue", path, "x1+x2"]) == 2  # not a single monomial


def test_parse_error_exit_code(tmp_path, capsys):
    path = write(tmp_path, "bad.txt", "ring 2\nx1 + x2^2\n")
    assert main(["gin", path]) == 2
    assert "error:" in capsys.readouterr().err
    assert main(["gin", str(tmp_path / "missing.txt")]) == 2
    capsys.readouterr()


def test_verify_single_claim(capsys):
    assert main(["verify", "W-identity", "--max-n", "3", "--max-m", "3"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("W-identity: pass")


def test_verify_unknown_claim(capsys):
    assert main(["verify", "no-such-claim"]) == 2
    assert "known claims" in capsys.readouterr().err


def test_verify_json(capsys):
    assert main(["verify", "--json", "W-identity", "--max-n", "2",
                 "--max-m", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == 1
    assert doc["claim_id"] == "W-identity"
    assert doc["verdict"] == "pass"


def test_verify_failure_exit_code(capsys, monkeypatch):
    def failing(seed, **config):
        return Report("always-fails", {"seed": seed}, False,
                      {"reason": "synthetic"}, 0.0)

    monkeypatch.setitem(verify_mod.CLAIMS, "always-fails", failing)
    assert main(["verify", "always-fails"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "witness" in out


def test_verify_outdir(tmp_path, capsys):
    out = tmp_path / "reports"
    assert main(["verify", "W-identity", "--max-n", "2", "--max-m", "2",
                 "--outdir", str(out)]) == 0
    capsys.readouterr()
    csv_path = out / "reports.csv"
    png_path = out / "summary.png"
    assert csv_path.exists() and png_path.exists()
    header, row = csv_path.read_text().strip().splitlines()[:2]
    assert header.startswith("claim_id,verdict")
    assert row.startswith("W-identity,pass")


def test_empty_gin_prints_zero(tmp_path, capsys):
    path = write(tmp_path, "z.txt", "ring 2\n")
    assert main(["gin", path]) == 0
    assert capsys.readouterr().out.strip() == "0"
