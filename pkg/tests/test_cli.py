import dataclasses
import json
from fractions import Fraction

import pytest

from intdom import graph as gr
from intdom.cli import main


@pytest.fixture
def files(tmp_path):
    def write(name, g):
        p = tmp_path / name
        p.write_text(gr.serialize_edge_list(g))
        return str(p)

    return {
        "path4": write("path4.txt", gr.path(4)),
        "k3": write("k3.txt", gr.complete(3)),
        "k2": write("k2.txt", gr.complete(2)),
        "k1": write("k1.txt", gr.complete(1)),
        "tmp": tmp_path,
    }


def test_solve(files, capsys):
    assert main(["solve", "--graph", files["path4"], "--k", "2", "--witness"]) == 0
    out = capsys.readouterr().out
    assert "gamma=4" in out and "witness={" in out
    assert main(["solve", "--graph", files["k3"], "--k", "2", "--method", "brute"]) == 0
    assert "gamma=2" in capsys.readouterr().out


def test_solve_malformed_file(files, capsys):
    bad = files["tmp"] / "bad.txt"
    bad.write_text("n 3\ne 0 1\ne 1 1\n")
    assert main(["solve", "--graph", str(bad), "--k", "1"]) == 2
    assert "line 3" in capsys.readouterr().err


def test_solve_budget_exhaustion(files, tmp_path):
    big = tmp_path / "big.txt"
    big.write_text(gr.serialize_edge_list(gr.path(30)))
    assert main(["solve", "--graph", str(big), "--k", "2", "--method", "brute"]) == 3
    grid = tmp_path / "grid.txt"
    grid.write_text(gr.serialize_edge_list(gr.grid(4, 5)))
    assert main(["solve", "--graph", str(grid), "--k", "3", "--budget", "0"]) == 3


def test_verify(files, capsys):
    cert = files["tmp"] / "c.json"
    assert main(["verify", "--g", files["k2"], "--h", files["k2"], "--k", "1", "--cert", str(cert)]) == 0
    out = capsys.readouterr().out
    assert "chain: 1 <= " in out and "<= 4 = 4" in out
    assert out.count("PASS") == 9
    assert main(["verify", "--g", files["k1"], "--h", files["k1"], "--k", "3"]) == 0
    out = capsys.readouterr().out
    assert "chain: 9 <= " in out and "<= 18 = 18" in out


def test_verify_missing_file(files):
    assert main(["verify", "--g", "/nonexistent/g.txt", "--h", files["k2"], "--k", "1"]) == 2


def test_check_cert(files, capsys):
    cert = files["tmp"] / "c.json"
    main(["verify", "--g", files["path4"], "--h", files["k3"], "--k", "2", "--cert", str(cert)])
    capsys.readouterr()
    assert main(["check-cert", str(cert)]) == 0
    assert capsys.readouterr().out.count("PASS") == 9

    data = json.loads(cert.read_text())
    flipped = json.loads(json.dumps(data))
    row = flipped["blocks"][0]["rows"][0]
    flipped["blocks"][0]["rows"][0] = ("1" if row[0] == "0" else "0") + row[1:]
    bad = files["tmp"] / "flip.json"
    bad.write_text(json.dumps(flipped))
    assert main(["check-cert", str(bad)]) == 4
    assert "check 4 FAIL" in capsys.readouterr().out

    tampered = json.loads(json.dumps(data))
    tampered["chain"]["lhs"] = tampered["chain"]["rhs"] + 1
    bad.write_text(json.dumps(tampered))
    assert main(["check-cert", str(bad)]) == 4
    assert "check 9 FAIL" in capsys.readouterr().out

    bad.write_text(cert.read_text()[:40])
    assert main(["check-cert", str(bad)]) == 2


def test_sweep(tmp_path, capsys):
    out = tmp_path / "s.csv"
    assert main(["sweep", "--families", "path,cycle,complete", "--n-max", "4", "--k-max", "2",
                 "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == ("family_g,params_g,family_h,params_h,k,gamma_g,gamma_h,gamma_product,"
                        "lhs,rhs,ratio,cert_ok,millis")
    assert len(lines) == 1 + 10 * 10 * 2  # 4 paths, 2 cycles, 4 complete graphs
    for line in lines[1:]:
        assert line.split(",")[11] == "true"


def test_sweep_rejects_empty_family(tmp_path, capsys):
    assert main(["sweep", "--families", "", "--n-max", "3", "--k-max", "1", "--out", str(tmp_path / "x")]) == 2
    assert main(["sweep", "--families", "bogus", "--n-max", "3", "--k-max", "1", "--out", str(tmp_path / "x")]) == 2


def test_sweep_cumulative_budget(tmp_path):
    out = tmp_path / "s.csv"
    code = main(["sweep", "--families", "path", "--n-max", "4", "--k-max", "1", "--budget", "0",
                 "--out", str(out)])
    assert code == 3
    assert out.read_text().rstrip().endswith("# incomplete: cumulative budget exhausted")


def test_bound_violation_sentinel(tmp_path, monkeypatch):
    from intdom import cli, sweep

    real = sweep.run_instance

    def broken(*args):
        row = real(*args)
        return dataclasses.replace(row, ratio=Fraction(3, 2))

    monkeypatch.setattr(sweep, "run_instance", broken)
    monkeypatch.setattr(sweep, "_run_packed", lambda a: broken(*a))
    out = tmp_path / "s.csv"
    assert cli.main(["sweep", "--families", "path", "--n-max", "2", "--k-max", "1", "--out", str(out)]) == 5
