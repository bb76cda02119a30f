import csv
import json

from pgcolor.cli import main


def test_space_command(capsys):
    assert main(["space", "3", "2"]) == 0
    out = capsys.readouterr().out
    assert "15 points, 35 lines, 7 lines/point" in out
    assert main(["space", "2", "2"]) == 0
    assert "7 points, 7 lines, 3 lines/point" in capsys.readouterr().out
    assert main(["space", "5", "2"]) == 0
    assert "63 points, 651 lines, 31 lines/point" in capsys.readouterr().out


def test_space_errors(capsys):
    assert main(["space", "11", "2"]) == 2  # above the line cap
    assert main(["space", "3", "6"]) == 2   # not a prime power


def test_spread_and_packing_commands(tmp_path, capsys):
    spread_path = tmp_path / "spread.json"
    assert main(["spread", "5", "2", "--out", str(spread_path)]) == 0
    assert "21 members" in capsys.readouterr().out
    assert main(["verify", str(spread_path)]) == 0

    packing_path = tmp_path / "packing.json"
    assert main(["packing", "3", "2", "--out", str(packing_path)]) == 0
    assert "7 spreads" in capsys.readouterr().out
    assert main(["verify", str(packing_path)]) == 0


def test_packing_budget_exit(capsys):
    assert main(["packing", "3", "2", "--budget", "1"]) == 3


def test_construct_command(tmp_path, capsys):
    out_path = tmp_path / "c52.json"
    assert main(["construct", "5", "2", str(out_path)]) == 0
    stdout = capsys.readouterr().out
    assert "127 colors" in stdout and "proper=True" in stdout and "complete=True" in stdout
    assert main(["verify", str(out_path)]) == 0

    assert main(["construct", "7", "2", str(tmp_path / "x.json")]) == 2
    assert main(["construct", "11", "2", str(tmp_path / "x.json")]) == 2


def test_pg32_commands(tmp_path, capsys):
    cert_path = tmp_path / "pg32.json"
    assert main(["pg32", "certificate", "--out", str(cert_path)]) == 0
    out = capsys.readouterr().out
    assert "complete=True" in out and "proper=False" in out
    assert main(["pg32", "verify", str(cert_path)]) == 0

    cert = json.loads(cert_path.read_text())
    assert cert["payload"]["colors"] == 18
    assert len(cert["payload"]["assignment"]) == 35
    assert cert["notes"]  # typo normalizations recorded

    # tamper -> exit 1
    cert["payload"]["assignment"][0] = 9 if cert["payload"]["assignment"][0] != 9 else 10
    tampered = tmp_path / "tampered.json"
    tampered.write_text(json.dumps(cert))
    assert main(["pg32", "verify", str(tampered)]) == 1

    # hash mismatch -> exit 2
    cert2 = json.loads(cert_path.read_text())
    cert2["space"]["line_table_sha256"] = "f" * 64
    badhash = tmp_path / "badhash.json"
    badhash.write_text(json.dumps(cert2))
    assert main(["pg32", "verify", str(badhash)]) == 2


def test_pg32_exclude19_budget(capsys):
    assert main(["pg32", "exclude19", "--budget", "10"]) == 3
    assert "Inconclusive" in capsys.readouterr().out


def test_bounds_command(tmp_path, capsys):
    report_dir = tmp_path / "report"
    assert main([
        "bounds", "--n-range", "2", "5", "--q", "2", "3", "--out", str(report_dir),
    ]) == 0
    out = capsys.readouterr().out
    assert "127" in out and "246" in out and "27" in out

    csv_path = report_dir / "bounds.csv"
    fig_path = report_dir / "bounds.png"
    assert csv_path.exists() and fig_path.exists()
    with open(csv_path) as fh:
        rows = list(csv.DictReader(fh))
    row52 = next(r for r in rows if r["n"] == "5" and r["q"] == "2")
    assert row52["lower_alpha"] == "127"
    assert row52["upper_psi"] == "246"
    assert row52["chromatic_upper"] == "63"
    assert fig_path.stat().st_size > 1000  # a real rendered figure


def test_verify_missing_file(capsys):
    assert main(["verify", "/nonexistent/cert.json"]) == 2
