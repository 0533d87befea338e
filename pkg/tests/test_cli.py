import json
import subprocess
import sys

import pytest

from k2tspread.cli import PUBLISHED_XI, cmd_brute, cmd_minor, cmd_scan, cmd_xi_table, main
from k2tspread.graph import complete_bipartite, extremal_graph, make_complete, write_graph6_file
from k2tspread.report import FAIL, INFO, PASS, Report


def _statuses(rep):
    return [a.status for a in rep.assertions]


def test_xi_table():
    rep = cmd_xi_table(20)
    assert len(rep.rows) == 19 and set(_statuses(rep)) == {PASS}
    assert [(r["t"], r["xi"]) for r in cmd_xi_table(2).rows] == [(2, 0)]
    assert [(r["t"], r["xi"]) for r in cmd_xi_table(4).rows] == [(2, 0), (3, 1), (4, 2)]
    assert cmd_xi_table(20, check=False).assertions == []
    assert len(PUBLISHED_XI) == 19


def test_scan_reports():
    rep = cmd_scan(5000, 7)
    assert _statuses(rep) == [PASS] and "[476]" in rep.assertions[0].detail
    rep = cmd_scan(59, 4)
    assert [r["l"] for r in rep.rows if r["argmax"]] == [9, 10]
    assert "tie case True" in rep.assertions[0].detail
    rep = cmd_scan(20, 3)
    assert _statuses(rep) == [INFO] and rep.ok


def test_minor_command(tmp_path):
    p = tmp_path / "corpus.g6"
    write_graph6_file(p, [extremal_graph(13, 3, 4), complete_bipartite(2, 3), make_complete(5)])
    rep = cmd_minor(p, 3)
    assert [r["minor-free"] for r in rep.rows] == [True, False, False]
    assert rep.ok


def test_brute_command():
    rep = cmd_brute(5, 2)
    row = rep.rows[0]
    assert row["spread"] == pytest.approx(row["family_best"])
    assert rep.ok
    rep = cmd_brute(4, 3)
    assert rep.ok and any(a.name == "strict_exceedance" for a in rep.assertions)


def test_report_json_roundtrip():
    rep = cmd_scan(59, 4)
    back = Report.from_json(rep.to_json())
    assert back == rep
    text = rep.to_text()
    assert text.splitlines()[0].startswith("== scan") and "[INFO]" in text


def test_exit_codes(capsys, tmp_path):
    assert main(["xi-table", "--tmax", "20"]) == 0
    assert main(["--json", "scan", "--n", "59", "--t", "4"]) == 0
    out = capsys.readouterr().out
    assert json.loads(out[out.index("{"):])["command"] == "scan"
    assert main(["scan", "--n", "0", "--t", "3"]) == 2
    rep = Report("x")
    rep.check("a", False)
    assert not rep.ok
    rep = Report("x")
    rep.info("a")
    assert rep.ok and _statuses(rep) == [INFO]
    assert FAIL not in _statuses(cmd_xi_table(20))


def test_tie_and_expansion_commands():
    assert main(["tie-check", "--kmax", "1", "--l0max", "12"]) == 0
    assert main(["expansion-check", "--t", "3", "--n", "400", "800", "1600"]) == 0
    assert main(["expansion-check", "--t", "5", "--n", "1000"]) == 0


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "k2tspread", "--json", "xi-table", "--tmax", "5"],
                         capture_output=True, text=True, check=True).stdout
    d = json.loads(out)
    assert [r["xi"] for r in d["rows"]] == [0, 1, 2, 1]
    assert all(a["tol"] == 0 for a in d["assertions"])
