import json

import pytest

from outfn_euler import __version__
from outfn_euler.cli import header, main
from outfn_euler.graphs import set_enumeration_cap
from outfn_euler.graphs.enumerate import DEFAULT_CAP


def test_header_format():
    assert header({"b": 2, "a": 1}) == f"# outfn-euler v{__version__}, config: a=1 b=2"


def test_chi_csv_stdout(capsys):
    assert main(["chi", "--max-n", "5"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("# outfn-euler v")
    assert lines[1] == "n,ch_numerator,ch_denominator,Ch_numerator,Ch_denominator,sign"
    assert lines[2] == "1,-1,24,-1,24,-1"
    assert lines[6] == "5,-120257,580608,-272785979,1337720832,-1"


@pytest.mark.parametrize("route", ["lambert", "implicit", "laplace-lie"])
def test_chi_json_file(tmp_path, capsys, route):
    target = tmp_path / "chi.json"
    assert main(["chi", "--max-n", "6", "--route", route, "--format", "json", "--output", str(target)]) == 0
    data = json.loads(target.read_text())
    assert data["rows"][2] == {"n": 3, "ch": "-161/5760", "Ch": "-11237/414720", "sign": -1}
    assert "ch_1 = -1/24" in capsys.readouterr().out


def test_chi_route_cap(capsys):
    assert main(["chi", "--max-n", "60", "--route", "implicit"]) == 2
    assert "capped" in capsys.readouterr().err


def test_chi_rejects_bad_n():
    with pytest.raises(SystemExit) as exc:
        main(["chi", "--max-n", "0"])
    assert exc.value.code == 2


def test_verify_hopf(tmp_path):
    target = tmp_path / "report.json"
    assert main(["verify", "--suite", "hopf", "--depth", "2", "--output", str(target)]) == 0
    report = json.loads(target.read_text())
    assert report["status"] == "pass" and report["failed"] == []
    assert all(c["ok"] for c in report["suites"]["hopf"]["checks"])


def test_verify_series_stdout(capsys):
    assert main(["verify", "--suite", "series", "--depth", "6"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["suites"]["series"]["depth"] == 6


def test_verify_routes_and_graphs(capsys):
    assert main(["verify", "--suite", "routes", "--depth", "8"]) == 0
    assert main(["verify", "--suite", "graphs", "--depth", "2"]) == 0


def test_verify_resource_exit(capsys):
    previous = set_enumeration_cap(DEFAULT_CAP)
    try:
        assert main(["--cap", "1", "verify", "--suite", "graphs", "--depth", "3"]) == 2
    finally:
        set_enumeration_cap(previous)
    report = json.loads(capsys.readouterr().out)
    assert report["status"] == "resource"


def test_graphs_listing(tmp_path, capsys):
    dump = tmp_path / "g.json"
    assert main(["graphs", "--rank", "2", "--character", "tau", "--dump", str(dump)]) == 0
    out = capsys.readouterr().out
    assert "classes = 3" in out
    assert "sum tau/|Aut| = -1/24" in out
    records = json.loads(dump.read_text())["classes"]
    assert sorted(r["aut"] for r in records) == [8, 8, 12]
    assert set(records[0]) == {"half_edges", "n_vertices", "vertex_of", "involution", "aut"}


def test_graphs_with_leaves(capsys):
    assert main(["graphs", "--rank", "1", "--leaves", "1", "--character", "sigma"]) == 0
    assert "leaf-labeled sum sigma/|PAut|" in capsys.readouterr().out


def test_graphs_rejects_empty_class():
    with pytest.raises(SystemExit):
        main(["graphs", "--rank", "0", "--leaves", "1"])


def test_asym_remainder_csv(tmp_path):
    target = tmp_path / "b.csv"
    assert main(["asym", "theorem-b", "--n", "50,100", "--R", "1", "--output", str(target)]) == 0
    lines = target.read_text().splitlines()
    assert lines[1] == "n,R,remainder_ratio"
    assert lines[2].startswith("50,1,0.0412662")


def test_asym_growth_csv(capsys):
    assert main(["asym", "theorem-a", "--n", "20,40"]) == 0
    rows = capsys.readouterr().out.splitlines()
    assert rows[1] == "n,r_n" and rows[2].startswith("20,")


def test_asym_rejects_small_n():
    with pytest.raises(SystemExit):
        main(["asym", "theorem-b", "--n", "3", "--R", "4"])


def test_precision_floor():
    with pytest.raises(SystemExit):
        main(["--precision", "64", "chi", "--max-n", "2"])


def test_version(capsys):
    with pytest.raises(SystemExit):
        main(["--version"])
    assert __version__ in capsys.readouterr().out
