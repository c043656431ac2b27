import json
import math

import pytest

from abcindex.cli import main
from abcindex.graph import is_isomorphic, star
from abcindex.graph6 import parse_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute(capsys):
    code, out, _ = run(capsys, "compute", "C~")
    assert code == 0 and out.strip() == "4.000000000000"


def test_compute_bad_graph6(capsys):
    code, _, err = run(capsys, "compute", "C")
    assert code == 2 and "byte 1" in err


def test_build_graph6_and_summary(capsys):
    code, out, _ = run(capsys, "build", "independence", "--n", "5", "--param", "4")
    assert code == 0 and is_isomorphic(parse_graph6(out), star(5))
    code, out, _ = run(capsys, "build", "edgeconn", "--n", "6", "--param", "2", "--summary")
    assert code == 0
    assert "degrees      5 5 2 4 4 4" in out
    assert "edge_conn    2" in out


def test_build_range_error(capsys):
    code, _, err = run(capsys, "build", "edgeconn", "--n", "6", "--param", "5")
    assert code == 2 and "error" in err


def test_build_capacity_error(capsys):
    code, _, _ = run(capsys, "build", "independence", "--n", "40", "--param", "3")
    assert code == 3


def test_formula(capsys):
    code, out, _ = run(capsys, "formula", "bipartite", "--n", "5")
    assert code == 0 and float(out) == pytest.approx(3 * math.sqrt(2), abs=1e-12)


def test_verify_independence_json(capsys, tmp_path):
    path = tmp_path / "v.json"
    code, out, _ = run(capsys, "verify", "independence", "--n", "6", "--json", str(path))
    assert code == 0
    assert out.count("PASS") == 5
    env = json.loads(path.read_text())
    assert env["schema"] == 1 and env["command"] == "verify"
    assert len(env["results"]) == 5
    assert all(r["type"] == "extremal" and r["unique_and_matches"] for r in env["results"])


def test_verify_edgeconn_informational(capsys):
    code, out, _ = run(capsys, "verify", "edgeconn", "--n", "5")
    assert code == 0 and "INFO" in out


def test_verify_edge_addition(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "edge-addition", "--n", "5", "--json", str(tmp_path / "e.json"))
    assert code == 0 and "strictly increasing" in out


def test_verify_n8_needs_opt_in(capsys):
    code, _, _ = run(capsys, "verify", "bipartite", "--n", "8")
    assert code == 2


def test_conjecture_always_zero(capsys, tmp_path):
    code, out, _ = run(capsys, "conjecture", "chromatic", "--n", "5", "--json", str(tmp_path / "c.json"))
    assert code == 0 and out.count("holds") == 3
    env = json.loads((tmp_path / "c.json").read_text())
    assert [r["chi"] for r in env["results"]] == [3, 4, 5]
    code, out, _ = run(capsys, "conjecture", "bridge", "--n-max", "40")
    assert code == 0 and "yes" in out


def test_sweep_csv(capsys, tmp_path):
    path = tmp_path / "out.csv"
    code, _, _ = run(capsys, "sweep", "--families", "beta", "--n", "200", "--csv", str(path))
    lines = path.read_text().splitlines()
    assert code == 0
    assert lines[0] == "n,param_kind,param_value,abc_max"
    assert len(lines) == 200


def test_sweep_clamp_note_and_svg(capsys, tmp_path):
    svg = tmp_path / "k.svg"
    code, out, err = run(capsys, "sweep", "--families", "k", "--n", "200", "--svg", str(svg))
    assert code == 0
    assert "clamped to [2, 198]" in err
    assert len(out.splitlines()) == 198
    assert svg.read_text().count("<polyline") == 1


def test_sweep_unknown_family(capsys):
    with pytest.raises(SystemExit) as info:
        main(["sweep", "--families", "chi"])
    assert info.value.code == 2


def test_figures(capsys, tmp_path):
    code, out, _ = run(capsys, "figures", "--out-dir", str(tmp_path), "--format", "svg")
    assert code == 0
    for i in range(1, 5):
        for ext in ("csv", "svg"):
            assert (tmp_path / f"figure{i}.{ext}").exists()


def test_claim_grid_exit_code(capsys):
    code, out, _ = run(capsys, "claim-grid", "--n-min", "14", "--n-max", "60")
    assert code == 0 and "0 violations" in out
    code, out, _ = run(capsys, "claim-grid", "--n-max", "20")
    assert code == 1
    assert "violation n=10 k=2 n1=3" in out
    assert "unsimplified cut comparison at violating points: holds" in out


@pytest.mark.parametrize("argv", [["frobnicate"], ["compute"], ["verify", "independence"], ["--bogus"]])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2
    assert "usage" in capsys.readouterr().err
