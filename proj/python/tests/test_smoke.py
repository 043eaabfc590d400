"""End-to-end smoke tests for the python module and the CLI binary.

The build exports TRIDOM_PYDIR (directory holding the compiled module) and
TRIDOM_CLI (path to the command-line binary).
"""

import json
import os
import subprocess
import sys

import pytest

sys.path.insert(0, os.environ["TRIDOM_PYDIR"])

import tridom  # noqa: E402

CLI = os.environ["TRIDOM_CLI"]


def run_cli(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


# ---- module ----------------------------------------------------------------


def test_distance_matches_bfs():
    for m in range(-4, 5):
        for n in range(-4, 5):
            assert tridom.graph_distance((0, 0), (m, n)) == tridom.bfs_distance(
                (0, 0), (m, n)
            )


def test_ball_and_region_sizes():
    assert tridom.ball_size(3) == 19
    assert len(tridom.ball((2, 5), 3)) == 19
    assert tridom.reach_area(5) == 96
    assert tridom.matchstick_size(9) == 55
    assert len(tridom.matchstick(4)) == 15
    assert tridom.interior_edge_count(4) == 18


def test_pattern_and_efficiency():
    assert tridom.pattern_basis(3, 2) == ((4, 3), (1, 4))
    towers = tridom.pattern_towers(3, 2, 10)
    assert (0, 0) in towers
    assert tridom.is_efficient(3, 2, 10)
    assert tridom.is_efficient(3, 2, 10, mirror=True)
    assert tridom.axis_period(2, 1) == 7
    assert tridom.vertices_per_tower(4, 3) == 21


def test_reception_and_domination():
    assert tridom.reception((1, 2), [(1, 2)], 3) == 3
    assert tridom.reception((0, 0), [(1, 2)], 3) == 1
    w = tridom.witness(2, 1, 7)
    assert len(w) <= tridom.table_upper(2, 1, 7) == 9
    assert tridom.dominates(7, w, 2, 1)


def test_solver_small_exact():
    res = tridom.solve(3, 3, 1)
    assert res["status"] == "optimal"
    assert res["value"] == 1
    assert len(res["witness"]) == 1
    res = tridom.solve(5, 3, 1)
    assert res["value"] == 3


def test_bounds_helpers():
    assert tridom.lower_bound_t1(9, 3) == 3
    assert tridom.exact_small_t1(4, 3) == 2
    assert tridom.exact_small_t1(8, 3) is None
    assert tridom.upper_odd_t(2, 3) == (6, 3)
    assert tridom.upper_31(9) == 6


def test_render_ascii_shape():
    art = tridom.render_ascii(3, [(1, 2)], 3, 1, reception=True)
    lines = art.splitlines()
    assert len(lines) == 4
    assert "3" in art  # the tower vertex hears itself at full strength


# ---- CLI -------------------------------------------------------------------


def test_cli_pattern_json():
    res = run_cli("pattern", "--t", "3", "--r", "1", "--window", "6")
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert payload["t"] == 3 and payload["r"] == 1
    assert payload["basis"] == [[5, 3], [2, 5]]
    assert [0, 0] in payload["towers"]
    towers = payload["towers"]
    assert towers == sorted(towers, key=lambda p: (p[1], p[0]))


def test_cli_pattern_usage_error():
    res = run_cli("pattern", "--t", "9", "--r", "10", "--window", "4")
    assert res.returncode == 2
    assert "t must be" in res.stderr


def test_cli_verify():
    res = run_cli("verify", "--t", "3", "--r", "2", "--window", "18")
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert payload["efficient"] is True
    assert payload["violation"] is None


def test_cli_solve():
    res = run_cli("solve", "--n", "3", "--t", "3", "--r", "1")
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert payload["status"] == "optimal"
    assert payload["value"] == 1
    assert set(payload) == {"status", "value", "witness", "nodes", "lower_bound"}


def test_cli_bounds():
    res = run_cli("bounds", "--t", "2", "--r", "1", "--n", "4")
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert set(payload) == {"lower", "upper", "exact", "witness", "sources"}
    assert payload["lower"] <= payload["upper"]
    assert payload["exact"] == payload["upper"]
    assert len(payload["witness"]) == payload["upper"]


def test_cli_render_svg_and_out(tmp_path):
    out = tmp_path / "figure.svg"
    res = run_cli(
        "render", "--t", "3", "--r", "1", "--n", "6", "--witness", "--reach",
        "--boundary", "--format", "svg", "--out", str(out),
    )
    assert res.returncode == 0
    body = out.read_text()
    assert body.startswith("<svg")
    assert body.rstrip().endswith("</svg>")
    assert "polygon" in body


def test_cli_selftest():
    res = run_cli("selftest")
    assert res.returncode == 0
    assert res.stdout.count("ok") >= 3


def test_cli_unknown_flag_exits_2():
    res = run_cli("solve", "--n", "3", "--t", "3", "--r", "1", "--bogus")
    assert res.returncode == 2


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
